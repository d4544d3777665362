//! Small helpers for permutations stored as image sequences.

/// `n!` if it fits in a `u128`.
pub fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

/// The permutation of `0..n` with lexicographic rank `rank` (Lehmer decoding).
pub fn nth_permutation(n: usize, mut rank: u64) -> Vec<u8> {
    let mut pool: Vec<u8> = (0..n as u16).map(|i| i as u8).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let block = factorial(k).unwrap() as u64;
        let idx = (rank / block) as usize;
        rank %= block;
        out.push(pool.remove(idx));
    }
    out
}

/// Every permutation of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let count = factorial(n).expect("factorial overflow") as u64;
    (0..count).map(|r| nth_permutation(n, r)).collect()
}

pub fn is_permutation(images: &[u8]) -> bool {
    let mut seen = vec![false; images.len()];
    for &x in images {
        match seen.get_mut(x as usize) {
            Some(slot) if !*slot => *slot = true,
            _ => return false,
        }
    }
    true
}

pub fn invert(images: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; images.len()];
    for (i, &x) in images.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unranking_is_lexicographic() {
        let perms = all_permutations(4);
        assert_eq!(perms.len(), 24);
        assert_eq!(perms[0], vec![0, 1, 2, 3]);
        assert_eq!(perms[23], vec![3, 2, 1, 0]);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert!(perms.iter().all(|p| is_permutation(p)));
    }

    #[test]
    fn inverse_composes_to_identity() {
        for p in all_permutations(5) {
            let inv = invert(&p);
            for i in 0..5 {
                assert_eq!(inv[p[i] as usize] as usize, i);
            }
        }
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(!is_permutation(&[0, 0, 1]));
        assert!(!is_permutation(&[0, 3, 1]));
    }
}
