//! Pruned exhaustive search for group elements mapping one vertex set onto
//! another.
//!
//! The outer loop runs over coordinate permutations `σ` in lexicographic
//! order. For each `σ` the alphabet permutations `g_0, g_1, …` are chosen by
//! backtracking. After fixing `g_0..g_k`, the image of every source vertex is
//! known on the target coordinates `σ(0..=k)`; the branch is cut as soon as
//! one of those partial images is missing from the projection of the target
//! set onto the same coordinates. A complete assignment that survives maps
//! the source into the target, and since `|S| = |T|` it maps onto it.
//!
//! Results come out in canonical enumeration order regardless of execution
//! mode.

use std::collections::HashSet;

use crate::config::SearchConfig;
use crate::error::Result;
use crate::hamming::{HammingScheme, Vertex};
use crate::par;
use crate::perm::{all_permutations, factorial, nth_permutation};
use crate::wreath::{check_group_cap, Automorphism};

pub(crate) struct SetMapSearch {
    scheme: HammingScheme,
    source: Vec<Vec<u8>>,
    target: Vec<Vec<u8>>,
    alphabet_perms: Vec<Vec<u8>>,
    /// Sorted symbol-count profile of each coordinate column.
    source_profiles: Vec<Vec<usize>>,
    target_profiles: Vec<Vec<usize>>,
}

fn dedup_entries(scheme: HammingScheme, set: &[Vertex]) -> Result<Vec<Vec<u8>>> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(set.len());
    for v in set {
        v.check_scheme(scheme)?;
        if seen.insert(v.index()) {
            out.push(v.entries().to_vec());
        }
    }
    Ok(out)
}

fn column_profiles(scheme: HammingScheme, rows: &[Vec<u8>]) -> Vec<Vec<usize>> {
    (0..scheme.m())
        .map(|i| {
            let mut counts = vec![0usize; scheme.q()];
            for r in rows {
                counts[r[i] as usize] += 1;
            }
            counts.sort_unstable();
            counts
        })
        .collect()
}

impl SetMapSearch {
    pub(crate) fn new(scheme: HammingScheme, source: &[Vertex], target: &[Vertex]) -> Result<Self> {
        let source = dedup_entries(scheme, source)?;
        let target = dedup_entries(scheme, target)?;
        let source_profiles = column_profiles(scheme, &source);
        let target_profiles = column_profiles(scheme, &target);
        Ok(Self {
            scheme,
            source,
            target,
            alphabet_perms: all_permutations(scheme.q()),
            source_profiles,
            target_profiles,
        })
    }

    fn sigma_count(&self) -> u64 {
        factorial(self.scheme.m()).unwrap() as u64
    }

    /// Every element mapping source onto target, canonically ordered.
    pub(crate) fn all(&self, config: &SearchConfig) -> Result<Vec<Automorphism>> {
        check_group_cap(self.scheme, config.group_cap)?;
        if self.source.len() != self.target.len() {
            return Ok(Vec::new());
        }
        let m = self.scheme.m();
        Ok(par::flat_map_ranks(self.sigma_count(), config.execution, |rank| {
            let mut out = Vec::new();
            self.search_sigma(&nth_permutation(m, rank), false, &mut out);
            out
        }))
    }

    /// The canonically least element mapping source onto target.
    pub(crate) fn first(&self, config: &SearchConfig) -> Result<Option<Automorphism>> {
        check_group_cap(self.scheme, config.group_cap)?;
        if self.source.len() != self.target.len() {
            return Ok(None);
        }
        let m = self.scheme.m();
        Ok(par::find_first_rank(self.sigma_count(), config.execution, |rank| {
            let mut out = Vec::new();
            self.search_sigma(&nth_permutation(m, rank), true, &mut out);
            out.pop()
        }))
    }

    fn search_sigma(&self, sigma: &[u8], first_only: bool, out: &mut Vec<Automorphism>) {
        let m = self.scheme.m();
        let q = self.scheme.q() as u64;
        if (0..m).any(|i| self.source_profiles[i] != self.target_profiles[sigma[i] as usize]) {
            return;
        }
        // levels[k]: projection of the target onto σ(0..=k)
        let mut levels: Vec<Projection> = Vec::with_capacity(m);
        let mut codes = vec![0u64; self.target.len()];
        let mut span = 1u64;
        for &col in sigma {
            let col = col as usize;
            for (code, t) in codes.iter_mut().zip(&self.target) {
                *code = *code * q + t[col] as u64;
            }
            span = span.saturating_mul(q);
            levels.push(Projection::new(&codes, span));
        }
        let mut state = Backtrack {
            search: self,
            sigma,
            levels: &levels,
            images: vec![vec![0u64; self.source.len()]; m + 1],
            choice: vec![0usize; m],
            first_only,
            out,
        };
        state.descend(0);
    }
}

/// Set of partial image codes; a bitset when the code space is small.
enum Projection {
    Bits(Vec<u64>),
    Sorted(Vec<u64>),
}

const BITSET_SPAN: u64 = 1 << 16;

impl Projection {
    fn new(codes: &[u64], span: u64) -> Self {
        if span <= BITSET_SPAN {
            let mut bits = vec![0u64; span.div_ceil(64) as usize];
            for &c in codes {
                bits[(c / 64) as usize] |= 1 << (c % 64);
            }
            Projection::Bits(bits)
        } else {
            let mut sorted = codes.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            Projection::Sorted(sorted)
        }
    }

    #[inline]
    fn contains(&self, code: u64) -> bool {
        match self {
            Projection::Bits(bits) => bits[(code / 64) as usize] & (1 << (code % 64)) != 0,
            Projection::Sorted(sorted) => sorted.binary_search(&code).is_ok(),
        }
    }
}

struct Backtrack<'a> {
    search: &'a SetMapSearch,
    sigma: &'a [u8],
    levels: &'a [Projection],
    /// images[k][s]: partial image code of source row s on σ(0..k)
    images: Vec<Vec<u64>>,
    choice: Vec<usize>,
    first_only: bool,
    out: &'a mut Vec<Automorphism>,
}

impl Backtrack<'_> {
    /// Returns true when the search should stop.
    fn descend(&mut self, k: usize) -> bool {
        let search = self.search;
        let m = search.scheme.m();
        if k == m {
            let flat: Vec<u8> = self
                .choice
                .iter()
                .flat_map(|&c| search.alphabet_perms[c].iter().copied())
                .collect();
            self.out
                .push(Automorphism::from_raw(search.scheme, self.sigma.to_vec(), flat));
            return self.first_only;
        }
        let q = search.scheme.q() as u64;
        let level = &self.levels[k];
        for (c, perm) in search.alphabet_perms.iter().enumerate() {
            let (done, rest) = self.images.split_at_mut(k + 1);
            let prev = &done[k];
            let next = &mut rest[0];
            let mut ok = true;
            for (s, row) in search.source.iter().enumerate() {
                let code = prev[s] * q + perm[row[k] as usize] as u64;
                if !level.contains(code) {
                    ok = false;
                    break;
                }
                next[s] = code;
            }
            if ok {
                self.choice[k] = c;
                if self.descend(k + 1) {
                    return true;
                }
            }
        }
        false
    }
}
