//! The automorphism group of H(m,q): the wreath product `S_q wr S_m`.
//!
//! An element is a pair `(g, σ)` with `g = (g_0, …, g_{m-1})` a tuple of
//! alphabet permutations and `σ` a coordinate permutation. It acts on the
//! right: first each entry `v_i` is relabelled by `g_i`, then the entries are
//! moved so that the symbol at coordinate `i` lands at coordinate `σ(i)`.
//! Products compose left to right, so `x.compose(y)` means "apply `x`, then
//! `y`".
//!
//! The derived ordering on [`Automorphism`] is the canonical enumeration
//! order: lexicographic in the coordinate permutation, then in
//! `g_0, g_1, …` with each `g_i` compared as an image sequence.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::config::SearchConfig;
use crate::error::{Error, Result};
use crate::hamming::{HammingScheme, Vertex};
use crate::par;
use crate::perm::{all_permutations, factorial, invert, is_permutation, nth_permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    coord_perm: Box<[u8]>,
    /// `g_i` occupies `i*q .. (i+1)*q`.
    alphabet_perms: Box<[u8]>,
    scheme: HammingScheme,
}

impl Automorphism {
    pub fn identity(scheme: HammingScheme) -> Self {
        let q = scheme.q();
        let alphabet: Vec<u8> = (0..scheme.m())
            .flat_map(|_| (0..q).map(|s| s as u8))
            .collect();
        Self {
            coord_perm: (0..scheme.m()).map(|i| i as u8).collect(),
            alphabet_perms: alphabet.into_boxed_slice(),
            scheme,
        }
    }

    pub fn new(scheme: HammingScheme, alphabet_perms: Vec<Vec<u8>>, coord_perm: Vec<u8>) -> Result<Self> {
        let (m, q) = (scheme.m(), scheme.q());
        if coord_perm.len() != m || !is_permutation(&coord_perm) {
            return Err(Error::InvalidAutomorphism(format!(
                "coordinate permutation {coord_perm:?} is not a permutation of 0..{m}"
            )));
        }
        if alphabet_perms.len() != m {
            return Err(Error::InvalidAutomorphism(format!(
                "expected {m} alphabet permutations, got {}",
                alphabet_perms.len()
            )));
        }
        for (i, g) in alphabet_perms.iter().enumerate() {
            if g.len() != q || !is_permutation(g) {
                return Err(Error::InvalidAutomorphism(format!(
                    "g{i}={g:?} is not a permutation of 0..{q}"
                )));
            }
        }
        Ok(Self::from_raw(scheme, coord_perm, alphabet_perms.concat()))
    }

    pub(crate) fn from_raw(scheme: HammingScheme, coord_perm: Vec<u8>, alphabet_flat: Vec<u8>) -> Self {
        debug_assert_eq!(coord_perm.len(), scheme.m());
        debug_assert_eq!(alphabet_flat.len(), scheme.m() * scheme.q());
        Self {
            coord_perm: coord_perm.into_boxed_slice(),
            alphabet_perms: alphabet_flat.into_boxed_slice(),
            scheme,
        }
    }

    /// A pure coordinate permutation (identity on every alphabet).
    pub fn coordinate_permutation(scheme: HammingScheme, coord_perm: Vec<u8>) -> Result<Self> {
        let id = Self::identity(scheme);
        let gs = (0..scheme.m()).map(|i| id.alphabet_perm(i).to_vec()).collect();
        Self::new(scheme, gs, coord_perm)
    }

    /// The translation `β ↦ β + α` of `F_2^m`.
    pub fn translation(alpha: &Vertex) -> Result<Self> {
        let scheme = alpha.scheme();
        if !scheme.is_binary() {
            return Err(Error::NotBinary(scheme));
        }
        let alphabet: Vec<u8> = alpha
            .entries()
            .iter()
            .flat_map(|&a| if a == 1 { [1u8, 0] } else { [0u8, 1] })
            .collect();
        Ok(Self::from_raw(
            scheme,
            (0..scheme.m()).map(|i| i as u8).collect(),
            alphabet,
        ))
    }

    pub fn scheme(&self) -> HammingScheme {
        self.scheme
    }

    pub fn coord_perm(&self) -> &[u8] {
        &self.coord_perm
    }

    pub fn alphabet_perm(&self, i: usize) -> &[u8] {
        let q = self.scheme.q();
        &self.alphabet_perms[i * q..(i + 1) * q]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.scheme)
    }

    fn check_scheme(&self, other: HammingScheme) -> Result<()> {
        if self.scheme != other {
            return Err(Error::SchemeMismatch {
                left: self.scheme,
                right: other,
            });
        }
        Ok(())
    }

    /// Writes the image of `src` into `dst`. Both slices have length `m`.
    #[inline]
    pub(crate) fn apply_entries(&self, src: &[u8], dst: &mut [u8]) {
        let q = self.scheme.q();
        for (i, &s) in src.iter().enumerate() {
            dst[self.coord_perm[i] as usize] = self.alphabet_perms[i * q + s as usize];
        }
    }

    /// Image of a vertex index under this element.
    pub(crate) fn apply_index(&self, index: usize, scratch_src: &mut [u8], scratch_dst: &mut [u8]) -> usize {
        let q = self.scheme.q();
        let mut rest = index;
        for slot in scratch_src.iter_mut().rev() {
            *slot = (rest % q) as u8;
            rest /= q;
        }
        self.apply_entries(scratch_src, scratch_dst);
        self.scheme.index_of(scratch_dst)
    }

    pub fn apply(&self, v: &Vertex) -> Result<Vertex> {
        self.check_scheme(v.scheme())?;
        let mut out = vec![0u8; self.scheme.m()];
        self.apply_entries(v.entries(), &mut out);
        self.scheme.vertex(out)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        self.check_scheme(other.scheme)?;
        let (m, q) = (self.scheme.m(), self.scheme.q());
        let coord: Vec<u8> = self
            .coord_perm
            .iter()
            .map(|&j| other.coord_perm[j as usize])
            .collect();
        let mut alphabet = Vec::with_capacity(m * q);
        for i in 0..m {
            let h = other.alphabet_perm(self.coord_perm[i] as usize);
            alphabet.extend(self.alphabet_perm(i).iter().map(|&s| h[s as usize]));
        }
        Ok(Self::from_raw(self.scheme, coord, alphabet))
    }

    pub fn inverse(&self) -> Automorphism {
        let (m, q) = (self.scheme.m(), self.scheme.q());
        let coord = invert(&self.coord_perm);
        let mut alphabet = Vec::with_capacity(m * q);
        for &src in &coord {
            alphabet.extend(invert(self.alphabet_perm(src as usize)));
        }
        Self::from_raw(self.scheme, coord, alphabet)
    }

    /// Text form `perm=[..]; g0=[..]; …; g{m-1}=[..]`.
    pub fn to_text(&self) -> String {
        fn list(xs: &[u8]) -> String {
            let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
            format!("[{}]", parts.join(","))
        }
        let mut out = format!("perm={}", list(&self.coord_perm));
        for i in 0..self.scheme.m() {
            out.push_str(&format!("; g{i}={}", list(self.alphabet_perm(i))));
        }
        out
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism({})", self.to_text())
    }
}

impl FromStr for Automorphism {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidAutomorphism(msg);
        let parse_list = |body: &str| -> Result<Vec<u8>> {
            let inner = body
                .trim()
                .strip_prefix('[')
                .and_then(|b| b.strip_suffix(']'))
                .ok_or_else(|| bad(format!("expected [..], got {body:?}")))?;
            if inner.trim().is_empty() {
                return Ok(Vec::new());
            }
            inner
                .split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| bad(format!("bad image {t:?}"))))
                .collect()
        };
        let mut parts = text.split(';').map(str::trim).filter(|p| !p.is_empty());
        let head = parts.next().ok_or_else(|| bad("empty text".into()))?;
        let perm_body = head
            .strip_prefix("perm=")
            .ok_or_else(|| bad(format!("expected perm=, got {head:?}")))?;
        let coord = parse_list(perm_body)?;
        let mut gs = Vec::new();
        for (i, part) in parts.enumerate() {
            let key = format!("g{i}=");
            let body = part
                .strip_prefix(key.as_str())
                .ok_or_else(|| bad(format!("expected {key}, got {part:?}")))?;
            gs.push(parse_list(body)?);
        }
        let q = gs.first().map(Vec::len).ok_or_else(|| bad("missing g0".into()))?;
        let scheme = HammingScheme::new(coord.len(), q)?;
        Self::new(scheme, gs, coord)
    }
}

impl Serialize for Automorphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

impl<'de> Deserialize<'de> for Automorphism {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub fn apply(x: &Automorphism, v: &Vertex) -> Result<Vertex> {
    x.apply(v)
}

pub fn compose(x: &Automorphism, y: &Automorphism) -> Result<Automorphism> {
    x.compose(y)
}

pub fn inverse(x: &Automorphism) -> Automorphism {
    x.inverse()
}

pub fn translation(alpha: &Vertex) -> Result<Automorphism> {
    Automorphism::translation(alpha)
}

/// A subgroup handle: the group generated by `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    scheme: HammingScheme,
    generators: Vec<Automorphism>,
}

impl GeneratorSet {
    pub fn new(scheme: HammingScheme, generators: Vec<Automorphism>) -> Result<Self> {
        for g in &generators {
            g.check_scheme(scheme)?;
        }
        Ok(Self { scheme, generators })
    }

    pub fn empty(scheme: HammingScheme) -> Self {
        Self {
            scheme,
            generators: Vec::new(),
        }
    }

    pub fn scheme(&self) -> HammingScheme {
        self.scheme
    }

    pub fn generators(&self) -> &[Automorphism] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn push(&mut self, x: Automorphism) -> Result<()> {
        x.check_scheme(self.scheme)?;
        self.generators.push(x);
        Ok(())
    }

    /// Generators of the union of two subgroups.
    pub fn join(&self, other: &GeneratorSet) -> Result<GeneratorSet> {
        let mut out = self.clone();
        for g in &other.generators {
            out.push(g.clone())?;
        }
        Ok(out)
    }
}

/// Adjacent coordinate transpositions plus adjacent symbol transpositions at
/// every coordinate; these generate the full group.
pub fn transposition_generators(scheme: HammingScheme) -> GeneratorSet {
    let (m, q) = (scheme.m(), scheme.q());
    let id = Automorphism::identity(scheme);
    let mut gens = Vec::new();
    for i in 0..m.saturating_sub(1) {
        let mut coord: Vec<u8> = id.coord_perm.to_vec();
        coord.swap(i, i + 1);
        gens.push(Automorphism::from_raw(scheme, coord, id.alphabet_perms.to_vec()));
    }
    for i in 0..m {
        for s in 0..q - 1 {
            let mut alphabet = id.alphabet_perms.to_vec();
            alphabet.swap(i * q + s, i * q + s + 1);
            gens.push(Automorphism::from_raw(scheme, id.coord_perm.to_vec(), alphabet));
        }
    }
    GeneratorSet { scheme, generators: gens }
}

/// `(q!)^m · m!`, or `None` on overflow.
pub fn full_group_order(scheme: HammingScheme) -> Option<u128> {
    let qf = factorial(scheme.q())?;
    let mut order = factorial(scheme.m())?;
    for _ in 0..scheme.m() {
        order = order.checked_mul(qf)?;
    }
    Some(order)
}

/// Fails unless the full group fits under the configured cap.
pub fn check_group_cap(scheme: HammingScheme, cap: u128) -> Result<u128> {
    match full_group_order(scheme) {
        Some(order) if order <= cap => Ok(order),
        Some(order) => Err(Error::Feasibility {
            what: "full group enumeration",
            required: order,
            cap,
        }),
        None => Err(Error::Feasibility {
            what: "full group enumeration",
            required: u128::MAX,
            cap,
        }),
    }
}

/// Every element of the full group, in canonical order.
pub fn enumerate_full_group(scheme: HammingScheme, config: &SearchConfig) -> Result<Vec<Automorphism>> {
    check_group_cap(scheme, config.group_cap)?;
    let (m, q) = (scheme.m(), scheme.q());
    let alphabet_perms = all_permutations(q);
    let sigma_count = factorial(m).unwrap() as u64;
    let per_sigma = alphabet_perms.len().pow(m as u32);
    Ok(par::flat_map_ranks(sigma_count, config.execution, |rank| {
        let sigma = nth_permutation(m, rank);
        let mut out = Vec::with_capacity(per_sigma);
        let mut digits = vec![0usize; m];
        loop {
            let flat: Vec<u8> = digits
                .iter()
                .flat_map(|&d| alphabet_perms[d].iter().copied())
                .collect();
            out.push(Automorphism::from_raw(scheme, sigma.clone(), flat));
            // mixed-radix increment, g_{m-1} least significant
            let mut pos = m;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < alphabet_perms.len() {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }))
}

/// All products of the generators, sorted canonically.
pub fn closure(gens: &GeneratorSet, cap: usize) -> Result<Vec<Automorphism>> {
    let identity = Automorphism::identity(gens.scheme);
    let mut steps: Vec<Automorphism> = Vec::with_capacity(gens.len() * 2);
    for g in &gens.generators {
        steps.push(g.clone());
        let inv = g.inverse();
        if inv != *g {
            steps.push(inv);
        }
    }
    let mut seen: HashSet<Automorphism> = HashSet::new();
    let mut queue = VecDeque::new();
    if cap == 0 {
        return Err(Error::ClosureCap { cap, partial: 0 });
    }
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for s in &steps {
            let y = x.compose(s)?;
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::ClosureCap {
                        cap,
                        partial: seen.len(),
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Automorphism> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Orbit of `v` under the generated group, sorted.
pub fn orbit(gens: &GeneratorSet, v: &Vertex) -> Result<Vec<Vertex>> {
    v.check_scheme(gens.scheme)?;
    let scheme = gens.scheme;
    let m = scheme.m();
    let (mut src, mut dst) = (vec![0u8; m], vec![0u8; m]);
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.index());
    queue.push_back(v.index());
    while let Some(i) = queue.pop_front() {
        for g in &gens.generators {
            let j = g.apply_index(i, &mut src, &mut dst);
            if seen.insert(j) {
                queue.push_back(j);
            }
        }
    }
    let mut idx: Vec<usize> = seen.into_iter().collect();
    idx.sort_unstable();
    Ok(idx.into_iter().map(|i| scheme.vertex_at(i)).collect())
}

/// `{ y⁻¹ x y : x ∈ gens }`.
pub fn conjugate(gens: &GeneratorSet, y: &Automorphism) -> Result<GeneratorSet> {
    y.check_scheme(gens.scheme)?;
    let y_inv = y.inverse();
    let generators = gens
        .generators
        .iter()
        .map(|x| y_inv.compose(x)?.compose(y))
        .collect::<Result<Vec<_>>>()?;
    Ok(GeneratorSet {
        scheme: gens.scheme,
        generators,
    })
}
