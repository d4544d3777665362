//! Codes as vertex subsets of H(m,q).

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::{Serialize, Serializer};

use crate::config::SearchConfig;
use crate::error::{Error, Result};
use crate::hamming::{raw_distance, HammingScheme, Vertex};
use crate::search::SetMapSearch;
use crate::wreath::{Automorphism, GeneratorSet};

/// Minimum distance of a code; `Infinite` when the code has fewer than two words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MinDistance {
    Finite(usize),
    Infinite,
}

impl MinDistance {
    pub fn finite(self) -> Option<usize> {
        match self {
            MinDistance::Finite(d) => Some(d),
            MinDistance::Infinite => None,
        }
    }

    /// `true` when the distance is at least `bound` (always true for `Infinite`).
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            MinDistance::Finite(d) => d >= bound,
            MinDistance::Infinite => true,
        }
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Finite(d) => write!(f, "{d}"),
            MinDistance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for MinDistance {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MinDistance::Finite(d) => serializer.serialize_u64(*d as u64),
            MinDistance::Infinite => serializer.serialize_none(),
        }
    }
}

/// A sorted, deduplicated set of vertices of one scheme.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Code {
    scheme: HammingScheme,
    words: Vec<Vertex>,
}

impl Code {
    pub fn new(scheme: HammingScheme, words: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut words: Vec<Vertex> = words.into_iter().collect();
        for w in &words {
            w.check_scheme(scheme)?;
        }
        words.sort();
        words.dedup();
        Ok(Self { scheme, words })
    }

    /// Builds a code from vertices in the shared text form.
    pub fn from_texts(scheme: HammingScheme, texts: &[&str]) -> Result<Self> {
        let words = texts
            .iter()
            .map(|t| scheme.parse_vertex(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(scheme, words)
    }

    pub fn scheme(&self) -> HammingScheme {
        self.scheme
    }

    pub fn words(&self) -> &[Vertex] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.words.binary_search(v).is_ok()
    }

    pub fn min_distance(&self) -> MinDistance {
        let mut best: Option<usize> = None;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                let d = raw_distance(a.entries(), b.entries());
                best = Some(best.map_or(d, |cur| cur.min(d)));
            }
        }
        best.map_or(MinDistance::Infinite, MinDistance::Finite)
    }

    /// Vertices outside the code adjacent to some codeword, sorted.
    pub fn neighbour_set(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self
            .words
            .iter()
            .flat_map(|w| w.neighbours())
            .filter(|v| !self.contains(v))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn image(&self, x: &Automorphism) -> Result<Code> {
        let words = self
            .words
            .iter()
            .map(|w| x.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Code::new(self.scheme, words)
    }

    pub fn is_automorphism(&self, x: &Automorphism) -> Result<bool> {
        stabilizes_set(&self.words, x)
    }

    /// Zero is a codeword and the code is closed under addition mod 2.
    pub fn is_linear_binary(&self) -> bool {
        if !self.scheme.is_binary() || !self.contains(&self.scheme.zero()) {
            return false;
        }
        self.words.iter().all(|a| {
            self.words
                .iter()
                .all(|b| self.contains(&a.add(b).expect("same scheme")))
        })
    }

    /// Translations by a basis of the code, as a generator set.
    pub fn translation_subgroup(&self) -> Result<GeneratorSet> {
        if !self.scheme.is_binary() {
            return Err(Error::NotBinary(self.scheme));
        }
        if !self.is_linear_binary() {
            return Err(Error::NotLinear);
        }
        let mut span: Vec<Vertex> = vec![self.scheme.zero()];
        let mut basis = Vec::new();
        for w in &self.words {
            if span.contains(w) {
                continue;
            }
            let shifted = span
                .iter()
                .map(|s| s.add(w))
                .collect::<Result<Vec<_>>>()?;
            span.extend(shifted);
            basis.push(w.clone());
        }
        let mut gens = basis
            .iter()
            .map(Automorphism::translation)
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            gens.push(Automorphism::identity(self.scheme));
        }
        GeneratorSet::new(self.scheme, gens)
    }

    /// Parses the shared code file format: a header line `m q`, then one
    /// vertex per non-empty line. Lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Code> {
        let mut scheme: Option<HammingScheme> = None;
        let mut words = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: lineno + 1,
                message,
            };
            match scheme {
                None => {
                    let nums: Vec<usize> = line
                        .split_whitespace()
                        .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad header token {t:?}"))))
                        .collect::<Result<_>>()?;
                    if nums.len() != 2 {
                        return Err(err(format!("header must be `m q`, got {line:?}")));
                    }
                    scheme = Some(HammingScheme::new(nums[0], nums[1]).map_err(|e| err(e.to_string()))?);
                }
                Some(s) => words.push(s.parse_vertex(line).map_err(|e| err(e.to_string()))?),
            }
        }
        let scheme = scheme.ok_or(Error::Parse {
            line: 0,
            message: "missing `m q` header".into(),
        })?;
        Code::new(scheme, words)
    }

    /// Serializes in the shared code file format, words sorted.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.scheme.m(), self.scheme.q());
        for w in &self.words {
            out.push_str(&w.to_text());
            out.push('\n');
        }
        out
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Code> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("{}: {e}", path.display()),
        })?;
        Code::parse(&text)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> std::io::Result<()> {
        std::fs::write(path, self.to_file_string())
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.words.iter().map(Vertex::to_text)).finish()
    }
}

pub fn min_distance(code: &Code) -> MinDistance {
    code.min_distance()
}

pub fn neighbour_set(code: &Code) -> Vec<Vertex> {
    code.neighbour_set()
}

/// All vertices at distance exactly `radius` from `alpha`.
pub fn shell(alpha: &Vertex, radius: usize) -> Result<Vec<Vertex>> {
    alpha.shell(radius)
}

pub fn image(code: &Code, x: &Automorphism) -> Result<Code> {
    code.image(x)
}

/// `true` iff `x` maps the vertex set `set` onto itself.
pub fn stabilizes_set(set: &[Vertex], x: &Automorphism) -> Result<bool> {
    let scheme = x.scheme();
    let mut members = HashSet::with_capacity(set.len());
    for v in set {
        v.check_scheme(scheme)?;
        members.insert(v.index());
    }
    let m = scheme.m();
    let (mut src, mut dst) = (vec![0u8; m], vec![0u8; m]);
    Ok(members
        .iter()
        .all(|&i| members.contains(&x.apply_index(i, &mut src, &mut dst))))
}

pub fn is_code_automorphism(code: &Code, x: &Automorphism) -> Result<bool> {
    code.is_automorphism(x)
}

pub fn is_linear_binary(code: &Code) -> bool {
    code.is_linear_binary()
}

pub fn translation_subgroup(code: &Code) -> Result<GeneratorSet> {
    code.translation_subgroup()
}

/// Certifies that `image(C, y) = C'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceWitness {
    pub y: Automorphism,
}

/// The canonically least `y` with `image(code, y) = other`, if any.
pub fn find_equivalence(code: &Code, other: &Code, config: &SearchConfig) -> Result<Option<EquivalenceWitness>> {
    if code.scheme != other.scheme {
        return Err(Error::SchemeMismatch {
            left: code.scheme,
            right: other.scheme,
        });
    }
    let search = SetMapSearch::new(code.scheme, &code.words, &other.words)?;
    Ok(search.first(config)?.map(|y| EquivalenceWitness { y }))
}
