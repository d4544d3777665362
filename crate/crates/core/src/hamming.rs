//! Vertices of the Hamming graph H(m,q).
//!
//! The alphabet is `0..q` with `0` as the distinguished zero symbol and
//! coordinates are indexed from `0`. Vertices order lexicographically, and
//! that order coincides with the mixed-radix index returned by
//! [`Vertex::index`].

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The parameters of H(m,q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HammingScheme {
    m: usize,
    q: usize,
    vertex_count: usize,
}

impl HammingScheme {
    /// Symbols are stored as `u8`, so `q <= 256`; coordinates likewise, so `m <= 255`.
    pub fn new(m: usize, q: usize) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidScheme {
            m,
            q,
            reason: reason.to_string(),
        };
        if m == 0 {
            return Err(invalid("m must be at least 1"));
        }
        if q < 2 {
            return Err(invalid("q must be at least 2"));
        }
        if q > 256 {
            return Err(invalid("q must be at most 256"));
        }
        if m > 255 {
            return Err(invalid("m must be at most 255"));
        }
        let exp = u32::try_from(m).map_err(|_| invalid("m too large"))?;
        let vertex_count = q
            .checked_pow(exp)
            .ok_or_else(|| invalid("q^m overflows the platform count type"))?;
        Ok(Self { m, q, vertex_count })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_binary(&self) -> bool {
        self.q == 2
    }

    /// Fails with a feasibility error when an exhaustive vertex sweep would exceed `cap`.
    pub fn check_vertex_cap(&self, cap: u64) -> Result<()> {
        if self.vertex_count as u128 > cap as u128 {
            return Err(Error::Feasibility {
                what: "vertex enumeration",
                required: self.vertex_count as u128,
                cap: cap as u128,
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> Vertex {
        Vertex {
            entries: vec![0; self.m].into_boxed_slice(),
            scheme: *self,
        }
    }

    pub fn vertex(&self, entries: impl Into<Vec<u8>>) -> Result<Vertex> {
        let entries = entries.into();
        if entries.len() != self.m {
            return Err(Error::InvalidVertex(format!(
                "expected {} entries, got {}",
                self.m,
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e as usize >= self.q) {
            return Err(Error::InvalidVertex(format!(
                "symbol {bad} out of range for q={}",
                self.q
            )));
        }
        Ok(Vertex {
            entries: entries.into_boxed_slice(),
            scheme: *self,
        })
    }

    /// Unit vector with symbol `symbol` at coordinate `i`.
    pub fn unit(&self, i: usize, symbol: u8) -> Result<Vertex> {
        let mut entries = vec![0; self.m];
        if i >= self.m {
            return Err(Error::InvalidVertex(format!("coordinate {i} out of range")));
        }
        entries[i] = symbol;
        self.vertex(entries)
    }

    pub fn index_of(&self, entries: &[u8]) -> usize {
        entries
            .iter()
            .fold(0usize, |acc, &e| acc * self.q + e as usize)
    }

    /// Inverse of [`Vertex::index`]. Panics if `index >= vertex_count()`.
    pub fn vertex_at(&self, index: usize) -> Vertex {
        assert!(index < self.vertex_count, "vertex index out of range");
        let mut entries = vec![0u8; self.m];
        let mut rest = index;
        for slot in entries.iter_mut().rev() {
            *slot = (rest % self.q) as u8;
            rest /= self.q;
        }
        Vertex {
            entries: entries.into_boxed_slice(),
            scheme: *self,
        }
    }

    /// All vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count).map(move |i| self.vertex_at(i))
    }

    /// Parses the shared text form: contiguous digits when `q <= 10`,
    /// comma-separated integers otherwise.
    pub fn parse_vertex(&self, text: &str) -> Result<Vertex> {
        let text = text.trim();
        let entries: Vec<u8> = if self.q <= 10 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::InvalidVertex(format!("bad digit {c:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            text.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::InvalidVertex(format!("bad symbol {tok:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        };
        self.vertex(entries)
    }
}

impl fmt::Display for HammingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{})", self.m, self.q)
    }
}

/// A vertex of H(m,q): an m-tuple over `0..q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    entries: Box<[u8]>,
    scheme: HammingScheme,
}

impl Vertex {
    pub fn scheme(&self) -> HammingScheme {
        self.scheme
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn index(&self) -> usize {
        self.scheme.index_of(&self.entries)
    }

    pub(crate) fn check_scheme(&self, other: HammingScheme) -> Result<()> {
        if self.scheme != other {
            return Err(Error::SchemeMismatch {
                left: self.scheme,
                right: other,
            });
        }
        Ok(())
    }

    /// Number of coordinates in which the two vertices differ.
    pub fn distance(&self, other: &Vertex) -> Result<usize> {
        self.check_scheme(other.scheme)?;
        Ok(raw_distance(&self.entries, &other.entries))
    }

    /// Number of non-zero entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    /// Entrywise sum modulo `q`.
    pub fn add(&self, other: &Vertex) -> Result<Vertex> {
        self.check_scheme(other.scheme)?;
        let q = self.scheme.q;
        let entries: Vec<u8> = self
            .entries
            .iter()
            .zip(other.entries.iter())
            .map(|(&a, &b)| ((a as usize + b as usize) % q) as u8)
            .collect();
        Ok(Vertex {
            entries: entries.into_boxed_slice(),
            scheme: self.scheme,
        })
    }

    /// The `m(q-1)` vertices at distance 1, sorted.
    pub fn neighbours(&self) -> Vec<Vertex> {
        let mut out = self.shell_unsorted(1);
        out.sort();
        out
    }

    /// Vertices adjacent to both `self` and `other`.
    pub fn common_neighbours(&self, other: &Vertex) -> Result<Vec<Vertex>> {
        self.check_scheme(other.scheme)?;
        if self == other {
            return Err(Error::DegenerateIntersection);
        }
        if raw_distance(&self.entries, &other.entries) > 2 {
            return Ok(Vec::new());
        }
        Ok(self
            .neighbours()
            .into_iter()
            .filter(|n| raw_distance(&n.entries, &other.entries) == 1)
            .collect())
    }

    /// All vertices at distance exactly `radius`, sorted.
    pub fn shell(&self, radius: usize) -> Result<Vec<Vertex>> {
        if radius > self.scheme.m {
            return Err(Error::ShellRadius {
                radius,
                m: self.scheme.m,
            });
        }
        let mut out = self.shell_unsorted(radius);
        out.sort();
        Ok(out)
    }

    fn shell_unsorted(&self, radius: usize) -> Vec<Vertex> {
        fn recurse(
            base: &Vertex,
            start: usize,
            left: usize,
            current: &mut Vec<u8>,
            out: &mut Vec<Vertex>,
        ) {
            if left == 0 {
                out.push(Vertex {
                    entries: current.clone().into_boxed_slice(),
                    scheme: base.scheme,
                });
                return;
            }
            let m = base.scheme.m;
            for i in start..=(m - left) {
                let original = base.entries[i];
                for s in 0..base.scheme.q as u16 {
                    let s = s as u8;
                    if s == original {
                        continue;
                    }
                    current[i] = s;
                    recurse(base, i + 1, left - 1, current, out);
                }
                current[i] = original;
            }
        }
        let mut out = Vec::new();
        let mut current = self.entries.to_vec();
        recurse(self, 0, radius, &mut current, &mut out);
        out
    }

    pub fn to_text(&self) -> String {
        if self.scheme.q <= 10 {
            self.entries.iter().map(|e| char::from(b'0' + e)).collect()
        } else {
            self.entries
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

pub(crate) fn raw_distance(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vertex({})", self.to_text())
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_text())
    }
}

pub fn distance(u: &Vertex, v: &Vertex) -> Result<usize> {
    u.distance(v)
}

pub fn weight(v: &Vertex) -> usize {
    v.weight()
}

pub fn neighbours(v: &Vertex) -> Vec<Vertex> {
    v.neighbours()
}

pub fn common_neighbours(u: &Vertex, v: &Vertex) -> Result<Vec<Vertex>> {
    u.common_neighbours(v)
}

/// `(alpha, nu, beta)` with `d(alpha, beta) = 2` and `nu` adjacent to both.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub alpha: Vertex,
    pub nu: Vertex,
    pub beta: Vertex,
}

impl Triple {
    pub fn new(alpha: Vertex, nu: Vertex, beta: Vertex) -> Result<Self> {
        let ok = alpha.distance(&beta)? == 2
            && alpha.distance(&nu)? == 1
            && nu.distance(&beta)? == 1;
        if !ok {
            return Err(Error::InvalidVertex(format!(
                "({alpha}, {nu}, {beta}) is not a triple"
            )));
        }
        Ok(Self { alpha, nu, beta })
    }

    pub fn is_valid(&self) -> bool {
        raw_distance(&self.alpha.entries, &self.beta.entries) == 2
            && raw_distance(&self.alpha.entries, &self.nu.entries) == 1
            && raw_distance(&self.nu.entries, &self.beta.entries) == 1
    }
}

/// Expected size of the triple set: `q^m * C(m,2) * (q-1)^2 * 2`.
pub fn triple_count(scheme: HammingScheme) -> u128 {
    let m = scheme.m as u128;
    let q = scheme.q as u128;
    scheme.vertex_count as u128 * (m * (m.saturating_sub(1)) / 2) * (q - 1) * (q - 1) * 2
}

/// Every triple of the scheme, ordered by `(alpha, beta, nu)`.
pub fn enumerate_triples(scheme: HammingScheme, vertex_cap: u64) -> Result<Vec<Triple>> {
    scheme.check_vertex_cap(vertex_cap)?;
    let mut out = Vec::with_capacity(triple_count(scheme) as usize);
    for alpha in scheme.vertices() {
        for beta in alpha.shell(2)? {
            for nu in alpha.common_neighbours(&beta)? {
                out.push(Triple {
                    alpha: alpha.clone(),
                    nu,
                    beta: beta.clone(),
                });
            }
        }
    }
    Ok(out)
}
