//! Setwise stabilizers, neighbour transitivity, and the classifier that
//! decides whether the stabilizer of `Γ₁(C)` fixes `C`.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::code::{stabilizes_set, Code};
use crate::config::SearchConfig;
use crate::error::{Error, Result};
use crate::hamming::{HammingScheme, Vertex};
use crate::search::SetMapSearch;
use crate::wreath::{Automorphism, GeneratorSet};

/// Every group element mapping `set` onto itself, in canonical order.
pub fn setwise_stabilizer(set: &[Vertex], scheme: HammingScheme, config: &SearchConfig) -> Result<Vec<Automorphism>> {
    SetMapSearch::new(scheme, set, set)?.all(config)
}

/// Contains the identity and is closed under products and inverses.
/// Quadratic in the number of elements.
pub fn is_subgroup(elements: &[Automorphism]) -> bool {
    let Some(first) = elements.first() else {
        return false;
    };
    let members: HashSet<&Automorphism> = elements.iter().collect();
    if !members.contains(&Automorphism::identity(first.scheme())) {
        return false;
    }
    elements.iter().all(|x| {
        members.contains(&x.inverse())
            && elements
                .iter()
                .all(|y| x.compose(y).is_ok_and(|xy| members.contains(&xy)))
    })
}

fn checked_neighbour_set(code: &Code, gens: &GeneratorSet) -> Result<Vec<Vertex>> {
    if code.scheme() != gens.scheme() {
        return Err(Error::SchemeMismatch {
            left: code.scheme(),
            right: gens.scheme(),
        });
    }
    let neighbours = code.neighbour_set();
    if neighbours.is_empty() {
        return Err(Error::EmptyNeighbourSet);
    }
    Ok(neighbours)
}

/// Every generator fixes `Γ₁(C)` setwise and the orbit of its least element
/// is all of `Γ₁(C)`.
pub fn is_neighbour_transitive(code: &Code, gens: &GeneratorSet) -> Result<bool> {
    let neighbours = checked_neighbour_set(code, gens)?;
    for g in gens.generators() {
        if !stabilizes_set(&neighbours, g)? {
            return Ok(false);
        }
    }
    let orbit = crate::wreath::orbit(gens, &neighbours[0])?;
    Ok(orbit == neighbours)
}

/// Orbits of the generated group on `Γ₁(C)`, each sorted, ordered by least element.
pub fn neighbour_orbits(code: &Code, gens: &GeneratorSet) -> Result<Vec<Vec<Vertex>>> {
    let neighbours = checked_neighbour_set(code, gens)?;
    for g in gens.generators() {
        if !stabilizes_set(&neighbours, g)? {
            return Err(Error::GeneratorMovesNeighbours);
        }
    }
    let mut assigned: HashSet<Vertex> = HashSet::new();
    let mut cells = Vec::new();
    for start in &neighbours {
        if assigned.contains(start) {
            continue;
        }
        let mut cell = vec![start.clone()];
        let mut queue = VecDeque::from([start.clone()]);
        assigned.insert(start.clone());
        while let Some(v) = queue.pop_front() {
            for g in gens.generators() {
                let w = g.apply(&v)?;
                if assigned.insert(w.clone()) {
                    cell.push(w.clone());
                    queue.push_back(w);
                }
            }
        }
        cell.sort();
        cells.push(cell);
    }
    Ok(cells)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "FIXED")]
    Fixed,
    #[serde(rename = "NONFIXING_WITNESS")]
    NonfixingWitness,
}

/// Which parameter regime admits a stabilizer of `Γ₁(C)` that moves `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremCase {
    /// δ = 4, q = 2 and m even.
    #[serde(rename = "CASE2_delta4_q2_m_even")]
    Delta4BinaryEvenLength,
    /// δ = 3 and m(q−1) even.
    #[serde(rename = "CASE3_delta3_mq1_even")]
    Delta3EvenDegree,
    /// A non-fixing element outside both regimes: a counterexample.
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl TheoremCase {
    pub fn for_parameters(delta: usize, scheme: HammingScheme) -> Self {
        let (m, q) = (scheme.m(), scheme.q());
        if delta == 4 && q == 2 && m % 2 == 0 {
            TheoremCase::Delta4BinaryEvenLength
        } else if delta == 3 && (m * (q - 1)) % 2 == 0 {
            TheoremCase::Delta3EvenDegree
        } else {
            TheoremCase::Violation
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub delta: usize,
    pub verdict: Verdict,
    pub witness: Option<Automorphism>,
    pub theorem_case: Option<TheoremCase>,
    pub stabilizer_order: Option<u64>,
    pub transitive_on_neighbours: bool,
}

impl ClassificationReport {
    pub fn is_violation(&self) -> bool {
        self.theorem_case == Some(TheoremCase::Violation)
    }
}

/// Computes the stabilizer of `Γ₁(C)` and reports whether it fixes `C`.
/// Requires minimum distance at least 3.
pub fn classify_theorem(code: &Code, config: &SearchConfig) -> Result<ClassificationReport> {
    let delta = code.min_distance();
    let delta = match delta.finite() {
        Some(d) if d >= 3 => d,
        _ => {
            return Err(Error::MinDistanceTooSmall {
                found: delta.to_string(),
                required: 3,
            })
        }
    };
    let neighbours = code.neighbour_set();
    let stabilizer = setwise_stabilizer(&neighbours, code.scheme(), config)?;
    classify_with_stabilizer(code, delta, &neighbours, &stabilizer)
}

/// Classification given a precomputed stabilizer of `neighbours = Γ₁(C)`.
pub(crate) fn classify_with_stabilizer(
    code: &Code,
    delta: usize,
    neighbours: &[Vertex],
    stabilizer: &[Automorphism],
) -> Result<ClassificationReport> {
    let mut witness = None;
    for x in stabilizer {
        if !code.is_automorphism(x)? {
            witness = Some(x.clone());
            break;
        }
    }
    let image_of_first: HashSet<Vertex> = match neighbours.first() {
        Some(nu) => stabilizer
            .iter()
            .map(|x| x.apply(nu))
            .collect::<Result<_>>()?,
        None => HashSet::new(),
    };
    let transitive = !neighbours.is_empty() && image_of_first.len() == neighbours.len();
    let (verdict, theorem_case) = match witness {
        None => (Verdict::Fixed, None),
        Some(_) => (
            Verdict::NonfixingWitness,
            Some(TheoremCase::for_parameters(delta, code.scheme())),
        ),
    };
    Ok(ClassificationReport {
        delta,
        verdict,
        witness,
        theorem_case,
        stabilizer_order: Some(stabilizer.len() as u64),
        transitive_on_neighbours: transitive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::{enumerate_full_group, full_group_order};

    fn h(m: usize, q: usize) -> HammingScheme {
        HammingScheme::new(m, q).unwrap()
    }

    #[test]
    fn stabilizer_of_everything_is_everything() {
        let s = h(3, 2);
        let all: Vec<Vertex> = s.vertices().collect();
        let cfg = SearchConfig::default();
        let stab = setwise_stabilizer(&all, s, &cfg).unwrap();
        assert_eq!(stab.len() as u128, full_group_order(s).unwrap());
        assert_eq!(stab, enumerate_full_group(s, &cfg).unwrap());
    }

    #[test]
    fn stabilizer_agrees_with_brute_force() {
        let cfg = SearchConfig::default();
        for (s, words) in [
            (h(4, 2), vec!["0000", "1111"]),
            (h(3, 3), vec!["000", "111"]),
            (h(3, 3), vec!["012", "120", "201"]),
            (h(4, 2), vec!["0001", "0110", "1010"]),
        ] {
            let c = Code::from_texts(s, &words).unwrap();
            for set in [c.words().to_vec(), c.neighbour_set()] {
                let brute: Vec<Automorphism> = enumerate_full_group(s, &cfg)
                    .unwrap()
                    .into_iter()
                    .filter(|x| stabilizes_set(&set, x).unwrap())
                    .collect();
                let fast = setwise_stabilizer(&set, s, &cfg).unwrap();
                assert_eq!(fast, brute);
                assert!(is_subgroup(&fast));
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let s = h(4, 3);
        let c = Code::from_texts(s, &["0000", "1111"]).unwrap();
        let n = c.neighbour_set();
        let par = setwise_stabilizer(&n, s, &SearchConfig::default()).unwrap();
        let seq = setwise_stabilizer(&n, s, &SearchConfig::sequential()).unwrap();
        assert_eq!(par, seq);
    }

    #[test]
    fn transitivity_basics() {
        let s = h(4, 2);
        let single = Code::from_texts(s, &["0000"]).unwrap();
        let id = GeneratorSet::new(s, vec![Automorphism::identity(s)]).unwrap();
        assert!(!is_neighbour_transitive(&single, &id).unwrap());
        let orbits = neighbour_orbits(&single, &id).unwrap();
        assert_eq!(orbits.len(), 4);
        assert!(orbits.iter().all(|o| o.len() == 1));

        let everything = Code::new(s, s.vertices()).unwrap();
        assert_eq!(
            is_neighbour_transitive(&everything, &id),
            Err(Error::EmptyNeighbourSet)
        );
        let mover = GeneratorSet::new(
            s,
            vec![Automorphism::translation(&s.parse_vertex("1000").unwrap()).unwrap()],
        )
        .unwrap();
        assert!(!is_neighbour_transitive(&single, &mover).unwrap());
        assert_eq!(neighbour_orbits(&single, &mover), Err(Error::GeneratorMovesNeighbours));
    }

    #[test]
    fn theorem_cases() {
        assert_eq!(TheoremCase::for_parameters(4, h(6, 2)), TheoremCase::Delta4BinaryEvenLength);
        assert_eq!(TheoremCase::for_parameters(4, h(5, 2)), TheoremCase::Violation);
        assert_eq!(TheoremCase::for_parameters(3, h(3, 3)), TheoremCase::Delta3EvenDegree);
        assert_eq!(TheoremCase::for_parameters(3, h(3, 2)), TheoremCase::Violation);
        assert_eq!(TheoremCase::for_parameters(5, h(6, 2)), TheoremCase::Violation);
    }

    #[test]
    fn classify_rejects_small_distance() {
        let s = h(4, 2);
        let c = Code::from_texts(s, &["0000", "1100"]).unwrap();
        assert!(matches!(
            classify_theorem(&c, &SearchConfig::default()),
            Err(Error::MinDistanceTooSmall { .. })
        ));
        let lone = Code::from_texts(s, &["0000"]).unwrap();
        assert!(classify_theorem(&lone, &SearchConfig::default()).is_err());
    }

    #[test]
    fn classify_repetition_codes() {
        let cfg = SearchConfig::default();
        let r5 = Code::from_texts(h(5, 2), &["00000", "11111"]).unwrap();
        let report = classify_theorem(&r5, &cfg).unwrap();
        assert_eq!(report.verdict, Verdict::Fixed);
        assert_eq!(report.delta, 5);
        assert!(report.witness.is_none());

        let r4 = Code::from_texts(h(4, 2), &["0000", "1111"]).unwrap();
        let report = classify_theorem(&r4, &cfg).unwrap();
        assert_eq!(report.verdict, Verdict::NonfixingWitness);
        assert_eq!(report.theorem_case, Some(TheoremCase::Delta4BinaryEvenLength));
        assert_eq!(report.stabilizer_order, Some(192));
        assert!(report.transitive_on_neighbours);
        let json = serde_json::to_string(&report).unwrap();
        let back: ClassificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
