//! Exhaustive and sampled checks of the vertex, triple, and code lemmas on a
//! single scheme. Each check yields a [`Clause`].

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::code::{stabilizes_set, Code};
use crate::config::SearchConfig;
use crate::error::Result;
use crate::hamming::{enumerate_triples, HammingScheme, Triple};
use crate::precodeword::verify_pre_structure;
use crate::report::{all_pass, Clause};
use crate::transitivity::{classify_theorem, setwise_stabilizer, Verdict};
use crate::wreath::{check_group_cap, enumerate_full_group};

/// Every pair at distance 2 has exactly two common neighbours.
pub fn check_common_neighbour_pairs(scheme: HammingScheme, config: &SearchConfig) -> Result<Clause> {
    scheme.check_vertex_cap(config.vertex_cap)?;
    let mut pairs = 0usize;
    let mut bad = Vec::new();
    for u in scheme.vertices() {
        let around: HashSet<_> = u.neighbours().into_iter().collect();
        for v in u.shell(2)? {
            pairs += 1;
            let common = v.neighbours().iter().filter(|w| around.contains(*w)).count();
            if common != 2 {
                bad.push(format!("({u},{v}): {common}"));
            }
        }
    }
    Ok(Clause::new(
        "distance_two_pairs_have_two_common_neighbours",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{pairs} ordered pairs checked")
        } else {
            bad.join(", ")
        },
    ))
}

/// The orbit of one triple under the full group is the whole triple set.
pub fn check_triple_transitivity(scheme: HammingScheme, config: &SearchConfig) -> Result<Clause> {
    scheme.check_vertex_cap(config.vertex_cap)?;
    let triples = enumerate_triples(scheme, config.vertex_cap)?;
    let group = enumerate_full_group(scheme, config)?;
    let all: HashSet<&Triple> = triples.iter().collect();
    let Some(base) = triples.first() else {
        return Ok(Clause::new("group_transitive_on_triples", true, "no triples (m < 2)"));
    };
    let mut orbit = HashSet::new();
    for x in &group {
        orbit.insert(Triple {
            alpha: x.apply(&base.alpha)?,
            nu: x.apply(&base.nu)?,
            beta: x.apply(&base.beta)?,
        });
    }
    let pass = orbit.len() == all.len() && orbit.iter().all(|t| all.contains(t));
    Ok(Clause::new(
        "group_transitive_on_triples",
        pass,
        format!(
            "orbit of ({},{},{}) has {} of {} triples",
            base.alpha,
            base.nu,
            base.beta,
            orbit.len(),
            all.len()
        ),
    ))
}

/// A uniformly random code with `size` distinct words.
pub fn random_code<R: Rng>(scheme: HammingScheme, size: usize, rng: &mut R) -> Result<Code> {
    let picks = sample(rng, scheme.vertex_count(), size.min(scheme.vertex_count()));
    Code::new(scheme, picks.into_iter().map(|i| scheme.vertex_at(i)))
}

/// Rejection-samples a code of `size` words and minimum distance at least
/// `min_distance`; `None` after `attempts` failures.
pub fn random_code_with_distance<R: Rng>(
    scheme: HammingScheme,
    size: usize,
    min_distance: usize,
    attempts: usize,
    rng: &mut R,
) -> Result<Option<Code>> {
    for _ in 0..attempts {
        let code = random_code(scheme, size, rng)?;
        if code.len() == size && code.min_distance().at_least(min_distance) {
            return Ok(Some(code));
        }
    }
    Ok(None)
}

/// Every automorphism of each code stabilizes its neighbour set.
pub fn check_automorphisms_fix_neighbours(codes: &[Code], config: &SearchConfig) -> Result<Clause> {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for code in codes {
        let neighbours = code.neighbour_set();
        for x in setwise_stabilizer(code.words(), code.scheme(), config)? {
            checked += 1;
            if !stabilizes_set(&neighbours, &x)? {
                bad.push(format!("{code:?} by {x}"));
            }
        }
    }
    Ok(Clause::new(
        "code_automorphisms_fix_neighbour_set",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} automorphisms over {} codes", codes.len())
        } else {
            bad.join("; ")
        },
    ))
}

/// Classifies each code (minimum distance at least 3). For every non-fixing
/// witness the pre-codeword structure is verified at every codeword it
/// moves off the code, and a witness must never appear when `m(q-1)` is odd.
pub fn check_precodeword_witnesses(codes: &[Code], config: &SearchConfig) -> Result<Vec<Clause>> {
    let mut witnesses = 0usize;
    let mut structures = 0usize;
    let mut violations = Vec::new();
    let mut structure_failures = Vec::new();
    let mut parity_failures = Vec::new();
    for code in codes {
        let report = classify_theorem(code, config)?;
        if report.is_violation() {
            violations.push(format!("{code:?}"));
        }
        let (Verdict::NonfixingWitness, Some(y)) = (report.verdict, report.witness.as_ref()) else {
            continue;
        };
        witnesses += 1;
        let s = code.scheme();
        if (s.m() * (s.q() - 1)) % 2 == 1 {
            parity_failures.push(format!("{code:?}"));
        }
        for alpha in code.words() {
            if code.contains(&y.apply(alpha)?) {
                continue;
            }
            structures += 1;
            let pre = verify_pre_structure(code, alpha, y)?;
            if !pre.all_pass() {
                structure_failures.push(format!("{code:?} at {alpha}"));
            }
        }
    }
    let summary = |bad: &[String], ok: String| if bad.is_empty() { ok } else { bad.join("; ") };
    Ok(vec![
        Clause::new(
            "classifier_never_reports_violation",
            violations.is_empty(),
            summary(&violations, format!("{} codes classified, {witnesses} with non-fixing witnesses", codes.len())),
        ),
        Clause::new(
            "precodeword_structure_at_witnesses",
            structure_failures.is_empty(),
            summary(&structure_failures, format!("{structures} (codeword, witness) pairs verified")),
        ),
        Clause::new(
            "no_witness_when_degree_odd",
            parity_failures.is_empty(),
            summary(&parity_failures, "parity condition respected".to_string()),
        ),
    ])
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaSuiteReport {
    pub m: usize,
    pub q: usize,
    pub seed: u64,
    pub clauses: Vec<Clause>,
}

impl LemmaSuiteReport {
    pub fn all_pass(&self) -> bool {
        all_pass(&self.clauses)
    }
}

/// Number of random codes drawn for each sampled check.
pub const SUITE_SAMPLES: usize = 24;

pub fn run_lemma_suite(scheme: HammingScheme, seed: u64, config: &SearchConfig) -> Result<LemmaSuiteReport> {
    scheme.check_vertex_cap(config.vertex_cap)?;
    check_group_cap(scheme, config.group_cap)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut clauses = vec![
        check_common_neighbour_pairs(scheme, config)?,
        check_triple_transitivity(scheme, config)?,
    ];

    let sampled: Vec<Code> = (0..SUITE_SAMPLES)
        .map(|_| {
            let size = rng.gen_range(1..=3);
            random_code(scheme, size, &mut rng)
        })
        .collect::<Result<_>>()?;
    clauses.push(check_automorphisms_fix_neighbours(&sampled, config)?);

    let mut distant = Vec::new();
    for _ in 0..SUITE_SAMPLES {
        let size = rng.gen_range(2..=3);
        if let Some(code) = random_code_with_distance(scheme, size, 3, 200, &mut rng)? {
            distant.push(code);
        }
    }
    clauses.extend(check_precodeword_witnesses(&distant, config)?);

    Ok(LemmaSuiteReport {
        m: scheme.m(),
        q: scheme.q(),
        seed,
        clauses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_on_small_schemes() {
        let cfg = SearchConfig::default();
        for (m, q) in [(4, 2), (3, 3), (2, 4)] {
            let s = HammingScheme::new(m, q).unwrap();
            let report = run_lemma_suite(s, 0, &cfg).unwrap();
            assert!(report.all_pass(), "{:#?}", report.clauses);
        }
    }

    #[test]
    fn sampling_is_seeded() {
        let s = HammingScheme::new(4, 2).unwrap();
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            random_code(s, 3, &mut rng).unwrap()
        };
        assert_eq!(draw(7), draw(7));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = random_code_with_distance(s, 2, 3, 1000, &mut rng).unwrap().unwrap();
        assert!(c.min_distance().at_least(3));
    }

    #[test]
    fn infeasible_scheme_is_rejected() {
        let s = HammingScheme::new(12, 5).unwrap();
        assert!(run_lemma_suite(s, 0, &SearchConfig::default()).is_err());
    }
}
