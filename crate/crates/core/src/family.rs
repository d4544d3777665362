//! The binary family in H(m,2), m even and at least 4.
//!
//! Write a vertex as `(β, γ)` with both halves of length `m/2`. Then
//! `U = {(β, β)}` and `C ⊂ U` keeps only the even-weight `β`. The two codes
//! share their neighbour set, so the translation by any word of `U \ C`
//! stabilizes `Γ₁(C)` without fixing `C`.

use serde::Serialize;

use crate::code::{stabilizes_set, Code};
use crate::config::SearchConfig;
use crate::error::{Error, Result};
use crate::hamming::{HammingScheme, Vertex};
use crate::perm::all_permutations;
use crate::report::{all_pass, Clause};
use crate::transitivity::{classify_with_stabilizer, is_neighbour_transitive, setwise_stabilizer, ClassificationReport, TheoremCase, Verdict};
use crate::wreath::{check_group_cap, closure, Automorphism, GeneratorSet};

#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub m: usize,
    pub u: Code,
    pub c: Code,
    /// Translations by a basis of `C` plus the generators of `K ≅ S_{m/2} × S_2`.
    pub autc_gens: GeneratorSet,
    /// Translations by a basis of `U`, the `K` generators, and one swap of a
    /// coordinate with its partner in the other half.
    pub stab_gens: GeneratorSet,
    /// Translation by `(e_0, e_0)`.
    pub witness: Automorphism,
}

fn doubled(scheme: HammingScheme, beta: &[u8]) -> Result<Vertex> {
    let mut entries = beta.to_vec();
    entries.extend_from_slice(beta);
    scheme.vertex(entries)
}

fn check_length(m: usize) -> Result<()> {
    if m < 4 || !m.is_multiple_of(2) {
        return Err(Error::InvalidFamilyLength(m));
    }
    Ok(())
}

/// Coordinate permutations generating `K`: the doubled adjacent
/// transpositions `(i i+1)(i+h i+1+h)` and the half swap `∏ (i i+h)`.
pub fn k_generators(scheme: HammingScheme) -> Result<Vec<Automorphism>> {
    let m = scheme.m();
    let half = m / 2;
    let identity: Vec<u8> = (0..m as u8).collect();
    let mut out = Vec::new();
    for i in 0..half - 1 {
        let mut perm = identity.clone();
        perm.swap(i, i + 1);
        perm.swap(i + half, i + 1 + half);
        out.push(Automorphism::coordinate_permutation(scheme, perm)?);
    }
    let half_swap: Vec<u8> = (0..m).map(|i| ((i + half) % m) as u8).collect();
    out.push(Automorphism::coordinate_permutation(scheme, half_swap)?);
    Ok(out)
}

pub fn build_family(m: usize, config: &SearchConfig) -> Result<FamilyInstance> {
    check_length(m)?;
    let scheme = HammingScheme::new(m, 2)?;
    scheme.check_vertex_cap(config.vertex_cap)?;
    let half = m / 2;
    let half_scheme = HammingScheme::new(half, 2)?;

    let mut u_words = Vec::with_capacity(half_scheme.vertex_count());
    let mut c_words = Vec::new();
    for beta in half_scheme.vertices() {
        let word = doubled(scheme, beta.entries())?;
        if beta.weight() % 2 == 0 {
            c_words.push(word.clone());
        }
        u_words.push(word);
    }
    let u = Code::new(scheme, u_words)?;
    let c = Code::new(scheme, c_words)?;

    let unit = |i: usize| {
        let mut beta = vec![0u8; half];
        beta[i] = 1;
        beta
    };
    let k_gens = k_generators(scheme)?;

    let mut autc = Vec::new();
    for i in 0..half - 1 {
        let mut beta = unit(i);
        beta[i + 1] = 1;
        autc.push(Automorphism::translation(&doubled(scheme, &beta)?)?);
    }
    autc.extend(k_gens.iter().cloned());

    let mut stab = Vec::new();
    for i in 0..half {
        stab.push(Automorphism::translation(&doubled(scheme, &unit(i))?)?);
    }
    stab.extend(k_gens);
    let mut pair_swap: Vec<u8> = (0..m as u8).collect();
    pair_swap.swap(0, half);
    stab.push(Automorphism::coordinate_permutation(scheme, pair_swap)?);

    let witness = Automorphism::translation(&doubled(scheme, &unit(0))?)?;
    Ok(FamilyInstance {
        m,
        u,
        c,
        autc_gens: GeneratorSet::new(scheme, autc)?,
        stab_gens: GeneratorSet::new(scheme, stab)?,
        witness,
    })
}

/// Translations by even-weight vectors composed with every coordinate
/// permutation; the stabilizer of `Γ₁(C)` when `m = 4`.
pub fn even_weight_affine_group(scheme: HammingScheme) -> Result<Vec<Automorphism>> {
    let mut out = Vec::new();
    for w in scheme.vertices().filter(|w| w.weight() % 2 == 0) {
        let shift = Automorphism::translation(&w)?;
        for sigma in all_permutations(scheme.m()) {
            out.push(shift.compose(&Automorphism::coordinate_permutation(scheme, sigma)?)?);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub m: usize,
    pub exhaustive: bool,
    pub clauses: Vec<Clause>,
    pub stabilizer_order: Option<u64>,
    pub classification: Option<ClassificationReport>,
}

impl FamilyReport {
    pub fn all_pass(&self) -> bool {
        all_pass(&self.clauses)
    }
}

fn list(vs: &[Vertex]) -> String {
    vs.iter().map(Vertex::to_text).collect::<Vec<_>>().join(" ")
}

/// Runs the family checks. Exhaustive mode additionally computes the full
/// stabilizer of `Γ₁(C)` and needs the whole group under the cap.
pub fn verify_family(m: usize, exhaustive: bool, config: &SearchConfig) -> Result<FamilyReport> {
    let inst = build_family(m, config)?;
    let scheme = inst.c.scheme();
    if exhaustive {
        check_group_cap(scheme, config.group_cap)?;
    }
    let half = m / 2;
    let mut clauses = Vec::new();

    let (du, dc) = (inst.u.min_distance(), inst.c.min_distance());
    clauses.push(Clause::new(
        "min_distances",
        du.finite() == Some(2) && dc.finite() == Some(4),
        format!("delta_U = {du}, delta_C = {dc}, |U| = {}, |C| = {}", inst.u.len(), inst.c.len()),
    ));

    let half_scheme = HammingScheme::new(half, 2)?;
    let mut unit_pairs = Vec::new();
    for beta in half_scheme.vertices() {
        for gamma in beta.neighbours() {
            let mut entries = beta.entries().to_vec();
            entries.extend_from_slice(gamma.entries());
            unit_pairs.push(scheme.vertex(entries)?);
        }
    }
    unit_pairs.sort();
    let gamma_u = inst.u.neighbour_set();
    clauses.push(Clause::new(
        "neighbours_of_u_are_unit_distance_pairs",
        gamma_u == unit_pairs,
        format!("|Gamma1(U)| = {}, |{{(b,g) : d(b,g) = 1}}| = {}", gamma_u.len(), unit_pairs.len()),
    ));

    let gamma_c = inst.c.neighbour_set();
    let expected_size = (1usize << half) * half;
    clauses.push(Clause::new(
        "neighbour_sets_coincide",
        gamma_c == gamma_u && gamma_c.len() == expected_size,
        format!("|Gamma1(C)| = {}, expected {expected_size}", gamma_c.len()),
    ));

    let mut movers = Vec::new();
    for g in inst.autc_gens.generators() {
        if !inst.c.is_automorphism(g)? {
            movers.push(g.to_text());
        }
    }
    clauses.push(Clause::new(
        "autc_generators_fix_code",
        movers.is_empty(),
        if movers.is_empty() {
            format!("all {} generators fix C", inst.autc_gens.len())
        } else {
            format!("moving: {}", movers.join(" | "))
        },
    ));

    let transitive = is_neighbour_transitive(&inst.c, &inst.autc_gens)?;
    clauses.push(Clause::new(
        "code_is_autc_neighbour_transitive",
        transitive,
        format!("one orbit on {} neighbours: {transitive}", gamma_c.len()),
    ));

    let fixes_neighbours = stabilizes_set(&gamma_c, &inst.witness)?;
    let moved = inst.c.image(&inst.witness)?;
    clauses.push(Clause::new(
        "witness_fixes_neighbours_moves_code",
        fixes_neighbours && moved != inst.c,
        format!(
            "witness {} fixes Gamma1(C): {fixes_neighbours}; C^witness = {{{}}}",
            inst.witness,
            list(moved.words())
        ),
    ));

    let mut stabilizer_order = None;
    let mut classification = None;
    if exhaustive {
        let stabilizer = setwise_stabilizer(&gamma_c, scheme, config)?;
        stabilizer_order = Some(stabilizer.len() as u64);
        let (expected, label) = if m == 4 {
            (even_weight_affine_group(scheme)?, "even-weight translations with all coordinate permutations")
        } else {
            (closure(&inst.stab_gens, stabilizer.len().max(1) * 2)?, "closure of stab_gens")
        };
        clauses.push(Clause::new(
            "stabilizer_matches_expected",
            stabilizer == expected,
            format!("|G_Gamma1(C)| = {}, |{label}| = {}", stabilizer.len(), expected.len()),
        ));

        let report = classify_with_stabilizer(&inst.c, 4, &gamma_c, &stabilizer)?;
        let ok = report.verdict == Verdict::NonfixingWitness
            && report.theorem_case == Some(TheoremCase::Delta4BinaryEvenLength)
            && report.transitive_on_neighbours;
        clauses.push(Clause::new(
            "classifier_reports_case2",
            ok,
            format!(
                "verdict {:?}, case {:?}, transitive {}",
                report.verdict, report.theorem_case, report.transitive_on_neighbours
            ),
        ));
        classification = Some(report);
    }

    Ok(FamilyReport {
        m,
        exhaustive,
        clauses,
        stabilizer_order,
        classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(c: &Code) -> Vec<String> {
        c.words().iter().map(Vertex::to_text).collect()
    }

    #[test]
    fn rejects_bad_lengths() {
        let cfg = SearchConfig::default();
        for m in [0, 2, 3, 5, 7] {
            assert!(matches!(build_family(m, &cfg), Err(Error::InvalidFamilyLength(_))));
        }
    }

    #[test]
    fn small_members() {
        let cfg = SearchConfig::default();
        let f4 = build_family(4, &cfg).unwrap();
        assert_eq!(texts(&f4.c), ["0000", "1111"]);
        assert_eq!(texts(&f4.u), ["0000", "0101", "1010", "1111"]);
        let f6 = build_family(6, &cfg).unwrap();
        assert_eq!(texts(&f6.c), ["000000", "011011", "101101", "110110"]);
        assert_eq!(f6.witness.to_text(), Automorphism::translation(&f6.c.scheme().parse_vertex("100100").unwrap()).unwrap().to_text());
        let moved = f6.c.image(&f6.witness).unwrap();
        assert!(moved.words().iter().all(|w| !f6.c.contains(w)));
    }

    #[test]
    fn instance_invariants() {
        let cfg = SearchConfig::default();
        for m in [4, 6, 8, 10] {
            let f = build_family(m, &cfg).unwrap();
            assert_eq!(f.u.len(), 1 << (m / 2));
            assert_eq!(f.c.len(), 1 << (m / 2 - 1));
            assert!(f.c.words().iter().all(|w| f.u.contains(w)));
            let image = f.c.image(&f.witness).unwrap();
            assert!(image.words().iter().all(|w| f.u.contains(w) && !f.c.contains(w)));
        }
    }

    #[test]
    fn autc_closure_order() {
        let cfg = SearchConfig::default();
        for (m, expected) in [(6, 4 * 6 * 2), (8, 8 * 24 * 2)] {
            let f = build_family(m, &cfg).unwrap();
            assert_eq!(closure(&f.autc_gens, 100_000).unwrap().len(), expected);
        }
    }

    #[test]
    fn family_four_exhaustive() {
        let report = verify_family(4, true, &SearchConfig::default()).unwrap();
        assert!(report.all_pass(), "{:#?}", report.clauses);
        assert_eq!(report.stabilizer_order, Some(192));
        assert_eq!(report.clauses.len(), 8);
    }

    #[test]
    fn non_exhaustive_has_six_clauses() {
        let report = verify_family(10, false, &SearchConfig::default()).unwrap();
        assert!(report.all_pass(), "{:#?}", report.clauses);
        assert_eq!(report.clauses.len(), 6);
        assert!(verify_family(10, true, &SearchConfig::default()).is_err());
    }
}
