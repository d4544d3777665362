//! Pre-codewords of a codeword with respect to a neighbour-set stabilizer.
//!
//! Given a code `C` with minimum distance at least 3, a codeword `α` and an
//! element `y` that stabilizes `Γ₁(C)` but sends `α` outside `C`, the
//! pre-codewords of `α` are the vertices `π` at distance 2 from `α` with
//! `π^y ∈ C`. Every function here checks those hypotheses first and fails
//! with a dedicated error when one does not hold.

use std::collections::HashSet;

use serde::Serialize;

use crate::code::{stabilizes_set, Code};
use crate::error::{Error, Result};
use crate::hamming::Vertex;
use crate::report::{all_pass, Clause};
use crate::wreath::Automorphism;

fn require_distance_three(code: &Code) -> Result<()> {
    let delta = code.min_distance();
    if !delta.at_least(3) {
        return Err(Error::MinDistanceTooSmall {
            found: delta.to_string(),
            required: 3,
        });
    }
    Ok(())
}

fn check_hypotheses(code: &Code, alpha: &Vertex, y: &Automorphism) -> Result<Vec<Vertex>> {
    alpha.check_scheme(code.scheme())?;
    if !code.contains(alpha) {
        return Err(Error::NotACodeword(alpha.to_text()));
    }
    require_distance_three(code)?;
    let neighbours = code.neighbour_set();
    if !stabilizes_set(&neighbours, y)? {
        return Err(Error::NotNeighbourStabilizer);
    }
    if code.contains(&y.apply(alpha)?) {
        return Err(Error::CodewordFixedIntoCode);
    }
    Ok(neighbours)
}

fn pre_set_unchecked(code: &Code, alpha: &Vertex, y: &Automorphism) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    for pi in alpha.shell(2)? {
        if code.contains(&y.apply(&pi)?) {
            out.push(pi);
        }
    }
    Ok(out)
}

/// `Pre(α, y)`, sorted.
pub fn pre_codewords(code: &Code, alpha: &Vertex, y: &Automorphism) -> Result<Vec<Vertex>> {
    check_hypotheses(code, alpha, y)?;
    pre_set_unchecked(code, alpha, y)
}

/// The unique pre-codeword adjacent to the neighbour `nu` of `alpha`.
pub fn pre_for_neighbour(code: &Code, alpha: &Vertex, y: &Automorphism, nu: &Vertex) -> Result<Vertex> {
    check_hypotheses(code, alpha, y)?;
    if alpha.distance(nu)? != 1 {
        return Err(Error::NotANeighbour(nu.to_text()));
    }
    let mut candidates = Vec::new();
    for pi in pre_set_unchecked(code, alpha, y)? {
        if pi.distance(nu)? == 1 {
            candidates.push(pi);
        }
    }
    if candidates.len() != 1 {
        return Err(Error::LemmaViolation(format!(
            "neighbour {nu} of {alpha} is adjacent to {} pre-codewords",
            candidates.len()
        )));
    }
    Ok(candidates.pop().unwrap())
}

/// `C(π)`: the codewords at distance exactly 2 from `pi`.
pub fn c_of_pi(code: &Code, pi: &Vertex) -> Result<Vec<Vertex>> {
    pi.check_scheme(code.scheme())?;
    require_distance_three(code)?;
    if code.contains(pi) {
        return Err(Error::IsACodeword(pi.to_text()));
    }
    Ok(pi.shell(2)?.into_iter().filter(|v| code.contains(v)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreCell {
    pub pi: Vertex,
    /// `Γ₁(α) ∩ Γ₁(π)`.
    pub neighbours: Vec<Vertex>,
}

/// Structural verification of `Pre(α, y)` and the sets `C(π)`.
#[derive(Debug, Clone, Serialize)]
pub struct PreReport {
    pub alpha: Vertex,
    pub y: Automorphism,
    pub pre_set: Vec<Vertex>,
    pub cells: Vec<PreCell>,
    pub gamma1_covered: bool,
    pub count_ok: bool,
    pub clauses: Vec<Clause>,
}

impl PreReport {
    pub fn all_pass(&self) -> bool {
        all_pass(&self.clauses)
    }
}

/// `None` if `cells` are 2-element, pairwise disjoint and cover `whole`;
/// otherwise a description of the first problem.
fn partition_failure(cells: &[Vec<Vertex>], whole: &[Vertex]) -> Option<String> {
    let mut seen: HashSet<&Vertex> = HashSet::new();
    for cell in cells {
        if cell.len() != 2 {
            return Some(format!("cell of size {}", cell.len()));
        }
        for v in cell {
            if !seen.insert(v) {
                return Some(format!("{v} lies in two cells"));
            }
        }
    }
    let wanted: HashSet<&Vertex> = whole.iter().collect();
    if seen != wanted {
        return Some(format!("cells cover {} of {} vertices", seen.len(), wanted.len()));
    }
    None
}

pub fn verify_pre_structure(code: &Code, alpha: &Vertex, y: &Automorphism) -> Result<PreReport> {
    let neighbour_set = check_hypotheses(code, alpha, y)?;
    let scheme = code.scheme();
    let degree = scheme.m() * (scheme.q() - 1);
    let pre_set = pre_set_unchecked(code, alpha, y)?;
    let gamma_alpha = alpha.neighbours();
    let mut clauses = Vec::new();

    let mut cells = Vec::with_capacity(pre_set.len());
    for pi in &pre_set {
        cells.push(PreCell {
            pi: pi.clone(),
            neighbours: alpha.common_neighbours(pi)?,
        });
    }
    let cell_sets: Vec<Vec<Vertex>> = cells.iter().map(|c| c.neighbours.clone()).collect();
    let failure = partition_failure(&cell_sets, &gamma_alpha);
    let covered: HashSet<&Vertex> = cell_sets.iter().flatten().collect();
    let gamma1_covered = gamma_alpha.iter().all(|v| covered.contains(v));
    clauses.push(Clause::new(
        "pre_cells_partition_neighbours_of_alpha",
        failure.is_none(),
        failure.unwrap_or_else(|| format!("{} cells of size 2 cover all {} neighbours", cells.len(), gamma_alpha.len())),
    ));

    let count_ok = 2 * pre_set.len() == degree;
    clauses.push(Clause::new(
        "pre_count_is_half_degree",
        count_ok,
        format!("|Pre| = {}, m(q-1) = {degree}", pre_set.len()),
    ));

    let neighbour_lookup: HashSet<&Vertex> = neighbour_set.iter().collect();
    let outside: Vec<String> = pre_set
        .iter()
        .flat_map(|pi| pi.neighbours())
        .filter(|v| !neighbour_lookup.contains(v))
        .map(|v| v.to_text())
        .collect();
    clauses.push(Clause::new(
        "pre_neighbours_inside_code_neighbour_set",
        outside.is_empty(),
        if outside.is_empty() {
            "every neighbour of every pre-codeword is a code neighbour".to_string()
        } else {
            format!("outside: {}", outside.join(" "))
        },
    ));

    let mut partition_problems = Vec::new();
    let mut count_problems = Vec::new();
    let mut fixed_into_code = Vec::new();
    for pi in &pre_set {
        let c_pi = c_of_pi(code, pi)?;
        let mut cells_pi = Vec::with_capacity(c_pi.len());
        for beta in &c_pi {
            cells_pi.push(beta.common_neighbours(pi)?);
            if code.contains(&y.apply(beta)?) {
                fixed_into_code.push(format!("{beta} (via {pi})"));
            }
        }
        if let Some(why) = partition_failure(&cells_pi, &pi.neighbours()) {
            partition_problems.push(format!("{pi}: {why}"));
        }
        if 2 * c_pi.len() != degree {
            count_problems.push(format!("|C({pi})| = {}", c_pi.len()));
        }
    }
    let summarize = |problems: &[String], ok: &str| {
        if problems.is_empty() {
            ok.to_string()
        } else {
            problems.join("; ")
        }
    };
    clauses.push(Clause::new(
        "c_pi_cells_partition_neighbours_of_pi",
        partition_problems.is_empty(),
        summarize(&partition_problems, "holds for every pre-codeword"),
    ));
    clauses.push(Clause::new(
        "c_pi_count_is_half_degree",
        count_problems.is_empty(),
        summarize(&count_problems, "2|C(pi)| = m(q-1) for every pre-codeword"),
    ));
    clauses.push(Clause::new(
        "c_pi_moved_off_code",
        fixed_into_code.is_empty(),
        summarize(&fixed_into_code, "y maps no member of any C(pi) into the code"),
    ));

    Ok(PreReport {
        alpha: alpha.clone(),
        y: y.clone(),
        pre_set,
        cells,
        gamma1_covered,
        count_ok,
        clauses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamming::HammingScheme;

    fn h(m: usize) -> HammingScheme {
        HammingScheme::new(m, 2).unwrap()
    }

    fn t(s: HammingScheme, text: &str) -> Automorphism {
        Automorphism::translation(&s.parse_vertex(text).unwrap()).unwrap()
    }

    fn texts(vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(Vertex::to_text).collect()
    }

    #[test]
    fn family_four_pre_codewords() {
        let s = h(4);
        let c = Code::from_texts(s, &["0000", "1111"]).unwrap();
        let y = t(s, "0101");
        // oracle: filter the 6 weight-2 vertices by π + 0101 ∈ C
        let oracle: Vec<Vertex> = s
            .vertices()
            .filter(|v| v.weight() == 2 && c.contains(&v.add(&s.parse_vertex("0101").unwrap()).unwrap()))
            .collect();
        let pre = pre_codewords(&c, &s.zero(), &y).unwrap();
        assert_eq!(pre, oracle);
        assert_eq!(texts(&pre), ["0101", "1010"]);

        let nu = |x: &str| s.parse_vertex(x).unwrap();
        assert_eq!(pre_for_neighbour(&c, &s.zero(), &y, &nu("0100")).unwrap().to_text(), "0101");
        assert_eq!(pre_for_neighbour(&c, &s.zero(), &y, &nu("1000")).unwrap().to_text(), "1010");
        assert_eq!(pre_for_neighbour(&c, &s.zero(), &y, &nu("0001")).unwrap().to_text(), "0101");
        assert!(matches!(
            pre_for_neighbour(&c, &s.zero(), &y, &nu("0011")),
            Err(Error::NotANeighbour(_))
        ));
    }

    #[test]
    fn family_six_pre_count() {
        let s = h(6);
        let c = Code::from_texts(s, &["000000", "011011", "101101", "110110"]).unwrap();
        let pre = pre_codewords(&c, &s.zero(), &t(s, "100100")).unwrap();
        assert_eq!(pre.len(), 3);
    }

    #[test]
    fn c_of_pi_examples() {
        let s = h(4);
        let c = Code::from_texts(s, &["0000", "1111"]).unwrap();
        let pi = |x: &str| s.parse_vertex(x).unwrap();
        assert_eq!(texts(&c_of_pi(&c, &pi("0101")).unwrap()), ["0000", "1111"]);
        assert_eq!(texts(&c_of_pi(&c, &pi("1100")).unwrap()), ["0000", "1111"]);
        assert!(matches!(c_of_pi(&c, &pi("0000")), Err(Error::IsACodeword(_))));
    }

    #[test]
    fn hypothesis_errors_are_distinct() {
        let s = h(4);
        let c = Code::from_texts(s, &["0000", "1111"]).unwrap();
        let y = t(s, "0101");
        assert!(matches!(
            pre_codewords(&c, &s.parse_vertex("0101").unwrap(), &y),
            Err(Error::NotACodeword(_))
        ));
        assert!(matches!(
            pre_codewords(&c, &s.zero(), &t(s, "1000")),
            Err(Error::NotNeighbourStabilizer)
        ));
        assert!(matches!(
            pre_codewords(&c, &s.zero(), &t(s, "1111")),
            Err(Error::CodewordFixedIntoCode)
        ));
        let close = Code::from_texts(s, &["0000", "1100"]).unwrap();
        assert!(matches!(
            pre_codewords(&close, &s.zero(), &y),
            Err(Error::MinDistanceTooSmall { .. })
        ));
    }

    #[test]
    fn structure_report_passes() {
        let s = h(4);
        let c = Code::from_texts(s, &["0000", "1111"]).unwrap();
        let report = verify_pre_structure(&c, &s.zero(), &t(s, "0101")).unwrap();
        assert!(report.all_pass(), "{:?}", report.clauses);
        assert!(report.gamma1_covered && report.count_ok);
        assert_eq!(report.cells.len(), 2);
    }

    #[test]
    fn partition_failures_are_reported() {
        let s = h(4);
        let v = |x: &str| s.parse_vertex(x).unwrap();
        let whole = vec![v("1000"), v("0100"), v("0010"), v("0001")];
        assert!(partition_failure(&[vec![v("1000"), v("0100")], vec![v("0010"), v("0001")]], &whole).is_none());
        assert!(partition_failure(&[vec![v("1000"), v("0100")]], &whole).is_some());
        assert!(partition_failure(&[vec![v("1000"), v("0100")], vec![v("0100"), v("0001")]], &whole).is_some());
        assert!(partition_failure(&[vec![v("1000")], vec![v("0100"), v("0010"), v("0001")]], &whole).is_some());
    }
}
