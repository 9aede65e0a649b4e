//! Initial roots, constituent roots and the resulting gradation of `N⁺`.

use std::collections::BTreeMap;
use std::time::Instant;

use super::frame::{has_terminal_so3, link_frame, max_links};
use super::model::{positive_roots, AlgebraModel, Root};
use crate::error::Result;
use crate::report::VerificationReport;

/// One graded piece: an initial root and its constituent roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub initial: Root,
    pub constituents: Vec<Root>,
}

#[derive(Clone, Debug)]
pub struct Gradation {
    pub p_max: usize,
    pub pieces: Vec<GradedPiece>,
    pub checks: VerificationReport,
}

/// `[M/4] + [(M+1)/4]`.
pub fn p_max_formula(m: usize) -> usize {
    m / 4 + (m + 1) / 4
}

/// Constituent roots of `λ₀` inside the local positive system: `λ'` with
/// `λ₀ - λ'` positive and `λ₀ + λ'` not a root.
fn constituents(model: &AlgebraModel, local_pos: &[Root], l0: &Root) -> Vec<Root> {
    local_pos
        .iter()
        .filter(|r| {
            let rest = Root(l0.0.iter().zip(&r.0).map(|(a, b)| a - b).collect());
            local_pos.contains(&rest) && !model.is_root(&l0.add(r))
        })
        .cloned()
        .collect()
}

pub fn gradation_and_pmax(model: &AlgebraModel) -> Result<Gradation> {
    let start = Instant::now();
    let m = model.dim();
    let n = model.rank();
    let mut pieces = Vec::new();
    for k in 0..max_links(m) {
        let f = link_frame(model, k)?;
        let lo = f.offset();
        let local_pos: Vec<Root> =
            model.positive_roots().iter().filter(|r| r.0[..lo].iter().all(|c| *c == 0)).cloned().collect();
        for l0 in [f.global_root(&[(1, 1), (2, 1)]), f.global_root(&[(1, 1), (2, -1)])] {
            let c = constituents(model, &local_pos, &l0);
            pieces.push(GradedPiece { initial: l0, constituents: c });
        }
    }
    if has_terminal_so3(m) {
        pieces.push(GradedPiece { initial: Root::e(n, n, 1), constituents: Vec::new() });
    }

    let mut report = VerificationReport::passed(format!("gradation so({m})"));
    let mut seen: BTreeMap<Root, usize> = BTreeMap::new();
    for p in &pieces {
        for r in std::iter::once(&p.initial).chain(&p.constituents) {
            *seen.entry(r.clone()).or_default() += 1;
        }
    }
    for r in model.positive_roots() {
        match seen.get(r).copied().unwrap_or(0) {
            1 => {}
            c => report.fail(format!("root {r} covered {c} times")),
        }
    }
    for r in seen.keys() {
        if !model.positive_roots().contains(r) {
            report.fail(format!("{r} is not a positive root"));
        }
    }
    let p_max = pieces.len();
    if p_max != p_max_formula(m) {
        report.fail(format!("p_max = {p_max}, expected {}", p_max_formula(m)));
    }
    if m >= 7 {
        let s = model.series();
        let lhs = positive_roots(s, n).len() as i64 - positive_roots(s, n - 2).len() as i64;
        let rhs = 2 * ((m - 4) as i64 + 1);
        if lhs != rhs {
            report.fail(format!("dim N+(so({m})) - dim N+(so({})) = {lhs}, expected {rhs}", m - 4));
        }
    }
    Ok(Gradation { p_max, pieces, checks: report.timed(start) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Series;
    use crate::algebra::build_algebra;

    #[test]
    fn so5_partition() {
        let m = build_algebra(Series::B, 2).unwrap();
        let g = gradation_and_pmax(&m).unwrap();
        assert!(g.checks.pass, "{}", g.checks);
        assert_eq!(g.p_max, 2);
        assert_eq!(g.pieces[0].initial, Root(vec![1, 1]));
        let mut c: Vec<String> = g.pieces[0].constituents.iter().map(|r| r.to_string()).collect();
        c.sort();
        assert_eq!(c, vec!["e1", "e2"]);
        assert_eq!(g.pieces[1].initial, Root(vec![1, -1]));
        assert!(g.pieces[1].constituents.is_empty());
    }

    #[test]
    fn covers_for_all_small_m() {
        for m in 5..=12 {
            let (s, n) = Series::from_dim(m);
            let model = build_algebra(s, n).unwrap();
            let g = gradation_and_pmax(&model).unwrap();
            assert!(g.checks.pass, "{}", g.checks);
            assert_eq!(g.p_max, p_max_formula(m));
        }
    }

    #[test]
    fn dimension_relation_so9() {
        // 16 - 4 = 2 (5 + 1)
        assert_eq!(positive_roots(Series::B, 4).len() - positive_roots(Series::B, 2).len(), 12);
    }
}
