//! The carrier subalgebra of a chain.

use crate::algebra::{AlgebraModel, Gen};
use crate::error::Result;
use crate::linalg::{elim, Scalar};
use crate::report::VerificationReport;

use super::spec::ChainSpec;

#[derive(Clone, Debug)]
pub struct Carrier {
    /// Row-reduced basis of the span of all Lie elements in the exponents.
    pub basis: Vec<Vec<(Gen, Scalar)>>,
    pub dim: usize,
    pub borel_dim: usize,
    pub nplus_dim: usize,
    /// `dim B - dim carrier`, i.e. Cartan directions not reached.
    pub missing_cartans: usize,
    pub report: VerificationReport,
}

fn span_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    elim::rref(&mut m).len()
}

pub fn carrier_basis(chain: &ChainSpec) -> Result<Carrier> {
    let model: &AlgebraModel = chain.model();
    let gens: Vec<Gen> = model.generators().map(|(g, _)| *g).collect();
    let index = |g: &Gen| gens.iter().position(|x| x == g).expect("generator from the table");
    let to_row = |elem: &[(Gen, Scalar)]| {
        let mut row = vec![Scalar::zero(); gens.len()];
        for (g, c) in elem {
            row[index(g)] += c;
        }
        row
    };

    let mut leaves = Vec::new();
    for f in chain.factors() {
        for t in f.exponent.terms() {
            t.left.lie_leaves(&mut leaves);
            t.right.lie_leaves(&mut leaves);
        }
    }
    let mut rows: Vec<Vec<Scalar>> = leaves.iter().map(|l| to_row(l)).collect();
    let pivots = elim::rref(&mut rows);
    rows.truncate(pivots.len());
    let dim = rows.len();

    let borel: Vec<Vec<Scalar>> = model.borel_basis().iter().map(|g| to_row(&[(*g, Scalar::one())])).collect();
    let nplus: Vec<Vec<Scalar>> = model
        .borel_basis()
        .iter()
        .filter(|g| matches!(g, Gen::A(..)))
        .map(|g| to_row(&[(*g, Scalar::one())]))
        .collect();
    let borel_dim = borel.len();
    let nplus_dim = nplus.len();

    let mut report = VerificationReport::passed(format!("carrier so({})", model.dim()));
    let with_borel: Vec<Vec<Scalar>> = rows.iter().chain(&borel).cloned().collect();
    if span_rank(&with_borel) != borel_dim {
        report.fail("carrier is not inside the Borel subalgebra");
    }
    let with_nplus: Vec<Vec<Scalar>> = rows.iter().chain(&nplus).cloned().collect();
    let covers_nplus = span_rank(&with_nplus) == dim;

    let basis = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (gens[i], c.clone())).collect())
        .collect();
    let missing = borel_dim.saturating_sub(dim);
    if !covers_nplus {
        report.fail("carrier does not contain N+");
    }
    Ok(Carrier { basis, dim, borel_dim, nplus_dim, missing_cartans: missing, report })
}
