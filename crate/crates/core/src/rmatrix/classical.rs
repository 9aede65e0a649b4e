//! Classical r-matrices of the chains and the classical Yang–Baxter
//! equation.

use std::time::Instant;

use crate::algebra::{link_frame, AlgebraModel};
use crate::error::Result;
use crate::expr::{tensor_rep, SigmaRef, TensorExpr};
use crate::linalg::{leg_embed, swap_legs, Scalar, SparseMat};
use crate::report::VerificationReport;

/// Parameters of one link of `r`: `η_k`, and `ξ_k` (absent for canonical
/// chains).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalLink {
    pub k: usize,
    pub eta: Scalar,
    pub xi: Option<Scalar>,
}

#[derive(Clone, Debug)]
pub struct ClassicalR {
    pub expr: TensorExpr,
}

/// `r = Σ_k η_k (H^k_{1+2}∧E^k_{1+2} + ξ_k H^k_{1-2}∧E^k_{1-2} + I^{1∧2})`
/// plus `Σ ζ E_s∧E_t` over the given pairs of leading root vectors.
pub fn classical_r_build(
    model: &AlgebraModel,
    links: &[ClassicalLink],
    zeta: &[(SigmaRef, SigmaRef, Scalar)],
) -> Result<ClassicalR> {
    let mut r = TensorExpr::zero();
    for l in links {
        let f = link_frame(model, l.k)?;
        let mut part = TensorExpr::wedge(&f.h_plus(), &f.e_plus(model)?);
        if let Some(xi) = &l.xi {
            part = part.add(&TensorExpr::wedge(&f.h_minus(), &f.e_minus(model)?).scale(xi));
        }
        part = part.add(&f.invariant_wedge(model, 1, 2)?);
        r = r.add(&part.scale(&l.eta));
    }
    for (a, b, z) in zeta {
        r = r.add(&TensorExpr::wedge(&a.leading_root(model)?, &b.leading_root(model)?).scale(z));
    }
    Ok(ClassicalR { expr: r })
}

/// Antisymmetry `r + r₂₁ = 0`, then
/// `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃] = 0` in `V^{⊗3}`.
pub fn cybe_check(r: &ClassicalR, model: &AlgebraModel) -> Result<VerificationReport> {
    cybe_check_matrix(&tensor_rep(&r.expr, model)?, model.dim())
}

pub fn cybe_check_matrix(r: &SparseMat, d: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let n3 = d * d * d;
    let anti = VerificationReport::from_equality("antisymmetry r + r21 = 0", &r.neg(), &swap_legs(r, d)?);
    if !anti.pass {
        return Ok(VerificationReport::combine("CYBE", &[anti]).timed(start));
    }
    let r12 = leg_embed(r, &[1, 2], d, 3)?;
    let r13 = leg_embed(r, &[1, 3], d, 3)?;
    let r23 = leg_embed(r, &[2, 3], d, 3)?;
    let sum = r12.commutator(&r13)?.add(&r12.commutator(&r23)?)?.add(&r13.commutator(&r23)?)?;
    let cybe = VerificationReport::from_equality(format!("CYBE dim {n3}"), &sum, &SparseMat::zeros(n3, n3));
    Ok(VerificationReport::combine("CYBE", &[anti, cybe]).timed(start))
}
