//! Twisted Yangian R-matrices `R(u)` in the defining representation.

use std::time::Instant;

use crate::algebra::AlgebraModel;
use crate::error::{Error, Result};
use crate::linalg::{flip_and_k, leg_embed, poly_interpolate, swap_legs, Scalar, SparseMat, TransposeForm};
use crate::report::VerificationReport;

/// Convention for `K`, fixed by the twisted spectral Yang–Baxter test.
pub const LOCKED_K: TransposeForm = TransposeForm::Antidiagonal;

/// A twist together with its inverse, or the untwisted case.
#[derive(Clone, Debug)]
pub struct YangianTwist {
    f21: SparseMat,
    f21_finv: SparseMat,
    f_inv: SparseMat,
}

impl YangianTwist {
    pub fn identity(m: usize) -> Self {
        let id = SparseMat::identity(m * m);
        YangianTwist { f21: id.clone(), f21_finv: id.clone(), f_inv: id }
    }

    pub fn new(f: &SparseMat, f_inv: &SparseMat, m: usize) -> Result<Self> {
        let f21 = swap_legs(f, m)?;
        Ok(YangianTwist { f21_finv: f21.mul(f_inv)?, f21, f_inv: f_inv.clone() })
    }
}

/// `R(u) = u F₂₁F⁻¹ + P - u/(u - 1 + M/2) F₂₁ K F⁻¹`.
pub fn yangian_r(model: &AlgebraModel, twist: &YangianTwist, u: &Scalar, form: TransposeForm) -> Result<SparseMat> {
    let m = model.dim();
    let shift = Scalar::frac(m as i64 - 2, 2);
    let den = u + &shift;
    if den.is_zero() {
        return Err(Error::Pole(u.to_string()));
    }
    let (p, k) = flip_and_k(m, form);
    let coeff = u.checked_div(&den)?;
    let kt = twist.f21.mul(&k)?.mul(&twist.f_inv)?;
    twist.f21_finv.scale(u).add(&p)?.sub(&kt.scale(&coeff))
}

/// `R₁₂(u-v) R₁₃(u) R₂₃(v) = R₂₃(v) R₁₃(u) R₁₂(u-v)`.
pub fn spectral_ybe_check(
    model: &AlgebraModel,
    twist: &YangianTwist,
    u: &Scalar,
    v: &Scalar,
    form: TransposeForm,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let m = model.dim();
    let a = leg_embed(&yangian_r(model, twist, &(u - v), form)?, &[1, 2], m, 3)?;
    let b = leg_embed(&yangian_r(model, twist, u, form)?, &[1, 3], m, 3)?;
    let c = leg_embed(&yangian_r(model, twist, v, form)?, &[2, 3], m, 3)?;
    let lhs = a.mul(&b)?.mul(&c)?;
    let rhs = c.mul(&b)?.mul(&a)?;
    Ok(VerificationReport::from_equality(format!("spectral YBE {form:?} K at (u, v) = ({u}, {v})"), &lhs, &rhs)
        .timed(start))
}

/// The `K` conventions for which spectral YBE holds at every given point.
pub fn passing_k_conventions(
    model: &AlgebraModel,
    twist: &YangianTwist,
    points: &[(Scalar, Scalar)],
) -> Result<Vec<TransposeForm>> {
    let mut out = Vec::new();
    for form in [TransposeForm::Plain, TransposeForm::Antidiagonal] {
        let mut ok = true;
        for (u, v) in points {
            ok &= spectral_ybe_check(model, twist, u, v, form)?.pass;
        }
        if ok {
            out.push(form);
        }
    }
    Ok(out)
}

/// `(u - 1 + M/2) R(u)` is a polynomial of degree ≤ 2 in `u`: interpolate
/// through three points and confirm at a fourth.
pub fn yangian_polynomiality_check(model: &AlgebraModel, twist: &YangianTwist, form: TransposeForm) -> Result<VerificationReport> {
    let start = Instant::now();
    let m = model.dim();
    let shift = Scalar::frac(m as i64 - 2, 2);
    let us: Vec<Scalar> = [0, 1, 2, 3].iter().map(|x| Scalar::int(*x) + Scalar::frac(1, 3)).collect();
    let mats: Vec<SparseMat> =
        us.iter().map(|u| Ok(yangian_r(model, twist, u, form)?.scale(&(u + &shift)))).collect::<Result<_>>()?;
    let mut report = VerificationReport::passed("(u - 1 + M/2) R(u) polynomial");
    let n = m * m;
    for i in 0..n {
        for j in 0..n {
            let ys: Vec<Scalar> = mats.iter().map(|x| x.get(i, j).cloned().unwrap_or_else(Scalar::zero)).collect();
            if ys.iter().all(Scalar::is_zero) {
                continue;
            }
            let pts: Vec<(Scalar, Scalar)> = us.iter().cloned().zip(ys).collect();
            let p = poly_interpolate(&pts[..3])?;
            if p.eval(&pts[3].0) != pts[3].1 {
                report.fail(format!("entry ({i}, {j}) is not quadratic"));
            }
        }
    }
    Ok(report.timed(start))
}
