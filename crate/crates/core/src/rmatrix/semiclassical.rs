//! First-order expansion of `R(t)` along a scaled chain family.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use super::classical::{classical_r_build, ClassicalLink};
use super::quantum::r_from_chain;
use crate::algebra::AlgebraModel;
use crate::chain::{build_chain, ChainParams, ChainStyle, SigmaName};
use crate::error::{Error, Result};
use crate::expr::{tensor_rep, SigmaRef};
use crate::linalg::{poly_interpolate, swap_legs, Poly, Scalar, SparseMat};
use crate::report::VerificationReport;

/// Sign relating the t-linear term of `R(t)` to `r`: `R(t) = 1 + κ t r + O(t²)`.
pub const KAPPA: i64 = -1;

/// Chain parameters at deformation scale `t`: `η → tη`, `τ → tτ`,
/// `ζ → ζ/t`, so that every entry of `R(t)` is a polynomial in `t`.
pub fn scaled_params(params: &ChainParams, t: &Scalar) -> Result<ChainParams> {
    let mut p = params.clone();
    for l in &mut p.links {
        l.eta = &l.eta * t;
        l.tau = &l.tau * t;
    }
    if let Some(e) = &mut p.terminal {
        *e = &*e * t;
    }
    let tinv = t.inv()?;
    for z in &mut p.reshetikhin {
        z.zeta = &z.zeta * &tinv;
    }
    Ok(p)
}

/// The classical r-matrix predicted for a chain: `ξ_k = τ_k/η_k`, and each
/// `ζ` term scaled by the leading coefficients of its two `σ`'s.
pub fn expected_classical_r(model: &AlgebraModel, style: ChainStyle, params: &ChainParams) -> Result<SparseMat> {
    let mut links = Vec::new();
    for l in &params.links {
        let xi = match style {
            ChainStyle::Canonical => None,
            ChainStyle::Full => {
                if l.eta.is_zero() {
                    return Err(Error::IncompatibleParams(format!("xi = tau/eta undefined for eta = 0 on link {}", l.k)));
                }
                Some(l.tau.checked_div(&l.eta)?)
            }
        };
        links.push(ClassicalLink { k: l.k, eta: l.eta.clone(), xi });
    }
    let sigma = |s: SigmaName| -> Result<SigmaRef> {
        let k = match s {
            SigmaName::Plus(k) | SigmaName::G(k) => k,
        };
        let l = params
            .links
            .iter()
            .find(|l| l.k == k)
            .ok_or_else(|| Error::InvalidChain(format!("absent link {k}")))?;
        Ok(match s {
            SigmaName::Plus(_) => SigmaRef::Plus { k, eta: l.eta.clone() },
            SigmaName::G(_) => SigmaRef::G { k, eta: l.eta.clone(), tau: l.tau.clone() },
        })
    };
    let mut zeta = Vec::new();
    for z in &params.reshetikhin {
        let (a, b) = (sigma(z.i)?, sigma(z.j)?);
        let c = &(&z.zeta * a.leading_scale()) * b.leading_scale();
        zeta.push((a, b, c));
    }
    let mut r = tensor_rep(&classical_r_build(model, &links, &zeta)?.expr, model)?;
    if let Some(eta) = &params.terminal {
        let n = model.rank();
        let h = model.matrix(&crate::algebra::Gen::H(n))?.scale(&Scalar::int(2));
        let e = model.root_vector(&crate::algebra::Root::e(n, n, 1))?;
        let w = h.kron(&e).sub(&e.kron(&h))?;
        r = r.add(&w.scale(eta))?;
    }
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct Semiclassical {
    pub constant: SparseMat,
    pub linear: SparseMat,
    pub max_degree: usize,
    pub report: VerificationReport,
}

/// Interpolates `R(t)` entrywise from `degree_bound + 1` points and checks
/// each polynomial at one more point; then compares the constant term with
/// `1` and the linear term with `κ r`.
pub fn semiclassical_extract(
    model: Arc<AlgebraModel>,
    style: ChainStyle,
    params: &ChainParams,
    degree_bound: Option<usize>,
) -> Result<Semiclassical> {
    let start = Instant::now();
    let m = model.dim();
    let n = m * m;
    let bound = degree_bound.unwrap_or(4 * m);
    let ts: Vec<Scalar> = (1..=bound as i64 + 2).map(Scalar::int).collect();
    let mut samples: BTreeMap<(usize, usize), Vec<Scalar>> = BTreeMap::new();
    for (idx, t) in ts.iter().enumerate() {
        let chain = build_chain(model.clone(), style, &scaled_params(params, t)?)?;
        let (r, _) = r_from_chain(&chain)?;
        for (i, j, v) in r.mat.iter() {
            samples.entry((i, j)).or_insert_with(|| vec![Scalar::zero(); ts.len()])[idx] = v.clone();
        }
    }
    let mut constant = Vec::new();
    let mut linear = Vec::new();
    let mut max_degree = 0;
    for ((i, j), ys) in &samples {
        let pts: Vec<(Scalar, Scalar)> = ts.iter().cloned().zip(ys.iter().cloned()).collect();
        let p: Poly = poly_interpolate(&pts[..bound + 1])?;
        let (tx, ty) = &pts[bound + 1];
        if p.eval(tx) != *ty {
            return Err(Error::DegreeOverflow { row: *i, col: *j });
        }
        max_degree = max_degree.max(p.degree().unwrap_or(0));
        constant.push((*i, *j, p.coeff(0)));
        linear.push((*i, *j, p.coeff(1)));
    }
    let constant = SparseMat::from_triplets(n, n, constant);
    let linear = SparseMat::from_triplets(n, n, linear);

    let expected = expected_classical_r(&model, style, params)?.scale(&Scalar::int(KAPPA));
    let parts = [
        VerificationReport::from_equality("R(0) = 1", &constant, &SparseMat::identity(n)),
        VerificationReport::from_equality("linear term antisymmetric", &swap_legs(&linear, m)?, &linear.neg()),
        VerificationReport::from_equality("linear term = kappa r", &linear, &expected),
    ];
    let report = VerificationReport::combine(format!("semiclassical so({m}), degree {max_degree}"), &parts).timed(start);
    Ok(Semiclassical { constant, linear, max_degree, report })
}
