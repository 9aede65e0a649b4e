//! Exact checks of the twist equation, the twisted costructure tables, and
//! the deformed carrier `so_G(3)`.

use std::sync::Arc;
use std::time::Instant;

use super::spec::{build_chain, chain_inverse, chain_matrix, ChainParams, ChainSpec, ChainStyle};
use crate::algebra::{build_algebra, link_frame, AlgebraModel, LinkFrame};
use crate::error::Result;
use crate::expr::{coproduct_eval, deformed_generator, deformed_generator_rev, eval_in_rep, factor_exponent, tensor_rep};
use crate::expr::{FactorKind, Hom, TensorExpr, UExpr};
use crate::linalg::{leg_embed, Scalar, SparseMat};
use crate::report::VerificationReport;

/// `Δ_F(x) = F Δ(x) F⁻¹` for a fixed chain.
pub struct TwistedCoproduct<'a> {
    model: &'a AlgebraModel,
    f: SparseMat,
    f_inv: SparseMat,
}

impl<'a> TwistedCoproduct<'a> {
    pub fn new(chain: &'a ChainSpec) -> Result<Self> {
        Ok(TwistedCoproduct { model: chain.model(), f: chain_matrix(chain)?, f_inv: chain_inverse(chain)? })
    }

    pub fn apply(&self, x: &UExpr) -> Result<SparseMat> {
        self.f.mul(&coproduct_eval(x, self.model)?)?.mul(&self.f_inv)
    }

    /// `Δ_F(x) = x⊗1 + 1⊗x` in `ρ⊗ρ`.
    pub fn is_primitive(&self, x: &UExpr) -> Result<bool> {
        Ok(self.apply(x)? == tensor_rep(&primitive(x), self.model)?)
    }
}

pub fn twisted_coproduct(chain: &ChainSpec, x: &UExpr) -> Result<SparseMat> {
    TwistedCoproduct::new(chain)?.apply(x)
}

/// `F₁₂ (Δ⊗id)F = F₂₃ (id⊗Δ)F` in `V^{⊗3}` for every prefix of the chain,
/// built incrementally from the rightmost factor.
pub fn verify_twist_equation(chain: &ChainSpec) -> Result<VerificationReport> {
    let start = Instant::now();
    let model = chain.model();
    let m = model.dim();
    let n3 = m * m * m;
    let mut f12 = SparseMat::identity(n3);
    let mut f23 = SparseMat::identity(n3);
    let mut d1 = SparseMat::identity(n3);
    let mut d2 = SparseMat::identity(n3);
    let mut parts = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for factor in chain.factors().iter().rev() {
        let t = Instant::now();
        let fm = factor.matrix(model)?;
        f12 = leg_embed(&fm, &[1, 2], m, 3)?.mul(&f12)?;
        f23 = leg_embed(&fm, &[2, 3], m, 3)?.mul(&f23)?;
        d1 = factor.matrix_with(model, (Hom::Coproduct, Hom::Rep))?.mul(&d1)?;
        d2 = factor.matrix_with(model, (Hom::Rep, Hom::Coproduct))?.mul(&d2)?;
        names.insert(0, factor.kind.to_string());
        let lhs = f12.mul(&d1)?;
        let rhs = f23.mul(&d2)?;
        parts.push(VerificationReport::from_equality(format!("prefix {}", names.join("*")), &lhs, &rhs).timed(t));
    }
    Ok(VerificationReport::combine(format!("twist equation so({m}), {} factors", chain.factors().len()), &parts)
        .timed(start))
}

/// How much of link `k` is applied on top of the full links `0..k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkStage {
    Jordanian,
    ExtendedJordanian,
}

/// Full links `0..k` at η = τ = 1 followed by `Φ_J` or `Φ_E Φ_J` of link `k`.
pub fn link_prefix(model: Arc<AlgebraModel>, k: usize, stage: LinkStage) -> Result<ChainSpec> {
    let one = Scalar::one();
    let mut factors = Vec::new();
    if stage == LinkStage::ExtendedJordanian {
        factors.push(factor_exponent(&model, FactorKind::Extension { k, eta: one.clone() })?);
    }
    factors.push(factor_exponent(&model, FactorKind::Jordanian { k, eta: one })?);
    if k > 0 {
        let before = build_chain(model.clone(), ChainStyle::Full, &ChainParams::unit(k - 1))?;
        factors.extend(before.factors().iter().cloned());
    }
    ChainSpec::from_factors(model, factors)
}

/// A claimed twisted coproduct `Δ_F(lhs) = rhs`.
#[derive(Clone, Debug)]
pub struct CoproductIdentity {
    pub name: String,
    pub lhs: UExpr,
    pub rhs: TensorExpr,
}

fn simple(l: UExpr, r: UExpr) -> TensorExpr {
    TensorExpr::simple(l, r)
}

fn primitive(x: &UExpr) -> TensorExpr {
    simple(x.clone(), UExpr::one()).add(&simple(UExpr::one(), x.clone()))
}

/// `e^{cσ}` with `σ = ln(1 + E_{1+2})`.
fn exp_sigma(sigma: &UExpr, num: i64, den: i64) -> UExpr {
    UExpr::exp(sigma.scale(Scalar::frac(num, den)))
}

/// The jordanian costructure table of link `k`.
pub fn jordanian_table(model: &AlgebraModel, f: &LinkFrame) -> Result<Vec<CoproductIdentity>> {
    let one = UExpr::one();
    let sigma = f.sigma(model, &Scalar::one())?;
    let h = f.h_plus();
    let e = f.e_plus(model)?;
    let mut out = vec![
        CoproductIdentity {
            name: "D_J(H_(1+2))".into(),
            lhs: h.clone(),
            rhs: simple(h.clone(), exp_sigma(&sigma, -1, 1)).add(&simple(one.clone(), h.clone())),
        },
        CoproductIdentity {
            name: "D_J(E_(1+2))".into(),
            lhs: e.clone(),
            rhs: simple(e.clone(), exp_sigma(&sigma, 1, 1)).add(&simple(one.clone(), e.clone())),
        },
    ];
    let half_up = |name: String, x: UExpr| CoproductIdentity {
        name,
        lhs: x.clone(),
        rhs: simple(x.clone(), exp_sigma(&sigma, 1, 2)).add(&simple(UExpr::one(), x)),
    };
    for a in 1..=2 {
        for l in f.transverse() {
            for (s, c) in [(1, '+'), (-1, '-')] {
                out.push(half_up(format!("D_J(E_({a}{c}{l}))"), f.e_al(model, a, s, l)?));
            }
        }
        if f.is_odd() {
            out.push(half_up(format!("D_J(E_{a})"), f.e_short(model, a)?));
        }
    }
    for (name, x) in [
        ("D_J(H_(1-2))", f.h_minus()),
        ("D_J(E_(1-2))", f.e_minus(model)?),
        ("D_J(E_(2-1))", f.e_minus_rev(model)?),
    ] {
        out.push(CoproductIdentity { name: name.into(), rhs: primitive(&x), lhs: x });
    }
    Ok(out)
}

/// The extended-jordanian costructure table of link `k`, including the
/// coproducts of the invariants `I¹` and `I² e^{-σ}`.
pub fn extended_table(model: &AlgebraModel, f: &LinkFrame) -> Result<Vec<CoproductIdentity>> {
    let one = UExpr::one();
    let sigma = f.sigma(model, &Scalar::one())?;
    let e_m1 = exp_sigma(&sigma, -1, 1);
    let e_p1 = exp_sigma(&sigma, 1, 1);
    let e_mh = exp_sigma(&sigma, -1, 2);
    let e_ph = exp_sigma(&sigma, 1, 2);
    let damp = simple(one.clone(), e_mh.clone());
    let i12 = f.invariant_tensor(model, 1, 2)?;
    let i11 = f.invariant_tensor(model, 1, 1)?;
    let i22 = f.invariant_tensor(model, 2, 2)?;
    let i1 = f.invariant_scalar(model, 1)?;
    let i2s = f.invariant_scalar(model, 2)?.mul(&e_m1);
    let h = f.h_plus();
    let e = f.e_plus(model)?;
    let em = f.e_minus(model)?;
    let er = f.e_minus_rev(model)?;
    let mut out = vec![
        CoproductIdentity {
            name: "D_EJ(H_(1+2))".into(),
            lhs: h.clone(),
            rhs: simple(h.clone(), e_m1.clone())
                .add(&simple(one.clone(), h.clone()))
                .sub(&simple(one.clone(), exp_sigma(&sigma, -3, 2)).mul(&i12)),
        },
        CoproductIdentity { name: "D_EJ(H_(1-2))".into(), lhs: f.h_minus(), rhs: primitive(&f.h_minus()) },
        CoproductIdentity {
            name: "D_EJ(E_(1+2))".into(),
            lhs: e.clone(),
            rhs: simple(e.clone(), e_p1.clone()).add(&simple(one.clone(), e.clone())),
        },
        CoproductIdentity {
            name: "D_EJ(E_(1-2))".into(),
            lhs: em.clone(),
            rhs: primitive(&em)
                .add(&damp.mul(&i11))
                .add(&simple(i1.clone(), e_m1.clone()))
                .sub(&simple(i1.clone(), one.clone())),
        },
        CoproductIdentity {
            name: "D_EJ(E_(2-1))".into(),
            lhs: er.clone(),
            rhs: primitive(&er)
                .add(&simple(e_p1.clone(), i2s.clone()))
                .sub(&simple(one.clone(), i2s.clone()))
                .add(&damp.mul(&i22)),
        },
        CoproductIdentity {
            name: "D_EJ(I^1)".into(),
            lhs: i1.clone(),
            rhs: simple(i1.clone(), e_m1.clone()).add(&simple(one.clone(), i1.clone())).add(&i11.mul(&damp)),
        },
        CoproductIdentity {
            name: "D_EJ(I^2 e^-sigma)".into(),
            lhs: i2s.clone(),
            rhs: simple(i2s.clone(), one.clone()).add(&simple(e_p1.clone(), i2s.clone())).add(&i22.mul(&damp)),
        },
    ];
    for l in f.transverse() {
        for (s, c) in [(1, '+'), (-1, '-')] {
            let x = f.e_al(model, 1, s, l)?;
            out.push(CoproductIdentity {
                name: format!("D_EJ(E_(1{c}{l}))"),
                rhs: simple(x.clone(), e_mh.clone()).add(&simple(one.clone(), x.clone())),
                lhs: x,
            });
            let y = f.e_al(model, 2, s, l)?;
            out.push(CoproductIdentity {
                name: format!("D_EJ(E_(2{c}{l}))"),
                rhs: simple(y.clone(), e_ph.clone()).add(&simple(e_p1.clone(), y.clone())),
                lhs: y,
            });
        }
    }
    if f.is_odd() {
        let x = f.e_short(model, 1)?;
        out.push(CoproductIdentity {
            name: "D_EJ(E_1)".into(),
            rhs: simple(x.clone(), e_mh.clone()).add(&simple(one.clone(), x.clone())),
            lhs: x,
        });
        let y = f.e_short(model, 2)?;
        out.push(CoproductIdentity {
            name: "D_EJ(E_2)".into(),
            rhs: simple(y.clone(), e_ph).add(&simple(e_p1, y.clone())),
            lhs: y,
        });
    }
    Ok(out)
}

fn check_identities(
    name: String,
    model: &AlgebraModel,
    chain: &ChainSpec,
    ids: &[CoproductIdentity],
) -> Result<VerificationReport> {
    let start = Instant::now();
    let tw = TwistedCoproduct::new(chain)?;
    let mut parts = Vec::new();
    for id in ids {
        let t = Instant::now();
        let lhs = tw.apply(&id.lhs)?;
        let rhs = tensor_rep(&id.rhs, model)?;
        parts.push(VerificationReport::from_equality(id.name.clone(), &lhs, &rhs).timed(t));
    }
    Ok(VerificationReport::combine(name, &parts).timed(start))
}

fn tables_in(model: Arc<AlgebraModel>, k: usize, label: &str) -> Result<Vec<VerificationReport>> {
    let f = link_frame(&model, k)?;
    let j = link_prefix(model.clone(), k, LinkStage::Jordanian)?;
    let ej = link_prefix(model.clone(), k, LinkStage::ExtendedJordanian)?;
    Ok(vec![
        check_identities(format!("{label} D_J"), &model, &j, &jordanian_table(&model, &f)?)?,
        check_identities(format!("{label} D_EJ"), &model, &ej, &extended_table(&model, &f)?)?,
    ])
}

/// All costructure identities of link `k`, both on the local
/// `so(M-4k)` (dimension `(M-4k)²`) and inside `so(M)` after the full links
/// `0..k` (dimension `M²`).
pub fn coproduct_table_check(model: &Arc<AlgebraModel>, k: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let f = link_frame(model, k)?;
    let local = Arc::new(build_algebra(model.series(), f.local_rank())?);
    let mut parts = tables_in(local, 0, &format!("so({})", f.local_dim()))?;
    if k > 0 {
        parts.extend(tables_in(model.clone(), k, &format!("so({}) link {k}", model.dim()))?);
    }
    Ok(VerificationReport::combine(format!("coproduct tables so({}) k={k}", model.dim()), &parts).timed(start))
}

/// Twisted primitivity of `H_{1-2}`, `G_{1-2}`, `G_{2-1}` after `Φ_E Φ_J`,
/// the `so_G(3)` relations, primitivity of the inner `so(M-4(k+1))`, and
/// commutation of the `G`'s with that block.
pub fn primitivity_and_so_g3(model: &Arc<AlgebraModel>, k: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let f = link_frame(model, k)?;
    let chain = link_prefix(model.clone(), k, LinkStage::ExtendedJordanian)?;
    let tw = TwistedCoproduct::new(&chain)?;
    let one = Scalar::one();
    let g12 = deformed_generator(model, k, &one)?;
    let g21 = deformed_generator_rev(model, k, &one)?;
    let hm = f.h_minus();
    let mut report = VerificationReport::passed(format!("so_G(3) and matreshka so({}) k={k}", model.dim()));

    for (name, x) in [("H_(1-2)", &hm), ("G_(1-2)", &g12), ("G_(2-1)", &g21)] {
        if !tw.is_primitive(x)? {
            report.fail(format!("{name} is not twisted-primitive"));
        }
    }

    let rep = |x: &UExpr| eval_in_rep(x, model);
    let (h, a, b) = (rep(&hm)?, rep(&g12)?, rep(&g21)?);
    if h.commutator(&a)? != a {
        report.fail("[H_(1-2), G_(1-2)] != G_(1-2)");
    }
    if h.commutator(&b)? != b.neg() {
        report.fail("[H_(1-2), G_(2-1)] != -G_(2-1)");
    }
    if a.commutator(&b)? != h.scale(&Scalar::int(2)) {
        report.fail("[G_(1-2), G_(2-1)] != 2 H_(1-2)");
    }

    for g in f.inner_generators() {
        let x = UExpr::gen(g);
        if !tw.is_primitive(&x)? {
            report.fail(format!("inner generator {g} is not twisted-primitive"));
        }
        let xm = model.matrix(&g)?;
        for (name, y) in [("G_(1-2)", &a), ("G_(2-1)", &b), ("H_(1-2)", &h)] {
            if !xm.commutator(y)?.is_zero() {
                report.fail(format!("[{name}, {g}] != 0"));
            }
        }
    }
    Ok(report.timed(start))
}

/// Whether `E^k_{1-2}` is twisted-primitive after `Φ_E Φ_J` of link `k`.
pub fn e_minus_is_primitive(model: &Arc<AlgebraModel>, k: usize) -> Result<bool> {
    let chain = link_prefix(model.clone(), k, LinkStage::ExtendedJordanian)?;
    let x = link_frame(model, k)?.e_minus(model)?;
    TwistedCoproduct::new(&chain)?.is_primitive(&x)
}
