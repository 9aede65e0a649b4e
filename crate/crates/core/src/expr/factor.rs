//! Exponents of the individual twist factors.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::tensor::{tensor_eval, TensorExpr};
use super::uexpr::{Hom, UExpr};
use crate::algebra::{has_terminal_so3, link_frame, AlgebraModel, Gen, Root};
use crate::error::{Error, Result};
use crate::linalg::{exp_nilpotent, Scalar, SparseMat};

/// A commuting primitive entering a Reshetikhin factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SigmaRef {
    /// `σ^k_{1+2} = ln(1 + η_k E^k_{1+2})`.
    Plus { k: usize, eta: Scalar },
    /// `σ^k_G = ln(1 + τ_k (E^k_{1-2} - η_k I¹))`.
    G { k: usize, eta: Scalar, tau: Scalar },
}

impl SigmaRef {
    pub fn k(&self) -> usize {
        match self {
            SigmaRef::Plus { k, .. } | SigmaRef::G { k, .. } => *k,
        }
    }

    pub fn expr(&self, model: &AlgebraModel) -> Result<UExpr> {
        match self {
            SigmaRef::Plus { k, eta } => link_frame(model, *k)?.sigma(model, eta),
            SigmaRef::G { k, eta, tau } => Ok(UExpr::log1p(deformed_generator(model, *k, eta)?.scale(tau.clone()))),
        }
    }

    /// Scale of the leading root vector: `σ = s·E + O(E²)`.
    pub fn leading_scale(&self) -> &Scalar {
        match self {
            SigmaRef::Plus { eta, .. } => eta,
            SigmaRef::G { tau, .. } => tau,
        }
    }

    /// The root vector `E^k_{1+2}` or `E^k_{1-2}` leading the series.
    pub fn leading_root(&self, model: &AlgebraModel) -> Result<UExpr> {
        let f = link_frame(model, self.k())?;
        match self {
            SigmaRef::Plus { .. } => f.e_plus(model),
            SigmaRef::G { .. } => f.e_minus(model),
        }
    }
}

impl fmt::Display for SigmaRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaRef::Plus { k, .. } => write!(f, "sigma_plus:{k}"),
            SigmaRef::G { k, .. } => write!(f, "sigma_g:{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// `H^k_{1+2} ⊗ ln(1 + η E^k_{1+2})`
    Jordanian { k: usize, eta: Scalar },
    /// `η I^{1⊗2} (1 ⊗ (1 + η E^k_{1+2})^{-1/2})`
    Extension { k: usize, eta: Scalar },
    /// `H^k_{1-2} ⊗ ln(1 + τ (E^k_{1-2} - η I¹))`
    DeformedJordanian { k: usize, eta: Scalar, tau: Scalar },
    /// `Σ ζ σ_i ⊗ σ_j`
    Reshetikhin { terms: Vec<(SigmaRef, SigmaRef, Scalar)> },
    /// `2H_N ⊗ ln(1 + η E_N)` on the `so(3)` left over in odd `M`.
    TerminalShortJordanian { eta: Scalar },
}

impl FactorKind {
    pub fn link(&self) -> Option<usize> {
        match self {
            FactorKind::Jordanian { k, .. }
            | FactorKind::Extension { k, .. }
            | FactorKind::DeformedJordanian { k, .. } => Some(*k),
            _ => None,
        }
    }

    pub fn eta(&self) -> Option<&Scalar> {
        match self {
            FactorKind::Jordanian { eta, .. }
            | FactorKind::Extension { eta, .. }
            | FactorKind::DeformedJordanian { eta, .. }
            | FactorKind::TerminalShortJordanian { eta } => Some(eta),
            FactorKind::Reshetikhin { .. } => None,
        }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorKind::Jordanian { k, eta } => write!(f, "J{k}(eta={eta})"),
            FactorKind::Extension { k, eta } => write!(f, "E{k}(eta={eta})"),
            FactorKind::DeformedJordanian { k, eta, tau } => write!(f, "G{k}(eta={eta}, tau={tau})"),
            FactorKind::Reshetikhin { terms } => {
                write!(f, "R(")?;
                for (i, (a, b, z)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}*{b}:{z}")?;
                }
                write!(f, ")")
            }
            FactorKind::TerminalShortJordanian { eta } => write!(f, "T(eta={eta})"),
        }
    }
}

/// `exp(exponent)` as an element of `U ⊗ U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistFactor {
    pub kind: FactorKind,
    pub exponent: TensorExpr,
}

/// `G^k_{1-2}(η) = E^k_{1-2} - η I¹`.
pub fn deformed_generator(model: &AlgebraModel, k: usize, eta: &Scalar) -> Result<UExpr> {
    let f = link_frame(model, k)?;
    Ok(f.e_minus(model)?.sub(&f.invariant_scalar(model, 1)?.scale(eta.clone())))
}

/// `G^k_{2-1}(η) = E^k_{2-1} - η I² e^{-σ}`.
pub fn deformed_generator_rev(model: &AlgebraModel, k: usize, eta: &Scalar) -> Result<UExpr> {
    let f = link_frame(model, k)?;
    let sigma = f.sigma(model, eta)?;
    let tail = f.invariant_scalar(model, 2)?.mul(&UExpr::exp(sigma.neg()));
    Ok(f.e_minus_rev(model)?.sub(&tail.scale(eta.clone())))
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

pub fn factor_exponent(model: &AlgebraModel, kind: FactorKind) -> Result<TwistFactor> {
    let exponent = match &kind {
        FactorKind::Jordanian { k, eta } => {
            let f = link_frame(model, *k)?;
            TensorExpr::simple(f.h_plus(), f.sigma(model, eta)?)
        }
        FactorKind::Extension { k, eta } => {
            let f = link_frame(model, *k)?;
            let damp = UExpr::pow1p(f.e_plus(model)?.scale(eta.clone()), -half());
            let inv = f.invariant_tensor(model, 1, 2)?;
            inv.mul(&TensorExpr::simple(UExpr::one(), damp)).scale(eta)
        }
        FactorKind::DeformedJordanian { k, eta, tau } => {
            let f = link_frame(model, *k)?;
            let g = deformed_generator(model, *k, eta)?;
            TensorExpr::simple(f.h_minus(), UExpr::log1p(g.scale(tau.clone())))
        }
        FactorKind::Reshetikhin { terms } => {
            let mut t = TensorExpr::zero();
            for (a, b, z) in terms {
                t = t.with_term(a.expr(model)?, b.expr(model)?, z.clone());
            }
            t
        }
        FactorKind::TerminalShortJordanian { eta } => {
            if !has_terminal_so3(model.dim()) {
                return Err(Error::InvalidChain(format!("so({}) has no terminal so(3)", model.dim())));
            }
            let n = model.rank();
            let e = UExpr::gen(model.root_generator(&Root::e(n, n, 1))?).neg();
            TensorExpr::simple(UExpr::gen(Gen::H(n)).scale(Scalar::int(2)), UExpr::log1p(e.scale(eta.clone())))
        }
    };
    Ok(TwistFactor { kind, exponent })
}

impl TwistFactor {
    /// ρ⊗ρ image of the exponent.
    pub fn exponent_matrix(&self, model: &AlgebraModel) -> Result<SparseMat> {
        tensor_eval(&self.exponent, model, (Hom::Rep, Hom::Rep))
    }

    pub fn matrix(&self, model: &AlgebraModel) -> Result<SparseMat> {
        exp_nilpotent(&self.exponent_matrix(model)?)
    }

    pub fn inverse_matrix(&self, model: &AlgebraModel) -> Result<SparseMat> {
        exp_nilpotent(&self.exponent_matrix(model)?.neg())
    }

    /// `exp` of the exponent with the given homomorphisms on the two legs.
    pub fn matrix_with(&self, model: &AlgebraModel, legs: (Hom, Hom)) -> Result<SparseMat> {
        exp_nilpotent(&tensor_eval(&self.exponent, model, legs)?)
    }

    /// Counit of every left leg and of every right leg vanishes, so
    /// `(ε⊗id)F = (id⊗ε)F = 1`.
    pub fn counit_normalized(&self) -> Result<bool> {
        for t in self.exponent.terms() {
            if !t.left.counit()?.is_zero() || !t.right.counit()?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, matrix_unit, Series};
    use crate::expr::eval_in_rep;

    fn so5() -> AlgebraModel {
        build_algebra(Series::B, 2).unwrap()
    }

    #[test]
    fn so5_extension_exponent() {
        let m = so5();
        let f = factor_exponent(&m, FactorKind::Extension { k: 0, eta: Scalar::one() }).unwrap();
        let x = f.exponent_matrix(&m).unwrap();
        let e1 = m.root_vector(&Root(vec![1, 0])).unwrap();
        let e2 = m.root_vector(&Root(vec![0, 1])).unwrap();
        assert_eq!(x, e1.kron(&e2));
        let id = SparseMat::identity(25);
        let expected = id
            .add(&e1.kron(&e2))
            .unwrap()
            .add(&matrix_unit(5, 1, 5).kron(&matrix_unit(5, 2, 4)).scale(&Scalar::frac(1, 2)))
            .unwrap();
        assert_eq!(f.matrix(&m).unwrap(), expected);
    }

    #[test]
    fn so5_jordanian_factor() {
        let m = so5();
        let f = factor_exponent(&m, FactorKind::Jordanian { k: 0, eta: Scalar::one() }).unwrap();
        let sigma = matrix_unit(5, 2, 5).sub(&matrix_unit(5, 1, 4)).unwrap();
        let h = m.matrix(&Gen::H(1)).unwrap().add(m.matrix(&Gen::H(2)).unwrap()).unwrap();
        let expected = SparseMat::identity(25).add(&h.kron(&sigma)).unwrap();
        assert_eq!(f.matrix(&m).unwrap(), expected);
        assert_eq!(f.matrix(&m).unwrap().mul(&f.inverse_matrix(&m).unwrap()).unwrap(), SparseMat::identity(25));
    }

    #[test]
    fn so5_deformed_generator() {
        let m = so5();
        let g = eval_in_rep(&deformed_generator(&m, 0, &Scalar::one()).unwrap(), &m).unwrap();
        let expected = matrix_unit(5, 4, 5)
            .sub(&matrix_unit(5, 1, 2))
            .unwrap()
            .add(&matrix_unit(5, 1, 5).scale(&Scalar::frac(1, 2)))
            .unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn factors_are_counit_normalized() {
        let m = build_algebra(Series::B, 3).unwrap();
        let one = Scalar::one();
        let p = SigmaRef::Plus { k: 0, eta: one.clone() };
        let g = SigmaRef::G { k: 0, eta: one.clone(), tau: one.clone() };
        for kind in [
            FactorKind::Jordanian { k: 0, eta: one.clone() },
            FactorKind::Extension { k: 0, eta: one.clone() },
            FactorKind::DeformedJordanian { k: 0, eta: one.clone(), tau: one.clone() },
            FactorKind::Reshetikhin { terms: vec![(p, g, Scalar::frac(1, 3))] },
            FactorKind::TerminalShortJordanian { eta: one.clone() },
        ] {
            let f = factor_exponent(&m, kind).unwrap();
            assert!(f.counit_normalized().unwrap(), "{}", f.kind);
            f.matrix(&m).unwrap();
        }
    }

    #[test]
    fn terminal_factor_needs_leftover_so3() {
        let m = so5();
        assert!(factor_exponent(&m, FactorKind::TerminalShortJordanian { eta: Scalar::one() }).is_err());
    }
}
