//! Two-leg tensors `Σ c · x ⊗ y` over enveloping-algebra expressions.

use std::fmt;

use super::uexpr::{Evaluator, Hom, UExpr};
use crate::algebra::AlgebraModel;
use crate::error::Result;
use crate::linalg::{Scalar, SparseMat};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorTerm {
    pub left: UExpr,
    pub right: UExpr,
    pub coeff: Scalar,
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct TensorExpr {
    terms: Vec<TensorTerm>,
}

impl TensorExpr {
    pub fn zero() -> Self {
        TensorExpr { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::simple(UExpr::one(), UExpr::one())
    }

    pub fn simple(left: UExpr, right: UExpr) -> Self {
        Self::zero().with_term(left, right, Scalar::one())
    }

    /// `x ⊗ y - y ⊗ x`.
    pub fn wedge(x: &UExpr, y: &UExpr) -> Self {
        Self::zero()
            .with_term(x.clone(), y.clone(), Scalar::one())
            .with_term(y.clone(), x.clone(), -Scalar::one())
    }

    /// Appends `c · left ⊗ right`; zero coefficients are dropped.
    pub fn with_term(mut self, left: UExpr, right: UExpr, coeff: Scalar) -> Self {
        if !coeff.is_zero() {
            self.terms.push(TensorTerm { left, right, coeff });
        }
        self
    }

    pub fn terms(&self) -> &[TensorTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorExpr) -> Self {
        let mut t = self.clone();
        t.terms.extend(other.terms.iter().cloned());
        t
    }

    pub fn sub(&self, other: &TensorExpr) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut t = Self::zero();
        for term in &self.terms {
            t = t.with_term(term.left.clone(), term.right.clone(), &term.coeff * c);
        }
        t
    }

    /// `(a⊗b)(c⊗d) = ac ⊗ bd`, expanded term by term.
    pub fn mul(&self, other: &TensorExpr) -> Self {
        let mut t = Self::zero();
        for a in &self.terms {
            for b in &other.terms {
                t = t.with_term(a.left.mul(&b.left), a.right.mul(&b.right), &a.coeff * &b.coeff);
            }
        }
        t
    }

    /// Leg flip `x⊗y ↦ y⊗x`.
    pub fn swap(&self) -> Self {
        let mut t = Self::zero();
        for term in &self.terms {
            t = t.with_term(term.right.clone(), term.left.clone(), term.coeff.clone());
        }
        t
    }

    /// `T - T₂₁`.
    pub fn antisymmetrize(&self) -> Self {
        self.sub(&self.swap())
    }
}

impl fmt::Debug for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TensorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{} {}(x){}", t.coeff, t.left, t.right)?;
        }
        Ok(())
    }
}

/// Evaluates `Σ c · hom₁(left) ⊗ hom₂(right)`.
pub fn tensor_eval(t: &TensorExpr, model: &AlgebraModel, legs: (Hom, Hom)) -> Result<SparseMat> {
    let mut left = Evaluator::new(model, legs.0);
    let mut right = Evaluator::new(model, legs.1);
    let d = left.dim() * right.dim();
    let mut acc = SparseMat::zeros(d, d);
    for term in t.terms() {
        let l = left.eval(&term.left)?;
        let r = right.eval(&term.right)?;
        acc = acc.add(&l.kron(&r).scale(&term.coeff))?;
    }
    Ok(acc)
}

/// `ρ⊗ρ` image.
pub fn tensor_rep(t: &TensorExpr, model: &AlgebraModel) -> Result<SparseMat> {
    tensor_eval(t, model, (Hom::Rep, Hom::Rep))
}
