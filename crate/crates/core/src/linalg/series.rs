//! Terminating power series of nilpotent matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::sparse::SparseMat;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    /// exp(N) = Σ N^k / k!
    Exp,
    /// log(1 + N) = Σ (-1)^(k+1) N^k / k
    Log1p,
    /// (1 + N)^r = Σ binom(r, k) N^k
    Pow1p(BigRational),
}

/// Evaluates `Σ_k c_k N^k` for a nilpotent `N`, with `c_k` produced on
/// demand. Fails if `N^dim` is nonzero.
fn power_series(n: &SparseMat, mut coeff: impl FnMut(usize) -> BigRational) -> Result<SparseMat> {
    if !n.is_square() {
        return Err(Error::DimensionMismatch { op: "nilpotent_series", lhs: n.shape(), rhs: n.shape() });
    }
    let dim = n.nrows();
    let mut acc = SparseMat::identity(dim).scale_rational(&coeff(0));
    let mut power = n.clone();
    let mut k = 1;
    while !power.is_zero() {
        if k >= dim {
            return Err(Error::NotNilpotent(dim));
        }
        let c = coeff(k);
        if !c.is_zero() {
            acc = acc.add(&power.scale_rational(&c))?;
        }
        power = power.mul(n)?;
        k += 1;
    }
    Ok(acc)
}

/// exp, log1p, or rational power of `1 + N` for nilpotent `N`.
pub fn nilpotent_series(n: &SparseMat, kind: &SeriesKind) -> Result<SparseMat> {
    match kind {
        SeriesKind::Exp => {
            let mut fact = BigRational::one();
            power_series(n, |k| {
                if k > 0 {
                    fact /= BigRational::from_integer(BigInt::from(k));
                }
                fact.clone()
            })
        }
        SeriesKind::Log1p => power_series(n, |k| {
            if k == 0 {
                return BigRational::zero();
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            BigRational::new(BigInt::from(sign), BigInt::from(k))
        }),
        SeriesKind::Pow1p(r) => {
            let mut binom = BigRational::one();
            power_series(n, |k| {
                if k > 0 {
                    let km1 = BigRational::from_integer(BigInt::from(k - 1));
                    binom = &binom * (r - km1) / BigRational::from_integer(BigInt::from(k));
                }
                binom.clone()
            })
        }
    }
}

pub fn exp_nilpotent(n: &SparseMat) -> Result<SparseMat> {
    nilpotent_series(n, &SeriesKind::Exp)
}

pub fn log1p_nilpotent(n: &SparseMat) -> Result<SparseMat> {
    nilpotent_series(n, &SeriesKind::Log1p)
}

pub fn pow1p_nilpotent(n: &SparseMat, r: &BigRational) -> Result<SparseMat> {
    nilpotent_series(n, &SeriesKind::Pow1p(r.clone()))
}

/// (1 + N)^(-1) = Σ (-N)^k.
pub fn neumann_inverse(n: &SparseMat) -> Result<SparseMat> {
    power_series(n, |k| BigRational::from_integer(BigInt::from(if k % 2 == 0 { 1 } else { -1 })))
}
