//! Univariate polynomials over [`Scalar`] and exact interpolation.

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Coefficients lowest degree first, with no trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }
}

/// The unique polynomial of degree `< points.len()` through `points`,
/// built by Newton divided differences.
pub fn poly_interpolate(points: &[(Scalar, Scalar)]) -> Result<Poly> {
    let n = points.len();
    for i in 0..n {
        for j in 0..i {
            if points[i].0 == points[j].0 {
                return Err(Error::DuplicateNode(points[i].0.to_string()));
            }
        }
    }
    let xs: Vec<&Scalar> = points.iter().map(|p| &p.0).collect();
    let mut dd: Vec<Scalar> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = xs[i] - xs[i - level];
            dd[i] = num.checked_div(&den)?;
        }
    }
    // Expand the Newton form: p = dd0 + (x - x0)(dd1 + (x - x1)(dd2 + ...)).
    let mut coeffs = vec![Scalar::zero(); n];
    for i in (0..n).rev() {
        // coeffs *= (x - x_i), then add dd[i]
        let mut next = vec![Scalar::zero(); n];
        for k in 0..n {
            if coeffs[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &coeffs[k];
            }
            next[k] -= &(&coeffs[k] * xs[i]);
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    Ok(Poly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::elim::solve;

    fn pts(v: &[(i64, Scalar)]) -> Vec<(Scalar, Scalar)> {
        v.iter().map(|(x, y)| (Scalar::int(*x), y.clone())).collect()
    }

    /// Vandermonde solve, the independent route.
    fn vandermonde(points: &[(Scalar, Scalar)]) -> Vec<Scalar> {
        let n = points.len();
        let rows: Vec<Vec<Scalar>> = points
            .iter()
            .map(|(x, _)| {
                let mut row = Vec::with_capacity(n);
                let mut p = Scalar::one();
                for _ in 0..n {
                    row.push(p.clone());
                    p = &p * x;
                }
                row
            })
            .collect();
        let b: Vec<Scalar> = points.iter().map(|p| p.1.clone()).collect();
        solve(&rows, &b, n).unwrap()
    }

    #[test]
    fn quadratic_through_three_points() {
        let p = pts(&[(0, Scalar::int(1)), (1, Scalar::int(2)), (2, Scalar::int(5))]);
        let poly = poly_interpolate(&p).unwrap();
        assert_eq!(poly.coeffs(), &[Scalar::int(1), Scalar::zero(), Scalar::int(1)]);
        assert_eq!(Poly::new(vandermonde(&p)), poly);
    }

    #[test]
    fn constant_data() {
        let p = pts(&[(0, Scalar::frac(2, 3)), (4, Scalar::frac(2, 3)), (7, Scalar::frac(2, 3))]);
        let poly = poly_interpolate(&p).unwrap();
        assert_eq!(poly.degree(), Some(0));
        assert_eq!(poly.coeff(0), Scalar::frac(2, 3));
    }

    #[test]
    fn cubic_over_six() {
        let p: Vec<_> = (0..4).map(|x| (Scalar::int(x), Scalar::frac(x * x * x, 6))).collect();
        let poly = poly_interpolate(&p).unwrap();
        let expected = vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::frac(1, 6)];
        assert_eq!(poly.coeffs(), expected.as_slice());
        assert_eq!(Poly::new(vandermonde(&p)), poly);
    }

    #[test]
    fn duplicate_nodes() {
        let p = pts(&[(1, Scalar::int(1)), (1, Scalar::int(2))]);
        assert!(matches!(poly_interpolate(&p), Err(Error::DuplicateNode(_))));
    }

    #[test]
    fn evaluation_at_complex_points() {
        let poly = Poly::new(vec![Scalar::int(1), Scalar::zero(), Scalar::int(1)]);
        assert!(poly.eval(&Scalar::i()).is_zero());
        assert_eq!(Poly::new(vec![Scalar::zero(), Scalar::zero()]), Poly::zero());
    }
}
