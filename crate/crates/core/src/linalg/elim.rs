//! Exact elimination: fraction-free (Bareiss) rank and determinant, reduced
//! row echelon form, kernels, linear solves and inverses.

use super::scalar::Scalar;
use super::sparse::SparseMat;
use crate::error::{Error, Result};

/// Rank, and determinant when `a` is square.
pub fn exact_rank_det(a: &SparseMat) -> (usize, Option<Scalar>) {
    let (rank, det) = bareiss(a.to_dense(), a.ncols());
    let det = a.is_square().then(|| if rank == a.nrows() { det } else { Scalar::zero() });
    (rank, det)
}

pub fn rank(a: &SparseMat) -> usize {
    exact_rank_det(a).0
}

/// Bareiss elimination with column skipping. Returns the rank and, for a
/// full-rank square input, the signed last pivot (the determinant).
fn bareiss(mut m: Vec<Vec<Scalar>>, ncols: usize) -> (usize, Scalar) {
    let nrows = m.len();
    let mut prev = Scalar::one();
    let mut negate = false;
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            negate = !negate;
        }
        let inv_prev = prev.inv().expect("Bareiss pivots are nonzero");
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..ncols {
                let v = &(&row[j] * pivot) - &(&lead * &pivot_row[j]);
                row[j] = &v * &inv_prev;
            }
            row[col] = Scalar::zero();
        }
        prev = pivot.clone();
        rank += 1;
    }
    let det = if negate { -prev } else { prev };
    (rank, det)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][col].inv().expect("nonzero pivot");
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..ncols {
                    if !m[r][j].is_zero() {
                        let d = &f * &m[r][j];
                        m[i][j] -= &d;
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Basis of `{x : A x = 0}` for a dense `rows × ncols` matrix.
pub fn kernel(a: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Scalar::zero(); ncols];
            x[f] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -&m[r][f];
            }
            x
        })
        .collect()
}

/// Some solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar], ncols: usize) -> Option<Vec<Scalar>> {
    let mut aug: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][ncols].clone();
    }
    Some(x)
}

pub fn gauss_jordan_inverse(a: &SparseMat) -> Result<SparseMat> {
    let n = a.nrows();
    let mut aug: Vec<Vec<Scalar>> = a
        .to_dense()
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    let inv: Vec<Vec<Scalar>> = aug.into_iter().map(|row| row[n..].to_vec()).collect();
    Ok(SparseMat::from_dense(&inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor expansion: independent of any elimination.
    fn det_oracle(m: &[Vec<Scalar>]) -> Scalar {
        let n = m.len();
        if n == 0 {
            return Scalar::one();
        }
        let mut acc = Scalar::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Scalar>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][j] * &det_oracle(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Textbook Gaussian elimination counting nonzero pivots.
    fn rank_oracle(m: &[Vec<Scalar>]) -> usize {
        let mut m = m.to_vec();
        let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
        let mut r = 0;
        for c in 0..nc {
            if let Some(p) = (r..nr).find(|&i| !m[i][c].is_zero()) {
                m.swap(r, p);
                for i in r + 1..nr {
                    let f = m[i][c].checked_div(&m[r][c]).unwrap();
                    for j in c..nc {
                        let d = &f * &m[r][j];
                        m[i][j] -= &d;
                    }
                }
                r += 1;
            }
        }
        r
    }

    fn entry() -> impl Strategy<Value = Scalar> {
        (-2i64..=2, 1i64..=2).prop_map(|(n, d)| Scalar::frac(n, d))
    }

    fn matrix() -> impl Strategy<Value = Vec<Vec<Scalar>>> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(entry(), c), r))
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_oracles(m in matrix()) {
            let sm = SparseMat::from_dense(&m);
            let (rank, det) = exact_rank_det(&sm);
            prop_assert_eq!(rank, rank_oracle(&m));
            if sm.is_square() {
                prop_assert_eq!(det.unwrap(), det_oracle(&m));
            } else {
                prop_assert!(det.is_none());
            }
        }
    }

    #[test]
    fn identity_det() {
        assert_eq!(exact_rank_det(&SparseMat::identity(4)), (4, Some(Scalar::one())));
    }

    #[test]
    fn odd_antisymmetric_is_singular() {
        let v = |n: i64| Scalar::int(n);
        let m = vec![vec![v(0), v(1), v(-3)], vec![v(-1), v(0), v(2)], vec![v(3), v(-2), v(0)]];
        let (rank, det) = exact_rank_det(&SparseMat::from_dense(&m));
        assert_eq!(det, Some(Scalar::zero()));
        assert_eq!(rank, 2);
    }

    #[test]
    fn kernel_and_solve() {
        let v = |n: i64| Scalar::int(n);
        let a = vec![vec![v(1), v(2), v(3)], vec![v(2), v(4), v(6)]];
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            for row in &a {
                let dot = row.iter().zip(x).fold(Scalar::zero(), |acc, (p, q)| acc + p * q);
                assert!(dot.is_zero());
            }
        }
        assert!(solve(&a, &[v(1), v(2)], 3).is_some());
        assert!(solve(&a, &[v(1), v(3)], 3).is_none());
    }

    #[test]
    fn singular_inverse_fails() {
        let m = SparseMat::from_dense(&[vec![Scalar::int(1), Scalar::int(2)], vec![Scalar::int(2), Scalar::int(4)]]);
        assert_eq!(gauss_jordan_inverse(&m), Err(Error::Singular));
    }
}
