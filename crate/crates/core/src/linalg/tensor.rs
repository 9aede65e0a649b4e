//! Tensor-leg placement on `V^{⊗n}`, the flip operator and its partial
//! transposes.

use super::scalar::Scalar;
use super::sparse::SparseMat;
use crate::error::{Error, Result};

fn digits(mut idx: usize, d: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

/// Places `a`, an operator on `V^{⊗|legs|}` with `dim V = d`, on the given
/// 1-based `legs` of `V^{⊗n}` with the identity on the remaining legs.
pub fn leg_embed(a: &SparseMat, legs: &[usize], d: usize, n: usize) -> Result<SparseMat> {
    let k = legs.len();
    if k == 0 || k > n {
        return Err(Error::LegEmbedding(format!("{k} legs requested out of {n}")));
    }
    if !legs.windows(2).all(|w| w[0] < w[1]) || legs[0] == 0 || legs[k - 1] > n {
        return Err(Error::LegEmbedding(format!("legs {legs:?} must be sorted, distinct and within 1..={n}")));
    }
    let sub = d.pow(k as u32);
    if a.shape() != (sub, sub) {
        return Err(Error::LegEmbedding(format!(
            "operator of shape {:?} does not act on {k} legs of dimension {d}",
            a.shape()
        )));
    }
    let full = d.pow(n as u32);
    let others: Vec<usize> = (1..=n).filter(|p| !legs.contains(p)).collect();
    let spectators = d.pow(others.len() as u32);
    let mut trip = Vec::with_capacity(a.nnz() * spectators);
    for (r, c, v) in a.iter() {
        let rd = digits(r, d, k);
        let cd = digits(c, d, k);
        for x in 0..spectators {
            let xd = digits(x, d, others.len());
            let (mut row, mut col) = (0usize, 0usize);
            let (mut li, mut oi) = (0, 0);
            for p in 1..=n {
                let (dr, dc) = if li < k && legs[li] == p {
                    li += 1;
                    (rd[li - 1], cd[li - 1])
                } else {
                    oi += 1;
                    (xd[oi - 1], xd[oi - 1])
                };
                row = row * d + dr;
                col = col * d + dc;
            }
            trip.push((row, col, v.clone()));
        }
    }
    Ok(SparseMat::from_triplets(full, full, trip))
}

/// Which transpose defines `K` from the flip `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransposeForm {
    /// E_{i,j} → E_{j,i}
    Plain,
    /// E_{i,j} → E_{d+1-j, d+1-i}, the transpose for the antidiagonal form.
    Antidiagonal,
}

/// `P = Σ E_{i,j} ⊗ E_{j,i}` and `K`, the transpose of `P` on its first leg.
pub fn flip_and_k(d: usize, form: TransposeForm) -> (SparseMat, SparseMat) {
    let dd = d * d;
    let mut p = Vec::with_capacity(dd);
    let mut k = Vec::with_capacity(dd);
    for i in 0..d {
        for j in 0..d {
            // E_{i,j} ⊗ E_{j,i}: row (i, j), col (j, i)
            p.push((i * d + j, j * d + i, Scalar::one()));
            let (ti, tj) = match form {
                TransposeForm::Plain => (j, i),
                TransposeForm::Antidiagonal => (d - 1 - j, d - 1 - i),
            };
            k.push((ti * d + j, tj * d + i, Scalar::one()));
        }
    }
    (SparseMat::from_triplets(dd, dd, p), SparseMat::from_triplets(dd, dd, k))
}

/// `X_{21} = P X P` for an operator on `V ⊗ V`.
pub fn swap_legs(x: &SparseMat, d: usize) -> Result<SparseMat> {
    if x.shape() != (d * d, d * d) {
        return Err(Error::LegEmbedding(format!("swap of shape {:?} with d = {d}", x.shape())));
    }
    let trip = x.iter().map(|(r, c, v)| {
        let (r1, r2) = (r / d, r % d);
        let (c1, c2) = (c / d, c % d);
        (r2 * d + r1, c2 * d + c1, v.clone())
    });
    Ok(SparseMat::from_triplets(d * d, d * d, trip))
}
