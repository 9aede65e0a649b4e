//! Matrix subalgebras of `B(so(M))` with exact structure constants.

use crate::algebra::{AlgebraModel, Gen};
use crate::error::{Error, Result};
use crate::linalg::{elim, Scalar, SparseMat};

/// Pairing `⟨a, b⟩ = Σ conj(a_ij) b_ij`, nondegenerate on any span.
fn hermitian(a: &SparseMat, b: &SparseMat) -> Scalar {
    let mut acc = Scalar::zero();
    for (i, j, x) in a.iter() {
        if let Some(y) = b.get(i, j) {
            acc += &(&x.conj() * y);
        }
    }
    acc
}

/// An ordered basis of matrices closed under the commutator, with
/// `structure[a][b]` the coordinates of `[x_a, x_b]`.
#[derive(Clone, Debug)]
pub struct SubalgebraBasis {
    pub labels: Vec<String>,
    pub mats: Vec<SparseMat>,
    pub structure: Vec<Vec<Vec<Scalar>>>,
    gram_inv: Vec<Vec<Scalar>>,
}

impl SubalgebraBasis {
    /// Checks linear independence and closure, and tabulates the brackets.
    pub fn new(labels: Vec<String>, mats: Vec<SparseMat>) -> Result<Self> {
        let n = mats.len();
        let gram: Vec<Vec<Scalar>> = (0..n).map(|a| (0..n).map(|b| hermitian(&mats[a], &mats[b])).collect()).collect();
        let gram_inv = elim::gauss_jordan_inverse(&SparseMat::from_dense(&gram))
            .map_err(|_| Error::NotSubalgebra("elements are linearly dependent".into()))?
            .to_dense();
        let mut s = SubalgebraBasis { labels, mats, structure: Vec::new(), gram_inv };
        let mut structure = vec![vec![Vec::new(); n]; n];
        for a in 0..n {
            for b in 0..n {
                let c = s.mats[a].commutator(&s.mats[b])?;
                structure[a][b] = s.coords(&c)?.ok_or_else(|| {
                    Error::NotSubalgebra(format!("[{}, {}] leaves the span", s.labels[a], s.labels[b]))
                })?;
            }
        }
        s.structure = structure;
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    /// Coordinates of `y` over the basis, or `None` outside the span.
    pub fn coords(&self, y: &SparseMat) -> Result<Option<Vec<Scalar>>> {
        let n = self.dim();
        let pair: Vec<Scalar> = self.mats.iter().map(|b| hermitian(b, y)).collect();
        let c: Vec<Scalar> = (0..n)
            .map(|a| {
                let mut acc = Scalar::zero();
                for (g, p) in self.gram_inv[a].iter().zip(&pair) {
                    if !g.is_zero() && !p.is_zero() {
                        acc += &(g * p);
                    }
                }
                acc
            })
            .collect();
        Ok((self.combine(&c)? == *y).then_some(c))
    }

    /// `Σ c_a x_a`.
    pub fn combine(&self, c: &[Scalar]) -> Result<SparseMat> {
        let (r, k) = self.mats[0].shape();
        let mut acc = SparseMat::zeros(r, k);
        for (ca, x) in c.iter().zip(&self.mats) {
            if !ca.is_zero() {
                acc = acc.add(&x.scale(ca))?;
            }
        }
        Ok(acc)
    }
}

/// `dim L_{K,M} = 2KM - 4K²`.
pub fn lkm_dim(k: usize, m: usize) -> usize {
    2 * k * m - 4 * k * k
}

/// `L_{K,M}`: `H_i` and `A_{i,j}` for `i ≤ 2K`, `i < j`, with each `A`
/// reduced to its canonical label and zero elements dropped.
pub fn subalgebra_lkm(model: &AlgebraModel, k: usize) -> Result<SubalgebraBasis> {
    let m = model.dim();
    if k == 0 || 2 * k > m / 2 {
        return Err(Error::SubalgebraBound { k, m });
    }
    let mut gens: Vec<Gen> = (1..=2 * k).map(Gen::H).collect();
    for i in 1..=2 * k {
        for j in i + 1..=m {
            if let Some((_, g)) = model.canonical_a(i, j)? {
                if !gens.contains(&g) {
                    gens.push(g);
                }
            }
        }
    }
    let mats = gens.iter().map(|g| model.matrix(g).cloned()).collect::<Result<_>>()?;
    SubalgebraBasis::new(gens.iter().map(|g| g.to_string()).collect(), mats)
}

/// Splits `L_{K,M}` into `S` and the ideal `N = span{A_{1,j}}`: the
/// off-diagonal elements supported on the first row and last column.
pub fn lkm_split(l: &SubalgebraBasis) -> (Vec<usize>, Vec<usize>) {
    let m = l.mats[0].nrows();
    (0..l.dim()).partition(|&a| !l.mats[a].iter().all(|(i, j, _)| i != j && (i == 0 || j == m - 1)))
}
