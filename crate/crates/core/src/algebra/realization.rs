//! Cross-check of the antisymmetric `M_{a,b}` realization against the
//! matrix-unit realization.

use std::time::Instant;

use super::model::{AlgebraModel, Root, Series};
use crate::error::Result;
use crate::linalg::{elim, Scalar, SparseMat};
use crate::report::VerificationReport;

fn m_ab(m: usize, a: usize, b: usize) -> SparseMat {
    SparseMat::unit(m, m, a - 1, b - 1)
        .sub(&SparseMat::unit(m, m, b - 1, a - 1))
        .expect("same shape")
}

fn combo(m: usize, parts: &[(Scalar, usize, usize)]) -> SparseMat {
    let mut acc = SparseMat::zeros(m, m);
    for (c, a, b) in parts {
        acc = acc.add(&m_ab(m, *a, *b).scale(c)).expect("same shape");
    }
    acc
}

/// Expands matrices over a fixed basis through the trace pairing.
pub struct Decomposer {
    basis: Vec<SparseMat>,
    gram_inv: Vec<Vec<Scalar>>,
}

impl Decomposer {
    pub fn new(basis: Vec<SparseMat>) -> Result<Self> {
        let n = basis.len();
        let mut gram = vec![vec![Scalar::zero(); n]; n];
        for a in 0..n {
            for b in 0..n {
                gram[a][b] = basis[a].trace_product(&basis[b])?;
            }
        }
        let inv = elim::gauss_jordan_inverse(&SparseMat::from_dense(&gram))?.to_dense();
        Ok(Decomposer { basis, gram_inv: inv })
    }

    /// Coordinates of `y`, or `None` if `y` is outside the span.
    pub fn coords(&self, y: &SparseMat) -> Result<Option<Vec<Scalar>>> {
        let n = self.basis.len();
        let pair: Vec<Scalar> = self.basis.iter().map(|b| b.trace_product(y)).collect::<Result<_>>()?;
        let mut c = vec![Scalar::zero(); n];
        for (a, ca) in c.iter_mut().enumerate() {
            for (b, pb) in pair.iter().enumerate() {
                if !pb.is_zero() && !self.gram_inv[a][b].is_zero() {
                    *ca += &(&self.gram_inv[a][b] * pb);
                }
            }
        }
        let mut back = SparseMat::zeros(y.nrows(), y.ncols());
        for (ca, b) in c.iter().zip(&self.basis) {
            if !ca.is_zero() {
                back = back.add(&b.scale(ca))?;
            }
        }
        Ok((back == *y).then_some(c))
    }
}

/// `M_{a,b}` images of `H_j` and of the root vectors, with the short root
/// vectors scaled by `√2` so that all entries stay in `Q(i)`.
pub fn m_realization(series: Series, rank: usize, roots: &[Root]) -> (Vec<SparseMat>, Vec<SparseMat>) {
    let m = series.dim(rank);
    let i = Scalar::i();
    let half_mi = &Scalar::frac(-1, 2) * &i;
    let h: Vec<SparseMat> = (1..=rank).map(|j| m_ab(m, 2 * j - 1, 2 * j).scale(&half_mi)).collect();
    let half = Scalar::frac(1, 2);
    let hi = &half * &i;
    let e = roots
        .iter()
        .map(|r| {
            let support: Vec<(usize, i32)> =
                r.0.iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, c)| (k + 1, *c)).collect();
            match support.as_slice() {
                [(k, s)] => combo(m, &[(Scalar::int(*s as i64), 2 * k, m), (-i.clone(), 2 * k - 1, m)]),
                [(a, sa), (b, sb)] => {
                    let (a, b) = (*a, *b);
                    // (-M_{2i,2j}, ±iM_{2i,2j-1}, iM_{2i-1,2j}, ±M_{2i-1,2j-1}) / 2
                    let (c1, c2, c4) = match (sa, sb) {
                        (1, 1) => (-&half, hi.clone(), half.clone()),
                        (1, -1) => (-&half, -&hi, -&half),
                        (-1, 1) => (half.clone(), -&hi, half.clone()),
                        _ => (half.clone(), hi.clone(), -&half),
                    };
                    combo(
                        m,
                        &[(c1, 2 * a, 2 * b), (c2, 2 * a, 2 * b - 1), (hi.clone(), 2 * a - 1, 2 * b), (c4, 2 * a - 1, 2 * b - 1)],
                    )
                }
                _ => unreachable!("roots have support 1 or 2"),
            }
        })
        .collect();
    (h, e)
}

/// Verifies the `M_{a,b}` brackets, the agreement of structure constants of
/// both realizations, and the Cartan eigenvalues of every root vector.
pub fn realization_check(model: &AlgebraModel) -> Result<VerificationReport> {
    let start = Instant::now();
    let m = model.dim();
    let n = model.rank();
    let mut report = VerificationReport::passed(format!("realization so({m})"));

    let delta = |x: usize, y: usize| if x == y { 1 } else { 0 };
    for a in 1..=m {
        for b in a + 1..=m {
            for c in 1..=m {
                for d in c + 1..=m {
                    let lhs = m_ab(m, a, b).commutator(&m_ab(m, c, d))?;
                    let mut rhs = SparseMat::zeros(m, m);
                    for (coef, x, y) in [
                        (delta(b, c), a, d),
                        (delta(a, d), b, c),
                        (-delta(a, c), b, d),
                        (-delta(b, d), a, c),
                    ] {
                        if coef != 0 {
                            rhs = rhs.add(&m_ab(m, x, y).scale(&Scalar::int(coef)))?;
                        }
                    }
                    if lhs != rhs {
                        report.fail(format!("[M_({a},{b}), M_({c},{d})]"));
                    }
                }
            }
        }
    }

    let roots = model.roots().to_vec();
    let (mh, me) = m_realization(model.series(), n, &roots);
    let mut a_basis: Vec<SparseMat> = (1..=n).map(|j| model.matrix(&super::Gen::H(j)).cloned()).collect::<Result<_>>()?;
    for r in &roots {
        a_basis.push(model.root_vector(r)?);
    }
    let mut m_basis = mh.clone();
    m_basis.extend(me.iter().cloned());
    let short: Vec<bool> = (0..n).map(|_| false).chain(roots.iter().map(Root::is_short)).collect();
    let label = |idx: usize| {
        if idx < n {
            format!("H{}", idx + 1)
        } else {
            format!("E_({})", roots[idx - n])
        }
    };

    let da = Decomposer::new(a_basis.clone())?;
    let dm = Decomposer::new(m_basis.clone())?;
    let dim = a_basis.len();
    for x in 0..dim {
        for y in 0..dim {
            let ca = da.coords(&a_basis[x].commutator(&a_basis[y])?)?;
            let cm = dm.coords(&m_basis[x].commutator(&m_basis[y])?)?;
            let (Some(ca), Some(cm)) = (ca, cm) else {
                report.fail(format!("[{}, {}] does not close", label(x), label(y)));
                continue;
            };
            for z in 0..dim {
                let exp = short[x] as i32 + short[y] as i32 - short[z] as i32;
                let ok = if exp % 2 != 0 {
                    ca[z].is_zero() && cm[z].is_zero()
                } else {
                    let f = Scalar::int(1i64 << (exp / 2).max(0));
                    let g = Scalar::int(1i64 << (-exp / 2).max(0));
                    &ca[z] * &f == &cm[z] * &g
                };
                if !ok {
                    report.fail(format!("structure constant ([{}, {}], {})", label(x), label(y), label(z)));
                }
            }
        }
    }

    for (ri, r) in roots.iter().enumerate() {
        for j in 1..=n {
            let ev = model.cartan_eigenvalue(j, r);
            let ea = &a_basis[n + ri];
            if a_basis[j - 1].commutator(ea)? != ea.scale(&ev) {
                report.fail(format!("[H{j}, E_({r})] (matrix units)"));
            }
            let em = &me[ri];
            if mh[j - 1].commutator(em)? != em.scale(&ev) {
                report.fail(format!("[H{j}, E_({r})] (M_ab)"));
            }
        }
    }
    Ok(report.timed(start))
}
