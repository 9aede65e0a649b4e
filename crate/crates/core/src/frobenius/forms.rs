//! Functionals, Gram forms, stationary subalgebras and 2-cochains.

use crate::algebra::{a_matrix, link_frame, AlgebraModel, Gen, Root};
use crate::chain::{carrier_basis, ChainSpec};
use crate::error::{Error, Result};
use crate::expr::eval_in_rep;
use crate::linalg::{elim, Scalar, SparseMat};

use super::subalgebra::SubalgebraBasis;

/// `f(x) = tr(D x)` for a dual element `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunctional {
    pub dual: SparseMat,
}

impl LinearFunctional {
    pub fn new(dual: SparseMat) -> Self {
        LinearFunctional { dual }
    }

    /// `x* = xᵀ / tr(xᵀx)`, so that `x*(x) = 1`.
    pub fn dual_of(x: &SparseMat) -> Result<Self> {
        let t = x.transpose();
        let norm = t.trace_product(x)?;
        Ok(LinearFunctional { dual: t.scale(&norm.inv()?) })
    }

    pub fn eval(&self, x: &SparseMat) -> Result<Scalar> {
        self.dual.trace_product(x)
    }

    pub fn add(&self, other: &LinearFunctional) -> Result<Self> {
        Ok(LinearFunctional { dual: self.dual.add(&other.dual)? })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        LinearFunctional { dual: self.dual.scale(s) }
    }
}

/// `Σ_{i≤K} A_{2i,2i-1} + Σ_{i≤K} A_{M+1-2i,2i-1}`.
pub fn gen_form_functional(model: &AlgebraModel, k: usize) -> Result<LinearFunctional> {
    let m = model.dim();
    if k == 0 || 2 * k > m / 2 {
        return Err(Error::SubalgebraBound { k, m });
    }
    let mut d = SparseMat::zeros(m, m);
    for i in 1..=k {
        d = d.add(&a_matrix(m, 2 * i, 2 * i - 1))?.add(&a_matrix(m, m + 1 - 2 * i, 2 * i - 1))?;
    }
    Ok(LinearFunctional::new(d))
}

/// `Gram_{ab} = f([x_a, x_b])` and whether its determinant is nonzero.
pub fn gram_and_nondegeneracy(f: &LinearFunctional, s: &SubalgebraBasis) -> Result<(SparseMat, bool)> {
    let n = s.dim();
    let mut rows = vec![vec![Scalar::zero(); n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let v = f.eval(&s.mats[a].commutator(&s.mats[b])?)?;
            rows[b][a] = -&v;
            rows[a][b] = v;
        }
    }
    let g = SparseMat::from_dense(&rows);
    let (rank, _) = elim::exact_rank_det(&g);
    Ok((g, n > 0 && rank == n))
}

#[derive(Clone, Debug)]
pub struct Stationary {
    /// Kernel vectors, as coordinates over the `S` indices.
    pub basis: Vec<Vec<Scalar>>,
    pub transitive: bool,
}

impl Stationary {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `S_{A*} = {s ∈ S : A*([s, x]) = 0 for x ∈ N}`, and transitivity of
/// `L` on `N*` at `A*`.
pub fn stationary_and_transitivity(
    l: &SubalgebraBasis,
    s_idx: &[usize],
    n_idx: &[usize],
    f: &LinearFunctional,
) -> Result<Stationary> {
    for &x in n_idx {
        for b in 0..l.dim() {
            let c = &l.structure[b][x];
            if c.iter().enumerate().any(|(i, v)| !v.is_zero() && !n_idx.contains(&i)) {
                return Err(Error::NotCommutativeIdeal(format!("[{}, {}] leaves N", l.labels[b], l.labels[x])));
            }
            if n_idx.contains(&b) && c.iter().any(|v| !v.is_zero()) {
                return Err(Error::NotCommutativeIdeal(format!("[{}, {}] != 0", l.labels[b], l.labels[x])));
            }
        }
    }
    let pairing = |rows: &[usize]| -> Result<Vec<Vec<Scalar>>> {
        n_idx
            .iter()
            .map(|&x| rows.iter().map(|&r| f.eval(&l.mats[r].commutator(&l.mats[x])?)).collect())
            .collect()
    };
    let basis = elim::kernel(&pairing(s_idx)?, s_idx.len());
    let all: Vec<usize> = (0..l.dim()).collect();
    let mut full = pairing(&all)?;
    let transitive = elim::rref(&mut full).len() == n_idx.len();
    Ok(Stationary { basis, transitive })
}

/// An antisymmetric bilinear form over a subalgebra basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCochain {
    pub omega: Vec<Vec<Scalar>>,
}

impl TwoCochain {
    pub fn zero(n: usize) -> Self {
        TwoCochain { omega: vec![vec![Scalar::zero(); n]; n] }
    }

    /// `f([x, y])`.
    pub fn coboundary(s: &SubalgebraBasis, f: &LinearFunctional) -> Result<Self> {
        let (g, _) = gram_and_nondegeneracy(f, s)?;
        Ok(TwoCochain { omega: g.to_dense() })
    }

    /// `(f ∧ g)(x, y) = f(x)g(y) - g(x)f(y)`.
    pub fn wedge(s: &SubalgebraBasis, f: &LinearFunctional, g: &LinearFunctional) -> Result<Self> {
        let fx: Vec<Scalar> = s.mats.iter().map(|x| f.eval(x)).collect::<Result<_>>()?;
        let gx: Vec<Scalar> = s.mats.iter().map(|x| g.eval(x)).collect::<Result<_>>()?;
        let n = s.dim();
        let omega = (0..n).map(|a| (0..n).map(|b| &(&fx[a] * &gx[b]) - &(&gx[a] * &fx[b])).collect()).collect();
        Ok(TwoCochain { omega })
    }

    pub fn add(&self, other: &TwoCochain) -> Self {
        let omega = self
            .omega
            .iter()
            .zip(&other.omega)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
            .collect();
        TwoCochain { omega }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TwoCochain { omega: self.omega.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() }
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.omega.len();
        (0..n).all(|a| (0..n).all(|b| self.omega[a][b] == -&self.omega[b][a]))
    }

    pub fn is_nondegenerate(&self) -> bool {
        let n = self.omega.len();
        n > 0 && elim::exact_rank_det(&SparseMat::from_dense(&self.omega)).0 == n
    }
}

/// `H_i*`, dual to `H_i` in the Cartan subalgebra.
pub fn h_star(model: &AlgebraModel, i: usize) -> Result<LinearFunctional> {
    LinearFunctional::dual_of(model.matrix(&Gen::H(i))?)
}

/// `(is_cocycle, is_coboundary)` with
/// `dω(x,y,z) = ω([x,y],z) - ω([x,z],y) + ω([y,z],x)`.
pub fn cocycle_tests(w: &TwoCochain, s: &SubalgebraBasis) -> (bool, bool) {
    let n = s.dim();
    let om = |c: &[Scalar], z: usize| -> Scalar {
        let mut acc = Scalar::zero();
        for (d, cd) in c.iter().enumerate() {
            if !cd.is_zero() {
                acc += &(cd * &w.omega[d][z]);
            }
        }
        acc
    };
    let mut cocycle = true;
    'outer: for x in 0..n {
        for y in x + 1..n {
            for z in y + 1..n {
                let d = &(&om(&s.structure[x][y], z) - &om(&s.structure[x][z], y)) + &om(&s.structure[y][z], x);
                if !d.is_zero() {
                    cocycle = false;
                    break 'outer;
                }
            }
        }
    }
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            rows.push(s.structure[x][y].clone());
            rhs.push(w.omega[x][y].clone());
        }
    }
    let coboundary = elim::solve(&rows, &rhs, n).is_some();
    (cocycle, coboundary)
}

/// The carrier of `chain` as a subalgebra basis.
pub fn carrier_subalgebra(chain: &ChainSpec) -> Result<SubalgebraBasis> {
    let model = chain.model();
    let carrier = carrier_basis(chain)?;
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for elem in &carrier.basis {
        let mut x = SparseMat::zeros(model.dim(), model.dim());
        for (g, c) in elem {
            x = x.add(&model.matrix(g)?.scale(c))?;
        }
        labels.push(elem.iter().map(|(g, c)| format!("{c} {g}")).collect::<Vec<_>>().join(" + "));
        mats.push(x);
    }
    SubalgebraBasis::new(labels, mats)
}

/// `Σ_k (γ_k (E^k_{1+2})* - δ_k (E^k_{1-2})*)([ , ]) + Σ ζ_ij H_i*∧H_j*` on
/// the carrier of `chain`; `terminal` adds `(E_N)*([ , ])` for the
/// terminal `so(3)`.
pub fn omega_forms(
    chain: &ChainSpec,
    gamma: &[bool],
    delta: &[bool],
    terminal: bool,
    zeta: &[(usize, usize, Scalar)],
) -> Result<(SubalgebraBasis, TwoCochain)> {
    let model = chain.model();
    let s = carrier_subalgebra(chain)?;
    if gamma.len() != delta.len() {
        return Err(Error::IncompatibleParams(format!("{} gamma vs {} delta entries", gamma.len(), delta.len())));
    }
    let mut f = LinearFunctional::new(SparseMat::zeros(model.dim(), model.dim()));
    for (k, (&g, &d)) in gamma.iter().zip(delta).enumerate() {
        let frame = link_frame(model, k)?;
        if g {
            f = f.add(&LinearFunctional::dual_of(&eval_in_rep(&frame.e_plus(model)?, model)?)?)?;
        }
        if d {
            f = f.add(&LinearFunctional::dual_of(&eval_in_rep(&frame.e_minus(model)?, model)?)?.scale(&Scalar::int(-1)))?;
        }
    }
    if terminal {
        let n = model.rank();
        f = f.add(&LinearFunctional::dual_of(&model.root_vector(&Root::e(n, n, 1))?)?)?;
    }
    let mut w = TwoCochain::coboundary(&s, &f)?;
    for (i, j, z) in zeta {
        w = w.add(&TwoCochain::wedge(&s, &h_star(model, *i)?, &h_star(model, *j)?)?.scale(z));
    }
    Ok((s, w))
}
