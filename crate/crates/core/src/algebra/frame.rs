//! Per-link index frames: the embedded `so(M-4k)` occupying global indices
//! `2k+1 ..= M-2k`.

use std::collections::BTreeMap;

use super::model::{AlgebraModel, Gen, Root, Series};
use crate::error::{Error, Result};
use crate::expr::{TensorExpr, UExpr};
use crate::linalg::Scalar;

/// Number of twist links available in `so(M)`: local dimension `M - 4k`
/// must be at least 5 (odd) or 4 (even).
pub fn max_links(m: usize) -> usize {
    let min = if m % 2 == 1 { 5 } else { 4 };
    if m < min {
        0
    } else {
        (m - min) / 4 + 1
    }
}

/// Odd `M` whose last link leaves an `so(3)` behind.
pub fn has_terminal_so3(m: usize) -> bool {
    m % 4 == 3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    /// `I^a`
    Scalar,
    /// `I^{a⊗b}`
    Tensor,
    /// `I^{a∧b}`
    Wedge,
}

/// An invariant of the local algebra, scalar or two-leg.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Invariant {
    Scalar(UExpr),
    Tensor(TensorExpr),
}

#[derive(Clone, Debug)]
pub struct LinkFrame {
    k: usize,
    series: Series,
    global_rank: usize,
    global_dim: usize,
}

pub fn link_frame(model: &AlgebraModel, k: usize) -> Result<LinkFrame> {
    let max = max_links(model.dim());
    if k >= max {
        return Err(Error::LinkOutOfRange { k, m: model.dim(), max });
    }
    Ok(LinkFrame { k, series: model.series(), global_rank: model.rank(), global_dim: model.dim() })
}

impl LinkFrame {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Global row/column shift `2k`.
    pub fn offset(&self) -> usize {
        2 * self.k
    }

    /// Local matrix size `M - 4k`.
    pub fn local_dim(&self) -> usize {
        self.global_dim - 4 * self.k
    }

    pub fn local_rank(&self) -> usize {
        self.global_rank - 2 * self.k
    }

    pub fn is_odd(&self) -> bool {
        self.series == Series::B
    }

    /// Global root for a local weight given as `(local index, coefficient)`.
    pub fn global_root(&self, local: &[(usize, i32)]) -> Root {
        let mut v = vec![0; self.global_rank];
        for (i, c) in local {
            v[i + self.offset() - 1] += c;
        }
        Root(v)
    }

    /// `E^k_λ = -A_{..}` for a local root.
    pub fn e(&self, model: &AlgebraModel, local: &[(usize, i32)]) -> Result<UExpr> {
        let g = model.root_generator(&self.global_root(local))?;
        Ok(UExpr::gen(g).neg())
    }

    pub fn h(&self, local: usize) -> UExpr {
        UExpr::gen(Gen::H(local + self.offset()))
    }

    /// `H^k_{1+2} = H_{2k+1} + H_{2k+2}`.
    pub fn h_plus(&self) -> UExpr {
        self.h(1).add(&self.h(2))
    }

    /// `H^k_{1-2} = H_{2k+1} - H_{2k+2}`.
    pub fn h_minus(&self) -> UExpr {
        self.h(1).sub(&self.h(2))
    }

    pub fn e_plus(&self, model: &AlgebraModel) -> Result<UExpr> {
        self.e(model, &[(1, 1), (2, 1)])
    }

    pub fn e_minus(&self, model: &AlgebraModel) -> Result<UExpr> {
        self.e(model, &[(1, 1), (2, -1)])
    }

    /// `E^k_{2-1}`.
    pub fn e_minus_rev(&self, model: &AlgebraModel) -> Result<UExpr> {
        self.e(model, &[(1, -1), (2, 1)])
    }

    /// Short root vector `E^k_a` (odd `M` only).
    pub fn e_short(&self, model: &AlgebraModel, a: usize) -> Result<UExpr> {
        self.e(model, &[(a, 1)])
    }

    /// `E^k_{a + s·l}`.
    pub fn e_al(&self, model: &AlgebraModel, a: usize, s: i32, l: usize) -> Result<UExpr> {
        self.e(model, &[(a, 1), (l, s)])
    }

    /// `σ^k_{1+2} = ln(1 + η E^k_{1+2})`.
    pub fn sigma(&self, model: &AlgebraModel, eta: &Scalar) -> Result<UExpr> {
        Ok(UExpr::log1p(self.e_plus(model)?.scale(eta.clone())))
    }

    /// Local indices `l = 3 ..= local rank`.
    pub fn transverse(&self) -> std::ops::RangeInclusive<usize> {
        3..=self.local_rank()
    }

    /// `I^a`, `I^{a⊗b}` or `I^{a∧b}` of the local algebra.
    pub fn invariant(&self, model: &AlgebraModel, kind: InvariantKind, a: usize, b: usize) -> Result<Invariant> {
        match kind {
            InvariantKind::Scalar => self.invariant_scalar(model, a).map(Invariant::Scalar),
            InvariantKind::Tensor => self.invariant_tensor(model, a, b).map(Invariant::Tensor),
            InvariantKind::Wedge => self.invariant_wedge(model, a, b).map(Invariant::Tensor),
        }
    }

    /// `I^a = ½E_a² + Σ_l E_{a+l}E_{a-l}` (no `E_a` term for even `M`).
    pub fn invariant_scalar(&self, model: &AlgebraModel, a: usize) -> Result<UExpr> {
        let mut terms = Vec::new();
        if self.is_odd() {
            let ea = self.e_short(model, a)?;
            terms.push(ea.mul(&ea).scale(Scalar::frac(1, 2)));
        }
        for l in self.transverse() {
            terms.push(self.e_al(model, a, 1, l)?.mul(&self.e_al(model, a, -1, l)?));
        }
        Ok(UExpr::sum(terms))
    }

    fn invariant_pairs(&self, model: &AlgebraModel, a: usize, b: usize) -> Result<Vec<(UExpr, UExpr)>> {
        let mut pairs = Vec::new();
        if self.is_odd() {
            pairs.push((self.e_short(model, a)?, self.e_short(model, b)?));
        }
        for l in self.transverse() {
            pairs.push((self.e_al(model, a, 1, l)?, self.e_al(model, b, -1, l)?));
            pairs.push((self.e_al(model, a, -1, l)?, self.e_al(model, b, 1, l)?));
        }
        Ok(pairs)
    }

    /// `I^{a⊗b} = E_a⊗E_b + Σ_l (E_{a+l}⊗E_{b-l} + E_{a-l}⊗E_{b+l})`.
    pub fn invariant_tensor(&self, model: &AlgebraModel, a: usize, b: usize) -> Result<TensorExpr> {
        let mut t = TensorExpr::zero();
        for (x, y) in self.invariant_pairs(model, a, b)? {
            t = t.with_term(x, y, Scalar::one());
        }
        Ok(t)
    }

    /// `I^{a∧b}`: as `I^{a⊗b}` with every `⊗` replaced by `∧`.
    pub fn invariant_wedge(&self, model: &AlgebraModel, a: usize, b: usize) -> Result<TensorExpr> {
        let mut t = TensorExpr::zero();
        for (x, y) in self.invariant_pairs(model, a, b)? {
            t = t.add(&TensorExpr::wedge(&x, &y));
        }
        Ok(t)
    }

    /// Named local symbols and their global expressions.
    pub fn symbols(&self, model: &AlgebraModel) -> Result<BTreeMap<String, UExpr>> {
        let k = self.k;
        let mut out = BTreeMap::new();
        out.insert(format!("H^{k}_(1+2)"), self.h_plus());
        out.insert(format!("H^{k}_(1-2)"), self.h_minus());
        out.insert(format!("E^{k}_(1+2)"), self.e_plus(model)?);
        out.insert(format!("E^{k}_(1-2)"), self.e_minus(model)?);
        out.insert(format!("E^{k}_(2-1)"), self.e_minus_rev(model)?);
        for a in 1..=2 {
            for l in self.transverse() {
                out.insert(format!("E^{k}_({a}+{l})"), self.e_al(model, a, 1, l)?);
                out.insert(format!("E^{k}_({a}-{l})"), self.e_al(model, a, -1, l)?);
            }
            if self.is_odd() {
                out.insert(format!("E^{k}_({a})"), self.e_short(model, a)?);
            }
        }
        Ok(out)
    }

    /// Global 1-based index range of the local block.
    pub fn block(&self) -> std::ops::RangeInclusive<usize> {
        self.offset() + 1..=self.global_dim - self.offset()
    }

    /// Generators (Cartans and all root vectors) of `so(M - 4(k+1))`,
    /// the block left after this link. Empty when that block has rank 0.
    pub fn inner_generators(&self) -> Vec<Gen> {
        block_generators(self.global_dim, self.global_rank, self.offset() + 2)
    }

    /// Generators of the local `so(M - 4k)`.
    pub fn local_generators(&self) -> Vec<Gen> {
        block_generators(self.global_dim, self.global_rank, self.offset())
    }
}

/// Generators of the block spanning global indices `shift+1 ..= M-shift`.
pub fn block_generators(m: usize, rank: usize, shift: usize) -> Vec<Gen> {
    let mut out: Vec<Gen> = (shift + 1..=rank).map(Gen::H).collect();
    let lo = shift + 1;
    let hi = m - shift;
    if hi < lo {
        return Vec::new();
    }
    for i in lo..=hi {
        for j in lo..=hi {
            if i != j && i + j <= m {
                out.push(Gen::A(i, j));
            }
        }
    }
    out
}
