//! R-matrices `R = F₂₁ F⁻¹` and the quantum Yang–Baxter equation.

use std::time::Instant;

use crate::chain::{chain_inverse, chain_matrix, ChainSpec};
use crate::error::{Error, Result};
use crate::linalg::{leg_embed, swap_legs, SparseMat};
use crate::report::VerificationReport;

#[derive(Clone, Debug)]
pub struct RMatrix {
    pub mat: SparseMat,
    /// Dimension of `V`.
    pub d: usize,
    pub provenance: Option<ChainSpec>,
}

impl RMatrix {
    /// Wraps a `d² × d²` matrix.
    pub fn from_matrix(mat: SparseMat) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::Config(format!("R-matrix of shape {:?} is not square", mat.shape())));
        }
        let d = tensor_root(mat.nrows())?;
        Ok(RMatrix { mat, d, provenance: None })
    }
}

/// `d` with `d² = n`.
pub fn tensor_root(n: usize) -> Result<usize> {
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n || d < 2 {
        return Err(Error::Config(format!("dimension {n} is not the square of an integer >= 2")));
    }
    Ok(d)
}

/// `R = P F P F⁻¹` with the unitarity check `R₂₁ R = 1`.
pub fn r_from_twist(f: &SparseMat) -> Result<(RMatrix, VerificationReport)> {
    let inv = f.inverse()?;
    r_from_parts(f, &inv)
}

fn r_from_parts(f: &SparseMat, f_inv: &SparseMat) -> Result<(RMatrix, VerificationReport)> {
    let start = Instant::now();
    let d = tensor_root(f.nrows())?;
    let mat = swap_legs(f, d)?.mul(f_inv)?;
    let r = RMatrix { mat, d, provenance: None };
    let report = unitarity_check(&r)?.timed(start);
    Ok((r, report))
}

/// The R-matrix of a chain, with its unitarity report.
pub fn r_from_chain(chain: &ChainSpec) -> Result<(RMatrix, VerificationReport)> {
    let (mut r, report) = r_from_parts(&chain_matrix(chain)?, &chain_inverse(chain)?)?;
    r.provenance = Some(chain.clone());
    Ok((r, report))
}

pub fn unitarity_check(r: &RMatrix) -> Result<VerificationReport> {
    let start = Instant::now();
    let r21 = swap_legs(&r.mat, r.d)?;
    let lhs = r21.mul(&r.mat)?;
    Ok(VerificationReport::from_equality("unitarity R21 R = 1", &lhs, &SparseMat::identity(lhs.nrows())).timed(start))
}

/// `(R₁₂, R₁₃, R₂₃)` on `V^{⊗3}`.
pub fn legs3(r: &SparseMat, d: usize) -> Result<(SparseMat, SparseMat, SparseMat)> {
    Ok((leg_embed(r, &[1, 2], d, 3)?, leg_embed(r, &[1, 3], d, 3)?, leg_embed(r, &[2, 3], d, 3)?))
}

/// `R₁₂ R₁₃ R₂₃ = R₂₃ R₁₃ R₁₂`.
pub fn ybe_check(r: &RMatrix) -> Result<VerificationReport> {
    let start = Instant::now();
    let (a, b, c) = legs3(&r.mat, r.d)?;
    let lhs = a.mul(&b)?.mul(&c)?;
    let rhs = c.mul(&b)?.mul(&a)?;
    Ok(VerificationReport::from_equality(format!("QYBE dim {}", lhs.nrows()), &lhs, &rhs).timed(start))
}
