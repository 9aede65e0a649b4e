//! Text rendering of operators on `V ⊗ V` in matrix units, 1-based.

use crate::error::Result;
use crate::linalg::{Scalar, SparseMat};
use crate::rmatrix::tensor_root;

/// `E[i,j](x)E[k,l]` label of the entry at `(row, col)` of a `d² × d²` matrix.
pub fn unit_label(row: usize, col: usize, d: usize) -> String {
    format!("E[{},{}](x)E[{},{}]", row / d + 1, col / d + 1, row % d + 1, col % d + 1)
}

fn signed_term(c: &Scalar, label: &str, first: bool) -> String {
    let (neg, mag) = if c.is_real() && c.re() < &num_traits::Zero::zero() { (true, -c) } else { (false, c.clone()) };
    let coeff = if mag.is_one() {
        String::new()
    } else if mag.is_real() {
        format!("{mag} ")
    } else {
        format!("({mag}) ")
    };
    match (first, neg) {
        (true, false) => format!("{coeff}{label}"),
        (true, true) => format!("-{coeff}{label}"),
        (false, false) => format!(" + {coeff}{label}"),
        (false, true) => format!(" - {coeff}{label}"),
    }
}

/// `c·1(x)1 + Σ c·E[i,j](x)E[k,l]`, terms sorted by `(i, j, k, l)`. The
/// identity part is split off when all diagonal entries agree.
pub fn render_text(m: &SparseMat) -> Result<String> {
    let n = m.nrows();
    let d = tensor_root(n)?;
    let diag = m.get(0, 0).cloned().unwrap_or_else(Scalar::zero);
    let split = !diag.is_zero() && (0..n).all(|i| m.get(i, i) == Some(&diag));
    let mut rest = m.clone();
    if split {
        rest = rest.sub(&SparseMat::diagonal(n, &diag))?;
    }
    let mut terms: Vec<((usize, usize, usize, usize), &Scalar)> =
        rest.iter().map(|(r, c, v)| ((r / d, c / d, r % d, c % d), v)).collect();
    terms.sort_by_key(|t| t.0);
    let mut out = String::new();
    if split {
        out.push_str(&signed_term(&diag, "1(x)1", true));
    }
    for (idx, (_, v)) in terms.iter().enumerate() {
        let (i, j, k, l) = terms[idx].0;
        let label = format!("E[{},{}](x)E[{},{}]", i + 1, j + 1, k + 1, l + 1);
        out.push_str(&signed_term(v, &label, out.is_empty()));
    }
    if out.is_empty() {
        out.push('0');
    }
    Ok(out)
}
