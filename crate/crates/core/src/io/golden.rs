//! Entrywise comparison against stored reference matrices.

use serde::{Deserialize, Serialize};

use super::matrix::MatrixDocument;
use super::render::unit_label;
use crate::error::{Error, Result};
use crate::linalg::{Scalar, SparseMat};

/// A reference matrix together with the grouped terms it was expanded from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenDocument {
    #[serde(flatten)]
    pub matrix: MatrixDocument,
    #[serde(default)]
    pub terms: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub computed: Scalar,
    pub golden: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenDiff {
    pub d: Option<usize>,
    pub mismatches: Vec<Mismatch>,
}

impl GoldenDiff {
    pub fn is_match(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// One line per mismatch, in row-major order.
    pub fn lines(&self) -> Vec<String> {
        self.mismatches
            .iter()
            .map(|m| {
                let label = self.d.map(|d| format!(" {}", unit_label(m.row, m.col, d))).unwrap_or_default();
                format!("({}, {}){label}: computed {} golden {}", m.row, m.col, m.computed, m.golden)
            })
            .collect()
    }
}

pub fn load_golden(text: &str) -> Result<(SparseMat, Vec<String>)> {
    let doc: GoldenDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((doc.matrix.to_matrix()?, doc.terms))
}

pub fn golden_compare(computed: &SparseMat, golden: &SparseMat) -> Result<GoldenDiff> {
    if computed.shape() != golden.shape() {
        return Err(Error::DimensionMismatch { op: "golden_compare", lhs: computed.shape(), rhs: golden.shape() });
    }
    let diff = computed.sub(golden)?;
    let zero = Scalar::zero();
    let mismatches = diff
        .iter()
        .map(|(row, col, _)| Mismatch {
            row,
            col,
            computed: computed.get(row, col).unwrap_or(&zero).clone(),
            golden: golden.get(row, col).unwrap_or(&zero).clone(),
        })
        .collect();
    let d = crate::rmatrix::tensor_root(computed.nrows()).ok().filter(|_| computed.is_square());
    Ok(GoldenDiff { d, mismatches })
}

/// Erratum documents list `[row, col, computed, golden]` for every known
/// mismatch between a computed matrix and its golden file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Erratum {
    pub mismatches: Vec<(usize, usize, String, String)>,
}

impl Erratum {
    pub fn from_diff(diff: &GoldenDiff) -> Self {
        Erratum {
            mismatches: diff.mismatches.iter().map(|m| (m.row, m.col, m.computed.to_string(), m.golden.to_string())).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}
