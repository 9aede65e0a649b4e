//! JSON matrix documents: `{"schema":1,"dim":[r,c],"entries":[[row,col,"re","im"],…]}`
//! with 0-based indices, row-major order and no stored zeros.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Scalar, SparseMat};

pub const MATRIX_SCHEMA: u32 = 1;

fn default_schema() -> u32 {
    MATRIX_SCHEMA
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    #[serde(default = "default_schema")]
    pub schema: u32,
    pub dim: [usize; 2],
    pub entries: Vec<(usize, usize, String, String)>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &SparseMat) -> Self {
        let entries = m.iter().map(|(i, j, v)| (i, j, format_rational(v.re()), format_rational(v.im()))).collect();
        MatrixDocument { schema: MATRIX_SCHEMA, dim: [m.nrows(), m.ncols()], entries }
    }

    pub fn to_matrix(&self) -> Result<SparseMat> {
        if self.schema != MATRIX_SCHEMA {
            return Err(Error::Parse(format!("unsupported matrix schema {}", self.schema)));
        }
        let [r, c] = self.dim;
        let mut prev: Option<(usize, usize)> = None;
        let mut trip = Vec::with_capacity(self.entries.len());
        for (i, j, re, im) in &self.entries {
            if *i >= r || *j >= c {
                return Err(Error::Parse(format!("entry ({i}, {j}) outside {r}x{c}")));
            }
            if prev.is_some_and(|p| p >= (*i, *j)) {
                return Err(Error::Parse(format!("entry ({i}, {j}) is out of row-major order")));
            }
            prev = Some((*i, *j));
            let v = Scalar::new(parse_rational(re)?, parse_rational(im)?);
            if v.is_zero() {
                return Err(Error::Parse(format!("explicit zero at ({i}, {j})")));
            }
            trip.push((*i, *j, v));
        }
        Ok(SparseMat::from_triplets(r, c, trip))
    }
}

/// Canonical compact JSON; identical matrices give identical bytes.
pub fn emit_matrix(m: &SparseMat) -> String {
    serde_json::to_string(&MatrixDocument::from_matrix(m)).expect("plain data serializes")
}

pub fn parse_matrix(text: &str) -> Result<SparseMat> {
    let doc: MatrixDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.to_matrix()
}
