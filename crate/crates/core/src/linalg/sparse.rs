//! Sparse matrices over [`Scalar`] with canonical row-major storage.
//!
//! Every stored entry is nonzero and each row is sorted by column, so two
//! matrices are equal exactly when their stored representations are equal.

use std::fmt;

use num_rational::BigRational;

use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseMat {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, Scalar)>>,
}

/// Binary and scaling operations exposed as one entry point.
#[derive(Clone, Debug)]
pub enum MatOp {
    Add,
    Mul,
    Scale(Scalar),
    Kron,
    Commutator,
}

pub fn mat_ops(a: &SparseMat, b: &SparseMat, op: MatOp) -> Result<SparseMat> {
    match op {
        MatOp::Add => a.add(b),
        MatOp::Mul => a.mul(b),
        MatOp::Scale(s) => Ok(a.scale(&s)),
        MatOp::Kron => Ok(a.kron(b)),
        MatOp::Commutator => a.commutator(b),
    }
}

impl SparseMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(n, &Scalar::one())
    }

    pub fn diagonal(n: usize, s: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        if !s.is_zero() {
            for (i, row) in m.rows.iter_mut().enumerate() {
                row.push((i, s.clone()));
            }
        }
        m
    }

    /// Matrix unit with a single 1 at `(i, j)`, 0-based.
    pub fn unit(nrows: usize, ncols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        m.rows[i].push((j, Scalar::one()));
        m
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed and
    /// zeros dropped.
    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nrows];
        for (i, j, v) in triplets {
            assert!(i < nrows && j < ncols, "triplet ({i}, {j}) out of bounds");
            rows[i].push((j, v));
        }
        for row in rows.iter_mut() {
            row.sort_by_key(|(j, _)| *j);
            let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(row.len());
            for (j, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lj, lv)) if *lj == j => *lv += &v,
                    _ => merged.push((j, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *row = merged;
        }
        SparseMat { nrows, ncols, rows }
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let trip = rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone())));
        Self::from_triplets(nrows, ncols, trip)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::zero(); self.ncols]; self.nrows];
        for (i, j, v) in self.iter() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.len() == 1 && r[0].0 == i && r[0].1.is_one())
    }

    pub fn row(&self, i: usize) -> &[(usize, Scalar)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |(c, _)| *c).ok().map(|k| &row[k].1)
    }

    /// Row-major iteration over stored entries.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    fn check_same_shape(&self, other: &SparseMat, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch { op, lhs: self.shape(), rhs: other.shape() });
        }
        Ok(())
    }

    fn combine(&self, other: &SparseMat, subtract: bool) -> SparseMat {
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut p, mut q) = (0, 0);
                while p < a.len() || q < b.len() {
                    let ca = a.get(p).map_or(usize::MAX, |e| e.0);
                    let cb = b.get(q).map_or(usize::MAX, |e| e.0);
                    if ca < cb {
                        out.push(a[p].clone());
                        p += 1;
                    } else if cb < ca {
                        let v = if subtract { -&b[q].1 } else { b[q].1.clone() };
                        out.push((cb, v));
                        q += 1;
                    } else {
                        let v = if subtract { &a[p].1 - &b[q].1 } else { &a[p].1 + &b[q].1 };
                        if !v.is_zero() {
                            out.push((ca, v));
                        }
                        p += 1;
                        q += 1;
                    }
                }
                out
            })
            .collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn add(&self, other: &SparseMat) -> Result<SparseMat> {
        self.check_same_shape(other, "add")?;
        Ok(self.combine(other, false))
    }

    pub fn sub(&self, other: &SparseMat) -> Result<SparseMat> {
        self.check_same_shape(other, "sub")?;
        Ok(self.combine(other, true))
    }

    pub fn neg(&self) -> SparseMat {
        self.map(|v| -v)
    }

    pub fn scale(&self, s: &Scalar) -> SparseMat {
        if s.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        self.map(|v| v * s)
    }

    pub fn scale_rational(&self, r: &BigRational) -> SparseMat {
        self.scale(&Scalar::real(r.clone()))
    }

    fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> SparseMat {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, f(v))).collect())
            .collect();
        SparseMat { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn mul(&self, other: &SparseMat) -> Result<SparseMat> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch { op: "mul", lhs: self.shape(), rhs: other.shape() });
        }
        let mut acc: Vec<Option<Scalar>> = vec![None; other.ncols];
        let mut touched: Vec<usize> = Vec::new();
        let mut rows = Vec::with_capacity(self.nrows);
        for arow in &self.rows {
            for (k, a) in arow {
                for (j, b) in &other.rows[*k] {
                    let prod = a * b;
                    match &mut acc[*j] {
                        Some(v) => *v += &prod,
                        slot @ None => {
                            *slot = Some(prod);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for j in touched.drain(..) {
                if let Some(v) = acc[j].take() {
                    if !v.is_zero() {
                        out.push((j, v));
                    }
                }
            }
            rows.push(out);
        }
        Ok(SparseMat { nrows: self.nrows, ncols: other.ncols, rows })
    }

    /// Product of a nonempty list, left to right.
    pub fn product<'a>(mats: impl IntoIterator<Item = &'a SparseMat>) -> Result<SparseMat> {
        let mut it = mats.into_iter();
        let first = it.next().ok_or_else(|| Error::Config("empty product".into()))?.clone();
        it.try_fold(first, |acc, m| acc.mul(m))
    }

    pub fn commutator(&self, other: &SparseMat) -> Result<SparseMat> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Kronecker product; block `(i, j)` of the result is `self[i, j] * other`.
    pub fn kron(&self, other: &SparseMat) -> SparseMat {
        let nrows = self.nrows * other.nrows;
        let ncols = self.ncols * other.ncols;
        let mut rows = Vec::with_capacity(nrows);
        for arow in &self.rows {
            for brow in &other.rows {
                let mut out = Vec::with_capacity(arow.len() * brow.len());
                for (ja, a) in arow {
                    for (jb, b) in brow {
                        out.push((ja * other.ncols + jb, a * b));
                    }
                }
                rows.push(out);
            }
        }
        SparseMat { nrows, ncols, rows }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.ncols];
        for (i, j, v) in self.iter() {
            rows[j].push((i, v.clone()));
        }
        SparseMat { nrows: self.ncols, ncols: self.nrows, rows }
    }

    pub fn trace(&self) -> Scalar {
        let mut t = Scalar::zero();
        for i in 0..self.nrows.min(self.ncols) {
            if let Some(v) = self.get(i, i) {
                t += v;
            }
        }
        t
    }

    /// `tr(self · other)` without forming the product.
    pub fn trace_product(&self, other: &SparseMat) -> Result<Scalar> {
        if self.ncols != other.nrows || self.nrows != other.ncols {
            return Err(Error::DimensionMismatch { op: "trace_product", lhs: self.shape(), rhs: other.shape() });
        }
        let mut t = Scalar::zero();
        for (i, k, a) in self.iter() {
            if let Some(b) = other.get(k, i) {
                t += &(a * b);
            }
        }
        Ok(t)
    }

    /// Entry count plus the first nonzero entry; `"0"` for the zero matrix.
    pub fn residual_summary(&self) -> String {
        match self.iter().next() {
            None => "0".to_string(),
            Some((i, j, v)) => format!("{} nonzero entries, first at ({i}, {j}) = {v}", self.nnz()),
        }
    }

    /// Inverse of a unipotent matrix `1 + N` via the terminating Neumann
    /// series, falling back to Gauss–Jordan elimination otherwise.
    pub fn inverse(&self) -> Result<SparseMat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { op: "inverse", lhs: self.shape(), rhs: self.shape() });
        }
        let n = self.nrows;
        let nil = self.sub(&Self::identity(n))?;
        if let Ok(inv) = super::series::neumann_inverse(&nil) {
            return Ok(inv);
        }
        super::elim::gauss_jordan_inverse(self)
    }
}

impl fmt::Debug for SparseMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMat {}x{} {{", self.nrows, self.ncols)?;
        for (i, j, v) in self.iter() {
            write!(f, " ({i},{j}):{v}")?;
        }
        write!(f, " }}")
    }
}
