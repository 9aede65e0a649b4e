//! Root data and the defining representation of `so(M)`.
//!
//! Generators use the matrix realization
//! `H_i = ½(E_{i,i} - E_{M+1-i,M+1-i})`, `A_{i,j} = E_{i,j} - E_{M+1-j,M+1-i}`,
//! which preserves the antidiagonal bilinear form. Since
//! `A_{i,j} = -A_{M+1-j,M+1-i}` and `A_{i,M+1-i} = 0`, the canonical
//! generator table keeps only `A_{i,j}` with `i ≠ j` and `i + j ≤ M`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Scalar, SparseMat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    /// so(2N+1)
    B,
    /// so(2N)
    D,
}

impl Series {
    pub fn dim(self, rank: usize) -> usize {
        match self {
            Series::B => 2 * rank + 1,
            Series::D => 2 * rank,
        }
    }

    /// Series and rank for a given matrix size `M`.
    pub fn from_dim(m: usize) -> (Series, usize) {
        if m % 2 == 1 {
            (Series::B, m / 2)
        } else {
            (Series::D, m / 2)
        }
    }
}

/// A weight `Σ c_i e_i`, stored by its integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn e(rank: usize, i: usize, sign: i32) -> Root {
        let mut v = vec![0; rank];
        v[i - 1] = sign;
        Root(v)
    }

    pub fn ee(rank: usize, i: usize, si: i32, j: usize, sj: i32) -> Root {
        let mut v = vec![0; rank];
        v[i - 1] += si;
        v[j - 1] += sj;
        Root(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// First nonzero coefficient is positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|c| **c != 0).is_some_and(|c| *c > 0)
    }

    pub fn is_short(&self) -> bool {
        self.0.iter().map(|c| c.unsigned_abs()).sum::<u32>() == 1
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let sign = if *c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}e{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Roots of `so(M)` for series B or D of the given rank (rank ≥ 1).
pub fn root_system(series: Series, rank: usize) -> Vec<Root> {
    let mut roots = Vec::new();
    for i in 1..=rank {
        for j in i + 1..=rank {
            for si in [1, -1] {
                for sj in [1, -1] {
                    roots.push(Root::ee(rank, i, si, j, sj));
                }
            }
        }
        if series == Series::B {
            roots.push(Root::e(rank, i, 1));
            roots.push(Root::e(rank, i, -1));
        }
    }
    roots.sort();
    roots
}

pub fn positive_roots(series: Series, rank: usize) -> Vec<Root> {
    root_system(series, rank).into_iter().filter(Root::is_positive).collect()
}

/// Canonical generators of the defining representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    /// Cartan generator `H_i`, 1-based.
    H(usize),
    /// `A_{i,j}`, 1-based, canonical (`i ≠ j`, `i + j ≤ M`).
    A(usize, usize),
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::H(i) => write!(f, "H{i}"),
            Gen::A(i, j) => write!(f, "A[{i},{j}]"),
        }
    }
}

/// Matrix unit `E_{i,j}` (1-based) of size `m`.
pub fn matrix_unit(m: usize, i: usize, j: usize) -> SparseMat {
    SparseMat::unit(m, m, i - 1, j - 1)
}

pub struct AlgebraModel {
    series: Series,
    rank: usize,
    dim: usize,
    roots: Vec<Root>,
    positive_roots: Vec<Root>,
    gens: BTreeMap<Gen, SparseMat>,
    borel_basis: Vec<Gen>,
    /// `E_λ = -A_{..}` for every root λ.
    relabel: BTreeMap<Root, Gen>,
    /// `[x, y]` expanded over the generator table, for all table pairs.
    structure: BTreeMap<(Gen, Gen), Vec<(Gen, Scalar)>>,
}

impl fmt::Debug for AlgebraModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraModel(so({}))", self.dim)
    }
}

pub fn build_algebra(series: Series, rank: usize) -> Result<AlgebraModel> {
    AlgebraModel::new(series, rank)
}

impl AlgebraModel {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::RankTooSmall(rank));
        }
        let m = series.dim(rank);
        let roots = root_system(series, rank);
        let positive_roots: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();

        let mut gens = BTreeMap::new();
        for i in 1..=rank {
            let h = matrix_unit(m, i, i).sub(&matrix_unit(m, m + 1 - i, m + 1 - i))?;
            gens.insert(Gen::H(i), h.scale(&Scalar::frac(1, 2)));
        }
        for i in 1..=m {
            for j in 1..=m {
                if i != j && i + j <= m {
                    gens.insert(Gen::A(i, j), a_matrix(m, i, j));
                }
            }
        }

        let mut borel_basis: Vec<Gen> = (1..=rank).map(Gen::H).collect();
        for i in 1..=m {
            for j in i + 1..=m {
                if i + j <= m {
                    borel_basis.push(Gen::A(i, j));
                }
            }
        }

        let mut relabel = BTreeMap::new();
        for r in &roots {
            relabel.insert(r.clone(), relabel_root(series, rank, r));
        }

        let mut model = AlgebraModel {
            series,
            rank,
            dim: m,
            roots,
            positive_roots,
            gens,
            borel_basis,
            relabel,
            structure: BTreeMap::new(),
        };
        let mut structure = BTreeMap::new();
        for (ga, ma) in &model.gens {
            for (gb, mb) in &model.gens {
                let c = ma.commutator(mb)?;
                let coords = model
                    .coordinates(&c)
                    .ok_or_else(|| Error::Config(format!("[{ga}, {gb}] does not close on so({m})")))?;
                structure.insert((*ga, *gb), coords);
            }
        }
        model.structure = structure;
        Ok(model)
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Matrix size `M`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `dim so(M) = M(M-1)/2`.
    pub fn algebra_dim(&self) -> usize {
        self.dim * (self.dim - 1) / 2
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.roots.binary_search(r).is_ok()
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Gen, &SparseMat)> {
        self.gens.iter()
    }

    pub fn borel_basis(&self) -> &[Gen] {
        &self.borel_basis
    }

    pub fn matrix(&self, g: &Gen) -> Result<&SparseMat> {
        self.gens.get(g).ok_or_else(|| Error::UnknownGenerator(g.to_string()))
    }

    /// `A_{i,j}` rewritten over the generator table as `Some((coefficient, gen))`, or
    /// `None` when the element vanishes.
    pub fn canonical_a(&self, i: usize, j: usize) -> Result<Option<(i64, Gen)>> {
        let m = self.dim;
        if i == 0 || j == 0 || i > m || j > m {
            return Err(Error::UnknownGenerator(format!("A[{i},{j}]")));
        }
        if i + j == m + 1 {
            return Ok(None);
        }
        if i == j {
            // A_{i,i} = 2H_i
            return Ok(Some(if i <= self.rank { (2, Gen::H(i)) } else { (-2, Gen::H(m + 1 - i)) }));
        }
        if i + j <= m {
            Ok(Some((1, Gen::A(i, j))))
        } else {
            Ok(Some((-1, Gen::A(m + 1 - j, m + 1 - i))))
        }
    }

    /// Generator with `E_λ = -gen`.
    pub fn root_generator(&self, r: &Root) -> Result<Gen> {
        self.relabel
            .get(r)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(format!("E_({r})")))
    }

    /// ρ(E_λ).
    pub fn root_vector(&self, r: &Root) -> Result<SparseMat> {
        Ok(self.matrix(&self.root_generator(r)?)?.neg())
    }

    /// Expansion of an so(M) matrix over the generator table, or `None` if
    /// the matrix is not in the image of the defining representation.
    pub fn coordinates(&self, x: &SparseMat) -> Option<Vec<(Gen, Scalar)>> {
        let m = self.dim;
        if x.shape() != (m, m) {
            return None;
        }
        let mut coords: BTreeMap<Gen, Scalar> = BTreeMap::new();
        for (r, c, v) in x.iter() {
            let (i, j) = (r + 1, c + 1);
            if i == j {
                if i <= self.rank {
                    coords.insert(Gen::H(i), v + v);
                }
            } else if i + j <= m {
                coords.insert(Gen::A(i, j), v.clone());
            }
        }
        let coords: Vec<(Gen, Scalar)> = coords.into_iter().collect();
        let mut back = SparseMat::zeros(m, m);
        for (g, c) in &coords {
            back = back.add(&self.gens[g].scale(c)).ok()?;
        }
        (back == *x).then_some(coords)
    }

    /// Cached `[a, b]` expanded over the generator table.
    pub fn bracket(&self, a: &Gen, b: &Gen) -> Result<&[(Gen, Scalar)]> {
        self.structure
            .get(&(*a, *b))
            .map(Vec::as_slice)
            .ok_or_else(|| Error::UnknownGenerator(format!("[{a}, {b}]")))
    }

    /// Eigenvalue of `ad H_i` on `E_λ`: `λ_i / 2`.
    pub fn cartan_eigenvalue(&self, i: usize, r: &Root) -> Scalar {
        Scalar::frac(r.0[i - 1] as i64, 2)
    }
}

/// `A_{i,j} = E_{i,j} - E_{M+1-j,M+1-i}`; zero when `i + j = M + 1`.
pub fn a_matrix(m: usize, i: usize, j: usize) -> SparseMat {
    matrix_unit(m, i, j)
        .sub(&matrix_unit(m, m + 1 - j, m + 1 - i))
        .expect("same shape")
}

/// Renumbering `A_{i,j} ≡ -E_{i-j}`, `A_{i,M+1-j} ≡ -E_{i+j}`,
/// `A_{i,N+1} ≡ -E_i`; negative roots use the transposed generator.
fn relabel_root(series: Series, rank: usize, r: &Root) -> Gen {
    let m = series.dim(rank);
    let support: Vec<(usize, i32)> = r
        .0
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i + 1, *c))
        .collect();
    let (i, j) = match support.as_slice() {
        [(k, _)] => (*k, rank + 1),
        [(i, _), (j, sj)] if *sj < 0 => (*i, *j),
        [(i, _), (j, _)] => (*i, m + 1 - *j),
        _ => unreachable!("not a root of so(M)"),
    };
    if r.is_positive() {
        Gen::A(i, j)
    } else {
        let neg = relabel_root(series, rank, &r.neg());
        match neg {
            Gen::A(i, j) => Gen::A(j, i),
            Gen::H(_) => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so5_roots() {
        let m = build_algebra(Series::B, 2).unwrap();
        assert_eq!(m.dim(), 5);
        let mut pos: Vec<String> = m.positive_roots().iter().map(|r| r.to_string()).collect();
        pos.sort();
        assert_eq!(pos, vec!["e1", "e1+e2", "e1-e2", "e2"]);
        assert_eq!(m.algebra_dim(), 10);
        assert_eq!(m.generators().count(), 10);
    }

    #[test]
    fn so8_counts() {
        let m = build_algebra(Series::D, 4).unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(m.positive_roots().len(), 12);
        assert_eq!(m.borel_basis().len(), 16);
    }

    #[test]
    fn positive_root_counts() {
        for n in 2..7 {
            assert_eq!(positive_roots(Series::B, n).len(), n * n);
            assert_eq!(positive_roots(Series::D, n).len(), n * n - n);
        }
    }

    #[test]
    fn cartan_h1_in_so5() {
        let m = build_algebra(Series::B, 2).unwrap();
        let expected = matrix_unit(5, 1, 1)
            .sub(&matrix_unit(5, 5, 5))
            .unwrap()
            .scale(&Scalar::frac(1, 2));
        assert_eq!(m.matrix(&Gen::H(1)).unwrap(), &expected);
    }

    #[test]
    fn rank_one_is_rejected() {
        assert_eq!(build_algebra(Series::B, 1).unwrap_err(), Error::RankTooSmall(1));
    }

    #[test]
    fn relabeling_in_so5() {
        let m = build_algebra(Series::B, 2).unwrap();
        let r = |v: Vec<i32>| Root(v);
        assert_eq!(m.root_generator(&r(vec![1, -1])).unwrap(), Gen::A(1, 2));
        assert_eq!(m.root_generator(&r(vec![1, 1])).unwrap(), Gen::A(1, 4));
        assert_eq!(m.root_generator(&r(vec![1, 0])).unwrap(), Gen::A(1, 3));
        assert_eq!(m.root_generator(&r(vec![0, 1])).unwrap(), Gen::A(2, 3));
        assert_eq!(m.root_generator(&r(vec![-1, 1])).unwrap(), Gen::A(2, 1));
        assert_eq!(m.root_generator(&r(vec![-1, -1])).unwrap(), Gen::A(4, 1));
    }

    #[test]
    fn root_vectors_are_eigenvectors() {
        for (s, n) in [(Series::B, 2), (Series::D, 3), (Series::B, 3), (Series::D, 4)] {
            let m = build_algebra(s, n).unwrap();
            for r in m.roots() {
                let e = m.root_vector(r).unwrap();
                for i in 1..=n {
                    let h = m.matrix(&Gen::H(i)).unwrap();
                    let lhs = h.commutator(&e).unwrap();
                    assert_eq!(lhs, e.scale(&m.cartan_eigenvalue(i, r)), "root {r}, H{i}");
                }
            }
        }
    }

    #[test]
    fn canonical_a_rewrites() {
        let m = build_algebra(Series::B, 2).unwrap();
        assert_eq!(m.canonical_a(2, 5).unwrap(), Some((-1, Gen::A(1, 4))));
        assert_eq!(m.canonical_a(1, 5).unwrap(), None);
        assert_eq!(m.canonical_a(3, 3).unwrap(), None);
        assert_eq!(m.canonical_a(4, 4).unwrap(), Some((-2, Gen::H(2))));
        assert_eq!(m.canonical_a(2, 3).unwrap(), Some((1, Gen::A(2, 3))));
        for i in 1..=5 {
            for j in 1..=5 {
                let direct = a_matrix(5, i, j);
                let via = match m.canonical_a(i, j).unwrap() {
                    None => SparseMat::zeros(5, 5),
                    Some((s, g)) => m.matrix(&g).unwrap().scale(&Scalar::int(s)),
                };
                assert_eq!(direct, via);
            }
        }
    }

    #[test]
    fn brackets_close() {
        let m = build_algebra(Series::D, 3).unwrap();
        let gens: Vec<Gen> = m.generators().map(|(g, _)| *g).collect();
        for a in &gens {
            for b in &gens {
                let coords = m.bracket(a, b).unwrap();
                let mut sum = SparseMat::zeros(6, 6);
                for (g, c) in coords {
                    sum = sum.add(&m.matrix(g).unwrap().scale(c)).unwrap();
                }
                let direct = m.matrix(a).unwrap().commutator(m.matrix(b).unwrap()).unwrap();
                assert_eq!(sum, direct);
            }
        }
    }

    #[test]
    fn non_algebra_matrix_has_no_coordinates() {
        let m = build_algebra(Series::B, 2).unwrap();
        assert!(m.coordinates(&SparseMat::identity(5)).is_none());
        assert!(m.coordinates(&matrix_unit(5, 1, 2)).is_none());
    }
}
