//! Exact linear algebra over a [`Gf`]: row reduction, rank, canonical
//! subspaces and the rank and injection metrics.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::galois::Gf;

/// Default bound on the number of codewords compared pairwise.
pub const DEFAULT_VERIFY_CAP: u64 = 5000;

/// Dense row-major matrix with entries in GF(q).
#[derive(Clone)]
pub struct Matrix {
    field: Arc<Gf>,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(field: Arc<Gf>, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(&digit) = entries.iter().find(|&&e| !field.contains(e)) {
            return Err(Error::InvalidDigit {
                digit,
                order: field.order(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(field: Arc<Gf>, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::new(field, rows.len(), cols, rows.concat())
    }

    pub fn zeros(field: Arc<Gf>, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Arc<Gf>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(Arc::clone(&self.field), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if *self.field != *other.field {
            return Err(Error::ShapeMismatch(format!(
                "entries over {:?} and {:?}",
                self.field, other.field
            )));
        }
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Gf, u32, u32) -> u32) -> Result<Self> {
        self.check_same_shape(other)?;
        let f = &*self.field;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| op(f, a, b))
            .collect();
        Ok(Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Gf::add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Gf::sub)
    }

    pub fn scale(&self, s: u32) -> Self {
        let f = &*self.field;
        Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| f.mul(s, e)).collect(),
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if *self.field != *other.field || self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot place {}x{} beside {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(other.row(r));
        }
        Ok(Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows,
            cols,
            entries,
        })
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if *self.field != *other.field || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {}x{} on {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&other.entries);
        Ok(Matrix {
            field: Arc::clone(&self.field),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Gauss-Jordan elimination in place; returns the pivot columns.
    fn reduce(&mut self) -> Vec<usize> {
        let f = Arc::clone(&self.field);
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(src) = (lead..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if src != lead {
                for j in 0..cols {
                    self.entries.swap(src * cols + j, lead * cols + j);
                }
            }
            let inv = f.inv_nonzero(self.get(lead, c));
            if inv != 1 {
                for j in c..cols {
                    let v = f.mul(inv, self.get(lead, j));
                    self.set(lead, j, v);
                }
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = f.sub(self.get(r, j), f.mul(factor, self.get(lead, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    /// Reduced row echelon form and rank. Zero rows are kept at the bottom.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = m.reduce().len();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    pub fn is_rref(&self) -> bool {
        let (r, _) = self.rref();
        r == *self
    }

    /// Canonical representation of the row space.
    pub fn row_space(&self) -> Subspace {
        let mut m = self.clone();
        let rank = m.reduce().len();
        m.entries.truncate(rank * m.cols);
        m.rows = rank;
        Subspace { basis: m }
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
            && *self.field == *other.field
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.rows.hash(state);
        self.cols.hash(state);
        self.entries.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.field, self.to_rows())
    }
}

/// `rank(a - b)`.
pub fn rank_distance(a: &Matrix, b: &Matrix) -> Result<usize> {
    Ok(a.checked_sub(b)?.rank())
}

/// A subspace of GF(q)^n held by its reduced row echelon basis, so equality
/// of subspaces is equality of bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Wraps a basis that is already in reduced row echelon form with no
    /// zero rows.
    pub(crate) fn from_rref_unchecked(basis: Matrix) -> Self {
        debug_assert!(basis.is_rref() && basis.rank() == basis.rows());
        Subspace { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.basis.field
    }

    /// Column of the leading 1 in each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                self.basis
                    .row(r)
                    .iter()
                    .position(|&e| e != 0)
                    .expect("rref basis has no zero rows")
            })
            .collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::AmbientMismatch(
                self.ambient_dim(),
                other.ambient_dim(),
            ));
        }
        if *self.basis.field != *other.basis.field {
            return Err(Error::ShapeMismatch(format!(
                "subspaces over {:?} and {:?}",
                self.basis.field, other.basis.field
            )));
        }
        Ok(())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}>", self.basis)
    }
}

/// `dim U + dim V - dim(U + V)`.
pub fn intersection_dim(u: &Subspace, v: &Subspace) -> Result<usize> {
    u.check_compatible(v)?;
    let sum = u.basis.vstack(&v.basis)?.rank();
    Ok(u.dim() + v.dim() - sum)
}

/// `k - dim(U ∩ V)` for two `k`-dimensional subspaces.
pub fn injection_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    u.check_compatible(v)?;
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch(u.dim(), v.dim()));
    }
    Ok(u.dim() - intersection_dim(u, v)?)
}

/// Minimum injection distance over all pairs of distinct codewords.
/// Repeated codewords are ignored.
pub fn min_injection_distance(codewords: &[Subspace], cap: u64) -> Result<usize> {
    if codewords.len() as u64 > cap {
        return Err(Error::cap_exceeded(codewords.len() as u64, cap));
    }
    let Some(first) = codewords.first() else {
        return Err(Error::TooFewCodewords);
    };
    for c in codewords {
        first.check_compatible(c)?;
        if c.dim() != first.dim() {
            return Err(Error::DimensionMismatch(first.dim(), c.dim()));
        }
    }
    let k = first.dim();
    let best = (0..codewords.len())
        .into_par_iter()
        .filter_map(|i| {
            let u = &codewords[i];
            codewords[i + 1..]
                .iter()
                .filter(|v| *v != u)
                .map(|v| {
                    let sum = u.basis.vstack(&v.basis).expect("checked").rank();
                    sum - k
                })
                .min()
        })
        .min();
    best.ok_or(Error::TooFewCodewords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Arc<Gf> {
        Arc::new(Gf::with_order(q).unwrap())
    }

    fn mat(q: u64, rows: &[&[u32]]) -> Matrix {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::from_rows(gf(q), &rows).unwrap()
    }

    fn span(q: u64, rows: &[&[u32]]) -> Subspace {
        mat(q, rows).row_space()
    }

    #[test]
    fn rref_examples() {
        let z = Matrix::zeros(gf(2), 2, 3);
        assert_eq!(z.rref(), (z.clone(), 0));
        let i3 = Matrix::identity(gf(5), 3);
        assert_eq!(i3.rref(), (i3.clone(), 3));
        let m = mat(2, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.rref(), (mat(2, &[&[1, 1], &[0, 0]]), 1));
    }

    #[test]
    fn rref_scales_and_clears_above() {
        let m = mat(3, &[&[2, 1, 0], &[1, 1, 1]]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r, mat(3, &[&[1, 0, 2], &[0, 1, 2]]));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(gf(2), 3, 0).rank(), 0);
        assert_eq!(Matrix::zeros(gf(2), 0, 4).rank(), 0);
        assert_eq!(Matrix::identity(gf(3), 4).rank(), 4);
        assert_eq!(mat(3, &[&[1, 2], &[2, 1]]).rank(), 1);
    }

    #[test]
    fn rank_distance_examples() {
        let a = mat(2, &[&[1, 0], &[0, 0]]);
        let b = mat(2, &[&[0, 0], &[0, 1]]);
        assert_eq!(rank_distance(&a, &a).unwrap(), 0);
        assert_eq!(rank_distance(&a, &b).unwrap(), 2);
        let i2 = Matrix::identity(gf(2), 2);
        assert_eq!(rank_distance(&i2, &Matrix::zeros(gf(2), 2, 2)).unwrap(), 2);
        let c = Matrix::zeros(gf(2), 2, 3);
        assert!(matches!(
            rank_distance(&a, &c),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn row_space_examples() {
        let u = span(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert_eq!(u.dim(), 2);
        assert_eq!(u.pivots(), vec![0, 1]);
        assert_eq!(span(2, &[&[1, 1], &[1, 1]]).dim(), 1);
        let z = Matrix::zeros(gf(2), 2, 4).row_space();
        assert_eq!((z.dim(), z.ambient_dim()), (0, 4));
    }

    #[test]
    fn distance_examples() {
        let e12 = span(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let e34 = span(2, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let e13 = span(2, &[&[1, 0, 0, 0], &[0, 0, 1, 0]]);
        assert_eq!(intersection_dim(&e12, &e12).unwrap(), 2);
        assert_eq!(intersection_dim(&e12, &e34).unwrap(), 0);
        assert_eq!(intersection_dim(&e12, &e13).unwrap(), 1);
        assert_eq!(injection_distance(&e12, &e12).unwrap(), 0);
        assert_eq!(injection_distance(&e12, &e34).unwrap(), 2);
        assert_eq!(injection_distance(&e12, &e13).unwrap(), 1);
        assert_eq!(
            min_injection_distance(&[e12.clone(), e34.clone()], DEFAULT_VERIFY_CAP).unwrap(),
            2
        );
    }

    #[test]
    fn distance_errors() {
        let a = span(2, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = span(2, &[&[1, 0, 0, 0]]);
        let c = span(2, &[&[1, 0, 0]]);
        assert_eq!(
            intersection_dim(&a, &b).unwrap_err(),
            Error::AmbientMismatch(3, 4)
        );
        assert_eq!(
            injection_distance(&a, &c).unwrap_err(),
            Error::DimensionMismatch(2, 1)
        );
        assert_eq!(
            min_injection_distance(std::slice::from_ref(&a), 10).unwrap_err(),
            Error::TooFewCodewords
        );
        assert_eq!(
            min_injection_distance(&[a.clone(), a.clone()], 10).unwrap_err(),
            Error::TooFewCodewords
        );
        let many = vec![a; 3];
        assert!(matches!(
            min_injection_distance(&many, 2),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn duplicates_are_ignored_in_minimum() {
        let e12 = span(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let e34 = span(2, &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let words = [e12.clone(), e34, e12];
        assert_eq!(min_injection_distance(&words, 10).unwrap(), 2);
    }

    #[test]
    fn stacking() {
        let a = mat(2, &[&[1, 0]]);
        let b = mat(2, &[&[0, 1]]);
        assert_eq!(a.hstack(&b).unwrap(), mat(2, &[&[1, 0, 0, 1]]));
        assert_eq!(a.vstack(&b).unwrap(), Matrix::identity(gf(2), 2));
        assert!(a.hstack(&mat(2, &[&[1], &[1]])).is_err());
    }
}
