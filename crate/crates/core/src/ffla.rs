//! Dense exact linear algebra over the prime field GF(p).
//!
//! Residues are stored one per byte, so the modulus must be below 256.
//! Pivoting always takes the first nonzero entry in column order, which
//! makes every echelon form, kernel basis and solution reproducible.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Prime;
use crate::error::{Error, Result};

/// A prime modulus small enough for byte-sized residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Modulus(u8);

impl Modulus {
    pub fn new(p: Prime) -> Result<Self> {
        u8::try_from(p.get())
            .map(Modulus)
            .map_err(|_| Error::ModulusTooLarge(p.get()))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.0 as i64) as u8
    }

    #[inline]
    pub fn neg(self, x: u8) -> u8 {
        if x == 0 {
            0
        } else {
            self.0 - x
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.0 as u32) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.0 as u32) as u8
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a != 0);
        // a^(p-2)
        let p = self.0 as u32;
        let (mut base, mut exp, mut acc) = (a as u32 % p, p - 2, 1u32);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u8
    }
}

impl TryFrom<u32> for Modulus {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Modulus::new(Prime::new(p)?)
    }
}

impl From<Modulus> for u32 {
    fn from(m: Modulus) -> u32 {
        m.0 as u32
    }
}

#[derive(Deserialize)]
struct RawMatrix {
    p: Modulus,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct FpMatrix {
    p: Modulus,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl TryFrom<RawMatrix> for FpMatrix {
    type Error = String;
    fn try_from(raw: RawMatrix) -> std::result::Result<Self, String> {
        if raw.data.len() != raw.rows * raw.cols {
            return Err(format!(
                "matrix data has {} entries, expected {}x{}",
                raw.data.len(),
                raw.rows,
                raw.cols
            ));
        }
        if raw.data.iter().any(|&x| x as u32 >= raw.p.get()) {
            return Err("matrix entry not reduced".into());
        }
        Ok(FpMatrix { p: raw.p, rows: raw.rows, cols: raw.cols, data: raw.data })
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix over GF({}) {}x{}", self.p.get(), self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(p: Modulus, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: Modulus, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for k in 0..n {
            m.data[k * n + k] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(p: Modulus, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(p, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Dimension(format!("ragged row {r}")));
            }
            for (c, &x) in row.iter().enumerate() {
                m.data[r * cols + c] = p.reduce(x);
            }
        }
        Ok(m)
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(p: Modulus, rows: usize, columns: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(p, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, &x) in col.iter().enumerate() {
                m.data[r * m.cols + c] = x;
            }
        }
        m
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.p
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!((v as u32) < self.p.get());
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.cols != other.rows || self.p != other.p {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p.get() as u64;
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for (k, &a) in self.row(r).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot += a as u64 * b as u64;
                }
            }
            for (c, &x) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = (x % p) as u8;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} vs {} columns", v.len(), self.cols)));
        }
        let p = self.p.get() as u64;
        Ok((0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % p) as u8
            })
            .collect())
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &FpMatrix) -> Result<FpMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension("hstack row mismatch".into()));
        }
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(self.p, self.rows, cols);
        for r in 0..self.rows {
            out.data[r * cols..r * cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * cols + self.cols..(r + 1) * cols].copy_from_slice(other.row(r));
        }
        Ok(out)
    }

    pub fn select_rows(&self, rows: &[usize]) -> FpMatrix {
        let mut out = Self::zeros(self.p, rows.len(), self.cols);
        for (k, &r) in rows.iter().enumerate() {
            out.data[k * self.cols..(k + 1) * self.cols].copy_from_slice(self.row(r));
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> FpMatrix {
        let mut out = Self::zeros(self.p, self.rows, cols.len());
        for r in 0..self.rows {
            for (k, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + k] = self.get(r, c);
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols, p) = (self.rows, self.cols, self.p);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(k) = (r..rows).find(|&k| self.data[k * cols + c] != 0) else {
                continue;
            };
            if k != r {
                for t in 0..cols {
                    self.data.swap(k * cols + t, r * cols + t);
                }
            }
            let inv = p.inv(self.data[r * cols + c]);
            if inv != 1 {
                for x in &mut self.data[r * cols + c..(r + 1) * cols] {
                    *x = p.mul(*x, inv);
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let pivot_tail = &pivot_row[c..];
            let q = p.get();
            let eliminate = |row: &mut [u8]| {
                let f = row[c];
                if f == 0 {
                    return;
                }
                let g = q - f as u32;
                for (x, &y) in row[c..].iter_mut().zip(pivot_tail) {
                    *x = ((*x as u32 + g * y as u32) % q) as u8;
                }
            };
            before.chunks_exact_mut(cols).for_each(eliminate);
            after.chunks_exact_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`, one basis vector per column.
    pub fn nullspace(&self) -> FpMatrix {
        let (r, pivots) = self.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Self::zeros(p, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, p.neg(r.get(i, f)));
            }
        }
        basis
    }

    /// Coefficients `c` with `B c = v` for `B = self` with independent
    /// columns; `None` when `v` is not in the column span.
    pub fn solve_in_span(&self, v: &[u8]) -> Result<Option<Vec<u8>>> {
        if v.len() != self.rows {
            return Err(Error::Dimension(format!("vector of length {} vs {} rows", v.len(), self.rows)));
        }
        let aug = self.hstack(&FpMatrix::from_columns(self.p, self.rows, &[v.to_vec()]))?;
        let (r, pivots) = aug.rref();
        let independent = pivots.iter().take_while(|&&c| c < self.cols).count();
        if independent < self.cols {
            return Err(Error::DependentColumns);
        }
        if pivots.len() > self.cols {
            return Ok(None);
        }
        Ok(Some((0..self.cols).map(|i| r.get(i, self.cols)).collect()))
    }

    pub fn inverse(&self) -> Result<FpMatrix> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&FpMatrix::identity(self.p, n))?.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] >= n) {
            return Err(Error::DependentColumns);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(r.select_columns(&cols))
    }
}

/// Repeated solves `B c = v` against a fixed full-column-rank `B`.
///
/// Picks `dim` independent rows of `B` once, inverts that square block,
/// and checks every candidate solution against the full system.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    basis: FpMatrix,
    pivot_rows: Vec<usize>,
    block_inverse: FpMatrix,
}

impl SpanSolver {
    pub fn new(basis: FpMatrix) -> Result<Self> {
        let pivot_rows = basis.transpose().rref().1;
        if pivot_rows.len() < basis.cols() {
            return Err(Error::DependentColumns);
        }
        let block_inverse = basis.select_rows(&pivot_rows).inverse()?;
        Ok(SpanSolver { basis, pivot_rows, block_inverse })
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn solve(&self, v: &[u8]) -> Result<Option<Vec<u8>>> {
        if v.len() != self.basis.rows() {
            return Err(Error::Dimension("vector length".into()));
        }
        let restricted: Vec<u8> = self.pivot_rows.iter().map(|&r| v[r]).collect();
        let c = self.block_inverse.mul_vec(&restricted)?;
        if self.basis.mul_vec(&c)? == v {
            Ok(Some(c))
        } else {
            Ok(None)
        }
    }
}
