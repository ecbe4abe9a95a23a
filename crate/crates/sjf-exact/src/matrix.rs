//! Dense rational matrices.

use crate::error::ExactError;
use crate::rational::{int, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

/// A row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Builds from integer entries in row-major order; panics on a length mismatch.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        RatMatrix { rows, cols, data: entries.iter().map(|&x| int(x)).collect() }
    }

    /// Builds from rows of rationals; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn scalar(x: Rational) -> Self {
        RatMatrix { rows: 1, cols: 1, data: vec![x] }
    }

    pub fn diag(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Rational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map(|x| x * s)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    /// Least common multiple of the entry denominators.
    pub fn denominator(&self) -> BigInt {
        self.data.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    fn check_same_shape(&self, other: &Self, op: &str) -> Result<(), ExactError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(ExactError::DimensionMismatch(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_shape(other, "add")?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same_shape(other, "sub")?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::DimensionMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rational::zero();
                for t in 0..self.cols {
                    let a = self.get(i, t);
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(t, j);
                    if !b.is_zero() {
                        acc += a * b;
                    }
                }
                data.push(acc);
            }
        }
        Ok(RatMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Rational, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare);
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                let f = &a[r * n + col] / &p;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &f * &a[col * n + j];
                    a[r * n + j] -= delta;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare);
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut b = Self::identity(n).data;
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r * n + col].is_zero()).ok_or(ExactError::Singular)?;
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    b.swap(piv * n + j, col * n + j);
                }
            }
            let p = a[col * n + col].recip();
            for j in 0..n {
                a[col * n + j] *= &p;
                b[col * n + j] *= &p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a[r * n + col].clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let da = &f * &a[col * n + j];
                    a[r * n + j] -= da;
                    let db = &f * &b[col * n + j];
                    b[r * n + j] -= db;
                }
            }
        }
        Ok(RatMatrix { rows: n, cols: n, data: b })
    }

    /// The bracket `S[x] = ᵗx S x`.
    pub fn bracket(&self, x: &Self) -> Result<Self, ExactError> {
        x.transpose().try_mul(self)?.try_mul(x)
    }

    /// The sub-block with top-left corner `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        Self::from_fn(rows, cols, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Assembles a matrix from a grid of blocks with consistent sizes.
    pub fn from_blocks(grid: &[&[&RatMatrix]]) -> Result<Self, ExactError> {
        let heights: Vec<usize> = grid.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        for (bi, row) in grid.iter().enumerate() {
            if row.len() != widths.len() {
                return Err(ExactError::DimensionMismatch("ragged block grid".into()));
            }
            for (bj, b) in row.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(ExactError::DimensionMismatch(format!(
                        "block ({bi},{bj}) is {}x{}",
                        b.rows, b.cols
                    )));
                }
            }
        }
        let rows: usize = heights.iter().sum();
        let cols: usize = widths.iter().sum();
        let mut out = Self::zeros(rows, cols);
        let mut r0 = 0;
        for (bi, row) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(out)
    }

    pub fn hstack(&self, other: &Self) -> Result<Self, ExactError> {
        Self::from_blocks(&[&[self, other]])
    }

    pub fn vstack(&self, other: &Self) -> Result<Self, ExactError> {
        Self::from_blocks(&[&[self], &[other]])
    }

    /// Leading principal minors, in order of size.
    pub fn leading_minors(&self) -> Result<Vec<Rational>, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare);
        }
        (1..=self.rows).map(|k| self.block(0, 0, k, k).det()).collect()
    }

    /// Exact positive-definiteness of a symmetric matrix via leading minors.
    pub fn is_positive_definite(&self) -> bool {
        self.is_symmetric()
            && self.rows > 0
            && self.leading_minors().is_ok_and(|m| m.iter().all(|x| x.is_positive()))
    }

    /// Entries as binary64, row-major.
    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.data.iter().map(crate::rational::to_f64).collect()
    }

    /// Integer entries; `None` if some entry is not integral.
    pub fn to_integer_rows(&self) -> Option<Vec<Vec<BigInt>>> {
        if !self.is_integral() {
            return None;
        }
        Some((0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_integer()).collect()).collect())
    }

    /// Byte encoding used as an exact hash key.
    pub fn encode(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&(self.rows as u32).to_le_bytes());
        out.extend_from_slice(&(self.cols as u32).to_le_bytes());
        for x in &self.data {
            let s = crate::rational::to_pq(x);
            out.extend_from_slice(&(s.len() as u32).to_le_bytes());
            out.extend_from_slice(s.as_bytes());
        }
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_add(rhs).expect("matrix add")
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_sub(rhs).expect("matrix sub")
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_mul(rhs).expect("matrix mul")
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        self.map(|x| -x)
    }
}

/// A symmetric rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymMatrix(RatMatrix);

impl SymMatrix {
    pub fn new(m: RatMatrix) -> Result<Self, ExactError> {
        if !m.is_square() {
            return Err(ExactError::NotSquare);
        }
        if !m.is_symmetric() {
            return Err(ExactError::NotSymmetric);
        }
        Ok(SymMatrix(m))
    }

    pub fn from_i64(dim: usize, entries: &[i64]) -> Result<Self, ExactError> {
        Self::new(RatMatrix::from_i64(dim, dim, entries))
    }

    pub fn scalar(x: Rational) -> Self {
        SymMatrix(RatMatrix::scalar(x))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RatMatrix {
        self.0
    }
}

impl Deref for SymMatrix {
    type Target = RatMatrix;
    fn deref(&self) -> &RatMatrix {
        &self.0
    }
}
