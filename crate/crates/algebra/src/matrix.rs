use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{format_rational, parse_rational, Rational};
use crate::AlgebraError;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Ragged);
        }
        Ok(Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
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

    /// Entry at zero-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Submatrix on the given zero-based row and column lists, in the order given.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::ShapeMismatch);
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        }))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Exact determinant. The 0x0 determinant is 1.
    pub fn det(&self) -> Result<Rational, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::NonSquare { rows: self.rows, cols: self.cols });
        }
        Ok(det_unchecked(self))
    }
}

/// Determinant by clearing row denominators and running fraction-free Bareiss elimination.
fn det_unchecked(m: &Matrix) -> Rational {
    let n = m.rows;
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let l = m.row(i).iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        a.push(m.row(i).iter().map(|r| r.numer() * (&l / r.denom())).collect());
        scale *= l;
    }
    let d = bareiss(&mut a);
    Rational::new(d, scale)
}

/// Fraction-free elimination on a square integer matrix; consumes the matrix contents.
pub fn bareiss(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(format_rational).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<Vec<String>> = Vec::deserialize(d)?;
        let rows = raw
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
