//! Dense square matrices over [`Rational`].

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, WrmError};
use crate::rational::Rational;

/// Immutable `n x n` matrix, row-major, 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Rational>>", into = "Vec<Vec<Rational>>")]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        if n == 0 {
            return Err(WrmError::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(WrmError::Empty);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(WrmError::NotSquare);
        }
        Ok(Matrix { n, entries: rows.into_iter().flatten().collect() })
    }

    /// Convenience for literals in tests and examples.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Result<Self> {
        Matrix::from_fn(n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    /// The all-ones matrix `J`.
    pub fn ones(n: usize) -> Result<Self> {
        Matrix::from_fn(n, |_, _| Rational::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.rows().map(<[Rational]>::to_vec).collect()
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.n != rhs.n {
            return Err(WrmError::DimensionMismatch(self.n, rhs.n));
        }
        let n = self.n;
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            let out = &mut entries[i * n..(i + 1) * n];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (slot, b) in out.iter_mut().zip(rhs.row(k)) {
                    if !b.is_zero() {
                        *slot += &(a * b);
                    }
                }
            }
        }
        Ok(Matrix { n, entries })
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix { n, entries }
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.transpose().is_lower_triangular()
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_lower_triangular() && self.is_upper_triangular()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Constant along every diagonal.
    pub fn is_toeplitz(&self) -> bool {
        (1..self.n).all(|i| (1..self.n).all(|j| self.get(i, j) == self.get(i - 1, j - 1)))
    }

    /// Exact determinant by fraction-free elimination.
    ///
    /// Each row is scaled by the lcm of its denominators to get an integer
    /// matrix; Bareiss elimination keeps every intermediate integral, and the
    /// integer determinant is divided by the product of the row scales.
    pub fn det_bareiss(&self) -> Rational {
        let n = self.n;
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for row in self.rows() {
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            a.push(row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect());
            scale *= lcm;
        }
        let det = bareiss_integer(&mut a);
        Rational::new(det, scale).expect("row scales are positive")
    }

    /// Entries are dense `Rational` strings: `[["1","0"],["-1/2","3"]]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Matrix> {
        serde_json::from_str(s).map_err(|e| WrmError::Parse(e.to_string()))
    }

    /// One row per line, comma separated, trailing newline.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(Rational::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(s: &str) -> Result<Matrix> {
        let rows = s
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(str::parse).collect::<Result<Vec<Rational>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }

    /// A `pmatrix` environment; fractions render as `\frac{p}{q}`.
    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{pmatrix}\n");
        for (i, row) in self.rows().enumerate() {
            let cells: Vec<String> = row.iter().map(latex_rational).collect();
            out.push_str(&cells.join(" & "));
            if i + 1 < self.n {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{pmatrix}");
        out
    }
}

fn latex_rational(q: &Rational) -> String {
    if q.is_integer() {
        return q.to_string();
    }
    let mut s = String::new();
    if q.is_negative() {
        s.push('-');
    }
    let _ = write!(s, "\\frac{{{}}}{{{}}}", q.numer().magnitude(), q.denom());
    s
}

/// Determinant of an integer matrix, consuming it as scratch space.
fn bareiss_integer(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
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
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

impl TryFrom<Vec<Vec<Rational>>> for Matrix {
    type Error = WrmError;
    fn try_from(rows: Vec<Vec<Rational>>) -> Result<Self> {
        Matrix::from_rows(rows)
    }
}

impl From<Matrix> for Vec<Vec<Rational>> {
    fn from(m: Matrix) -> Self {
        m.to_rows()
    }
}

/// Free-function forms matching the operation names used elsewhere.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.mul(b)
}

pub fn mat_transpose(a: &Matrix) -> Matrix {
    a.transpose()
}

pub fn mat_eq(a: &Matrix, b: &Matrix) -> bool {
    a == b
}

pub fn det_bareiss(a: &Matrix) -> Rational {
    a.det_bareiss()
}
