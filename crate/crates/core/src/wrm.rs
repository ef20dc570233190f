//! Weighted recurrence matrices.
//!
//! `P` has first column `alpha`, first row `beta`, and every interior entry
//! obeys `P[i][j] = x P[i][j-1] + y P[i-1][j-1] + z P[i-1][j]`. Only the
//! leading `n x n` block is ever materialized.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::binomial::next_pascal_row;
use crate::error::{Result, WrmError};
use crate::matrix::Matrix;
use crate::rational::{powers, Rational};
use crate::sequences::{BoundaryPair, SequenceSpec};

/// The weights `(x, y, z)` of the recurrence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceParams {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl RecurrenceParams {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        RecurrenceParams { x, y, z }
    }

    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        RecurrenceParams::new(x.into(), y.into(), z.into())
    }

    /// `y + x z`, the weight of the right factor in the Toeplitz factorization.
    pub fn weight(&self) -> Rational {
        &self.y + &self.x * &self.z
    }
}

impl FromStr for RecurrenceParams {
    type Err = WrmError;

    /// `x,y,z`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<Rational> = s.split(',').map(str::parse).collect::<Result<_>>()?;
        match <[Rational; 3]>::try_from(parts) {
            Ok([x, y, z]) => Ok(RecurrenceParams { x, y, z }),
            Err(_) => Err(WrmError::Parse(format!("expected x,y,z, got {s:?}"))),
        }
    }
}

impl fmt::Display for RecurrenceParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.x, self.y, self.z)
    }
}

/// Names `P_{alpha,beta}^{[x,y,z]}` restricted to `n x n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WrmDescriptor {
    pub params: RecurrenceParams,
    pub boundary: BoundaryPair,
}

impl WrmDescriptor {
    pub fn new(params: RecurrenceParams, boundary: BoundaryPair) -> Self {
        WrmDescriptor { params, boundary }
    }

    pub fn from_specs(
        params: RecurrenceParams,
        alpha: &SequenceSpec,
        beta: &SequenceSpec,
        n: usize,
    ) -> Result<Self> {
        Ok(WrmDescriptor { params, boundary: BoundaryPair::from_specs(alpha, beta, n)? })
    }

    pub fn n(&self) -> usize {
        self.boundary.len()
    }

    pub fn build(&self) -> Matrix {
        build_wrm(self)
    }
}

/// Wire form `x,y,z;alpha-spec;beta-spec`, e.g. `1,0,1;const:1;const:1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WrmSpec {
    pub params: RecurrenceParams,
    pub alpha: SequenceSpec,
    pub beta: SequenceSpec,
}

impl WrmSpec {
    pub fn descriptor(&self, n: usize) -> Result<WrmDescriptor> {
        WrmDescriptor::from_specs(self.params.clone(), &self.alpha, &self.beta, n)
    }
}

impl FromStr for WrmSpec {
    type Err = WrmError;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').collect();
        match parts.as_slice() {
            [p, a, b] => Ok(WrmSpec { params: p.parse()?, alpha: a.parse()?, beta: b.parse()? }),
            _ => Err(WrmError::Parse(format!(
                "expected `x,y,z;alpha-spec;beta-spec`, got {s:?}"
            ))),
        }
    }
}

impl fmt::Display for WrmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{};{}", self.params, self.alpha, self.beta)
    }
}

pub fn build_wrm(d: &WrmDescriptor) -> Matrix {
    let n = d.n();
    let RecurrenceParams { x, y, z } = &d.params;
    let alpha = d.boundary.alpha();
    let beta = d.boundary.beta();
    let mut cells: Vec<Rational> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let v = if j == 0 {
                alpha[i].clone()
            } else if i == 0 {
                beta[j].clone()
            } else {
                let left = &cells[i * n + j - 1];
                let diag = &cells[(i - 1) * n + j - 1];
                let up = &cells[(i - 1) * n + j];
                x * left + y * diag + z * up
            };
            cells.push(v);
        }
    }
    Matrix::from_fn(n, |i, j| std::mem::take(&mut cells[i * n + j])).expect("n >= 1")
}

/// Closed form of `P_{λ_w, μ}^{[0,v,w]}`: entry `(i,j)` is `C(i,j) v^j w^(i-j)`.
pub fn pascal_like(v: &Rational, w: &Rational, n: usize) -> Result<Matrix> {
    if n == 0 {
        return Err(WrmError::Empty);
    }
    let vp = powers(v, n);
    let wp = powers(w, n);
    let mut rows = Vec::with_capacity(n);
    let mut binom = vec![num_bigint::BigInt::from(1)];
    for i in 0..n {
        let row: Vec<Rational> = (0..n)
            .map(|j| {
                if j > i {
                    Rational::zero()
                } else {
                    Rational::from(binom[j].clone()) * &vp[j] * &wp[i - j]
                }
            })
            .collect();
        rows.push(row);
        binom = next_pascal_row(&binom);
    }
    Matrix::from_rows(rows)
}

/// `P_{alpha,beta}^{[0,1,0]}`: `alpha[i-j]` on and below the diagonal, `beta[j-i]` above.
pub fn toeplitz(pair: &BoundaryPair) -> Matrix {
    let (a, b) = (pair.alpha(), pair.beta());
    Matrix::from_fn(pair.len(), |i, j| if i >= j { a[i - j].clone() } else { b[j - i].clone() })
        .expect("boundary pairs are non-empty")
}

/// `P_{alpha,beta}^{[0,x,0]}`: `alpha[i-j] x^j` for `i >= j`, `beta[j-i] x^i` otherwise.
pub fn weighted_toeplitz(pair: &BoundaryPair, x: &Rational) -> Matrix {
    let xp = powers(x, pair.len());
    let (a, b) = (pair.alpha(), pair.beta());
    Matrix::from_fn(pair.len(), |i, j| {
        if i >= j {
            &a[i - j] * &xp[j]
        } else {
            &b[j - i] * &xp[i]
        }
    })
    .expect("boundary pairs are non-empty")
}
