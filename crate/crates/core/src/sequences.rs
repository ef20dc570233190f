//! Boundary sequences and the binomial-transform family.
//!
//! Every transform here is a special case of the two-parameter binomial
//! transform
//!
//! ```text
//! eta_i = sum_{k=0}^{i} C(i,k) p^k q^(i-k) s_k
//! ```
//!
//! and its inverse, which peels off one term per index by dividing by `p^i`.
//! Sequences are finite prefixes; their length is always explicit.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::binomial::next_pascal_row;
use crate::error::{Result, WrmError};
use crate::rational::{powers, Rational};

/// Symbolic generator of a boundary sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSpec {
    /// `c * q^i`, with `0^0 = 1`.
    Geometric { c: Rational, q: Rational },
    /// `a + i * d`.
    Arithmetic { a: Rational, d: Rational },
    Constant(Rational),
    Explicit(Vec<Rational>),
    /// Kronecker delta `δ_{i,k}`.
    Delta(usize),
}

impl SequenceSpec {
    /// The geometric sequence `(z^i)`.
    pub fn lambda(z: Rational) -> Self {
        SequenceSpec::Geometric { c: Rational::one(), q: z }
    }

    /// `(1, 0, 0, ...)`.
    pub fn mu() -> Self {
        SequenceSpec::Delta(0)
    }

    pub fn eval(&self, n: usize) -> Result<Sequence> {
        eval_sequence(self, n)
    }
}

pub fn eval_sequence(spec: &SequenceSpec, n: usize) -> Result<Sequence> {
    if n == 0 {
        return Err(WrmError::Empty);
    }
    let entries = match spec {
        SequenceSpec::Geometric { c, q } => powers(q, n).into_iter().map(|p| c * p).collect(),
        SequenceSpec::Arithmetic { a, d } => (0..n).map(|i| a + d * Rational::from(i)).collect(),
        SequenceSpec::Constant(c) => vec![c.clone(); n],
        SequenceSpec::Explicit(values) => {
            if values.is_empty() {
                return Err(WrmError::Empty);
            }
            if values.len() < n {
                return Err(WrmError::SequenceTooShort { needed: n, got: values.len() });
            }
            values[..n].to_vec()
        }
        SequenceSpec::Delta(k) => (0..n)
            .map(|i| if i == *k { Rational::one() } else { Rational::zero() })
            .collect(),
    };
    Ok(Sequence(entries))
}

fn parse_list(body: &str) -> Result<Vec<Rational>> {
    body.split(',').map(str::parse).collect()
}

fn parse_pair(body: &str, kind: &str) -> Result<(Rational, Rational)> {
    match parse_list(body)?.as_slice() {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(WrmError::Parse(format!("{kind} expects two values, got {body:?}"))),
    }
}

impl FromStr for SequenceSpec {
    type Err = WrmError;

    /// `geom:c,q` | `arith:a,d` | `const:c` | `list:v0,v1,...` | `delta:k`
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| WrmError::Parse(format!("sequence spec {s:?} lacks a kind prefix")))?;
        match kind {
            "geom" => {
                let (c, q) = parse_pair(body, "geom")?;
                Ok(SequenceSpec::Geometric { c, q })
            }
            "arith" => {
                let (a, d) = parse_pair(body, "arith")?;
                Ok(SequenceSpec::Arithmetic { a, d })
            }
            "const" => Ok(SequenceSpec::Constant(body.parse()?)),
            "list" => {
                let values = parse_list(body)?;
                if values.is_empty() {
                    return Err(WrmError::Empty);
                }
                Ok(SequenceSpec::Explicit(values))
            }
            "delta" => body
                .trim()
                .parse::<usize>()
                .map(SequenceSpec::Delta)
                .map_err(|e| WrmError::Parse(format!("delta index {body:?}: {e}"))),
            other => Err(WrmError::Parse(format!("unknown sequence kind {other:?}"))),
        }
    }
}

impl fmt::Display for SequenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceSpec::Geometric { c, q } => write!(f, "geom:{c},{q}"),
            SequenceSpec::Arithmetic { a, d } => write!(f, "arith:{a},{d}"),
            SequenceSpec::Constant(c) => write!(f, "const:{c}"),
            SequenceSpec::Explicit(values) => {
                f.write_str("list:")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            SequenceSpec::Delta(k) => write!(f, "delta:{k}"),
        }
    }
}

/// A finite, non-empty prefix of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct Sequence(Vec<Rational>);

impl Sequence {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(WrmError::Empty);
        }
        Ok(Sequence(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> &Rational {
        &self.0[0]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    /// True when every entry past index 0 is zero.
    pub fn is_supported_at_zero(&self) -> bool {
        self.0[1..].iter().all(Rational::is_zero)
    }

    pub fn to_spec(&self) -> SequenceSpec {
        SequenceSpec::Explicit(self.0.clone())
    }
}

impl Index<usize> for Sequence {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl TryFrom<Vec<Rational>> for Sequence {
    type Error = WrmError;
    fn try_from(entries: Vec<Rational>) -> Result<Self> {
        Sequence::new(entries)
    }
}

impl From<Sequence> for Vec<Rational> {
    fn from(s: Sequence) -> Self {
        s.0
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// The pair `(alpha, beta)` of first column and first row.
///
/// Both have the same length and share their first term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryPair {
    alpha: Sequence,
    beta: Sequence,
}

impl BoundaryPair {
    pub fn new(alpha: Sequence, beta: Sequence) -> Result<Self> {
        if alpha.len() != beta.len() {
            return Err(WrmError::LengthMismatch { left: alpha.len(), right: beta.len() });
        }
        if alpha.first() != beta.first() {
            return Err(WrmError::BoundaryMismatch {
                alpha0: Box::new(alpha.first().clone()),
                beta0: Box::new(beta.first().clone()),
            });
        }
        Ok(BoundaryPair { alpha, beta })
    }

    pub fn from_specs(alpha: &SequenceSpec, beta: &SequenceSpec, n: usize) -> Result<Self> {
        BoundaryPair::new(alpha.eval(n)?, beta.eval(n)?)
    }

    pub fn alpha(&self) -> &Sequence {
        &self.alpha
    }

    pub fn beta(&self) -> &Sequence {
        &self.beta
    }

    /// The shared first term.
    pub fn gamma(&self) -> &Rational {
        self.alpha.first()
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn into_parts(self) -> (Sequence, Sequence) {
        (self.alpha, self.beta)
    }
}

/// `eta_i = sum_{k<=i} C(i,k) p^k q^(i-k) s_k`.
pub fn binomial_transform(s: &Sequence, p: &Rational, q: &Rational) -> Sequence {
    let n = s.len();
    let pp = powers(p, n);
    let qp = powers(q, n);
    let mut out = Vec::with_capacity(n);
    let mut row = vec![num_bigint::BigInt::from(1)];
    for i in 0..n {
        let mut acc = Rational::zero();
        for (k, c) in row.iter().enumerate() {
            if s[k].is_zero() {
                continue;
            }
            acc += &(Rational::from(c.clone()) * &pp[k] * &qp[i - k] * &s[k]);
        }
        out.push(acc);
        row = next_pascal_row(&row);
    }
    Sequence(out)
}

/// Solves `binomial_transform(x, p, q) = s` for `x`, one index at a time.
pub fn inverse_binomial_transform(s: &Sequence, p: &Rational, q: &Rational) -> Result<Sequence> {
    if p.is_zero() {
        return Err(WrmError::Parameter(
            "inverse binomial transform needs a nonzero scale p".into(),
        ));
    }
    let n = s.len();
    let pp = powers(p, n);
    let qp = powers(q, n);
    let mut out: Vec<Rational> = Vec::with_capacity(n);
    let mut row = vec![num_bigint::BigInt::from(1)];
    for i in 0..n {
        let mut acc = s[i].clone();
        for k in 0..i {
            if out[k].is_zero() {
                continue;
            }
            acc -= &(Rational::from(row[k].clone()) * &pp[k] * &qp[i - k] * &out[k]);
        }
        out.push(acc / &pp[i]);
        row = next_pascal_row(&row);
    }
    Ok(Sequence(out))
}

/// `α̃`: inverse transform with scale 1 and shift `z`.
pub fn tilde_alpha(alpha: &Sequence, z: &Rational) -> Sequence {
    inverse_binomial_transform(alpha, &Rational::one(), z).expect("unit scale is never zero")
}

/// `β̃`: inverse transform with scale `y + x z` and shift `x`.
pub fn tilde_beta(beta: &Sequence, x: &Rational, y: &Rational, z: &Rational) -> Result<Sequence> {
    let weight = y + x * z;
    if weight.is_zero() {
        return Err(WrmError::SingularWeight);
    }
    inverse_binomial_transform(beta, &weight, x)
}

/// `ŝ_i = sum_k (-1)^(i+k) C(i,k) s_k`, the inverse of the unit binomial transform.
pub fn hat_transform(s: &Sequence) -> Sequence {
    inverse_binomial_transform(s, &Rational::one(), &Rational::one())
        .expect("unit scale is never zero")
}
