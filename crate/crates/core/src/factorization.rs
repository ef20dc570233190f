//! Three-factor decompositions `P = L · M · Rᵗ` with `L`, `R` Pascal-like.
//!
//! The general form uses arbitrary group elements `(r, s)` on the left and
//! `(v, w)` on the right (`r v != 0`). The middle factor is again a weighted
//! recurrence matrix, with parameters
//!
//! ```text
//! ((x - w)/v, (y + x s + z w - s w)/(r v), (z - s)/r)
//! ```
//!
//! and boundaries `ρ = T⁻¹_{r,s}(α)`, `σ = T⁻¹_{v,w}(β)`. The named special
//! cases only fix the group elements.

use serde::Serialize;

use crate::error::{Result, WrmError};
use crate::group::GroupElement;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::sequences::{inverse_binomial_transform, BoundaryPair};
use crate::wrm::{build_wrm, RecurrenceParams, WrmDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub left: Matrix,
    pub middle: Matrix,
    pub right: Matrix,
    pub claimed: WrmDescriptor,
    pub middle_descriptor: WrmDescriptor,
}

impl Factorization {
    pub fn product(&self) -> Matrix {
        self.left
            .mul(&self.middle)
            .and_then(|lm| lm.mul(&self.right))
            .expect("factors share the dimension of the claimed matrix")
    }

    pub fn verify(&self) -> bool {
        verify_factorization(self)
    }
}

pub fn unifying_factorization(
    d: &WrmDescriptor,
    r: &Rational,
    s: &Rational,
    v: &Rational,
    w: &Rational,
) -> Result<Factorization> {
    let rv = r * v;
    if rv.is_zero() {
        return Err(WrmError::Parameter("unifying factorization needs r*v != 0".into()));
    }
    let left_g = GroupElement::new(r.clone(), s.clone())?;
    let right_g = GroupElement::new(v.clone(), w.clone())?;
    let RecurrenceParams { x, y, z } = &d.params;

    let params = RecurrenceParams::new(
        (x - w) / v,
        (y + x * s + z * w - s * w) / &rv,
        (z - s) / r,
    );
    let rho = inverse_binomial_transform(d.boundary.alpha(), r, s)?;
    let sigma = inverse_binomial_transform(d.boundary.beta(), v, w)?;
    let middle_descriptor = WrmDescriptor::new(params, BoundaryPair::new(rho, sigma)?);

    let n = d.n();
    Ok(Factorization {
        left: left_g.to_matrix(n)?,
        middle: build_wrm(&middle_descriptor),
        right: right_g.to_matrix(n)?.transpose(),
        claimed: d.clone(),
        middle_descriptor,
    })
}

/// Left factor `(1, z)`, right factor `(y + x z, x)`; the middle is a plain
/// Toeplitz matrix of `α̃`, `β̃`.
pub fn toeplitz_factorization(d: &WrmDescriptor) -> Result<Factorization> {
    let weight = d.params.weight();
    if weight.is_zero() {
        return Err(WrmError::SingularWeight);
    }
    unifying_factorization(d, &Rational::one(), &d.params.z, &weight, &d.params.x)
}

/// `r = s = v = w = 1` on a generalized Pascal triangle (params `(1, 0, 1)`).
pub fn mp_factorization(d: &WrmDescriptor) -> Result<Factorization> {
    if d.params != RecurrenceParams::from_i64(1, 0, 1) {
        return Err(WrmError::Hypothesis(format!(
            "mp factorization needs params 1,0,1, got {}",
            d.params
        )));
    }
    let one = Rational::one();
    unifying_factorization(d, &one, &one, &one, &one)
}

/// `r = s = z`, `v = w = x`; the middle is weighted Toeplitz with weight `1 + y/(xz)`.
pub fn tan_factorization(d: &WrmDescriptor) -> Result<Factorization> {
    let RecurrenceParams { x, z, .. } = &d.params;
    if (x * z).is_zero() {
        return Err(WrmError::Parameter("tan factorization needs x*z != 0".into()));
    }
    unifying_factorization(d, z, z, x, x)
}

pub fn verify_factorization(f: &Factorization) -> bool {
    let n = f.claimed.n();
    if [&f.left, &f.middle, &f.right].iter().any(|m| m.n() != n) {
        return false;
    }
    f.product() == build_wrm(&f.claimed)
}
