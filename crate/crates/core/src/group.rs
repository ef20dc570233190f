//! The group of Pascal-like matrices `P_{λ_w, μ}^{[0,v,w]}` (`v != 0`) and its
//! actions on weighted recurrence matrices.
//!
//! Elements are stored as their parameters `(v, w)`; the group law
//! `(v,w)·(v',w') = (v v', v w' + w)` does not depend on the matrix size, so a
//! matrix is only realized on request via [`GroupElement::to_matrix`].
//!
//! Multiplying a descriptor on either side by a group element gives another
//! descriptor in closed form:
//!
//! * left:  `g · P^{[x,y,z]}_{α,β}   = P^{[x, vy - wx, vz + w]}_{η,β}`,  `η = T_{v,w}(α)`
//! * right: `P^{[x,y,z]}_{α,β} · gᵗ  = P^{[vx + w, vy - wz, z]}_{α,η}`,  `η = T_{v,w}(β)`
//!
//! where `T_{v,w}` is [`binomial_transform`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Result, WrmError};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::sequences::{binomial_transform, BoundaryPair};
use crate::wrm::{pascal_like, RecurrenceParams, WrmDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    v: Rational,
    w: Rational,
}

impl GroupElement {
    pub fn new(v: Rational, w: Rational) -> Result<Self> {
        if v.is_zero() {
            return Err(WrmError::Parameter("group element needs v != 0".into()));
        }
        Ok(GroupElement { v, w })
    }

    pub fn identity() -> Self {
        GroupElement { v: Rational::one(), w: Rational::zero() }
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    pub fn w(&self) -> &Rational {
        &self.w
    }

    /// `self · other`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            v: &self.v * &other.v,
            w: &self.v * &other.w + &self.w,
        }
    }

    /// `(1/v, -w/v)`.
    pub fn inverse(&self) -> GroupElement {
        let vinv = self.v.recip().expect("v != 0 by construction");
        GroupElement { w: -(&self.w * &vinv), v: vinv }
    }

    pub fn to_matrix(&self, n: usize) -> Result<Matrix> {
        pascal_like(&self.v, &self.w, n)
    }

    pub fn is_identity(&self) -> bool {
        self.v.is_one() && self.w.is_zero()
    }
}

impl FromStr for GroupElement {
    type Err = WrmError;

    /// `v,w`
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(',') {
            Some((v, w)) => GroupElement::new(v.parse()?, w.parse()?),
            None => Err(WrmError::Parse(format!("expected v,w, got {s:?}"))),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.v, self.w)
    }
}

pub fn identity() -> GroupElement {
    GroupElement::identity()
}

pub fn compose(g1: &GroupElement, g2: &GroupElement) -> GroupElement {
    g1.compose(g2)
}

pub fn inverse(g: &GroupElement) -> GroupElement {
    g.inverse()
}

pub fn to_matrix(g: &GroupElement, n: usize) -> Result<Matrix> {
    g.to_matrix(n)
}

/// Descriptor of `to_matrix(g) · build_wrm(d)`.
pub fn left_mul_descriptor(g: &GroupElement, d: &WrmDescriptor) -> WrmDescriptor {
    let (v, w) = (&g.v, &g.w);
    let RecurrenceParams { x, y, z } = &d.params;
    let params = RecurrenceParams::new(x.clone(), v * y - w * x, v * z + w);
    let eta = binomial_transform(d.boundary.alpha(), v, w);
    let boundary = BoundaryPair::new(eta, d.boundary.beta().clone())
        .expect("transform preserves length and first term");
    WrmDescriptor::new(params, boundary)
}

/// Descriptor of `build_wrm(d) · to_matrix(g)ᵗ`.
pub fn right_mul_descriptor(g: &GroupElement, d: &WrmDescriptor) -> WrmDescriptor {
    let (v, w) = (&g.v, &g.w);
    let RecurrenceParams { x, y, z } = &d.params;
    let params = RecurrenceParams::new(v * x + w, v * y - w * z, z.clone());
    let eta = binomial_transform(d.boundary.beta(), v, w);
    let boundary = BoundaryPair::new(d.boundary.alpha().clone(), eta)
        .expect("transform preserves length and first term");
    WrmDescriptor::new(params, boundary)
}

/// The left action `P^g = g⁻¹ · P`.
///
/// This is a right action: acting by `g1 · g2` equals acting by `g1`, then by `g2`.
pub fn group_action_left(g: &GroupElement, d: &WrmDescriptor) -> WrmDescriptor {
    left_mul_descriptor(&g.inverse(), d)
}

/// The action of the transposed group: `P^{gᵗ} = P · gᵗ`, no inverse.
///
/// Acting by `gᵗ` then `hᵗ` equals acting by `(h · g)ᵗ`.
pub fn group_action_right(g: &GroupElement, d: &WrmDescriptor) -> WrmDescriptor {
    right_mul_descriptor(g, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{Sequence, SequenceSpec};
    use crate::wrm::build_wrm;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GroupElement {
        s.parse().unwrap()
    }

    fn seq(v: &[i64]) -> Sequence {
        Sequence::new(v.iter().map(|&x| Rational::from(x)).collect()).unwrap()
    }

    fn ones(n: usize, x: i64, y: i64, z: i64) -> WrmDescriptor {
        WrmDescriptor::from_specs(
            RecurrenceParams::from_i64(x, y, z),
            &SequenceSpec::Constant(Rational::one()),
            &SequenceSpec::Constant(Rational::one()),
            n,
        )
        .unwrap()
    }

    #[test]
    fn zero_v_rejected() {
        assert!(matches!(GroupElement::new(q("0"), q("1")), Err(WrmError::Parameter(_))));
        assert!("0,1".parse::<GroupElement>().is_err());
        assert!("2".parse::<GroupElement>().is_err());
    }

    #[test]
    fn identity_examples() {
        assert_eq!(identity(), g("1,0"));
        assert_eq!(compose(&identity(), &g("2,3")), g("2,3"));
        assert_eq!(identity().to_matrix(4).unwrap(), Matrix::identity(4).unwrap());
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(&g("2,3"), &g("5,7")), g("10,17"));
        assert_eq!(compose(&g("1,0"), &g("-3/2,4")), g("-3/2,4"));
        assert_eq!(compose(&g("2,3"), &g("1/2,-3/2")), identity());
    }

    #[test]
    fn compose_matches_explicit_product() {
        let (a, b) = (g("2,3"), g("5,7"));
        let product = a.to_matrix(5).unwrap().mul(&b.to_matrix(5).unwrap()).unwrap();
        assert_eq!(compose(&a, &b).to_matrix(5).unwrap(), product);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse(&g("2,3")), g("1/2,-3/2"));
        assert_eq!(inverse(&identity()), identity());
        assert_eq!(inverse(&g("-1,5")), g("-1,5"));
        assert_eq!(compose(&g("-1,5"), &g("-1,5")), identity());
    }

    #[test]
    fn to_matrix_examples() {
        assert_eq!(
            g("1,1").to_matrix(3).unwrap(),
            Matrix::from_i64_rows(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]]).unwrap()
        );
        assert_eq!(
            g("2,3").to_matrix(3).unwrap(),
            Matrix::from_i64_rows(&[&[1, 0, 0], &[3, 2, 0], &[9, 12, 4]]).unwrap()
        );
    }

    #[test]
    fn left_mul_examples() {
        let d = ones(4, 1, 0, 1);
        assert_eq!(left_mul_descriptor(&identity(), &d), d);

        let out = left_mul_descriptor(&g("1,1"), &d);
        assert_eq!(out.params, RecurrenceParams::from_i64(1, -1, 2));
        assert_eq!(out.boundary.alpha(), &seq(&[1, 2, 4, 8]));
        assert_eq!(out.boundary.beta(), &seq(&[1, 1, 1, 1]));
        let product = g("1,1").to_matrix(4).unwrap().mul(&build_wrm(&d)).unwrap();
        assert_eq!(build_wrm(&out), product);

        let d = ones(3, 0, 1, 0);
        let out = left_mul_descriptor(&g("2,3"), &d);
        assert_eq!(out.params, RecurrenceParams::from_i64(0, 2, 3));
        assert_eq!(out.boundary.alpha(), &seq(&[1, 5, 25]));
        assert_eq!(out.boundary.beta(), &seq(&[1, 1, 1]));
        let product = g("2,3").to_matrix(3).unwrap().mul(&build_wrm(&d)).unwrap();
        assert_eq!(build_wrm(&out), product);
    }

    #[test]
    fn right_mul_examples() {
        let d = ones(4, 1, 0, 1);
        assert_eq!(right_mul_descriptor(&identity(), &d), d);

        let out = right_mul_descriptor(&g("1,1"), &d);
        assert_eq!(out.params, RecurrenceParams::from_i64(2, -1, 1));
        assert_eq!(out.boundary.alpha(), &seq(&[1, 1, 1, 1]));
        assert_eq!(out.boundary.beta(), &seq(&[1, 2, 4, 8]));
        let product = build_wrm(&d).mul(&g("1,1").to_matrix(4).unwrap().transpose()).unwrap();
        assert_eq!(build_wrm(&out), product);

        let d = ones(3, 1, 1, 1);
        let out = right_mul_descriptor(&g("2,0"), &d);
        assert_eq!(out.params, RecurrenceParams::from_i64(2, 2, 1));
        assert_eq!(out.boundary.beta(), &seq(&[1, 2, 4]));
        let product = build_wrm(&d).mul(&g("2,0").to_matrix(3).unwrap().transpose()).unwrap();
        assert_eq!(build_wrm(&out), product);
    }

    #[test]
    fn left_action_examples() {
        let d = ones(3, 1, 0, 1);
        assert_eq!(group_action_left(&identity(), &d), d);
        let out = group_action_left(&g("1,1"), &d);
        assert_eq!(out.params, RecurrenceParams::from_i64(1, 1, 0));
        // alpha = T_{1,-1}(ones) = (1, 0, 0)
        assert_eq!(out.boundary.alpha(), &seq(&[1, 0, 0]));
        let product = g("1,1").inverse().to_matrix(3).unwrap().mul(&build_wrm(&d)).unwrap();
        assert_eq!(build_wrm(&out), product);
    }

    #[test]
    fn left_action_parameters_match_closed_form() {
        // (x, (y + w x)/v, (z - w)/v) for the inverse twist
        let d = ones(3, 2, 5, 7);
        let out = group_action_left(&g("3,4"), &d);
        assert_eq!(out.params, RecurrenceParams::new(q("2"), q("13/3"), q("1")));
    }
}
