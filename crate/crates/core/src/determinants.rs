//! Closed-form determinants and their cross-check against Bareiss.
//!
//! All closed forms here follow from the Toeplitz factorization: the outer
//! factors are triangular with determinants `1` and `(y + x z)^C(n,2)`, so
//! `det P = (y + x z)^C(n,2) · det T(α̃, β̃)`.

use serde::Serialize;

use crate::binomial::choose2;
use crate::error::{Result, WrmError};
use crate::rational::Rational;
use crate::sequences::{tilde_alpha, tilde_beta, BoundaryPair, Sequence, SequenceSpec};
use crate::wrm::{build_wrm, toeplitz, RecurrenceParams, WrmDescriptor};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DetReport {
    pub n: usize,
    pub closed_form: Rational,
    pub bareiss: Rational,
    pub agrees: bool,
    pub formula_name: String,
}

impl DetReport {
    pub fn new(formula_name: impl Into<String>, n: usize, closed_form: Rational, bareiss: Rational) -> Self {
        let agrees = closed_form == bareiss;
        DetReport { n, closed_form, bareiss, agrees, formula_name: formula_name.into() }
    }

    /// Compares `closed_form` against Bareiss on `build_wrm(d)`.
    pub fn for_descriptor(formula_name: impl Into<String>, d: &WrmDescriptor, closed_form: Rational) -> Self {
        DetReport::new(formula_name, d.n(), closed_form, build_wrm(d).det_bareiss())
    }
}

fn transformed_pair(d: &WrmDescriptor) -> Result<BoundaryPair> {
    let RecurrenceParams { x, y, z } = &d.params;
    let at = tilde_alpha(d.boundary.alpha(), z);
    let bt = tilde_beta(d.boundary.beta(), x, y, z)?;
    BoundaryPair::new(at, bt)
}

/// `(y + x z)^C(n,2) · det T(α̃, β̃)`.
pub fn det_via_eq11(d: &WrmDescriptor) -> Result<Rational> {
    let pair = transformed_pair(d)?;
    let scale = d.params.weight().powu(choose2(d.n() as u64));
    Ok(scale * toeplitz(&pair).det_bareiss())
}

/// `c^n (y + x z)^C(n,2)`, valid when `α_i = c z^i` and `β_j = c x^j`.
pub fn det_geometric(c: &Rational, params: &RecurrenceParams, n: usize) -> Rational {
    c.powu(n as u64) * params.weight().powu(choose2(n as u64))
}

/// Whether the Toeplitz middle factor is diagonal, i.e. `α̃` and `β̃`
/// vanish past index 0. Holds exactly for `α_i = c z^i`, `β_j = c x^j`.
pub fn is_middle_diagonal(d: &WrmDescriptor) -> Result<bool> {
    let pair = transformed_pair(d)?;
    Ok(pair.alpha().is_supported_at_zero() && pair.beta().is_supported_at_zero())
}

fn require_y_not_minus_one(y: &Rational) -> Result<()> {
    if (y + Rational::one()).is_zero() {
        return Err(WrmError::Hypothesis("closed form needs y != -1".into()));
    }
    Ok(())
}

/// `det P^{[1,y,1]}` for `α_i = a^i`, `β_i = b^i`:
/// `(1 + y)^C(n-1,2) (y + a + b - a b)^(n-1)`.
pub fn det_k2_geometric(a: &Rational, b: &Rational, y: &Rational, n: usize) -> Result<Rational> {
    require_y_not_minus_one(y)?;
    if n == 0 {
        return Err(WrmError::Empty);
    }
    let one_plus_y = y + Rational::one();
    let tail = y + a + b - a * b;
    let m = (n - 1) as u64;
    Ok(one_plus_y.powu(choose2(m)) * tail.powu(m))
}

/// `det P^{[1,y,1]}` of even order `2h` for `α_i = i`, `β_i = -i`: `(1 + y)^(2h(h-1))`.
pub fn det_k2_arithmetic(y: &Rational, half_n: usize) -> Result<Rational> {
    require_y_not_minus_one(y)?;
    if half_n == 0 {
        return Err(WrmError::Empty);
    }
    let h = half_n as u64;
    Ok((y + Rational::one()).powu(2 * h * (h - 1)))
}

/// `det P_{λ_w, μ}^{[0,v,w]} = v^C(n,2)`, independent of `w`.
pub fn det_pascal_like(v: &Rational, n: usize) -> Rational {
    v.powu(choose2(n as u64))
}

/// Descriptor with `α = λ_a`, `β = λ_b`, params `(1, y, 1)`.
pub fn k2_geometric_descriptor(a: &Rational, b: &Rational, y: &Rational, n: usize) -> Result<WrmDescriptor> {
    WrmDescriptor::from_specs(
        RecurrenceParams::new(Rational::one(), y.clone(), Rational::one()),
        &SequenceSpec::lambda(a.clone()),
        &SequenceSpec::lambda(b.clone()),
        n,
    )
}

/// Descriptor with `α_i = i`, `β_i = -i`, params `(1, y, 1)`, order `size`.
pub fn k2_arithmetic_descriptor(y: &Rational, size: usize) -> Result<WrmDescriptor> {
    WrmDescriptor::from_specs(
        RecurrenceParams::new(Rational::one(), y.clone(), Rational::one()),
        &SequenceSpec::Arithmetic { a: Rational::zero(), d: Rational::one() },
        &SequenceSpec::Arithmetic { a: Rational::zero(), d: -Rational::one() },
        size,
    )
}

pub fn report_eq11(d: &WrmDescriptor) -> Result<DetReport> {
    Ok(DetReport::for_descriptor("eq11", d, det_via_eq11(d)?))
}

/// Geometric closed form with `c = α_0`; fails unless the middle factor is diagonal.
pub fn report_geometric(d: &WrmDescriptor) -> Result<DetReport> {
    if !is_middle_diagonal(d)? {
        return Err(WrmError::Hypothesis(
            "boundaries are not of the form alpha_i = c z^i, beta_j = c x^j".into(),
        ));
    }
    let c = d.boundary.gamma();
    Ok(DetReport::for_descriptor("geometric", d, det_geometric(c, &d.params, d.n())))
}

pub fn report_k2_geometric(a: &Rational, b: &Rational, y: &Rational, n: usize) -> Result<DetReport> {
    let closed = det_k2_geometric(a, b, y, n)?;
    let d = k2_geometric_descriptor(a, b, y, n)?;
    Ok(DetReport::for_descriptor("k2-geometric", &d, closed))
}

pub fn report_k2_arithmetic(y: &Rational, half_n: usize) -> Result<DetReport> {
    let closed = det_k2_arithmetic(y, half_n)?;
    let d = k2_arithmetic_descriptor(y, 2 * half_n)?;
    Ok(DetReport::for_descriptor("k2-arithmetic", &d, closed))
}

fn is_power_sequence(s: &Sequence) -> Option<Rational> {
    if !s.first().is_one() {
        return None;
    }
    let ratio = if s.len() > 1 { s[1].clone() } else { Rational::zero() };
    let mut acc = Rational::one();
    for v in s.iter() {
        if *v != acc {
            return None;
        }
        acc = &acc * &ratio;
    }
    Some(ratio)
}

fn is_scaled_index_sequence(s: &Sequence, step: i64) -> bool {
    s.iter().enumerate().all(|(i, v)| *v == Rational::from(step * i as i64))
}

/// Picks the most specific closed form that applies to `d` and reports it
/// against Bareiss. Tries the geometric-diagonal case, then the two
/// `(1, y, 1)` families.
pub fn report_closed_form(d: &WrmDescriptor) -> Result<DetReport> {
    let p = &d.params;
    if !p.weight().is_zero() && is_middle_diagonal(d)? {
        return report_geometric(d);
    }
    let k2 = p.x.is_one() && p.z.is_one() && !(&p.y + Rational::one()).is_zero();
    if k2 {
        if let (Some(a), Some(b)) = (is_power_sequence(d.boundary.alpha()), is_power_sequence(d.boundary.beta())) {
            return Ok(DetReport::for_descriptor(
                "k2-geometric",
                d,
                det_k2_geometric(&a, &b, &p.y, d.n())?,
            ));
        }
        let n = d.n();
        if n.is_multiple_of(2)
            && is_scaled_index_sequence(d.boundary.alpha(), 1)
            && is_scaled_index_sequence(d.boundary.beta(), -1)
        {
            return Ok(DetReport::for_descriptor("k2-arithmetic", d, det_k2_arithmetic(&p.y, n / 2)?));
        }
    }
    Err(WrmError::Hypothesis("no closed-form determinant applies to this matrix".into()))
}
