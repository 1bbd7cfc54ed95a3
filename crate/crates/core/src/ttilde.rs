//! Floating-point evaluation of the constant terms of the depth-1 and
//! depth-2 series, and the numeric verification of the weight-`k`
//! relation vectors against them.
//!
//! The depth-2 constant is `4 (2 pi i)^{-(k1+k2)} L(k1, k2)` with
//! `L(k1, k2) = sum_{0<n1<n2} chi4(n1) chi4(n2-n1) n1^{-k1} n2^{-k2}`.
//! Two evaluation strategies must agree within the requested tolerance:
//!
//! - Strategy A groups by `n1`: the inner sum over the gap `d = n2 - n1`
//!   has a polygamma closed form, and the outer alternating sum over odd
//!   `n1` is accelerated.
//! - Strategy B depends on the trailing exponent. For `k2 >= 2` it groups
//!   by the gap `d` with both alternating sums accelerated. For `k2 = 1`,
//!   where the sum over `n2` converges only conditionally, it evaluates
//!   the series inside the unit disk at radii `1 - 2^{-s}` and
//!   extrapolates the radius to 1.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{alt_sum, dirichlet_beta, polygamma};
use crate::relations::{atilde_vector, atilde_vector_literal, RelationVector};
use crate::special::{chi4, ell4_odd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    AcceleratedSum,
    AbelRegularized,
}

/// A numerically evaluated constant with its error estimate.
#[derive(Debug, Clone, Serialize)]
pub struct NumericTValue {
    pub re: f64,
    pub im: f64,
    pub est_error: f64,
    pub method: Method,
}

impl NumericTValue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// `(2 pi i)^{-w}` as a complex double.
fn two_pi_i_inv_pow(w: u32) -> Complex64 {
    let mag = (2.0 * std::f64::consts::PI).powi(-(w as i32));
    match w % 4 {
        0 => Complex64::new(mag, 0.0),
        1 => Complex64::new(0.0, -mag),
        2 => Complex64::new(-mag, 0.0),
        _ => Complex64::new(0.0, mag),
    }
}

/// Depth-1 constant: exact for odd weight, accelerated beta series for even.
pub fn ttilde_single(k: u32) -> NumericTValue {
    assert!(k >= 1);
    if k % 2 == 1 {
        let v = ell4_odd(k).expect("odd k");
        return NumericTValue {
            re: 2.0 * v.re.to_f64(),
            im: 2.0 * v.im.to_f64(),
            est_error: 0.0,
            method: Method::ClosedForm,
        };
    }
    let beta = dirichlet_beta(k);
    let beta_check = alt_sum(40, |j| ((2 * j + 1) as f64).powi(-(k as i32)));
    let value = 2.0 * two_pi_i_inv_pow(k) * beta;
    NumericTValue {
        re: value.re,
        im: value.im,
        est_error: (2.0 * (beta - beta_check)).abs().max(1e-16),
        method: Method::AcceleratedSum,
    }
}

/// Inner closed form: `sum_{d odd >= 1} chi4(d) (n1 + d)^{-s}` through the
/// polygamma functions at quarter-integers.
fn inner_gap_sum(s: u32, n1: u64) -> f64 {
    let m = s - 1;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let fact: f64 = (1..=m as u64).map(|i| i as f64).product::<f64>().max(1.0);
    let x_hi = (n1 as f64 + 3.0) / 4.0;
    let x_lo = (n1 as f64 + 1.0) / 4.0;
    sign / (fact * 4.0_f64.powi(s as i32)) * (polygamma(m, x_hi) - polygamma(m, x_lo))
}

/// Strategy A: outer accelerated alternating sum over odd `n1`.
fn shifted_double_l_grouped_by_n1(k1: u32, k2: u32) -> f64 {
    alt_sum(52, |t| {
        let n1 = 2 * t + 1;
        (n1 as f64).powi(-(k1 as i32)) * inner_gap_sum(k2, n1)
    })
}

/// Strategy B for `k2 >= 2`: group by the gap, two nested accelerated sums.
fn shifted_double_l_grouped_by_gap(k1: u32, k2: u32) -> f64 {
    alt_sum(52, |u| {
        let d = (2 * u + 1) as f64;
        alt_sum(52, |t| {
            let n1 = (2 * t + 1) as f64;
            n1.powi(-(k1 as i32)) * (n1 + d).powi(-(k2 as i32))
        })
    })
}

/// Strategy B for `k2 = 1`: radial evaluation inside the unit disk plus
/// extrapolation of the radius to 1. The series
/// `sum_{n2} chi4(n2-1) P_{k1}(n2) x^{n2} / n2` with the odd partial sums
/// `P_{k1}(n2) = sum_{odd n1 < n2} n1^{-k1}` is geometrically convergent
/// for x < 1.
fn shifted_double_l_radial(k1: u32) -> f64 {
    let s_range = 4..=11u32;
    let x_max: f64 = 1.0 - 2.0_f64.powi(-(*s_range.end() as i32));
    // x^M < 1e-18 at the largest radius.
    let m = ((-18.0 * std::f64::consts::LN_10) / x_max.ln()).ceil() as u64 + 2;
    // Incremental odd partial sums P(n2).
    let mut pref = Vec::with_capacity(m as usize + 1);
    let mut acc = 0.0;
    for n2 in 0..=m {
        if n2 > 0 && n2 % 2 == 1 {
            acc += (n2 as f64).powi(-(k1 as i32));
        }
        pref.push(acc); // after the push, pref[n] = sum over odd n1 <= n
    }
    let f_at = |x: f64| -> f64 {
        let mut xs = x * x; // x^{n2} for even n2, built incrementally
        let x2 = x * x;
        let mut total = 0.0;
        let mut n2 = 2u64;
        while n2 <= m {
            let w = chi4(n2 as i64 - 1) as f64;
            // P(n2) counts odd n1 < n2, i.e. odd n1 <= n2 - 1.
            total += w * pref[(n2 - 1) as usize] * xs / n2 as f64;
            xs *= x2;
            n2 += 2;
        }
        total
    };
    // Richardson extrapolation in h = 1 - x, halving h at each sample.
    let samples: Vec<f64> = s_range
        .map(|s| f_at(1.0 - 2.0_f64.powi(-(s as i32))))
        .collect();
    let mut t = samples;
    let mut order = 1.0;
    while t.len() > 1 {
        let factor = 2.0_f64.powf(order);
        t = t
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / (factor - 1.0))
            .collect();
        order += 1.0;
    }
    t[0]
}

/// Depth-2 constant with dual-strategy error control.
pub fn ttilde_double(k1: u32, k2: u32, tol: f64) -> Result<NumericTValue> {
    assert!(k1 >= 1 && k2 >= 1);
    assert!(tol > 0.0, "tolerance must be positive");
    let a = shifted_double_l_grouped_by_n1(k1, k2);
    let (b, method) = if k2 == 1 {
        (shifted_double_l_radial(k1), Method::AbelRegularized)
    } else {
        (shifted_double_l_grouped_by_gap(k1, k2), Method::AcceleratedSum)
    };
    let disagreement = (a - b).abs();
    if disagreement > tol {
        return Err(Error::Tolerance { value: disagreement, tol });
    }
    let w = k1 + k2;
    let value = 4.0 * two_pi_i_inv_pow(w) * a;
    Ok(NumericTValue {
        re: value.re,
        im: value.im,
        est_error: disagreement.max(1e-15 * a.abs()).max(1e-17),
        method,
    })
}

/// Numeric check of one weight-`k` relation vector against the depth-2
/// constants.
#[derive(Debug, Clone, Serialize)]
pub struct RelationNumericReport {
    pub k: u32,
    pub j: u32,
    pub literal: bool,
    pub residual: f64,
    pub error_budget: f64,
    pub tol: f64,
}

/// Evaluates `|sum_p v_p T(p, k-p)|` for the relation vector at `(k, j)`
/// and errors when the residual exceeds `tol`. With `literal` set, uses
/// the published doubling placement instead of the corrected one (this is
/// expected to fail).
pub fn verify_relation_numeric(k: u32, j: u32, tol: f64, literal: bool) -> Result<RelationNumericReport> {
    let vector: RelationVector = if literal {
        atilde_vector_literal(k, j)?
    } else {
        atilde_vector(k, j)?
    };
    let per_value_tol = 1e-9;
    let mut residual = Complex64::new(0.0, 0.0);
    let mut budget = 0.0;
    for p in 1..k {
        let v = vector.coeff(p).to_f64();
        if v == 0.0 {
            continue;
        }
        let t = ttilde_double(p, k - p, per_value_tol)?;
        residual += v * t.value();
        budget += v.abs() * t.est_error;
    }
    let report = RelationNumericReport {
        k,
        j,
        literal,
        residual: residual.norm(),
        error_budget: budget,
        tol,
    };
    if report.residual >= tol {
        return Err(Error::Tolerance { value: report.residual, tol });
    }
    Ok(report)
}
