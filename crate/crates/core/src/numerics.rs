//! Floating-point helpers: accelerated alternating sums, polygamma
//! functions, and numeric special values of the two Dirichlet L-functions.
//!
//! Everything here is `f64`; exactness is never claimed. The alternating
//! sum accelerator is the Chebyshev-weight scheme: for a totally monotone
//! term sequence, `n` terms give roughly `(3 + sqrt 8)^{-n}` accuracy, far
//! below double precision already at `n = 40`.

/// Accelerated evaluation of `sum_{j>=0} (-1)^j a(j)`.
pub fn alt_sum(n: usize, mut a: impl FnMut(u64) -> f64) -> f64 {
    let mut d = (3.0 + 8.0_f64.sqrt()).powi(n as i32);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for k in 0..n {
        c = b - c;
        s += c * a(k as u64);
        let kf = k as f64;
        let nf = n as f64;
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Bernoulli numbers B_2..B_16 for the asymptotic tails.
const B2K: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

fn factorial_f(n: u64) -> f64 {
    (2..=n).map(|i| i as f64).product::<f64>().max(1.0)
}

/// Digamma function for `x > 0`.
pub fn digamma(mut x: f64) -> f64 {
    let mut acc = 0.0;
    while x < 20.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let inv2 = 1.0 / (x * x);
    let mut tail = 0.0;
    let mut p = inv2;
    for (k, b) in B2K.iter().enumerate() {
        tail += b / (2.0 * (k as f64 + 1.0)) * p;
        p *= inv2;
    }
    acc + x.ln() - 0.5 / x - tail
}

/// Polygamma function `psi^(m)(x)` for `x > 0`, `m >= 0`.
pub fn polygamma(m: u32, mut x: f64) -> f64 {
    if m == 0 {
        return digamma(x);
    }
    // psi^(m)(x) = psi^(m)(x+1) - (-1)^m m! / x^{m+1}
    let m_fact = factorial_f(m as u64);
    let sign_m = if m % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = 0.0;
    while x < 20.0 {
        acc -= sign_m * m_fact / x.powi(m as i32 + 1);
        x += 1.0;
    }
    // (-1)^{m-1} [ (m-1)!/x^m + m!/(2 x^{m+1})
    //              + sum_k B_2k (2k+m-1)! / (2k)! / x^{2k+m} ]
    let mut series = factorial_f(m as u64 - 1) / x.powi(m as i32)
        + m_fact / (2.0 * x.powi(m as i32 + 1));
    for (idx, b) in B2K.iter().enumerate() {
        let k2 = 2 * (idx as u64 + 1);
        let ratio = (ln_factorial(k2 + m as u64 - 1) - ln_factorial(k2)).exp();
        series += b * ratio / x.powi(k2 as i32 + m as i32);
    }
    acc - sign_m * series
}

/// `zeta(k)` for integer `k >= 2`, through the alternating eta series.
pub fn zeta_int(k: u32) -> f64 {
    assert!(k >= 2);
    let eta = alt_sum(48, |j| ((j + 1) as f64).powi(-(k as i32)));
    eta / (1.0 - (2.0_f64).powi(1 - k as i32))
}

/// `L(chi4, k) = sum (-1)^j (2j+1)^{-k}` for `k >= 1`.
pub fn dirichlet_beta(k: u32) -> f64 {
    assert!(k >= 1);
    alt_sum(48, |j| ((2 * j + 1) as f64).powi(-(k as i32)))
}

/// `L(chi0, k) = (1 - 2^{-k}) zeta(k)` for `k >= 2`.
pub fn l_chi0(k: u32) -> f64 {
    (1.0 - (2.0_f64).powi(-(k as i32))) * zeta_int(k)
}

pub const CATALAN: f64 = 0.915_965_594_177_219;
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn digamma_anchors() {
        assert!((digamma(1.0) + EULER_GAMMA).abs() < 1e-13);
        assert!((digamma(0.5) + EULER_GAMMA + 2.0 * 2.0_f64.ln()).abs() < 1e-13);
    }

    #[test]
    fn polygamma_anchors() {
        assert!((polygamma(1, 1.0) - PI * PI / 6.0).abs() < 1e-12);
        assert!((polygamma(1, 0.5) - PI * PI / 2.0).abs() < 1e-12);
        let two_zeta3 = 2.0 * 1.202_056_903_159_594;
        assert!((polygamma(2, 1.0) + two_zeta3).abs() < 1e-12);
        // psi^(3)(1) = pi^4 / 15.
        assert!((polygamma(3, 1.0) - PI.powi(4) / 15.0).abs() < 1e-11);
    }

    #[test]
    fn special_value_anchors() {
        assert!((zeta_int(2) - PI * PI / 6.0).abs() < 1e-13);
        assert!((zeta_int(3) - 1.202_056_903_159_594).abs() < 1e-13);
        assert!((dirichlet_beta(1) - PI / 4.0).abs() < 1e-13);
        assert!((dirichlet_beta(2) - CATALAN).abs() < 1e-13);
        assert!((dirichlet_beta(3) - PI.powi(3) / 32.0).abs() < 1e-13);
    }

    #[test]
    fn alternating_sum_ln2() {
        let v = alt_sum(48, |j| 1.0 / (j as f64 + 1.0));
        assert!((v - 2.0_f64.ln()).abs() < 1e-14);
    }
}
