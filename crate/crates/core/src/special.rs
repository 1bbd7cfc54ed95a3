//! Bernoulli and Euler numbers and polynomials, character divisor sums,
//! odd power sums, and the closed-form normalized L-values.
//!
//! Conventions, fixed once for the whole crate:
//! - Bernoulli numbers use the generating function `t e^t / (e^t - 1)`,
//!   so `B_1 = +1/2`.
//! - Euler numbers come from `2 / (e^t + e^{-t})`.
//! - "Normalized" L-values absorb the `(2*pi*i)^{-k}` prefactor, so every
//!   value materialized here lies in Q or Q(i). Raw transcendental values
//!   never appear.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::poly::Poly;
use crate::rational::{binomial, factorial, Rational};

/// The two Dirichlet characters modulo 4 used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Character {
    /// Trivial character mod 4: 1 on odd integers, 0 on even.
    Chi0,
    /// Nontrivial character mod 4: +1 at 1, -1 at 3 (mod 4), 0 on even.
    Chi4,
}

impl Character {
    pub fn eval(self, n: i64) -> i64 {
        match (self, n.rem_euclid(4)) {
            (Character::Chi0, 1) | (Character::Chi0, 3) => 1,
            (Character::Chi4, 1) => 1,
            (Character::Chi4, 3) => -1,
            _ => 0,
        }
    }
}

/// `chi4(n)` as a bare integer, accepting any sign of `n`.
pub fn chi4(n: i64) -> i64 {
    Character::Chi4.eval(n)
}

/// `chi0(n)`: 1 on odd, 0 on even.
pub fn chi0(n: i64) -> i64 {
    Character::Chi0.eval(n)
}

static BERNOULLI_CACHE: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
static EULER_CACHE: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

/// `B_n` with `B_1 = +1/2`.
pub fn bernoulli(n: usize) -> Rational {
    {
        let cache = BERNOULLI_CACHE.read().unwrap();
        if let Some(b) = cache.get(n) {
            return b.clone();
        }
    }
    let mut cache = BERNOULLI_CACHE.write().unwrap();
    if cache.is_empty() {
        cache.push(Rational::one());
    }
    // Standard recurrence for the B_1 = -1/2 convention; only B_1 differs
    // between the two conventions, and we store +1/2.
    while cache.len() <= n {
        let m = cache.len();
        let mut acc = Rational::zero();
        for (j, bj) in cache.iter().enumerate() {
            let mut term = Rational::from(&binomial(m as u64 + 1, j as u64)) * bj;
            if j == 1 {
                // The cache stores B_1 = +1/2; the recurrence needs -1/2.
                term = -term;
            }
            acc += &term;
        }
        let mut b = -acc / Rational::from(m as i64 + 1);
        if m == 1 {
            b = -b;
        }
        cache.push(b);
    }
    cache[n].clone()
}

/// `E_n` from `2 / (e^t + e^{-t})`; zero for odd `n`.
pub fn euler_number(n: usize) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    {
        let cache = EULER_CACHE.read().unwrap();
        if let Some(e) = cache.get(n / 2) {
            return e.clone();
        }
    }
    let mut cache = EULER_CACHE.write().unwrap();
    if cache.is_empty() {
        cache.push(BigInt::one());
    }
    // sum_{j<=m} C(2m, 2j) E_{2j} = 0 for m >= 1.
    while cache.len() <= n / 2 {
        let m = cache.len();
        let mut acc = BigInt::zero();
        for (j, ej) in cache.iter().enumerate() {
            acc += binomial(2 * m as u64, 2 * j as u64) * ej;
        }
        cache.push(-acc);
    }
    cache[n / 2].clone()
}

/// Euler polynomial `E_k(x) = sum_n C(k,n) (E_n / 2^n) (x - 1/2)^{k-n}`.
pub fn euler_poly(k: usize, x: &Rational) -> Rational {
    let shifted = x - &Rational::new(1, 2);
    let mut acc = Rational::zero();
    for n in 0..=k {
        let en = euler_number(n);
        if en.is_zero() {
            continue;
        }
        let c = Rational::from(&binomial(k as u64, n as u64))
            * Rational::from(&en)
            * Rational::pow2(-(n as i64));
        acc += &(c * shifted.pow((k - n) as i64));
    }
    acc
}

/// Closed form for `sum_{w=1}^{n-1} chi0(w) w^{k-1}` (even `n` only):
/// `(1/k) sum_{j<k} C(k,j) B_j (1 - 2^{j-1}) n^{k-j}`.
pub fn power_sum_chi0(n: u64, k: u32) -> Result<Rational> {
    if n % 2 != 0 || n == 0 {
        return Err(Error::Parity(format!("power_sum_chi0 needs even n >= 2, got {n}")));
    }
    assert!(k >= 1);
    let nr = Rational::from(n as i64);
    let mut acc = Rational::zero();
    for j in 0..k {
        let factor = Rational::one() - Rational::pow2(j as i64 - 1);
        if factor.is_zero() {
            continue;
        }
        acc += &(Rational::from(&binomial(k as u64, j as u64))
            * bernoulli(j as usize)
            * factor
            * nr.pow((k - j) as i64));
    }
    Ok(acc / Rational::from(k as i64))
}

/// Normalized `(2*pi*i)^{-k} L(chi0, k)` for even `k >= 2`:
/// `-(1 - 2^{-k}) B_k / (2 k!)`.
pub fn ell0_even(k: u32) -> Result<Rational> {
    if k % 2 != 0 || k < 2 {
        return Err(Error::Parity(format!("ell0_even needs even k >= 2, got {k}")));
    }
    let b = bernoulli(k as usize);
    let num = -(Rational::one() - Rational::pow2(-(k as i64))) * b;
    Ok(num / (Rational::from(2) * Rational::from(&factorial(k as u64))))
}

/// Normalized `(2*pi*i)^{-k} L(chi4, k)` for odd `k >= 1`:
/// `-i E_{k-1} / (2^{2k+1} (k-1)!)`.
pub fn ell4_odd(k: u32) -> Result<GaussianRational> {
    if k % 2 != 1 {
        return Err(Error::Parity(format!("ell4_odd needs odd k >= 1, got {k}")));
    }
    let e = euler_number(k as usize - 1);
    let mag = Rational::from(&e)
        / (Rational::pow2(2 * k as i64 + 1) * Rational::from(&factorial(k as u64 - 1)));
    Ok(GaussianRational::new(Rational::zero(), -mag))
}

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n % d == 0)
}

/// `sigma~_j(n) = sum_{d|n} chi4(d) d^j`.
pub fn sigma_chi4(j: u32, n: u64) -> BigInt {
    divisors(n)
        .map(|d| BigInt::from(chi4(d as i64)) * BigInt::from(d).pow(j))
        .sum()
}

/// `sum_{d|n, d odd} d^j`.
pub fn sigma_chi0(j: u32, n: u64) -> BigInt {
    divisors(n)
        .filter(|d| d % 2 == 1)
        .map(|d| BigInt::from(d).pow(j))
        .sum()
}

/// `sum_{d|n} chi4(d+1) d^j`: +1 for `d = 0 (mod 4)`, -1 for `d = 2 (mod 4)`.
pub fn sigma_chi4_shift(j: u32, n: u64) -> BigInt {
    divisors(n)
        .map(|d| BigInt::from(chi4(d as i64 + 1)) * BigInt::from(d).pow(j))
        .sum()
}

/// `B0_n(X) = sum_{j even, j <= n} C(n,j) B_j X^{n-j}`.
pub fn b0_poly(n: usize) -> Poly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for j in (0..=n).step_by(2) {
        coeffs[n - j] = Rational::from(&binomial(n as u64, j as u64)) * bernoulli(j);
    }
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(1), Rational::new(1, 2));
        assert_eq!(bernoulli(2), Rational::new(1, 6));
        assert_eq!(bernoulli(12), Rational::new(-691, 2730));
        for n in (3..=41).step_by(2) {
            assert!(bernoulli(n).is_zero(), "B_{n} should vanish");
        }
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_number(0), BigInt::from(1));
        assert_eq!(euler_number(1), BigInt::zero());
        assert_eq!(euler_number(2), BigInt::from(-1));
        assert_eq!(euler_number(4), BigInt::from(5));
        assert_eq!(euler_number(6), BigInt::from(-61));
        for n in (1..=41).step_by(2) {
            assert!(euler_number(n).is_zero(), "E_{n} should vanish");
        }
    }

    #[test]
    fn euler_poly_values() {
        assert_eq!(euler_poly(0, &Rational::from(9)), Rational::one());
        assert_eq!(euler_poly(1, &Rational::from(7)), Rational::new(13, 2));
        // Reflection E_k(1-x) = (-1)^k E_k(x) at k = 3, x = 1/3.
        let x = Rational::new(1, 3);
        let lhs = euler_poly(3, &(Rational::one() - x.clone()));
        assert_eq!(lhs, -euler_poly(3, &x));
    }

    #[test]
    fn euler_reflection_general() {
        for k in 0..=8 {
            for num in -3i64..=3 {
                let x = Rational::new(num, 5);
                let lhs = euler_poly(k, &(Rational::one() - x.clone()));
                let rhs = euler_poly(k, &x);
                let rhs = if k % 2 == 0 { rhs } else { -rhs };
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum_chi0(4, 2).unwrap(), Rational::from(4));
        assert_eq!(power_sum_chi0(2, 1).unwrap(), Rational::from(1));
        assert_eq!(power_sum_chi0(6, 3).unwrap(), Rational::from(35));
        assert!(power_sum_chi0(5, 2).is_err());
    }

    #[test]
    fn power_sum_matches_direct_sum() {
        for n in (2..=200u64).step_by(2) {
            for k in 1..=10u32 {
                let direct: Rational = (1..n)
                    .filter(|w| w % 2 == 1)
                    .map(|w| Rational::from(w as i64).pow(k as i64 - 1))
                    .sum();
                assert_eq!(power_sum_chi0(n, k).unwrap(), direct, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn ell0_values() {
        assert_eq!(ell0_even(2).unwrap(), Rational::new(-1, 32));
        assert_eq!(ell0_even(4).unwrap(), Rational::new(1, 1536));
        assert!(ell0_even(3).is_err());
    }

    #[test]
    fn ell4_values() {
        let minus_i_over_8 = GaussianRational::new(Rational::zero(), Rational::new(-1, 8));
        assert_eq!(ell4_odd(1).unwrap(), minus_i_over_8);
        let i_over_256 = GaussianRational::new(Rational::zero(), Rational::new(1, 256));
        assert_eq!(ell4_odd(3).unwrap(), i_over_256);
        assert!(ell4_odd(2).is_err());
    }

    #[test]
    fn characters_are_completely_multiplicative() {
        for chi in [Character::Chi0, Character::Chi4] {
            for m in -20i64..=20 {
                for n in -20i64..=20 {
                    assert_eq!(chi.eval(m * n), chi.eval(m) * chi.eval(n), "{chi:?} m={m} n={n}");
                }
            }
        }
        assert_eq!(chi4(-1), -1);
        assert_eq!(chi0(-3), 1);
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_chi4(0, 1), BigInt::from(1));
        assert_eq!(sigma_chi4(0, 5), BigInt::from(2));
        assert_eq!(sigma_chi4(2, 3), BigInt::from(-8));
        assert_eq!(sigma_chi0(1, 6), BigInt::from(4));
        assert_eq!(sigma_chi0(0, 8), BigInt::from(1));
        assert_eq!(sigma_chi0(7, 1), BigInt::from(1));
        assert_eq!(sigma_chi4_shift(3, 2), BigInt::from(-8));
        assert_eq!(sigma_chi4_shift(5, 9), BigInt::zero());
        assert_eq!(sigma_chi4_shift(1, 4), BigInt::from(2));
    }

    #[test]
    fn b0_poly_examples() {
        assert_eq!(b0_poly(0), Poly::new(vec![Rational::one()]));
        // X^2 + 1/6
        assert_eq!(
            b0_poly(2),
            Poly::new(vec![Rational::new(1, 6), Rational::zero(), Rational::one()])
        );
        // X^4 + X^2 - 1/30
        assert_eq!(
            b0_poly(4),
            Poly::new(vec![
                Rational::new(-1, 30),
                Rational::zero(),
                Rational::one(),
                Rational::zero(),
                Rational::one(),
            ])
        );
    }

    /// Bernoulli-Euler identity: for even k,
    /// B_k/k (1 - 2^{-k}) = 4^{-k} sum_{r=1}^{k-1} C(k-2, r-1) E_{k-r-1} E_{r-1}.
    #[test]
    fn bernoulli_euler_identity_through_100() {
        for k in (4..=100usize).step_by(2) {
            let lhs = bernoulli(k) / Rational::from(k as i64)
                * (Rational::one() - Rational::pow2(-(k as i64)));
            let mut sum = Rational::zero();
            for r in 1..k {
                sum += &(Rational::from(&binomial(k as u64 - 2, r as u64 - 1))
                    * Rational::from(&euler_number(k - r - 1))
                    * Rational::from(&euler_number(r - 1)));
            }
            let rhs = Rational::pow2(-2 * k as i64) * sum;
            assert_eq!(lhs, rhs, "k={k}");
            if k == 4 {
                assert_eq!(lhs, Rational::new(-1, 128));
            }
        }
    }

    /// Character power-sum identity: for odd n and k >= 1,
    /// sum_{w<n} chi4(w+1) (w/2)^k = chi4(n)/2 E_k((n+1)/2) - (E_k(1) - E_k(0))/4.
    #[test]
    fn euler_polynomial_character_sums() {
        for n in (1..=99i64).step_by(2) {
            for k in 1..=12usize {
                let lhs: Rational = (1..n)
                    .map(|w| {
                        Rational::from(chi4(w + 1)) * Rational::new(w, 2).pow(k as i64)
                    })
                    .sum();
                let ek_mid = euler_poly(k, &Rational::new(n + 1, 2));
                let ek1 = euler_poly(k, &Rational::one());
                let ek0 = euler_poly(k, &Rational::zero());
                let rhs = Rational::from(chi4(n)) * ek_mid / Rational::from(2)
                    - (ek1 - ek0) / Rational::from(4);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    /// Alternating binomial identity:
    /// sum_{v<=mu} (-1)^v C(a+b-v, a) C(mu, v) = C(a+b-mu, b).
    #[test]
    fn alternating_binomial_identity() {
        for a in 0..=12u64 {
            for b in 0..=12u64 {
                for mu in 0..=(a + b).min(12) {
                    let mut lhs = BigInt::zero();
                    for v in 0..=mu {
                        let t = binomial(a + b - v, a) * binomial(mu, v);
                        if v % 2 == 0 {
                            lhs += t;
                        } else {
                            lhs -= t;
                        }
                    }
                    assert_eq!(lhs, binomial(a + b - mu, b), "a={a} b={b} mu={mu}");
                }
            }
        }
    }

    fn seq_strategy(len: usize) -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec((-9i64..=9, 1i64..=4), len)
            .prop_map(|v| v.into_iter().map(|(n, d)| Rational::new(n, d)).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Sequence rearrangement identities behind the shuffle proof, for
        /// arbitrary rational sequences indexed 1..k1+k2-1.
        #[test]
        fn sequence_identities(
            k1 in 1u64..=8,
            k2 in 1u64..=8,
            seeds in seq_strategy(32),
        ) {
            let len = (k1 + k2 - 1) as usize;
            let a = &seeds[..len];
            let b = &seeds[seeds.len() - len..];
            let idx = |s: &[Rational], i: u64| -> Rational { s[(i - 1) as usize].clone() };

            // First identity.
            let mut lhs = Rational::zero();
            for i in 0..k2 {
                let outer = Rational::from(&binomial(k1 + i - 1, k1 - 1));
                for j in 0..(k1 + i) {
                    let mut t = outer.clone()
                        * Rational::from(&binomial(k2 - i + j - 1, j))
                        * idx(a, k2 - i + j)
                        * idx(b, k1 + i - j);
                    if (k2 - i) % 2 == 1 {
                        t = -t;
                    }
                    lhs += &t;
                }
            }
            let mut rhs = Rational::zero();
            for i in 0..k1 {
                rhs += &(Rational::from(&binomial(k2 + i - 1, k2 - 1))
                    * idx(a, k1 - i)
                    * idx(b, k2 + i));
            }
            prop_assert_eq!(lhs, -rhs);

            // Second identity.
            let mut lhs2 = Rational::zero();
            for i in 0..k2 {
                let outer = Rational::from(&binomial(k1 + i - 1, k1 - 1));
                for j in 0..(k2 - i) {
                    let mut t = outer.clone()
                        * Rational::from(&binomial(k1 + i + j - 1, j))
                        * idx(a, k1 + i + j)
                        * idx(b, k2 - i - j);
                    if j % 2 == 1 {
                        t = -t;
                    }
                    lhs2 += &t;
                }
            }
            prop_assert_eq!(lhs2, idx(a, k1) * idx(b, k2));
        }
    }
}
