//! Assembly of the normalized q-expansions of the depth-1 and depth-2
//! series and of the even-weight Eisenstein series, with every `(2*pi*i)`
//! power absorbed at assembly time so that all coefficients live in the
//! symbolic linear-form ring.
//!
//! Naming of the raw building blocks: `h` is the divisor-sum series with
//! trivial-character weights, `h_tilde` the one with `chi4` weights, and
//! `g_tilde` the one with shifted `chi4(d+1)` weights. A block of kind
//! `X` and weight `m` has reduced coefficient the divisor sum of weight
//! `m-1` at `q^n`.

use num_bigint::BigInt;

use crate::error::Result;
use crate::gaussian::GaussianRational;
use crate::lform::{LForm, LGen};
use crate::qseries::{ConstTerm, QSeries};
use crate::rational::{binomial, factorial, Rational};
use crate::special::{
    bernoulli, chi0, chi4, ell0_even, ell4_odd, sigma_chi0, sigma_chi4, sigma_chi4_shift,
};

/// Kind of a raw divisor-sum block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// Trivial-character divisor sums.
    H,
    /// `chi4` divisor sums.
    HTilde,
    /// Shifted `chi4(d+1)` divisor sums.
    GTilde,
}

/// A raw block: kind plus weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockSpec {
    pub kind: BlockKind,
    pub weight: u32,
}

impl BlockSpec {
    pub fn new(kind: BlockKind, weight: u32) -> Self {
        assert!(weight >= 1);
        BlockSpec { kind, weight }
    }

    /// The integer divisor sum appearing as the reduced `q^n` coefficient.
    pub fn reduced_coeff(&self, n: u64) -> BigInt {
        match self.kind {
            BlockKind::H => sigma_chi0(self.weight - 1, n),
            BlockKind::HTilde => sigma_chi4(self.weight - 1, n),
            BlockKind::GTilde => sigma_chi4_shift(self.weight - 1, n),
        }
    }
}

/// Normalized L-value of the trivial character as a linear form:
/// exact for even argument, the generator `i * Zodd(m)` for odd.
fn z0(m: u32) -> LForm {
    if m % 2 == 0 {
        LForm::constant(GaussianRational::from_rational(ell0_even(m).expect("even m")))
    } else {
        LForm::term(LGen::zodd(m), GaussianRational::i())
    }
}

/// Normalized L-value of `chi4` as a linear form: exact for odd argument,
/// the generator `Leven(m)` for even.
fn z4(m: u32) -> LForm {
    if m % 2 == 1 {
        LForm::constant(ell4_odd(m).expect("odd m"))
    } else {
        LForm::term(LGen::leven(m), GaussianRational::one())
    }
}

fn sign(parity: u32) -> Rational {
    if parity % 2 == 0 {
        Rational::one()
    } else {
        Rational::from(-1)
    }
}

fn inv_factorial(n: u64) -> Rational {
    Rational::one() / Rational::from(&factorial(n))
}

/// Depth-1 series of weight `k >= 1`, truncated at `q^N`.
///
/// Constant term: `2 * (2*pi*i)^{-k} L(chi4, k)`, exact for odd `k`, the
/// generator form `2 * Leven(k)` for even `k`. Coefficient of `q^n`:
/// `(-1)^k i 4^{1-k} sigma~_{k-1}(n) / (k-1)!`.
pub fn eis_h(k: u32, trunc: usize) -> QSeries {
    assert!(k >= 1);
    let block = BlockSpec::new(BlockKind::HTilde, k);
    let constant = ConstTerm::Exact(z4(k).scale(&GaussianRational::from_int(2)));
    let factor = GaussianRational::i()
        .scale(&(sign(k) * Rational::from(4).pow(1 - k as i64) * inv_factorial(k as u64 - 1)));
    QSeries::from_fn(trunc, constant, |n| {
        LForm::constant(factor.scale(&Rational::from(&block.reduced_coeff(n))))
    })
}

/// Even-weight Eisenstein series, `k >= 4` even, truncated at `q^N`.
///
/// Constant term: `(2*pi*i)^{-k} L(chi0, k)`. Coefficient of `q^n`:
/// `2^{1-2k} sigma-shift_{k-1}(n) / (k-1)!`.
pub fn eis_g(k: u32, trunc: usize) -> Result<QSeries> {
    let constant_value = ell0_even(k)?; // enforces even parity
    if k < 4 {
        return Err(crate::error::Error::Range(format!("eis_g needs k >= 4, got {k}")));
    }
    let block = BlockSpec::new(BlockKind::GTilde, k);
    let constant = ConstTerm::Exact(LForm::constant(GaussianRational::from_rational(
        constant_value,
    )));
    let factor = Rational::pow2(1 - 2 * k as i64) * inv_factorial(k as u64 - 1);
    Ok(QSeries::from_fn(trunc, constant, |n| {
        LForm::constant(GaussianRational::from_rational(
            &factor * &Rational::from(&block.reduced_coeff(n)),
        ))
    }))
}

/// The reduced strictly-ordered double sum: coefficient of `q^n` is
///
/// ```text
/// sum_{m1<m2, n1,n2>=1, n1 m1 + n2 m2 = n} chi4(n1+1) chi0(n2) n1^{k1-1} n2^{k2-1}
///   + (1/2) [k1 = 1] sum_{m2 n2 = n, m2 >= 2} (m2 - 1) chi0(n2) n2^{k2-1}
/// ```
///
/// The second line is the constant-of-`phi~_1` path that only exists at
/// `k1 = 1`. Coefficients are plain Gaussian rationals; the constant is
/// Absent (the full double sum has none).
pub fn omega_double_sum(k1: u32, k2: u32, trunc: usize) -> QSeries {
    assert!(k1 >= 1 && k2 >= 1);
    QSeries::from_fn(trunc, ConstTerm::Absent, |n| {
        let mut acc = Rational::zero();
        // Main path: n1*m1 + n2*m2 = n with m1 < m2 and n1, n2 >= 1.
        for m2 in 2..=n {
            for n2 in 1..=(n - 1) / m2 {
                if chi0(n2 as i64) == 0 {
                    continue;
                }
                let rem = n - n2 * m2;
                let w2 = BigInt::from(n2).pow(k2 - 1);
                for m1 in 1..m2 {
                    if rem % m1 != 0 {
                        continue;
                    }
                    let n1 = rem / m1;
                    let c = chi4(n1 as i64 + 1);
                    if c == 0 {
                        continue;
                    }
                    let term = BigInt::from(c) * BigInt::from(n1).pow(k1 - 1) * &w2;
                    acc += &Rational::from(&term);
                }
            }
        }
        // Constant-of-phi~ path, only at k1 = 1.
        if k1 == 1 {
            let mut extra = Rational::zero();
            for m2 in 2..=n {
                if n % m2 != 0 {
                    continue;
                }
                let n2 = n / m2;
                if chi0(n2 as i64) == 0 {
                    continue;
                }
                extra += &(Rational::from(m2 as i64 - 1)
                    * Rational::from(&BigInt::from(n2).pow(k2 - 1)));
            }
            acc += &(extra / Rational::from(2));
        }
        LForm::constant(GaussianRational::from_rational(acc))
    })
}

/// Depth-2 series of weight `(k1, k2)`, all `k1, k2 >= 1`, truncated at
/// `q^N`. The constant term is the opaque depth-2 constant; the `q^n`
/// coefficients are exact linear forms assembled from the four non-constant
/// pieces of the Fourier expansion.
pub fn eis_h2(k1: u32, k2: u32, trunc: usize) -> QSeries {
    assert!(k1 >= 1 && k2 >= 1);
    let omega = omega_double_sum(k1, k2, trunc);

    // Per-n integer divisor sums used by the single-block pieces.
    let t2_factor = z0(k1).scale(&GaussianRational::from_rational(
        sign(k2 + 1) * Rational::pow2(3 - 2 * k2 as i64) * inv_factorial(k2 as u64 - 1),
    ));

    // j-indexed factors of the two partial-fraction sums, each paired with
    // the raw block whose divisor sums it multiplies.
    let t4_factors: Vec<(LForm, BlockSpec)> = (0..k2)
        .map(|j| {
            let f = sign(k1 + k2 - j - 1)
                * Rational::pow2(3 + 2 * j as i64 - 2 * k2 as i64)
                * Rational::from(&binomial((k1 + j - 1) as u64, (k1 - 1) as u64))
                * inv_factorial((k2 - j - 1) as u64);
            (
                z0(k1 + j).scale(&GaussianRational::from_rational(f)),
                BlockSpec::new(BlockKind::H, k2 - j),
            )
        })
        .collect();
    let t5_factors: Vec<(LForm, BlockSpec)> = (0..k1)
        .map(|j| {
            let f = sign(k1)
                * Rational::pow2(3 + 2 * j as i64 - 2 * k1 as i64)
                * Rational::from(&binomial((k2 + j - 1) as u64, (k2 - 1) as u64))
                * inv_factorial((k1 - j - 1) as u64);
            (
                z4(k2 + j).scale(&GaussianRational::i().scale(&f)),
                BlockSpec::new(BlockKind::HTilde, k1 - j),
            )
        })
        .collect();

    let t3_factor = sign(k1 + k2 + 1)
        * Rational::from(4).pow(2 - (k1 + k2) as i64)
        * inv_factorial(k1 as u64 - 1)
        * inv_factorial(k2 as u64 - 1);

    let t2_block = BlockSpec::new(BlockKind::H, k2);
    QSeries::from_fn(trunc, ConstTerm::OpaqueT2(k1, k2), |n| {
        let mut acc = t2_factor.scale(&GaussianRational::from_rational(Rational::from(
            &t2_block.reduced_coeff(n),
        )));
        for (f, block) in &t4_factors {
            acc = acc.add(&f.scale(&GaussianRational::from_rational(Rational::from(
                &block.reduced_coeff(n),
            ))));
        }
        for (f, block) in &t5_factors {
            acc = acc.add(&f.scale(&GaussianRational::from_rational(Rational::from(
                &block.reduced_coeff(n),
            ))));
        }
        let red = omega
            .coeff(n as usize)
            .as_rational()
            .expect("reduced double sum is rational");
        acc = acc.add(&LForm::constant(GaussianRational::from_rational(
            &t3_factor * &red,
        )));
        acc
    })
}

/// Report of the exact diagonal-product check.
#[derive(Debug, Clone)]
pub struct DiagonalReport {
    pub k1: u32,
    pub k2: u32,
    pub checked_through: usize,
    pub first_failure: Option<(usize, Rational, Rational)>,
}

impl DiagonalReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Compares the direct convolution of the equal-index double block sum
/// against its closed form as a Bernoulli-weighted combination of shifted
/// blocks, exactly, through `q^N`. Both sides are normalized by the common
/// transcendental prefactor, leaving pure rationals.
pub fn verify_diagonal_product(k1: u32, k2: u32, trunc: usize) -> DiagonalReport {
    assert!(k1 >= 1 && k2 >= 1);
    let g_reduced = |w: u32, n: u64| -> Rational {
        Rational::pow2(1 - w as i64)
            * Rational::from(&BlockSpec::new(BlockKind::GTilde, w).reduced_coeff(n))
            * inv_factorial(w as u64 - 1)
    };
    let mut first_failure = None;
    for n in 1..=trunc as u64 {
        // Direct side: sum over m | n of the additive convolution at n/m.
        let mut conv = Rational::zero();
        for m in 1..=n {
            if n % m != 0 {
                continue;
            }
            let v = n / m;
            for n1 in 1..v {
                let n2 = v - n1;
                let c = chi4(n1 as i64) * chi4(n2 as i64);
                if c == 0 {
                    continue;
                }
                let t = BigInt::from(c)
                    * BigInt::from(n1).pow(k1 - 1)
                    * BigInt::from(n2).pow(k2 - 1);
                conv += &Rational::from(&t);
            }
        }
        let lhs = -conv
            * Rational::pow2(2 - (k1 + k2) as i64)
            * inv_factorial(k1 as u64 - 1)
            * inv_factorial(k2 as u64 - 1);

        let mut rhs = g_reduced(k1 + k2, n);
        for j in 0..k1 {
            let b = bernoulli((k2 + j) as usize);
            if b.is_zero() {
                continue;
            }
            let factor = sign(k2)
                * (Rational::pow2(1 - (k2 + j) as i64) - Rational::one())
                * b
                / Rational::from((k2 + j) as i64)
                * inv_factorial(j as u64)
                * inv_factorial(k2 as u64 - 1);
            rhs = rhs - factor * g_reduced(k1 - j, n);
        }
        for j in 0..k2 {
            let b = bernoulli((k1 + j) as usize);
            if b.is_zero() {
                continue;
            }
            let factor = sign(j)
                * (Rational::pow2(1 - (k1 + j) as i64) - Rational::one())
                * b
                / Rational::from((k1 + j) as i64)
                * inv_factorial(j as u64)
                * inv_factorial(k1 as u64 - 1);
            rhs = rhs - factor * g_reduced(k2 - j, n);
        }

        if lhs != rhs && first_failure.is_none() {
            first_failure = Some((n as usize, lhs, rhs));
        }
    }
    DiagonalReport { k1, k2, checked_through: trunc, first_failure }
}
