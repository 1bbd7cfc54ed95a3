//! Truncated formal power series in `q` over the symbolic linear-form ring,
//! with a separately tracked constant-term descriptor.
//!
//! Coefficients are stored for `q^1 .. q^N`; the constant term is either an
//! exact linear form, an opaque marker for a constant with no elementary
//! closed form, or absent (dropped by an operation that could not represent
//! it). Arithmetic never reads past the truncation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::lform::LForm;

/// Constant-term descriptor of a truncated series.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum ConstTerm {
    /// Exact symbolic constant.
    Exact(LForm),
    /// The constant of the depth-1 series of weight `k`; no elementary
    /// closed form for even `k`.
    OpaqueT(u32),
    /// The constant of the depth-2 series of weight `(k1, k2)`.
    OpaqueT2(u32, u32),
    /// No constant tracked.
    Absent,
}

impl ConstTerm {
    pub fn exact(&self) -> Option<&LForm> {
        match self {
            ConstTerm::Exact(f) => Some(f),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        match self {
            ConstTerm::Exact(f) => format!("Exact({f})"),
            ConstTerm::OpaqueT(k) => format!("OpaqueT({k})"),
            ConstTerm::OpaqueT2(a, b) => format!("OpaqueT2({a},{b})"),
            ConstTerm::Absent => "Absent".to_string(),
        }
    }
}

/// Truncated q-series over [`LForm`] coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct QSeries {
    trunc: usize,
    /// coeffs[i] is the coefficient of q^{i+1}.
    coeffs: Vec<LForm>,
    constant: ConstTerm,
}

impl QSeries {
    pub fn zero(trunc: usize, constant: ConstTerm) -> Self {
        assert!(trunc >= 1, "truncation must be >= 1");
        QSeries { trunc, coeffs: vec![LForm::zero(); trunc], constant }
    }

    /// Builds coefficients of `q^1..q^N` from a function of the exponent.
    pub fn from_fn(trunc: usize, constant: ConstTerm, f: impl Fn(u64) -> LForm) -> Self {
        assert!(trunc >= 1, "truncation must be >= 1");
        QSeries {
            trunc,
            coeffs: (1..=trunc as u64).map(f).collect(),
            constant,
        }
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn constant(&self) -> &ConstTerm {
        &self.constant
    }

    /// Coefficient of `q^n`, `1 <= n <= truncation`.
    pub fn coeff(&self, n: usize) -> &LForm {
        assert!((1..=self.trunc).contains(&n), "index {n} out of 1..={}", self.trunc);
        &self.coeffs[n - 1]
    }

    pub fn coeffs(&self) -> &[LForm] {
        &self.coeffs
    }

    /// All nonconstant coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LForm::is_zero)
    }

    /// Same series with the constant descriptor replaced by `Absent`.
    pub fn without_constant(&self) -> QSeries {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.clone(),
            constant: ConstTerm::Absent,
        }
    }

    pub fn with_constant(&self, constant: ConstTerm) -> QSeries {
        QSeries { trunc: self.trunc, coeffs: self.coeffs.clone(), constant }
    }

    /// Coefficient-wise sum. Constants must be addable: Exact + Exact, or
    /// either side Absent (the result is then Absent).
    pub fn add(&self, rhs: &QSeries) -> Result<QSeries> {
        if self.trunc != rhs.trunc {
            return Err(Error::TruncationMismatch(self.trunc, rhs.trunc));
        }
        let constant = match (&self.constant, &rhs.constant) {
            (ConstTerm::Exact(a), ConstTerm::Exact(b)) => ConstTerm::Exact(a.add(b)),
            (ConstTerm::Absent, _) | (_, ConstTerm::Absent) => ConstTerm::Absent,
            (a, b) => {
                return Err(Error::IncompatibleConstants(format!(
                    "{} + {}",
                    a.describe(),
                    b.describe()
                )))
            }
        };
        Ok(QSeries {
            trunc: self.trunc,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
            constant,
        })
    }

    pub fn sub(&self, rhs: &QSeries) -> Result<QSeries> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> QSeries {
        let constant = match &self.constant {
            ConstTerm::Exact(f) => ConstTerm::Exact(f.neg()),
            other => other.clone(),
        };
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(LForm::neg).collect(),
            constant,
        }
    }

    /// Scalar multiple by an exact Gaussian rational.
    pub fn scale(&self, s: &GaussianRational) -> QSeries {
        let constant = match &self.constant {
            ConstTerm::Exact(f) => ConstTerm::Exact(f.scale(s)),
            other => other.clone(),
        };
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
            constant,
        }
    }

    /// Cauchy product truncated at N, including constant x nonconstant
    /// cross terms. Both constants must be Exact. When the product of the
    /// two constants is itself not representable (generator x generator),
    /// the result's constant is Absent; the q^1..q^N coefficients are
    /// always exact.
    pub fn mul(&self, rhs: &QSeries) -> Result<QSeries> {
        if self.trunc != rhs.trunc {
            return Err(Error::TruncationMismatch(self.trunc, rhs.trunc));
        }
        let (ca, cb) = match (&self.constant, &rhs.constant) {
            (ConstTerm::Exact(a), ConstTerm::Exact(b)) => (a, b),
            (a, b) => {
                return Err(Error::OpaqueConstant(format!(
                    "{} * {}",
                    a.describe(),
                    b.describe()
                )))
            }
        };
        let mut coeffs = vec![LForm::zero(); self.trunc];
        for (n, c) in coeffs.iter_mut().enumerate() {
            let n = n + 1;
            let mut acc = ca.try_mul(&rhs.coeffs[n - 1])?;
            acc = acc.add(&cb.try_mul(&self.coeffs[n - 1])?);
            for i in 1..n {
                acc = acc.add(&self.coeffs[i - 1].try_mul(&rhs.coeffs[n - i - 1])?);
            }
            *c = acc;
        }
        let constant = match ca.try_mul(cb) {
            Ok(f) => ConstTerm::Exact(f),
            Err(Error::GeneratorProduct) => ConstTerm::Absent,
            Err(e) => return Err(e),
        };
        Ok(QSeries { trunc: self.trunc, coeffs, constant })
    }

    /// Coordinate-wise imaginary part of every nonconstant coefficient;
    /// the constant is dropped.
    pub fn imag(&self) -> QSeries {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(LForm::imag).collect(),
            constant: ConstTerm::Absent,
        }
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| i + 1)
    }
}
