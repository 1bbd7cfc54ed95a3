//! The symbolic coefficient ring: finite linear combinations of formal
//! L-value generators with Gaussian-rational coefficients.
//!
//! Generators stand for real constants:
//! - `One` is the rational unit.
//! - `Zodd(m)` (odd `m >= 3`) is the imaginary part of `(2*pi*i)^-m L(chi0, m)`,
//!   so that the normalized L-value itself equals `i * Zodd(m)`. `Zodd(1)` is
//!   the free constant standing in for the undefined `L(chi0, 1)`; every
//!   assembled series must have zero coordinate on it.
//! - `Leven(m)` (even `m >= 2`) is `(2*pi*i)^-m L(chi4, m)`, which is real.
//!
//! Products of two forms are defined only when at least one factor is
//! supported on `One`; anything else signals an assembly bug.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::rational::Rational;

/// A formal L-value generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LGen {
    One,
    /// `Zodd(m)`, odd `m >= 1`.
    Zodd(u32),
    /// `Leven(m)`, even `m >= 2`.
    Leven(u32),
}

impl LGen {
    pub fn zodd(m: u32) -> Self {
        assert!(m % 2 == 1, "Zodd generator index must be odd, got {m}");
        LGen::Zodd(m)
    }

    pub fn leven(m: u32) -> Self {
        assert!(m % 2 == 0 && m >= 2, "Leven generator index must be even >= 2, got {m}");
        LGen::Leven(m)
    }

    /// Serialized name: "1", "Z1", "Z3", ..., "L2", "L4", ...
    pub fn name(&self) -> String {
        match self {
            LGen::One => "1".to_string(),
            LGen::Zodd(m) => format!("Z{m}"),
            LGen::Leven(m) => format!("L{m}"),
        }
    }
}

/// Finite map from generators to Gaussian-rational coefficients. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LForm {
    terms: BTreeMap<LGen, GaussianRational>,
}

impl LForm {
    pub fn zero() -> Self {
        LForm::default()
    }

    pub fn one() -> Self {
        LForm::constant(GaussianRational::one())
    }

    /// The form `c * One`.
    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(LGen::One, c);
        }
        LForm { terms }
    }

    /// The form `c * g`.
    pub fn term(g: LGen, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(g, c);
        }
        LForm { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the form is supported on `One` alone (i.e. an element of Q(i)).
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|g| *g == LGen::One)
    }

    /// Coefficient of a generator (zero if absent).
    pub fn coeff(&self, g: LGen) -> GaussianRational {
        self.terms.get(&g).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LGen, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn generators(&self) -> impl Iterator<Item = &LGen> {
        self.terms.keys()
    }

    fn insert_add(&mut self, g: LGen, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(g).or_insert_with(GaussianRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add(&self, rhs: &LForm) -> LForm {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.insert_add(*g, c);
        }
        out
    }

    pub fn sub(&self, rhs: &LForm) -> LForm {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LForm {
        LForm {
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &GaussianRational) -> LForm {
        if s.is_zero() {
            return LForm::zero();
        }
        LForm {
            terms: self.terms.iter().map(|(g, c)| (*g, c * s)).collect(),
        }
    }

    /// Product, defined only when at least one factor is supported on `One`.
    pub fn try_mul(&self, rhs: &LForm) -> Result<LForm> {
        if self.is_scalar() {
            return Ok(rhs.scale(&self.coeff(LGen::One)));
        }
        if rhs.is_scalar() {
            return Ok(self.scale(&rhs.coeff(LGen::One)));
        }
        Err(Error::GeneratorProduct)
    }

    /// Coordinate-wise imaginary part: every coefficient `a + bi` becomes
    /// the real coefficient `b`. Generators stand for real constants, so
    /// this is the imaginary part of the value the form denotes.
    pub fn imag(&self) -> LForm {
        LForm {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| !c.im.is_zero())
                .map(|(g, c)| (*g, GaussianRational::from_rational(c.im.clone())))
                .collect(),
        }
    }

    /// Coordinate-wise real part.
    pub fn real(&self) -> LForm {
        LForm {
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| !c.re.is_zero())
                .map(|(g, c)| (*g, GaussianRational::from_rational(c.re.clone())))
                .collect(),
        }
    }

    /// Multiply every coefficient by i.
    pub fn times_i(&self) -> LForm {
        LForm {
            terms: self.terms.iter().map(|(g, c)| (*g, c.times_i())).collect(),
        }
    }

    /// When the form is a rational multiple of `One`, extract it.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if !self.is_scalar() {
            return None;
        }
        let c = self.coeff(LGen::One);
        c.is_real().then_some(c.re)
    }
}

impl fmt::Display for LForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(g, c)| format!("({})*{}", c, g.name()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for LForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (g, c) in &self.terms {
            map.serialize_entry(&g.name(), c)?;
        }
        map.end()
    }
}

/// Free-function form of [`LForm::imag`].
pub fn lform_imag(f: &LForm) -> LForm {
    f.imag()
}
