//! Exact computer algebra for the level-4 double Eisenstein series:
//! truncated q-expansions over a symbolic L-value coefficient ring,
//! coefficient-wise verification of the product and decomposition
//! identities, the period-polynomial linear algebra with its determinant
//! and 2-adic valuation checks, and the relation vectors among the
//! depth-2 constants together with their numeric validation.
//!
//! Layout:
//! - [`rational`], [`gaussian`], [`lform`], [`matrix`]: exact scalars, the
//!   symbolic coefficient ring, and dense rational linear algebra.
//! - [`special`]: Bernoulli/Euler machinery, divisor sums, closed-form
//!   normalized L-values.
//! - [`qseries`], [`eisenstein`]: truncated series and the assembly of the
//!   depth-1/depth-2 q-expansions.
//! - [`verifier`]: the exact identity checks and the lattice oracle.
//! - [`period`]: polynomial spaces under the 2x2 action, rank and kernel
//!   statements, the period matrix.
//! - [`relations`], [`ttilde`]: relation vectors, conjectural polynomial
//!   constructions, and floating-point constant-term checks.

#![allow(clippy::manual_is_multiple_of)]

pub mod error;
pub mod rational;
pub mod gaussian;
pub mod lform;
pub mod matrix;
pub mod poly;
pub mod special;
pub mod qseries;
pub mod eisenstein;
pub mod numerics;
pub mod period;
pub mod relations;
pub mod ttilde;
pub mod verifier;

pub use error::{Error, Result};
pub use gaussian::GaussianRational;
pub use lform::{lform_imag, LForm, LGen};
pub use matrix::RationalMatrix;
pub use qseries::{ConstTerm, QSeries};
pub use rational::{Ord2, Rational};
