//! Rational approximation of the inverse square root of sectorial operators.
//!
//! The scalar identity
//!
//! ```text
//! λ^{-1/2} = (4√τ/π) ( ∫₋₁¹ dt / (4τ + λ(t+1)²) + ∫₋₁¹ dt / (τ(t+1)² + 4λ) )
//! ```
//!
//! is discretized with an n-point Gauss-Legendre rule, which yields a rational
//! function of type (2n-1, 2n) with 2n real negative poles. Applying it to an
//! operator costs one shifted linear solve per pole.
//!
//! Modules:
//! - [`gauss`]: Gauss-Legendre rules on [-1, 1].
//! - [`rational`]: the approximant in partial-fraction form, plus the general
//!   λ^{-α} quadrature.
//! - [`errmodel`]: pole-based scalar error estimate.
//! - [`params`]: sector constants, Lambert-W, choice of τ and a priori bounds.
//! - [`opfun`]: operators, shifted solves, test matrices and exact oracles.

pub mod errmodel;
pub mod error;
pub mod gauss;
pub mod opfun;
pub mod params;
pub mod rational;

pub use error::{Error, Result};
pub use num_complex::Complex64;
