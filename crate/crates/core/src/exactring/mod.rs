//! Exact scalars: `ℤ[δ]`, its fraction field `ℚ(δ)`, and the subring
//!
//! ```text
//! K = { f/g : f, g ∈ ℤ[δ], g monic, deg f ≤ deg g }
//! ```
//!
//! which contains `ℤ[δ⁻¹]` and has `K / Kδ⁻¹ ≅ ℤ`.

mod poly;
mod ratfunc;

pub use poly::{poly_gcd, Polynomial};
pub use ratfunc::{common_denominator, ArithOp, RationalFunction};
pub(crate) use ratfunc::{inv_mod, mul_mod};

/// Specialisation target once `δ` is fixed.
pub type Rational = num_rational::BigRational;
