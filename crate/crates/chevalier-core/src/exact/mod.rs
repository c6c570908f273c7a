//! Exact coefficient rings and sparse exact linear algebra.
//!
//! Everything downstream computes over one of four rings: arbitrary-precision
//! integers ([`Int`]), reduced rationals ([`Rat`]), prime fields ([`Gfp`]) and
//! integer polynomials in one indeterminate `T` ([`IntPoly`]). Matrices are
//! kept sparse ([`SparseMat`]): the generator matrices of even the largest
//! algebra handled here (E₈, 248×248) carry only O(dim) nonzero entries.

mod gfp;
mod linalg;
mod poly;
pub(crate) mod ring;
mod sparse;

pub use gfp::Gfp;
pub use linalg::{rational_kernel, smith_normal_form, solve_rational};
pub use poly::IntPoly;
pub use ring::{Field, Ring, RingOps};
pub use sparse::{DimMismatch, SparseMat};

/// Arbitrary-precision signed integer. Exact arithmetic, no overflow ever.
pub type Int = num_bigint::BigInt;

/// Reduced rational number (positive denominator, coprime to the numerator).
pub type Rat = num_rational::BigRational;

/// Shorthand for an `Int` from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for a `Rat` from a machine integer.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// |a| for an arbitrary-precision integer.
pub fn ring_abs(a: &Int) -> Int {
    ring::abs(a)
}
