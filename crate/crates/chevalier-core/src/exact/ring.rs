use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Int, Rat};

/// Reference-arithmetic bundle: `&R` supports the four ring operations.
pub trait RingOps<R>:
    Sized + Add<Self, Output = R> + Sub<Self, Output = R> + Mul<Self, Output = R> + Neg<Output = R>
{
}

impl<R, T> RingOps<R> for T where
    T: Sized + Add<T, Output = R> + Sub<T, Output = R> + Mul<T, Output = R> + Neg<Output = R>
{
}

/// A commutative ring with exact equality.
///
/// Elements may carry context (a prime field element knows its modulus), so
/// the constants and the embedding of ℤ are exposed as methods on a witness
/// element rather than as associated functions.
pub trait Ring: Clone + PartialEq + Eq + Debug + Sized
where
    for<'a> &'a Self: RingOps<Self>,
{
    fn is_zero(&self) -> bool;
    /// The zero of the same ring (same modulus, etc.) as `self`.
    fn zero_like(&self) -> Self;
    /// The one of the same ring as `self`.
    fn one_like(&self) -> Self;
    /// Image of an integer under the canonical homomorphism ℤ → R.
    fn embed_int(&self, n: &Int) -> Self;
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring
where
    for<'a> &'a Self: RingOps<Self>,
{
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}

impl Ring for Int {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Int::zero()
    }
    fn one_like(&self) -> Self {
        Int::one()
    }
    fn embed_int(&self, n: &Int) -> Self {
        n.clone()
    }
}

impl Ring for Rat {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn embed_int(&self, n: &Int) -> Self {
        Rat::from_integer(n.clone())
    }
}

impl Field for Rat {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Exact quotient, or `None` when the division has a remainder.
pub(crate) fn div_exact(a: &Int, b: &Int) -> Option<Int> {
    if Zero::is_zero(b) {
        return None;
    }
    let (q, r) = num_integer::Integer::div_rem(a, b);
    if Zero::is_zero(&r) {
        Some(q)
    } else {
        None
    }
}

/// |a| as a nonnegative integer.
pub(crate) fn abs(a: &Int) -> Int {
    Signed::abs(a)
}
