use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use super::Int;

/// A polynomial over ℤ in one indeterminate `T`.
///
/// Coefficients are stored by ascending degree with no trailing zeros; the
/// zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Int) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    /// The monomial `T`.
    pub fn t() -> IntPoly {
        IntPoly::from_coeffs(vec![Int::zero(), Int::one()])
    }

    /// Build from ascending coefficients, normalizing trailing zeros away.
    pub fn from_coeffs(mut coeffs: Vec<Int>) -> IntPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Ascending coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ring homomorphism ℤ\[T\] → R determined by `T ↦ value`, with the
    /// coefficients mapped through the canonical ℤ → R.
    pub fn specialize<R: Ring>(&self, value: &R) -> R
    where
        for<'a> &'a R: super::ring::RingOps<R>,
    {
        let mut acc = value.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + &value.embed_int(c);
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(Int::zero);
            let b = rhs.coeffs.get(k).cloned().unwrap_or_else(Int::zero);
            out.push(a + b);
        }
        IntPoly::from_coeffs(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Ring for IntPoly {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn zero_like(&self) -> Self {
        IntPoly::zero()
    }
    fn one_like(&self) -> Self {
        IntPoly::constant(Int::one())
    }
    fn embed_int(&self, n: &Int) -> Self {
        IntPoly::from_coeffs(vec![n.clone()])
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let mag = Signed::abs(c);
            if first {
                if Signed::is_negative(c) {
                    write!(f, "-")?;
                }
                first = false;
            } else if Signed::is_negative(c) {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = One::is_one(&mag);
            match (deg, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "T")?,
                (1, false) => write!(f, "{mag}*T")?,
                (_, true) => write!(f, "T^{deg}")?,
                (_, false) => write!(f, "{mag}*T^{deg}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Gfp};

    #[test]
    fn normalization() {
        let p = IntPoly::from_coeffs(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(IntPoly::zero().degree().is_none());
    }

    #[test]
    fn specialize_examples() {
        // T^2 + 2T at T=3 over Integer -> 15
        let p = IntPoly::from_coeffs(vec![int(0), int(2), int(1)]);
        assert_eq!(p.specialize(&int(3)), int(15));
        // 2T over GF(2) at T=1 -> 0
        let two_t = IntPoly::from_coeffs(vec![int(0), int(2)]);
        let f2 = Gfp::field(2).unwrap();
        assert_eq!(two_t.specialize(&f2.elt(1)), f2.elt(0));
        // 2T at T = 2 over GF(5) -> 4
        let f5 = Gfp::field(5).unwrap();
        assert_eq!(two_t.specialize(&f5.elt(2)), f5.elt(4));
    }

    #[test]
    fn display() {
        let p = IntPoly::from_coeffs(vec![int(-1), int(2), int(1)]);
        assert_eq!(alloc::format!("{p}"), "T^2 + 2*T - 1");
        assert_eq!(alloc::format!("{}", IntPoly::zero()), "0");
        assert_eq!(alloc::format!("{}", IntPoly::t()), "T");
    }
}
