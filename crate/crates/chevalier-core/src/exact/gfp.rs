use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, ToPrimitive};

use super::ring::{Field, Ring};
use super::Int;

/// An element of the prime field GF(p), stored reduced.
///
/// Moduli are restricted to primes below 2³¹ so that products fit in `u64`;
/// primality is validated once in [`Gfp::field`]. Arithmetic between elements
/// of different fields panics — mixed moduli are a caller bug, checked at the
/// boundaries where matrices are constructed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct Gfp {
    modulus: u32,
    value: u32,
}

/// Errors from constructing a prime field.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GfpError {
    NotPrime(u64),
    TooLarge(u64),
}

impl fmt::Display for GfpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfpError::NotPrime(p) => write!(f, "{p} is not prime"),
            GfpError::TooLarge(p) => write!(f, "modulus {p} exceeds 2^31"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = 7u64;
    while d * d <= n {
        for off in [0, 4] {
            if n.is_multiple_of(d + off) {
                return false;
            }
        }
        d += 6;
    }
    true
}

impl Gfp {
    /// Validate `p` and return the zero of GF(p).
    pub fn field(p: u64) -> Result<Gfp, GfpError> {
        if p >= (1 << 31) {
            return Err(GfpError::TooLarge(p));
        }
        if !is_prime(p) {
            return Err(GfpError::NotPrime(p));
        }
        Ok(Gfp { modulus: p as u32, value: 0 })
    }

    /// The element `v mod p` in the field of `self`.
    pub fn elt(&self, v: i64) -> Gfp {
        let p = self.modulus as i64;
        let mut r = v % p;
        if r < 0 {
            r += p;
        }
        Gfp { modulus: self.modulus, value: r as u32 }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus as u64
    }

    pub fn value(&self) -> u64 {
        self.value as u64
    }

    /// All field elements, in the order 0, 1, …, p−1.
    pub fn all_elements(&self) -> Vec<Gfp> {
        (0..self.modulus).map(|v| Gfp { modulus: self.modulus, value: v }).collect()
    }

    fn check(&self, rhs: &Gfp) {
        assert_eq!(self.modulus, rhs.modulus, "mixed prime field moduli");
    }

    fn make(&self, value: u64) -> Gfp {
        Gfp { modulus: self.modulus, value: (value % self.modulus as u64) as u32 }
    }
}

impl fmt::Display for Gfp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for &Gfp {
    type Output = Gfp;
    fn add(self, rhs: &Gfp) -> Gfp {
        self.check(rhs);
        self.make(self.value as u64 + rhs.value as u64)
    }
}

impl Sub for &Gfp {
    type Output = Gfp;
    fn sub(self, rhs: &Gfp) -> Gfp {
        self.check(rhs);
        self.make(self.value as u64 + self.modulus as u64 - rhs.value as u64)
    }
}

impl Mul for &Gfp {
    type Output = Gfp;
    fn mul(self, rhs: &Gfp) -> Gfp {
        self.check(rhs);
        self.make(self.value as u64 * rhs.value as u64)
    }
}

impl Neg for &Gfp {
    type Output = Gfp;
    fn neg(self) -> Gfp {
        self.make(2 * self.modulus as u64 - self.value as u64)
    }
}

impl Ring for Gfp {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn zero_like(&self) -> Self {
        self.make(0)
    }
    fn one_like(&self) -> Self {
        debug_assert!(self.modulus >= 2);
        self.make(1)
    }
    fn embed_int(&self, n: &Int) -> Self {
        let p = Int::from(self.modulus);
        let mut r = n % &p;
        if Signed::is_negative(&r) {
            r += &p;
        }
        self.make(r.to_u64().expect("reduced residue fits"))
    }
}

impl Field for Gfp {
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: v^(p-2) mod p.
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut exp = p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Some(self.make(acc))
    }
}
