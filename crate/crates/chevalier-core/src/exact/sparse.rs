use alloc::collections::BTreeMap;
use core::fmt;

use super::ring::{Ring, RingOps};

/// Dimension mismatch in a checked matrix operation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DimMismatch {
    pub left: (usize, usize),
    pub right: (usize, usize),
}

impl fmt::Display for DimMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matrix dimension mismatch: {}x{} vs {}x{}",
            self.left.0, self.left.1, self.right.0, self.right.1
        )
    }
}

/// A sparse matrix over an exact ring: only nonzero entries are stored,
/// keyed by (row, column) in a sorted map, so iteration order and any
/// serialization derived from it are deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMat<R> {
    nrows: usize,
    ncols: usize,
    entries: BTreeMap<(usize, usize), R>,
}

impl<R: Ring> SparseMat<R>
where
    for<'a> &'a R: RingOps<R>,
{
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, ncols, entries: BTreeMap::new() }
    }

    /// Identity of size `n`, with diagonal entries cloned from `one`.
    pub fn identity(n: usize, one: &R) -> Self {
        let mut m = SparseMat::zero(n, n);
        for k in 0..n {
            m.entries.insert((k, k), one.clone());
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Set entry (r, c); zero values erase the slot.
    pub fn set(&mut self, r: usize, c: usize, v: R) {
        assert!(r < self.nrows && c < self.ncols, "index out of range");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&R> {
        self.entries.get(&(r, c))
    }

    /// Iterate nonzero entries in (row, col) order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// First nonzero entry in (row, col) order, if any.
    pub fn first_entry(&self) -> Option<(usize, usize, &R)> {
        self.iter().next()
    }

    /// Nonzero entries of row `r` in column order.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, &R)> {
        self.entries.range((r, 0)..=(r, usize::MAX)).map(|(&(_, c), v)| (c, v))
    }

    pub fn transpose(&self) -> Self {
        let mut out = SparseMat::zero(self.ncols, self.nrows);
        for (r, c, v) in self.iter() {
            out.entries.insert((c, r), v.clone());
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols), "matrix sum shape");
        let mut out = self.clone();
        for (r, c, v) in rhs.iter() {
            let w = match out.entries.remove(&(r, c)) {
                Some(u) => &u + v,
                None => v.clone(),
            };
            if !w.is_zero() {
                out.entries.insert((r, c), w);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = SparseMat::zero(self.nrows, self.ncols);
        for (r, c, v) in self.iter() {
            out.entries.insert((r, c), -v);
        }
        out
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = SparseMat::zero(self.nrows, self.ncols);
        if s.is_zero() {
            return out;
        }
        for (r, c, v) in self.iter() {
            let w = s * v;
            if !w.is_zero() {
                out.entries.insert((r, c), w);
            }
        }
        out
    }

    /// Exact product. Panics on shape mismatch; see [`SparseMat::checked_mul`]
    /// for the fallible variant used at input boundaries.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("matrix product shape")
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, DimMismatch> {
        if self.ncols != rhs.nrows {
            return Err(DimMismatch {
                left: (self.nrows, self.ncols),
                right: (rhs.nrows, rhs.ncols),
            });
        }
        let mut acc: BTreeMap<(usize, usize), R> = BTreeMap::new();
        for (r, k, v) in self.iter() {
            for (c, w) in rhs.row(k) {
                let prod = v * w;
                match acc.remove(&(r, c)) {
                    Some(u) => {
                        let s = &u + &prod;
                        if !s.is_zero() {
                            acc.insert((r, c), s);
                        }
                    }
                    None => {
                        if !prod.is_zero() {
                            acc.insert((r, c), prod);
                        }
                    }
                }
            }
        }
        Ok(SparseMat { nrows: self.nrows, ncols: rhs.ncols, entries: acc })
    }

    /// Lie bracket `self*rhs - rhs*self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Apply a map to every entry, re-normalizing zeros (the map must send
    /// zero to zero for the result to be meaningful, which every ring
    /// homomorphism does).
    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> SparseMat<S>
    where
        for<'a> &'a S: RingOps<S>,
    {
        let mut out = SparseMat::zero(self.nrows, self.ncols);
        for (r, c, v) in self.iter() {
            let w = f(v);
            if !w.is_zero() {
                out.entries.insert((r, c), w);
            }
        }
        out
    }

    /// True if every nonzero entry lies strictly above the diagonal.
    pub fn is_strictly_upper(&self) -> bool {
        self.iter().all(|(r, c, _)| r < c)
    }

    /// True if every nonzero entry lies strictly below the diagonal.
    pub fn is_strictly_lower(&self) -> bool {
        self.iter().all(|(r, c, _)| r > c)
    }

    /// True if the matrix is diagonal (possibly with zero diagonal entries).
    pub fn is_diagonal(&self) -> bool {
        self.iter().all(|(r, c, _)| r == c)
    }

    /// True if square, unitriangular in the given sense.
    pub fn is_unitriangular(&self, upper: bool) -> bool {
        if self.nrows != self.ncols {
            return false;
        }
        self.iter().all(|(r, c, v)| {
            if r == c {
                *v == v.one_like()
            } else if upper {
                r < c
            } else {
                r > c
            }
        })
    }

    pub fn pow(&self, mut e: usize, one: &R) -> Self {
        assert_eq!(self.nrows, self.ncols);
        let mut base = self.clone();
        let mut acc = SparseMat::identity(self.nrows, one);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, Int};

    fn elem(n: usize, r: usize, c: usize) -> SparseMat<Int> {
        let mut m = SparseMat::zero(n, n);
        m.set(r, c, int(1));
        m
    }

    #[test]
    fn identity_times_m() {
        let mut m = SparseMat::zero(3, 3);
        m.set(0, 2, int(5));
        m.set(1, 1, int(-2));
        let id = SparseMat::identity(3, &int(1));
        assert_eq!(id.mul(&m), m);
        assert_eq!(m.mul(&id), m);
    }

    #[test]
    fn elementary_product() {
        // E_{12} * E_{23} = E_{13}
        assert_eq!(elem(3, 0, 1).mul(&elem(3, 1, 2)), elem(3, 0, 2));
        // and the reverse order annihilates
        assert!(elem(3, 1, 2).mul(&elem(3, 0, 1)).is_zero());
    }

    #[test]
    fn cancellation_drops_entries() {
        let mut a = SparseMat::zero(2, 2);
        a.set(0, 0, int(1));
        a.set(0, 1, int(1));
        let mut b = SparseMat::zero(2, 2);
        b.set(0, 1, int(1));
        b.set(1, 1, int(-1));
        // (a*b)_{01} = 1*1 + 1*(-1) = 0 must not be stored
        let p = a.mul(&b);
        assert_eq!(p.nnz(), 0);
    }

    #[test]
    fn checked_mul_rejects_shape() {
        let a: SparseMat<Int> = SparseMat::zero(2, 3);
        let b: SparseMat<Int> = SparseMat::zero(2, 3);
        assert!(a.checked_mul(&b).is_err());
    }
}
