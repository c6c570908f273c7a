//! Exact computational Lie theory from a generalized Cartan matrix.
//!
//! Starting from nothing but an integer matrix satisfying the generalized
//! Cartan axioms, this crate constructs, with exact arithmetic throughout:
//!
//! * the finite/affine/indefinite classification and Dynkin type recognition
//!   ([`cartan`]),
//! * the finite root system with heights, root strings and length classes
//!   ([`roots`]),
//! * the Weyl group as a permutation group on the roots, with reduced words,
//!   element enumeration and Schreier–Sims order computation ([`weyl`]),
//! * the simple Lie algebra in its sparse matrix model, together with the
//!   canonical Chevalley system and all structure constants ([`canbasis`]),
//! * minuscule and adjoint representation modules with admissible lattices
//!   and integral divided powers ([`weights`]),
//! * Chevalley group generator matrices over ℤ\[T\], ℚ and prime fields, with
//!   monomial/diagonal elements and a relation verifier suite ([`chevgroup`]).
//!
//! No floating point is used anywhere; every computation is over ℤ, ℚ,
//! ℤ\[T\] or GF(p). The crate is `no_std` (it requires `alloc`); file formats
//! and the command line interface live in the companion `chevalier` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
// index loops over both axes of a matrix read better than iterator chains
// and are often forced by the borrow checker here
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod cartan;
pub mod canbasis;
pub mod chevgroup;
pub mod exact;
pub mod roots;
pub mod weights;
pub mod weyl;

pub use cartan::{CartanMatrix, ClassKind, DynkinType, Family};
pub use canbasis::LieAlgebraData;
pub use exact::{Gfp, Int, IntPoly, Rat, SparseMat};
pub use roots::RootSystem;
pub use weights::RepModule;
pub use weyl::WeylPerm;
