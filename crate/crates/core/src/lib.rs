//! Exact-arithmetic toolkit for constraint satisfaction, linear optimisation,
//! and integer-solution finding over semilinear relations on the rationals.
//!
//! A semilinear relation is a finite union of linear sets, where a linear set
//! is cut out by a finite conjunction of strict and non-strict rational linear
//! inequalities. This crate provides:
//!
//! * exact rational vectors, matrices, and canonical affine subspaces
//!   ([`numeric`]),
//! * an exact two-phase simplex solver for mixed strict/non-strict systems
//!   ([`lp`]),
//! * the semilinear relation data model, line restrictions, and the canonical
//!   normal form for unary relations ([`relation`], [`unary`]),
//! * affine hulls of linear sets and unions of linear sets ([`hull`]),
//! * the affine-consistency decision procedure and the NAE-3SAT reduction
//!   ([`consistency`]),
//! * linear optimisation over solution sets ([`optimize`]),
//! * Hermite-normal-form lattice machinery for integer solutions
//!   ([`integer`]),
//! * language-level analyses: cones, scaling endomorphisms, and the unary
//!   gadget constructions ([`analysis`]).
//!
//! All arithmetic is exact; there is no floating point anywhere. The crate is
//! `no_std` (with `alloc`) so the algorithmic core stays free of IO concerns;
//! file formats and the CLI live in the companion `semilin-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod consistency;
pub mod error;
pub mod hull;
pub mod integer;
pub mod lp;
pub mod numeric;
pub mod optimize;
pub mod relation;
pub mod unary;

pub use error::Error;
pub use numeric::{AffineSubspace, QMatrix, QVec, Rational};
