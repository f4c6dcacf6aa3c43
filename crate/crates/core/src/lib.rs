//! Interval representations of type-A quivers carrying a shift automorphism.
//!
//! The crate is organised bottom-up:
//!
//! * [`interval`] holds symbolic real intervals (grid points, points inside
//!   gaps, infinite ends) and the order-theoretic compatibility predicate.
//! * [`ext`] computes Hom and Ext¹ dimensions of finite quiver
//!   representations over a prime field, plus the closed-form Ext rule for
//!   interval modules on the integer line.
//! * [`equivariant`] works with shift orbits of integer intervals and
//!   enumerates maximal rigid orbit sets.
//! * [`alpha`] models grid-anchored representations of the continuous
//!   line, the reduction onto the doubled lattice, and fiber expansion.
//!
//! Everything here is `no_std` (with `alloc`); IO, serialization and the
//! command-line front end live in the companion `qrigid` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod alpha;
pub mod binom;
pub mod equivariant;
mod error;
pub mod ext;
pub mod interval;
pub mod linalg;

pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
