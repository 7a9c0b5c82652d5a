//! Exact real algebra for deciding whether the vanishing ideal of a
//! semialgebraic set equals a given ideal, repairing the ideal when it does
//! not, and building moment/SOS relaxations of polynomial optimization
//! problems on top of the result.
//!
//! The crate is `no_std` with `alloc`; file formats and the command line live
//! in the companion `realgap` crate.

#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

pub mod cad;
pub mod error;
pub mod ideal;
pub mod mpoly;
pub mod numeric;
pub mod real;
pub mod sdp;

pub use error::{Error, Result};

pub use mpoly::{MPoly, Monomial, MonomialOrder, QPoly};
pub use numeric::{AlgebraicNumber, Field, GaussianRational, Integer, Rational, UniPoly};
