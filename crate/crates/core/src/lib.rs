//! Exact cohomological calculus on the smooth quadric surface `Q = P^1 x P^1`.
//!
//! Everything here is integer arithmetic on small values:
//!
//! - [`pic`]: the Picard lattice `Z^2` and its intersection form.
//! - [`cohom`]: line-bundle cohomology (Kunneth) and Riemann-Roch.
//! - [`ktheory`]: virtual classes `(rank, c1, 2 ch2)` and Chern-class calculus for
//!   twists, exact sequences and torsion sheaves.
//! - [`quiver`]: the endomorphism algebra of the exceptional collection
//!   `O, O(1,0), O(0,1), O(1,1)` and composition series of right modules over it.
//! - [`bondal`]: the spectral sequence that rebuilds a sheaf from its module data,
//!   carried out in the Grothendieck group.
//! - [`catalog`]: machine-readable classification families of nef bundles and the
//!   engine that verifies each one.
//!
//! The crate is `no_std` and only needs `alloc`. Arithmetic overflow panics rather
//! than wrapping.
#![no_std]

extern crate alloc;

mod arith;
pub mod bondal;
pub mod catalog;
pub mod cohom;
mod error;
pub mod ktheory;
pub mod pic;
pub mod quiver;

pub use error::{Error, Result};
