#![no_std]
//! Exact bookkeeping for constructions of spin symplectic 4-manifolds.
//!
//! Building blocks are composed by symplectic sums and torus surgeries while
//! characteristic numbers, fundamental-group presentations and marked
//! surfaces are tracked exactly. On top of that calculus sit the lattice
//! geography search and the homeomorphism-prototype lookup.

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod blocks;
pub mod error;
pub mod geography;
pub mod grp;
pub mod invariant;
pub mod recipe;
pub mod surgery;
pub mod topo;

pub use error::{Error, Result};
