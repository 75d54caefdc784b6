//! Exact computational kernel for the unrolled quantum group at odd roots of
//! unity, its trivalent graph calculus and 6j-symbols, the skein
//! representations of closed surfaces built on graph colorings, and the
//! genus-one quantum torus.
//!
//! The crate is `no_std` and only needs `alloc`. All scalars go through the
//! [`scalar::Ring`] contract so every construction runs unchanged over the
//! exact cyclotomic field, over Laurent rational functions in formal color
//! variables, or over floating complex numbers.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod backend;
pub mod calculus;
pub mod category;
pub mod error;
pub mod linalg;
pub mod qarith;
pub mod root;
pub mod scalar;
pub mod skein;
pub mod torus;
pub mod weight;

pub use backend::{ApproxBackend, Backend, ExactBackend, SymbolicBackend};
pub use error::{KernelError, ScalarError};
pub use root::RootData;
pub use weight::Weight;
