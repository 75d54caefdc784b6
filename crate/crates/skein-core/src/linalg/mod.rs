//! Dense and sparse matrices over any [`Ring`](crate::scalar::Ring), plus
//! linear algebra modulo a prime for rank certificates.

mod dense;
pub mod modp;
mod sparse;
pub mod span;

pub use dense::Mat;
pub use sparse::SparseMat;
