//! Genus one: the quantum torus, the embedding of the torus skein algebra
//! into its invariant part, and the classification of its representations.

pub mod algebra;
pub mod reps;

pub use algebra::{fgs, CurveWord, TorusContext, TorusCurve, TorusElement};
pub use reps::{classify, reflection, restrict, CentralPiece, CentralSummary, GenusOneClass, Parity, ToroidalRep};
