//! Finite-dimensional weight modules over the unrolled quantum group and
//! the ribbon structure on them.

mod braiding;
mod decompose;
mod duals;
mod module;

pub use braiding::{braiding, flip, r_matrix, twist};
pub use decompose::{decompose_vv, exact_sequence_maps, ExactSequenceMaps, HighestWeightVector};
pub use duals::{dual_data, qdim, sprime, DualData};
pub use module::{
    build_p, build_s, build_sigma, build_unit, build_v, check_relations, dual_module, is_equivariant, tensor,
    Module, ModuleKind, RelationReport,
};
