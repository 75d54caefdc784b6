//! Skein representations of closed surfaces on the basis of graph
//! colorings, and the certificates checked on them.

pub mod basis;
pub mod certify;
pub mod graph;
pub mod operators;

pub use basis::{ColoringBasis, OmegaData};
pub use certify::{
    burnside_support, burnside_words_modp, generation_certificate, pants_shadow, shadow_certificate, yset_certificate,
    BurnsideCertificate, BurnsideMethod, CertificateKind, GenerationCertificate, ShadowCertificate, YsetCertificate,
};
pub use graph::{preset, BetaCurve, Crossing, Edge, Passage, SurfacePreset, TriGraph};
pub use operators::{
    beta_operator, build_representation, exact_backend_for, gamma_operator, CurveId, CurveOperator, Representation,
    SixjCache, SixjKey, SixjMethod, SixjProvider,
};
