//! Trivalent graph calculus: vertex coefficients, the elementary morphisms,
//! modified dimensions, the theta graph and 6j-symbols.

pub mod coeffs;
pub mod identities;
pub mod morphisms;
pub mod sixj;
pub mod theta;

pub use coeffs::{coef_c, coef_d, coef_e, kappa, kappa_hat, wcoef, Legs, Triple};
pub use morphisms::{cap, cup, multiplicity_down, multiplicity_up, rotate, wiso, y_down, y_up, Multiplicity};
pub use sixj::{sixj_closed, sixj_oracle, sixj_symbolic, Sign, SixjArgs, SymbolicSixj, ValuationCertificate};
pub use theta::{modified_dim, modified_dim_as_printed, theta, theta_cuts, ThetaCuts};
