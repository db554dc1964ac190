//! Exact combinatorics of socle filtrations for tensor modules over
//! `sl(∞)`, the Grothendieck-group model of category O for `gl(m|n)` with
//! its categorified `sl(∞)`-action, and the supercharacter ring with the
//! Duflo–Serganova evaluation.
//!
//! Counts (Littlewood–Richardson coefficients, multiplicities) are
//! arbitrary-precision integers. Vectors and polynomials are generic over a
//! coefficient type implementing [`Scalar`]; the aliases below fix the exact
//! choices used throughout.

pub mod error;
pub mod groth;
pub mod json;
pub mod linalg;
pub mod lr;
pub mod partition;
pub mod scalar;
pub mod socle;
pub mod superchar;
pub mod superpoly;
pub mod verify;
pub mod weight;
pub mod window;
pub mod zuckerman;

pub use error::{Error, Result};
pub use groth::{BasisKind, Chevalley, GrothVec};
pub use linalg::Echelon;
pub use lr::{lr_coeff, lr_coeff_oracle, multi_lr};
pub use partition::Partition;
pub use scalar::{Field, Scalar};
pub use socle::{
    branching_power_row, jh_injective, socle_layer_injective, socle_layers_injective, socle_layers_j, socle_layers_k,
    SemisimpleDecomp,
};
pub use superchar::{
    ds_eval, ds_power, is_supersymmetric, kac_supercharacter, pair_independence_check, super_schur,
    tensor_filtration_shadow, ShadowReport,
};
pub use superpoly::SuperPoly;
pub use weight::{rho, BarLabel, Perm, PermPair, Weight};
pub use window::{appendix_inclusion_check, socle_t_window, AppendixReport, Window};
pub use zuckerman::{dot_action, gamma, wedge_projector};

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers.
pub type Integer = num_bigint::BigInt;
/// Grothendieck vectors with exact rational coefficients.
pub type RatVec = GrothVec<Rational>;
/// Supercharacters with integer coefficients.
pub type IntPoly = SuperPoly<Integer>;
/// Floating-point vectors, for quick numerical experiments only.
pub type F64Vec = GrothVec<f64>;
