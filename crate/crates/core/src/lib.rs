//! Hidden-variables models for spin-½ pairs next to an exact quantum oracle.
//!
//! The crate contains
//!
//! * [`quantum`]: Pauli algebra, two-qubit states, expectation values, the
//!   CHSH operator and a Jacobi eigensolver for operator norms;
//! * [`bell_d2`]: Bell's dispersion-free single-qubit model, its closed-form
//!   integration over the hidden variable and the pointwise linearity probe;
//! * [`chsh_paths`]: the local non-contextual CHSH evaluator over the sixteen
//!   deterministic assignments, along the tilde route and the conventional route;
//! * [`factored`]: the product of two single-qubit models and its agreement
//!   with pure separable states;
//! * [`optimizer`]: derivative-free maximization of `⟨B⟩` over settings.
//!
//! Numeric code is generic over [`Real`]; the aliases at the crate root fix
//! the scalar to `f64`, which is what every tolerance in the test suite assumes.

// Matrix code indexes several arrays per loop; `!(x >= 0)` style guards also reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod bell_d2;
pub mod chsh_paths;
pub mod error;
pub mod factored;
pub mod optimizer;
pub mod quantum;
pub mod sampling;
pub mod scalar;

pub use error::{HvError, Result};
pub use scalar::Real;

pub type Vector3 = quantum::Vector3<f64>;
pub type UnitVector3 = quantum::UnitVector3<f64>;
pub type Hermitian2 = quantum::Hermitian2<f64>;
pub type Hermitian4 = quantum::Hermitian4<f64>;
pub type QuantumState = quantum::QuantumState<f64>;
pub type SeparableAtom = quantum::SeparableAtom<f64>;
pub type MeasurementSettings = quantum::MeasurementSettings<f64>;
pub type TildeDecomposition = quantum::TildeDecomposition<f64>;
pub type HiddenVarOmega = bell_d2::HiddenVarOmega<f64>;
pub type MixCoefficient = bell_d2::MixCoefficient<f64>;
pub type Spectral2 = bell_d2::Spectral2<f64>;
pub type WeightVector = chsh_paths::WeightVector<f64>;
pub type ChshReport = chsh_paths::ChshReport<f64>;

pub type FactoredModel = factored::FactoredModel<f64>;
pub type FactoredHiddenPoint = factored::FactoredHiddenPoint<f64>;
pub type OptResult = optimizer::OptResult<f64>;
pub type AngleParams = optimizer::AngleParams<f64>;
