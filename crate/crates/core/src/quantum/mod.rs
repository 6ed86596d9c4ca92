//! Exact two-qubit quantum mechanics: Pauli algebra, states, expectation
//! values, operator norms and the CHSH operator.

pub mod chsh;
pub mod eigen;
pub mod hermitian;
pub mod pauli;
pub mod state;
pub mod vector;

pub use chsh::{
    chsh_operator, chsh_operator_tilde, operator_norm, tilde_vectors, MeasurementSettings,
    TildeDecomposition,
};
pub use eigen::{eigen_decompose, EigenDecomposition};
pub use hermitian::{Hermitian, Hermitian2, Hermitian4};
pub use pauli::{
    bloch_components, bloch_density, correlation_operator, pauli_dot, pauli_vec, projector,
    sigma_x, sigma_y, sigma_z, tensor,
};
pub use state::{
    expectation, mixed_separable_density, quantum_sum_check, separable_density, singlet_state,
    werner_density, Amplitudes4, Observable, QuantumState, SeparableAtom,
};
pub use vector::{UnitVector3, Vector3};
