//! Quantum states on one and two qubits and their expectation values.

use num_complex::Complex;

use super::eigen::eigen_decompose;
use super::hermitian::{Hermitian, Hermitian2, Hermitian4};
use super::pauli::{bloch_density, correlation_operator, projector, tensor};
use super::vector::UnitVector3;
use crate::error::{HvError, Result};
use crate::scalar::Real;

pub type Amplitudes4<T> = [Complex<T>; 4];

/// Pure qubit (Bloch form), pure two-qubit vector, or two-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuantumState<T> {
    PureQubit(UnitVector3<T>),
    PureTwoQubit(Amplitudes4<T>),
    DensityTwoQubit(Hermitian4<T>),
}

/// Observable of either supported dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Observable<T> {
    Qubit(Hermitian2<T>),
    TwoQubit(Hermitian4<T>),
}

impl<T> From<Hermitian2<T>> for Observable<T> {
    fn from(h: Hermitian2<T>) -> Self {
        Observable::Qubit(h)
    }
}

impl<T> From<Hermitian4<T>> for Observable<T> {
    fn from(h: Hermitian4<T>) -> Self {
        Observable::TwoQubit(h)
    }
}

/// One atom `(n_a, n_b, w)` of a mixed separable state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparableAtom<T> {
    pub n_a: UnitVector3<T>,
    pub n_b: UnitVector3<T>,
    pub weight: T,
}

impl<T: Real> QuantumState<T> {
    pub fn pure_qubit(s: UnitVector3<T>) -> Self {
        QuantumState::PureQubit(s)
    }

    pub fn pure_two_qubit(amps: Amplitudes4<T>) -> Result<Self> {
        let n2 = amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr());
        if !n2.is_finite() || (n2 - T::one()).abs() > T::NORMALIZATION_TOL {
            return Err(HvError::invalid(format!(
                "two-qubit amplitudes have squared norm {n2}, expected 1"
            )));
        }
        Ok(QuantumState::PureTwoQubit(amps))
    }

    /// Validates trace one and positive semidefiniteness.
    pub fn density(rho: Hermitian4<T>) -> Result<Self> {
        validate_density(&rho)?;
        Ok(QuantumState::DensityTwoQubit(rho))
    }

    pub fn dimension(&self) -> usize {
        match self {
            QuantumState::PureQubit(_) => 2,
            _ => 4,
        }
    }

    /// Two-qubit density matrix; `None` for a single qubit.
    pub fn density_matrix(&self) -> Option<Hermitian4<T>> {
        match self {
            QuantumState::PureQubit(_) => None,
            QuantumState::PureTwoQubit(psi) => Some(outer(psi)),
            QuantumState::DensityTwoQubit(rho) => Some(*rho),
        }
    }

    /// Real correlation tensor `T_ij = ⟨σ_i ⊗ σ_j⟩`, so that
    /// `⟨a·σ ⊗ b·σ⟩ = aᵀ T b`. Two-qubit states only.
    pub fn correlation_tensor(&self) -> Result<[[T; 3]; 3]> {
        let rho = self
            .density_matrix()
            .ok_or_else(|| HvError::invalid("correlation tensor needs a two-qubit state"))?;
        let axes = [
            UnitVector3::x_axis().as_vector(),
            UnitVector3::y_axis().as_vector(),
            UnitVector3::z_axis().as_vector(),
        ];
        let mut out = [[T::zero(); 3]; 3];
        for (i, ai) in axes.iter().enumerate() {
            for (j, bj) in axes.iter().enumerate() {
                let op = correlation_operator(ai, bj);
                out[i][j] = real_part_checked(rho.trace_product(&op))?;
            }
        }
        Ok(out)
    }
}

fn outer<T: Real>(psi: &Amplitudes4<T>) -> Hermitian4<T> {
    let m = std::array::from_fn(|i| std::array::from_fn(|j| psi[i] * psi[j].conj()));
    Hermitian::symmetrized(m)
}

fn validate_density<T: Real>(rho: &Hermitian4<T>) -> Result<()> {
    let tr = rho.trace();
    if !tr.is_finite() || (tr - T::one()).abs() > T::NORMALIZATION_TOL {
        return Err(HvError::invalid(format!(
            "density trace is {tr}, expected 1"
        )));
    }
    let e = eigen_decompose(rho)?;
    let min = e.values[3];
    if min < -T::PSD_TOL {
        return Err(HvError::invalid(format!(
            "density has negative eigenvalue {min}"
        )));
    }
    Ok(())
}

/// Drops the imaginary part after checking it against [`Real::IMAG_TOL`].
pub fn real_part_checked<T: Real>(z: Complex<T>) -> Result<T> {
    if !(z.im.abs() < T::IMAG_TOL) {
        return Err(HvError::ImaginaryResidue {
            residue: z.im.to_f64_lossy(),
            tolerance: T::IMAG_TOL.to_f64_lossy(),
        });
    }
    Ok(z.re)
}

/// `⟨ψ|O|ψ⟩` or `Tr(ρO)`; errors on a dimension mismatch.
pub fn expectation<T: Real>(state: &QuantumState<T>, obs: impl Into<Observable<T>>) -> Result<T> {
    let obs = obs.into();
    let z = match (state, &obs) {
        (QuantumState::PureQubit(s), Observable::Qubit(o)) => {
            bloch_density(&s.as_vector()).trace_product(o)
        }
        (QuantumState::PureTwoQubit(psi), Observable::TwoQubit(o)) => o.sandwich(psi),
        (QuantumState::DensityTwoQubit(rho), Observable::TwoQubit(o)) => rho.trace_product(o),
        _ => {
            let od = match obs {
                Observable::Qubit(_) => 2,
                Observable::TwoQubit(_) => 4,
            };
            return Err(HvError::invalid(format!(
                "state of dimension {} paired with observable of dimension {od}",
                state.dimension()
            )));
        }
    };
    real_part_checked(z)
}

/// `(|01⟩ − |10⟩)/√2`.
pub fn singlet_state<T: Real>() -> QuantumState<T> {
    let h = T::FRAC_1_SQRT_2();
    let z = Complex::new(T::zero(), T::zero());
    QuantumState::PureTwoQubit([
        z,
        Complex::new(h, T::zero()),
        Complex::new(-h, T::zero()),
        z,
    ])
}

/// `ρ(n_a) ⊗ ρ(n_b)` with `ρ(n) = ½(1 + n·σ)`.
pub fn separable_density<T: Real>(n_a: &UnitVector3<T>, n_b: &UnitVector3<T>) -> QuantumState<T> {
    QuantumState::DensityTwoQubit(tensor(&projector(n_a), &projector(n_b)))
}

/// `Σ w_i ρ(n_a,i) ⊗ ρ(n_b,i)`; weights must be non-negative and sum to one.
pub fn mixed_separable_density<T: Real>(atoms: &[SeparableAtom<T>]) -> Result<QuantumState<T>> {
    if atoms.is_empty() {
        return Err(HvError::invalid(
            "mixed separable state needs at least one atom",
        ));
    }
    let mut total = T::zero();
    for (i, atom) in atoms.iter().enumerate() {
        if !(atom.weight >= T::zero()) {
            return Err(HvError::invalid(format!(
                "atom {i} has negative or non-finite weight {}",
                atom.weight
            )));
        }
        total = total + atom.weight;
    }
    if (total - T::one()).abs() > T::NORMALIZATION_TOL {
        return Err(HvError::invalid(format!(
            "atom weights sum to {total}, expected 1"
        )));
    }
    let rho = atoms.iter().fold(Hermitian4::zero(), |acc, atom| {
        acc.add(&tensor(&projector(&atom.n_a), &projector(&atom.n_b)).scale(atom.weight))
    });
    QuantumState::density(rho)
}

/// `p·|singlet⟩⟨singlet| + (1 − p)·1/4`.
pub fn werner_density<T: Real>(p: T) -> Result<QuantumState<T>> {
    if !(p >= T::zero() && p <= T::one()) {
        return Err(HvError::invalid(format!(
            "Werner mixing parameter {p} outside [0, 1]"
        )));
    }
    let singlet = singlet_state::<T>()
        .density_matrix()
        .expect("singlet is two-qubit");
    let noise = Hermitian4::identity().scale((T::one() - p) / T::lit(4.0));
    Ok(QuantumState::DensityTwoQubit(singlet.scale(p).add(&noise)))
}

/// `⟨a·σ ⊗ b̃·σ⟩ + ⟨a′·σ ⊗ b̃′·σ⟩`.
///
/// A hidden-variables model whose two tilde products are always opposite in
/// sign would force this sum to zero; it is nonzero for generic states.
pub fn quantum_sum_check<T: Real>(
    state: &QuantumState<T>,
    a: &UnitVector3<T>,
    a_prime: &UnitVector3<T>,
    b_tilde: &UnitVector3<T>,
    b_tilde_prime: &UnitVector3<T>,
) -> Result<T> {
    if state.dimension() != 4 {
        return Err(HvError::invalid("sum check needs a two-qubit state"));
    }
    let first = expectation(
        state,
        correlation_operator(&a.as_vector(), &b_tilde.as_vector()),
    )?;
    let second = expectation(
        state,
        correlation_operator(&a_prime.as_vector(), &b_tilde_prime.as_vector()),
    )?;
    Ok(first + second)
}
