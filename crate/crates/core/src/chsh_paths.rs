//! Local non-contextual evaluation of `⟨B⟩` along two routes.
//!
//! Each hidden-variable point fixes a ±1 value for every measured observable.
//! Only four values enter each route, so any weight `P(λ)` acts through a
//! probability vector over sixteen deterministic assignments:
//!
//! * route A (tilde form): `|b+b′|·a(θ)·b̃ + |b−b′|·a(θ′)·b̃′`, bounded by
//!   `|b+b′| + |b−b′|`, which reaches `2√2` for orthogonal `b, b′`;
//! * route B (conventional form): `a(θ)[b(φ)+b(φ′)] + a(θ′)[b(φ)−b(φ′)]`,
//!   which equals ±2 at every point.
//!
//! Canonical ordering of the sixteen assignments of a route: index `k` gives
//! label `j` (in [`Path::labels`] order) the value −1 iff bit `3 − j` of `k`
//! is set. Index 0 is all +1. Ties in an argmax resolve to the lowest index.

use crate::error::{HvError, Result};
use crate::quantum::{tilde_vectors, MeasurementSettings, TildeDecomposition, UnitVector3};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObservableLabel {
    ATheta,
    AThetaPrime,
    BPhi,
    BPhiPrime,
    BTilde,
    BTildePrime,
}

impl ObservableLabel {
    pub const ALL: [ObservableLabel; 6] = [
        ObservableLabel::ATheta,
        ObservableLabel::AThetaPrime,
        ObservableLabel::BPhi,
        ObservableLabel::BPhiPrime,
        ObservableLabel::BTilde,
        ObservableLabel::BTildePrime,
    ];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            ObservableLabel::ATheta => "A_THETA",
            ObservableLabel::AThetaPrime => "A_THETA_PRIME",
            ObservableLabel::BPhi => "B_PHI",
            ObservableLabel::BPhiPrime => "B_PHI_PRIME",
            ObservableLabel::BTilde => "B_TILDE",
            ObservableLabel::BTildePrime => "B_TILDE_PRIME",
        }
    }
}

/// ±1 value for every label. Labels a route does not consume stay +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DichotomicAssignment {
    values: [i8; 6],
}

impl Default for DichotomicAssignment {
    fn default() -> Self {
        DichotomicAssignment { values: [1; 6] }
    }
}

impl DichotomicAssignment {
    pub fn all_plus() -> Self {
        Self::default()
    }

    pub fn get(&self, label: ObservableLabel) -> i8 {
        self.values[label.index()]
    }

    pub fn set(&mut self, label: ObservableLabel, value: i8) -> Result<()> {
        if value != 1 && value != -1 {
            return Err(HvError::invalid(format!(
                "dichotomic value for {} must be +1 or -1, got {value}",
                label.name()
            )));
        }
        self.values[label.index()] = value;
        Ok(())
    }

    pub fn with(mut self, label: ObservableLabel, value: i8) -> Result<Self> {
        self.set(label, value)?;
        Ok(self)
    }

    pub fn iter(&self) -> impl Iterator<Item = (ObservableLabel, i8)> + '_ {
        ObservableLabel::ALL.iter().map(move |l| (*l, self.get(*l)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Path {
    /// Tilde rewriting of `B`.
    A,
    /// Conventional CHSH expansion of `B`.
    B,
}

impl Path {
    pub fn labels(self) -> [ObservableLabel; 4] {
        use ObservableLabel::*;
        match self {
            Path::A => [ATheta, AThetaPrime, BTilde, BTildePrime],
            Path::B => [ATheta, AThetaPrime, BPhi, BPhiPrime],
        }
    }

    /// The deterministic assignment at canonical index `k < 16`.
    pub fn assignment(self, k: usize) -> DichotomicAssignment {
        assert!(k < 16, "assignment index {k} out of range");
        let mut out = DichotomicAssignment::all_plus();
        for (j, label) in self.labels().into_iter().enumerate() {
            if k & (1 << (3 - j)) != 0 {
                out.values[label.index()] = -1;
            }
        }
        out
    }

    pub fn assignments(self) -> [DichotomicAssignment; 16] {
        std::array::from_fn(|k| self.assignment(k))
    }
}

fn value_of<T: Real>(a: &DichotomicAssignment, label: ObservableLabel) -> T {
    T::lit(a.get(label) as f64)
}

/// Route-A value at one hidden point.
pub fn path_a_value<T: Real>(
    assign: &DichotomicAssignment,
    settings: &MeasurementSettings<T>,
) -> Result<T> {
    let tilde = tilde_vectors(&settings.b, &settings.b_prime)?;
    Ok(path_a_value_with(assign, &tilde))
}

fn path_a_value_with<T: Real>(assign: &DichotomicAssignment, tilde: &TildeDecomposition<T>) -> T {
    use ObservableLabel::*;
    tilde.norm_plus * value_of::<T>(assign, ATheta) * value_of(assign, BTilde)
        + tilde.norm_minus * value_of::<T>(assign, AThetaPrime) * value_of(assign, BTildePrime)
}

/// Route-B value at one hidden point; always exactly ±2.
pub fn path_b_value(assign: &DichotomicAssignment) -> i32 {
    use ObservableLabel::*;
    let a = assign.get(ATheta) as i32;
    let ap = assign.get(AThetaPrime) as i32;
    let b = assign.get(BPhi) as i32;
    let bp = assign.get(BPhiPrime) as i32;
    a * (b + bp) + ap * (b - bp)
}

/// Probability weights over the sixteen assignments of one route.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightVector<T> {
    weights: [T; 16],
}

impl<T: Real> WeightVector<T> {
    pub fn new(weights: [T; 16]) -> Result<Self> {
        if weights.iter().any(|w| !(*w >= T::zero())) {
            return Err(HvError::invalid("weights must be non-negative"));
        }
        let total = weights.iter().fold(T::zero(), |acc, w| acc + *w);
        if (total - T::one()).abs() > T::NORMALIZATION_TOL {
            return Err(HvError::invalid(format!(
                "weights sum to {total}, expected 1"
            )));
        }
        Ok(WeightVector { weights })
    }

    pub fn point_mass(k: usize) -> Self {
        let mut weights = [T::zero(); 16];
        weights[k] = T::one();
        WeightVector { weights }
    }

    pub fn uniform() -> Self {
        WeightVector {
            weights: [T::lit(1.0 / 16.0); 16],
        }
    }

    pub fn weights(&self) -> &[T; 16] {
        &self.weights
    }

    /// Index of the single atom when this is a point mass.
    pub fn support_point(&self) -> Option<usize> {
        let mut nonzero = self
            .weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > T::zero());
        match (nonzero.next(), nonzero.next()) {
            (Some((k, _)), None) => Some(k),
            _ => None,
        }
    }
}

/// Values of the sixteen assignments of a route, in canonical order.
pub fn path_values<T: Real>(path: Path, settings: &MeasurementSettings<T>) -> Result<[T; 16]> {
    match path {
        Path::A => {
            let tilde = tilde_vectors(&settings.b, &settings.b_prime)?;
            Ok(std::array::from_fn(|k| {
                path_a_value_with(&path.assignment(k), &tilde)
            }))
        }
        Path::B => Ok(std::array::from_fn(|k| {
            T::lit(path_b_value(&path.assignment(k)) as f64)
        })),
    }
}

/// `Σ_λ P(λ)·value(λ)`.
pub fn weighted_value<T: Real>(
    path: Path,
    weights: &WeightVector<T>,
    settings: &MeasurementSettings<T>,
) -> Result<T> {
    let values = path_values(path, settings)?;
    Ok(values
        .iter()
        .zip(weights.weights.iter())
        .fold(T::zero(), |acc, (v, w)| acc + *v * *w))
}

/// Maximum of the route average over all weight vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathMaximum<T> {
    pub value: T,
    pub weights: WeightVector<T>,
    pub index: usize,
    pub assignment: DichotomicAssignment,
}

/// The average is linear in the weights, so the maximum sits on a vertex of
/// the simplex: a point mass on the first maximizing assignment.
pub fn max_over_weights<T: Real>(
    path: Path,
    settings: &MeasurementSettings<T>,
) -> Result<PathMaximum<T>> {
    let values = path_values(path, settings)?;
    let mut best = 0;
    for k in 1..16 {
        if values[k] > values[best] {
            best = k;
        }
    }
    Ok(PathMaximum {
        value: values[best],
        weights: WeightVector::point_mass(best),
        index: best,
        assignment: path.assignment(best),
    })
}

/// Both route maxima for one configuration and their gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChshReport<T> {
    pub path_a_max: T,
    pub path_b_max: T,
    pub gap: T,
    pub achieving_assignment_a: DichotomicAssignment,
    pub achieving_assignment_b: DichotomicAssignment,
    pub settings: MeasurementSettings<T>,
}

pub fn discrepancy_report<T: Real>(settings: &MeasurementSettings<T>) -> Result<ChshReport<T>> {
    let a = max_over_weights(Path::A, settings)?;
    let b = max_over_weights(Path::B, settings)?;
    Ok(ChshReport {
        path_a_max: a.value,
        path_b_max: b.value,
        gap: a.value - b.value,
        achieving_assignment_a: a.assignment,
        achieving_assignment_b: b.assignment,
        settings: *settings,
    })
}

/// Quantum side of Bell's original inequality under the singlet law `⟨ab⟩ = −a·b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellOriginalOutcome<T> {
    pub lhs: T,
    pub rhs: T,
    pub violated: bool,
}

/// `lhs = |−a·b + a·b′|`, `rhs = 1 − b·b′`, violated when `lhs > rhs + 1e-12`.
pub fn bell_original_check<T: Real>(
    a: &UnitVector3<T>,
    b: &UnitVector3<T>,
    b_prime: &UnitVector3<T>,
) -> BellOriginalOutcome<T> {
    let lhs = (-a.dot(b) + a.dot(b_prime)).abs();
    let rhs = T::one() - b.dot(b_prime);
    BellOriginalOutcome {
        lhs,
        rhs,
        violated: lhs > rhs + T::TIE_TOL,
    }
}

/// Anti-correlated deterministic point: values `a(θ), a(φ), a(φ′)` with
/// `b(x) = −a(x)`. Index bits follow the same MSB-first convention.
pub fn anticorrelated_assignment(k: usize) -> [i8; 3] {
    assert!(k < 8, "assignment index {k} out of range");
    std::array::from_fn(|j| if k & (1 << (2 - j)) != 0 { -1 } else { 1 })
}

/// Pointwise `(a(θ)[b(φ) − b(φ′)], 1 + a(φ)b(φ′))` for an anti-correlated point.
pub fn bell_original_point(assign: [i8; 3]) -> (i32, i32) {
    let [a_theta, a_phi, a_phi_prime] = assign.map(|v| v as i32);
    let (b_phi, b_phi_prime) = (-a_phi, -a_phi_prime);
    (a_theta * (b_phi - b_phi_prime), 1 + a_phi * b_phi_prime)
}

/// Hidden-variables side for weights over the eight anti-correlated points:
/// `(|Σ w·lhs|, Σ w·rhs)`.
pub fn bell_original_hv<T: Real>(weights: &[T; 8]) -> (T, T) {
    let mut lhs = T::zero();
    let mut rhs = T::zero();
    for (k, w) in weights.iter().enumerate() {
        let (l, r) = bell_original_point(anticorrelated_assignment(k));
        lhs = lhs + *w * T::lit(l as f64);
        rhs = rhs + *w * T::lit(r as f64);
    }
    (lhs.abs(), rhs)
}

/// `max_k (|lhs_k| − rhs_k)` over the eight points; `|Σ w·lhs| − Σ w·rhs` is
/// convex in `w`, so a non-positive result proves the inequality for all weights.
pub fn bell_original_hv_worst_case() -> i32 {
    (0..8)
        .map(|k| {
            let (l, r) = bell_original_point(anticorrelated_assignment(k));
            l.abs() - r
        })
        .max()
        .expect("eight points")
}
