//! Bell's dispersion-free hidden-variables model for a single qubit.
//!
//! For a pure state `½(1 + s·σ)` and a projector `½(1 + m·σ)` the model
//! assigns, at hidden point `ω ∈ [−½, ½]`,
//!
//! ```text
//! P_mψ(ω) = ½[1 + sign(ω + ½|s·m|)·sign(s·m)]        sign(0) := +1
//! ```
//!
//! which is `1` on a single interval bounded by `ω = −½|s·m|`. All integrals
//! over `ω` (uniform weight) are therefore evaluated exactly by breakpoint
//! analysis; a midpoint quadrature is kept as an independent check.

use crate::error::{HvError, Result};
use crate::quantum::{bloch_components, projector, Hermitian2, UnitVector3};
use crate::scalar::{sign_nonneg, Real};

/// Hidden variable of the single-qubit model, `−½ ≤ ω ≤ ½`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct HiddenVarOmega<T>(T);

impl<T: Real> HiddenVarOmega<T> {
    pub fn new(omega: T) -> Result<Self> {
        if !(omega >= -T::half() && omega <= T::half()) {
            return Err(HvError::invalid(format!(
                "omega = {omega} outside [-1/2, 1/2]"
            )));
        }
        Ok(HiddenVarOmega(omega))
    }

    pub fn value(&self) -> T {
        self.0
    }
}

/// Mixing weight `λ` of `E = λP_n + (1 − λ)P_m`, strictly inside `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MixCoefficient<T>(T);

impl<T: Real> MixCoefficient<T> {
    pub fn new(lambda: T) -> Result<Self> {
        if !(lambda > T::zero() && lambda < T::one()) {
            return Err(HvError::invalid(format!(
                "mixing coefficient {lambda} outside (0, 1)"
            )));
        }
        Ok(MixCoefficient(lambda))
    }

    pub fn value(&self) -> T {
        self.0
    }
}

/// Sub-interval of `[−½, ½]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> Interval<T> {
    pub fn length(&self) -> T {
        (self.hi - self.lo).max(T::zero())
    }
}

#[inline]
fn projector_value<T: Real>(overlap: T, omega: T) -> u8 {
    let v = sign_nonneg(omega + T::half() * overlap.abs()) * sign_nonneg(overlap);
    if v > T::zero() {
        1
    } else {
        0
    }
}

/// Dispersion-free value of `½(1 + m·σ)` in state `s` at `ω`; always 0 or 1.
pub fn dispersion_free_projector<T: Real>(
    s: &UnitVector3<T>,
    m: &UnitVector3<T>,
    omega: HiddenVarOmega<T>,
) -> u8 {
    projector_value(s.dot(m), omega.value())
}

/// Dispersion-free value of `m·σ`, i.e. `2P_mψ(ω) − 1 ∈ {−1, +1}`.
pub fn dichotomic_value<T: Real>(s: &UnitVector3<T>, m: &UnitVector3<T>, omega: T) -> i8 {
    2 * projector_value(s.dot(m), omega) as i8 - 1
}

/// The `ω`-interval on which the projector value is 1.
pub fn projector_region<T: Real>(s: &UnitVector3<T>, m: &UnitVector3<T>) -> Interval<T> {
    region_for_overlap(s.dot(m))
}

fn region_for_overlap<T: Real>(overlap: T) -> Interval<T> {
    let edge = -T::half() * overlap.abs();
    if overlap >= T::zero() {
        Interval {
            lo: edge,
            hi: T::half(),
        }
    } else {
        Interval {
            lo: -T::half(),
            hi: edge,
        }
    }
}

/// Exact `∫ P_mψ(ω) dω = ½(1 + s·m)`.
pub fn integrate_projector<T: Real>(s: &UnitVector3<T>, m: &UnitVector3<T>) -> T {
    projector_region(s, m).length()
}

/// Midpoint-rule estimate of [`integrate_projector`] with `n` cells.
/// The integrand has one jump, so the error is at most `1/n`.
pub fn integrate_projector_midpoint<T: Real>(
    s: &UnitVector3<T>,
    m: &UnitVector3<T>,
    n: usize,
) -> T {
    let overlap = s.dot(m);
    midpoint_sum(n, |omega| T::lit(projector_value(overlap, omega) as f64))
}

fn midpoint_sum<T: Real>(n: usize, f: impl Fn(T) -> T) -> T {
    if n == 0 {
        return T::zero();
    }
    let nn = n as f64;
    let mut acc = 0.0_f64;
    for k in 0..n {
        let omega = T::lit(-0.5 + (k as f64 + 0.5) / nn);
        acc += f(omega).to_f64_lossy();
    }
    T::lit(acc / nn)
}

/// `O = μ₁P₁ + μ₂P₂` with `P₁ = ½(1 + p₁·σ)`, `P₂ = ½(1 + p₂·σ)`, `p₂ = −p₁`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spectral2<T> {
    pub mu1: T,
    pub mu2: T,
    pub p1_dir: UnitVector3<T>,
    pub p2_dir: UnitVector3<T>,
    /// `O` is a multiple of the identity; the axis is an arbitrary `+z`.
    pub degenerate: bool,
}

impl<T: Real> Spectral2<T> {
    pub fn reconstruct(&self) -> Hermitian2<T> {
        projector(&self.p1_dir)
            .scale(self.mu1)
            .add(&projector(&self.p2_dir).scale(self.mu2))
    }

    /// `μ₂ + (μ₁ − μ₂)·P₁ψ(ω)`.
    ///
    /// `P₂ψ` is taken as `1 − P₁ψ`, which matches the sign formula for `P₂`
    /// everywhere except on the null set `s·p₁ = 0`, where the `sign(0) = +1`
    /// convention would otherwise give `P₁ψ = P₂ψ`.
    pub fn dispersion_free_value(&self, s: &UnitVector3<T>, omega: T) -> T {
        let p1 = projector_value(s.dot(&self.p1_dir), omega);
        if p1 == 1 {
            self.mu1
        } else {
            self.mu2
        }
    }

    /// Exact `ω`-integral of [`Spectral2::dispersion_free_value`].
    pub fn integrate(&self, s: &UnitVector3<T>) -> T {
        self.mu2 + (self.mu1 - self.mu2) * integrate_projector(s, &self.p1_dir)
    }
}

/// Spectral decomposition from the Bloch form `O = c₀ + r·σ`; `μ₁ ≥ μ₂`.
pub fn spectral_decompose<T: Real>(o: &Hermitian2<T>) -> Spectral2<T> {
    let (c0, r) = bloch_components(o);
    let len = r.norm();
    let scale = o.frobenius_norm().max(T::one());
    if len <= T::TIE_TOL * scale {
        let z = UnitVector3::z_axis();
        return Spectral2 {
            mu1: c0,
            mu2: c0,
            p1_dir: z,
            p2_dir: -z,
            degenerate: true,
        };
    }
    let axis = UnitVector3::normalize(r).expect("nonzero Bloch axis");
    Spectral2 {
        mu1: c0 + len,
        mu2: c0 - len,
        p1_dir: axis,
        p2_dir: -axis,
        degenerate: false,
    }
}

/// Dispersion-free value `O_ψ(ω)`; always one of the two eigenvalues.
pub fn dispersion_free_observable<T: Real>(
    o: &Hermitian2<T>,
    s: &UnitVector3<T>,
    omega: HiddenVarOmega<T>,
) -> T {
    spectral_decompose(o).dispersion_free_value(s, omega.value())
}

/// Exact `∫ O_ψ(ω) dω`.
pub fn integrate_observable<T: Real>(o: &Hermitian2<T>, s: &UnitVector3<T>) -> T {
    spectral_decompose(o).integrate(s)
}

/// Midpoint-rule estimate of [`integrate_observable`].
pub fn integrate_observable_midpoint<T: Real>(
    o: &Hermitian2<T>,
    s: &UnitVector3<T>,
    n: usize,
) -> T {
    let spec = spectral_decompose(o);
    midpoint_sum(n, |omega| spec.dispersion_free_value(s, omega))
}

/// Splits `[−½, ½]` at the given interior points, returning the cells in order.
pub(crate) fn partition<T: Real>(mut cuts: Vec<T>) -> Vec<Interval<T>> {
    cuts.retain(|c| *c > -T::half() && *c < T::half());
    cuts.push(-T::half());
    cuts.push(T::half());
    cuts.sort_by(|a, b| a.partial_cmp(b).expect("finite breakpoints"));
    cuts.dedup();
    cuts.windows(2)
        .map(|w| Interval { lo: w[0], hi: w[1] })
        .filter(|iv| iv.length() > T::zero())
        .collect()
}

/// The jump location `ω = −½|s·m|` of the projector value.
pub(crate) fn breakpoint<T: Real>(s: &UnitVector3<T>, m: &UnitVector3<T>) -> T {
    -T::half() * s.dot(m).abs()
}

/// Cells of `[−½, ½]` on which every listed dichotomic value `m_k·σ` is constant,
/// each with its length and the values on it.
pub fn dichotomic_cells<T: Real>(s: &UnitVector3<T>, dirs: &[UnitVector3<T>]) -> Vec<(T, Vec<i8>)> {
    let cuts = dirs.iter().map(|m| breakpoint(s, m)).collect();
    partition(cuts)
        .into_iter()
        .map(|iv| {
            let mid = (iv.lo + iv.hi) * T::half();
            (
                iv.length(),
                dirs.iter().map(|m| dichotomic_value(s, m, mid)).collect(),
            )
        })
        .collect()
}

/// `E = λP_n + (1 − λ)P_m`.
pub fn mixture_operator<T: Real>(
    n: &UnitVector3<T>,
    m: &UnitVector3<T>,
    lam: MixCoefficient<T>,
) -> Hermitian2<T> {
    let l = lam.value();
    projector(n).scale(l).add(&projector(m).scale(T::one() - l))
}

fn check_noncollinear<T: Real>(n: &UnitVector3<T>, m: &UnitVector3<T>) -> Result<()> {
    if n.is_collinear_with(m) {
        return Err(HvError::degenerate("n and m are collinear"));
    }
    Ok(())
}

/// Measure of the `ω`-set where `λP_nψ(ω) + (1 − λ)P_mψ(ω)` differs from the
/// dispersion-free value of `E = λP_n + (1 − λ)P_m`.
pub fn linearity_failure_measure<T: Real>(
    n: &UnitVector3<T>,
    m: &UnitVector3<T>,
    lam: MixCoefficient<T>,
    s: &UnitVector3<T>,
) -> Result<T> {
    check_noncollinear(n, m)?;
    let spec = spectral_decompose(&mixture_operator(n, m, lam));
    let l = lam.value();
    let cuts = vec![
        breakpoint(s, n),
        breakpoint(s, m),
        breakpoint(s, &spec.p1_dir),
    ];
    let mut measure = T::zero();
    for iv in partition(cuts) {
        let mid = (iv.lo + iv.hi) * T::half();
        if linearity_defect(&spec, n, m, l, s, mid) > T::TIE_TOL {
            measure = measure + iv.length();
        }
    }
    Ok(measure)
}

/// Midpoint-grid estimate of [`linearity_failure_measure`].
pub fn linearity_failure_measure_grid<T: Real>(
    n: &UnitVector3<T>,
    m: &UnitVector3<T>,
    lam: MixCoefficient<T>,
    s: &UnitVector3<T>,
    cells: usize,
) -> Result<T> {
    check_noncollinear(n, m)?;
    let spec = spectral_decompose(&mixture_operator(n, m, lam));
    let l = lam.value();
    Ok(midpoint_sum(cells, |omega| {
        if linearity_defect(&spec, n, m, l, s, omega) > T::TIE_TOL {
            T::one()
        } else {
            T::zero()
        }
    }))
}

fn linearity_defect<T: Real>(
    spec: &Spectral2<T>,
    n: &UnitVector3<T>,
    m: &UnitVector3<T>,
    l: T,
    s: &UnitVector3<T>,
    omega: T,
) -> T {
    let lhs = spec.dispersion_free_value(s, omega);
    let pn = T::lit(projector_value(s.dot(n), omega) as f64);
    let pm = T::lit(projector_value(s.dot(m), omega) as f64);
    (lhs - (l * pn + (T::one() - l) * pm)).abs()
}

/// `(⟨E⟩, λ⟨P_n⟩ + (1 − λ)⟨P_m⟩)`, both from the model integrated over `ω`.
pub fn integrated_linearity<T: Real>(
    n: &UnitVector3<T>,
    m: &UnitVector3<T>,
    lam: MixCoefficient<T>,
    s: &UnitVector3<T>,
) -> (T, T) {
    let l = lam.value();
    let lhs = integrate_observable(&mixture_operator(n, m, lam), s);
    let rhs = l * integrate_projector(s, n) + (T::one() - l) * integrate_projector(s, m);
    (lhs, rhs)
}
