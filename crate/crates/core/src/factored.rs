//! Product of two single-qubit Bell models, one per subsystem.
//!
//! The a-system reads hidden variable `λ₁`, the b-system `λ₂`, each uniform on
//! `[−½, ½]`, and the joint weight factorizes as `P₁(λ₁)P₂(λ₂)`. Every integral
//! below is exact: the dichotomic values are piecewise constant, so the double
//! integral is a finite sum over products of cells.

use rand::Rng;

use crate::bell_d2::{dichotomic_cells, dichotomic_value, integrate_projector};
use crate::error::{HvError, Result};
use crate::quantum::{tilde_vectors, MeasurementSettings, UnitVector3, Vector3};
use crate::scalar::Real;

/// Bell's uniform single-qubit weight `ρ(ω) = 1` on `[−½, ½]`.
pub fn bell_weight<T: Real>(omega: T) -> T {
    if omega >= -T::half() && omega <= T::half() {
        T::one()
    } else {
        T::zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactoredHiddenPoint<T> {
    pub lambda1: T,
    pub lambda2: T,
}

impl<T: Real> FactoredHiddenPoint<T> {
    pub fn new(lambda1: T, lambda2: T) -> Result<Self> {
        let ok = |x: T| x >= -T::half() && x <= T::half();
        if !(ok(lambda1) && ok(lambda2)) {
            return Err(HvError::invalid(format!(
                "hidden point ({lambda1}, {lambda2}) outside [-1/2, 1/2]^2"
            )));
        }
        Ok(FactoredHiddenPoint { lambda1, lambda2 })
    }

    /// `P₁(λ₁)·P₂(λ₂)`.
    pub fn weight(&self) -> T {
        bell_weight(self.lambda1) * bell_weight(self.lambda2)
    }
}

/// Pure product state `ψ₁(s₁)ψ₂(s₂)` described by its two Bloch vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactoredModel<T> {
    pub s1: UnitVector3<T>,
    pub s2: UnitVector3<T>,
}

impl<T: Real> FactoredModel<T> {
    pub fn new(s1: UnitVector3<T>, s2: UnitVector3<T>) -> Self {
        FactoredModel { s1, s2 }
    }

    /// `a_ψ(θ, λ₁) ∈ {±1}` for direction `a`.
    pub fn a_value(&self, a: &UnitVector3<T>, lambda1: T) -> i8 {
        dichotomic_value(&self.s1, a, lambda1)
    }

    /// `b_ψ(φ, λ₂) ∈ {±1}` for direction `b`.
    pub fn b_value(&self, b: &UnitVector3<T>, lambda2: T) -> i8 {
        dichotomic_value(&self.s2, b, lambda2)
    }

    /// `A_ψ(θ, λ₁) = ½[1 + a_ψ(θ, λ₁)] ∈ {0, 1}`.
    pub fn projection_a(&self, a: &UnitVector3<T>, lambda1: T) -> u8 {
        ((1 + self.a_value(a, lambda1)) / 2) as u8
    }
}

fn mean_dichotomic<T: Real>(s: &UnitVector3<T>, m: &UnitVector3<T>) -> T {
    T::two() * integrate_projector(s, m) - T::one()
}

/// `∫∫ P₁P₂ a_ψ(θ,λ₁) b_ψ(φ,λ₂)`, equal to `(a·s₁)(b·s₂)`.
pub fn product_expectation<T: Real>(
    model: &FactoredModel<T>,
    a: &UnitVector3<T>,
    b: &UnitVector3<T>,
) -> T {
    mean_dichotomic(&model.s1, a) * mean_dichotomic(&model.s2, b)
}

/// Exact `∫∫ f(a-values, b-values) dλ₁ dλ₂` over the product of cells.
fn double_integral<T: Real>(
    model: &FactoredModel<T>,
    a_dirs: &[UnitVector3<T>],
    b_dirs: &[UnitVector3<T>],
    f: impl Fn(&[i8], &[i8]) -> T,
) -> T {
    let cells1 = dichotomic_cells(&model.s1, a_dirs);
    let cells2 = dichotomic_cells(&model.s2, b_dirs);
    let mut acc = T::zero();
    for (len1, av) in &cells1 {
        for (len2, bv) in &cells2 {
            acc = acc + *len1 * *len2 * f(av, bv);
        }
    }
    acc
}

/// `⟨B⟩` under the factored model, evaluated along both routes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactoredChsh<T> {
    /// Tilde route `|b+b′|·a·b̃ + |b−b′|·a′·b̃′`.
    pub path_a: T,
    /// Conventional route `a(b + b′) + a′(b − b′)`.
    pub path_b: T,
    /// `(a·s₁)(b+b′)·s₂ + (a′·s₁)(b−b′)·s₂`.
    pub closed_form: T,
    pub settings: MeasurementSettings<T>,
}

pub fn factored_chsh<T: Real>(
    model: &FactoredModel<T>,
    settings: &MeasurementSettings<T>,
) -> Result<FactoredChsh<T>> {
    let tilde = tilde_vectors(&settings.b, &settings.b_prime)?;
    let a_dirs = [settings.a, settings.a_prime];
    let sgn = |v: i8| T::lit(v as f64);

    let path_a = double_integral(
        model,
        &a_dirs,
        &[tilde.b_tilde, tilde.b_tilde_prime],
        |av, bv| {
            tilde.norm_plus * sgn(av[0]) * sgn(bv[0]) + tilde.norm_minus * sgn(av[1]) * sgn(bv[1])
        },
    );
    let path_b = double_integral(model, &a_dirs, &[settings.b, settings.b_prime], |av, bv| {
        let (a, ap, b, bp) = (av[0] as i32, av[1] as i32, bv[0] as i32, bv[1] as i32);
        T::lit((a * (b + bp) + ap * (b - bp)) as f64)
    });
    let s1 = model.s1.as_vector();
    let s2 = model.s2.as_vector();
    let closed_form = settings.a.dot_vec(&s1) * settings.b_sum().dot(&s2)
        + settings.a_prime.dot_vec(&s1) * settings.b_diff().dot(&s2);
    Ok(FactoredChsh {
        path_a,
        path_b,
        closed_form,
        settings: *settings,
    })
}

/// `lhs = ⟨a·σ ⊗ (b ± b′)·σ⟩` through the tilde route and
/// `rhs = ⟨a·σ ⊗ b·σ⟩ ± ⟨a·σ ⊗ b′·σ⟩`, both under the factored model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearityComparison<T> {
    pub plus: (T, T),
    pub minus: (T, T),
}

impl<T: Real> LinearityComparison<T> {
    pub fn max_defect(&self) -> T {
        (self.plus.0 - self.plus.1)
            .abs()
            .max((self.minus.0 - self.minus.1).abs())
    }
}

pub fn linearity_after_integration<T: Real>(
    model: &FactoredModel<T>,
    a: &UnitVector3<T>,
    b: &UnitVector3<T>,
    b_prime: &UnitVector3<T>,
) -> LinearityComparison<T> {
    let tilde_route = |v: Vector3<T>| -> T {
        // |b ± b′| vanishes only when the combined operator is zero
        match UnitVector3::normalize(v) {
            Ok(dir) if v.norm() > T::COLLINEAR_TOL => {
                v.norm() * product_expectation(model, a, &dir)
            }
            _ => T::zero(),
        }
    };
    let eb = product_expectation(model, a, b);
    let ebp = product_expectation(model, a, b_prime);
    LinearityComparison {
        plus: (tilde_route(b.as_vector() + b_prime.as_vector()), eb + ebp),
        minus: (tilde_route(b.as_vector() - b_prime.as_vector()), eb - ebp),
    }
}

/// `|b+b′|·b̃_ψ(λ₂) − b_ψ(φ, λ₂) − b_ψ(φ′, λ₂)` at one hidden point.
pub fn nonlinearity_defect<T: Real>(
    model: &FactoredModel<T>,
    b: &UnitVector3<T>,
    b_prime: &UnitVector3<T>,
    lambda2: T,
) -> Result<T> {
    let tilde = tilde_vectors(b, b_prime)?;
    let sgn = |v: i8| T::lit(v as f64);
    Ok(
        tilde.norm_plus * sgn(model.b_value(&tilde.b_tilde, lambda2))
            - sgn(model.b_value(b, lambda2))
            - sgn(model.b_value(b_prime, lambda2)),
    )
}

/// Samples `λ₂` uniformly and reports whether the pointwise defect is nonzero
/// at every sample.
///
/// The defect lies in `{±|b+b′|} − {−2, 0, 2}`; for non-collinear inputs
/// `0 < |b+b′| < 2`, so it can never vanish.
pub fn pointwise_nonlinearity_witness<T: Real, R: Rng + ?Sized>(
    model: &FactoredModel<T>,
    b: &UnitVector3<T>,
    b_prime: &UnitVector3<T>,
    sample_count: usize,
    rng: &mut R,
) -> Result<bool> {
    tilde_vectors(b, b_prime)?;
    for _ in 0..sample_count {
        let lambda2 = T::lit(rng.random::<f64>() - 0.5);
        if nonlinearity_defect(model, b, b_prime, lambda2)?.abs() <= T::TIE_TOL {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Proportionality constants of the three b-system marginals against `P₂(λ₂)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginalWeights<T> {
    /// `P(Λ₁; λ₂) / P₂(λ₂)`.
    pub c_total: T,
    /// `P(ψ, θ; λ₂) / P₂(λ₂) = ∫ A_ψ₁(θ, λ₁) dλ₁ = ½(1 + s₁·a_θ)`.
    pub c_theta: T,
    /// `P̄(ψ, θ; λ₂) / P₂(λ₂) = 1 − c_theta`.
    pub c_bar: T,
}

const MARGINAL_SAMPLES: usize = 64;
const MARGINAL_REL_TOL: f64 = 1e-10;

/// Computes the marginal weights of the factored joint weight and checks,
/// at 64 evenly spaced `λ₂`, that each is `P₂(λ₂)` times a constant.
pub fn marginal_weights<T: Real>(
    model: &FactoredModel<T>,
    theta_direction: &UnitVector3<T>,
) -> Result<MarginalWeights<T>> {
    let cells = dichotomic_cells(&model.s1, std::slice::from_ref(theta_direction));
    let joint = |l1: T, l2: T| bell_weight(l1) * bell_weight(l2);
    let marginals = |lambda2: T| -> (T, T, T) {
        let mut total = T::zero();
        let mut theta = T::zero();
        for (len, v) in &cells {
            // P₁ is constant on each cell
            let w = *len * joint(T::zero(), lambda2);
            total = total + w;
            if v[0] == 1 {
                theta = theta + w;
            }
        }
        (total, theta, total - theta)
    };

    let mut reference: Option<(T, T, T)> = None;
    for k in 0..MARGINAL_SAMPLES {
        let lambda2 = T::lit(-0.5 + (k as f64 + 0.5) / MARGINAL_SAMPLES as f64);
        let p2 = bell_weight(lambda2);
        let (t, th, bar) = marginals(lambda2);
        let ratios = (t / p2, th / p2, bar / p2);
        match reference {
            None => reference = Some(ratios),
            Some(r) => {
                let close =
                    |x: T, y: T| (x - y).abs() <= T::lit(MARGINAL_REL_TOL) * y.abs().max(T::one());
                if !(close(ratios.0, r.0) && close(ratios.1, r.1) && close(ratios.2, r.2)) {
                    return Err(HvError::invalid(format!(
                        "marginal weight at lambda2 = {lambda2} is not proportional to P2"
                    )));
                }
            }
        }
    }
    let (c_total, c_theta, c_bar) = reference.expect("at least one sample");
    Ok(MarginalWeights {
        c_total,
        c_theta,
        c_bar,
    })
}
