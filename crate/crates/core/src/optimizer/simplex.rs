//! Nelder–Mead simplex minimization.

use crate::scalar::Real;

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions<T> {
    pub reflection: T,
    pub expansion: T,
    pub contraction: T,
    pub shrink: T,
    pub max_iterations: usize,
    /// Stop once the simplex diameter falls below this...
    pub x_tol: T,
    /// ...and the spread of vertex values falls below this.
    pub f_tol: T,
    /// Offset along each coordinate for the initial simplex.
    pub initial_step: T,
}

impl<T: Real> Default for SimplexOptions<T> {
    fn default() -> Self {
        SimplexOptions {
            reflection: T::one(),
            expansion: T::two(),
            contraction: T::half(),
            shrink: T::half(),
            max_iterations: 5000,
            x_tol: T::lit(1e-8),
            f_tol: T::lit(1e-10),
            initial_step: T::lit(0.05),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SimplexResult<T> {
    pub x: Vec<T>,
    pub value: T,
    pub iterations: usize,
    pub converged: bool,
}

fn lerp<T: Real>(from: &[T], to: &[T], t: T) -> Vec<T> {
    from.iter()
        .zip(to)
        .map(|(f, x)| *f + t * (*x - *f))
        .collect()
}

fn distance<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + (*x - *y) * (*x - *y))
        .sqrt()
}

/// Minimizes `f` starting from `x0`. Deterministic for a given input.
pub fn minimize<T: Real>(
    f: impl Fn(&[T]) -> T,
    x0: &[T],
    opts: &SimplexOptions<T>,
) -> SimplexResult<T> {
    let n = x0.len();
    let mut simplex: Vec<Vec<T>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut v = x0.to_vec();
        v[i] = v[i] + opts.initial_step;
        simplex.push(v);
    }
    let mut values: Vec<T> = simplex.iter().map(|v| f(v)).collect();

    let mut iterations = 0;
    let mut converged = false;
    while iterations < opts.max_iterations {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&i, &j| {
            values[i]
                .partial_cmp(&values[j])
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        simplex = order.iter().map(|&i| simplex[i].clone()).collect();
        values = order.iter().map(|&i| values[i]).collect();

        let diameter = simplex[1..]
            .iter()
            .fold(T::zero(), |acc, v| acc.max(distance(&simplex[0], v)));
        let spread = (values[n] - values[0]).abs();
        if diameter < opts.x_tol && spread < opts.f_tol {
            converged = true;
            break;
        }
        iterations += 1;

        let inv = T::lit(1.0 / n as f64);
        let centroid: Vec<T> = (0..n)
            .map(|j| simplex[..n].iter().fold(T::zero(), |acc, v| acc + v[j]) * inv)
            .collect();
        let worst = simplex[n].clone();

        let xr = lerp(&centroid, &worst, -opts.reflection);
        let fr = f(&xr);
        if fr < values[0] {
            let xe = lerp(&centroid, &worst, -opts.reflection * opts.expansion);
            let fe = f(&xe);
            if fe < fr {
                simplex[n] = xe;
                values[n] = fe;
            } else {
                simplex[n] = xr;
                values[n] = fr;
            }
            continue;
        }
        if fr < values[n - 1] {
            simplex[n] = xr;
            values[n] = fr;
            continue;
        }
        let (xc, fc) = if fr < values[n] {
            let xc = lerp(&centroid, &xr, opts.contraction);
            let fc = f(&xc);
            (xc, fc)
        } else {
            let xc = lerp(&centroid, &worst, opts.contraction);
            let fc = f(&xc);
            (xc, fc)
        };
        if fc < values[n].min(fr) {
            simplex[n] = xc;
            values[n] = fc;
            continue;
        }
        let best = simplex[0].clone();
        for i in 1..=n {
            simplex[i] = lerp(&best, &simplex[i], opts.shrink);
            values[i] = f(&simplex[i]);
        }
    }

    let best = (0..=n)
        .min_by(|&i, &j| {
            values[i]
                .partial_cmp(&values[j])
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .expect("nonempty simplex");
    SimplexResult {
        x: simplex[best].clone(),
        value: values[best],
        iterations,
        converged,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| (1.0 - x[0]).powi(2) + 100.0 * (x[1] - x[0] * x[0]).powi(2);
        let r = minimize(f, &[-1.2, 1.0], &SimplexOptions::default());
        assert!(r.converged);
        assert!(
            (r.x[0] - 1.0).abs() < 1e-6 && (r.x[1] - 1.0).abs() < 1e-6,
            "{:?}",
            r.x
        );
    }

    #[test]
    fn quadratic_bowl_eight_dims() {
        let f = |x: &[f64]| {
            x.iter()
                .enumerate()
                .map(|(i, v)| (i as f64 + 1.0) * (v - 0.3).powi(2))
                .sum()
        };
        let r = minimize(f, &[0.0; 8], &SimplexOptions::default());
        assert!(r.converged, "{} iterations", r.iterations);
        assert!(r.x.iter().all(|v| (v - 0.3).abs() < 1e-7));
    }

    #[test]
    fn iteration_cap_reported() {
        let f = |x: &[f64]| x[0] * x[0];
        let opts = SimplexOptions {
            max_iterations: 3,
            ..SimplexOptions::default()
        };
        let r = minimize(f, &[5.0], &opts);
        assert!(!r.converged);
        assert_eq!(r.iterations, 3);
    }
}
