//! Cyclic Jacobi eigensolver for small complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `A_pq` with a diagonal
//! unitary, then applies the classical real plane rotation that annihilates
//! the (now real) pivot. Sweeps visit every `p < q` pair in order and stop once
//! the off-diagonal Frobenius norm drops below [`Real::JACOBI_TOL`] scaled by
//! `max(1, ‖A‖_F)`.

use num_complex::Complex;

use super::hermitian::{Entries, Hermitian};
use crate::error::{HvError, Result};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues in descending order with matching eigenvector columns.
#[derive(Debug, Clone, Copy)]
pub struct EigenDecomposition<T, const N: usize> {
    pub values: [T; N],
    /// Column `k` is the eigenvector for `values[k]`.
    pub vectors: Entries<T, N>,
    pub sweeps: usize,
}

impl<T: Real, const N: usize> EigenDecomposition<T, N> {
    pub fn eigenvector(&self, k: usize) -> [Complex<T>; N] {
        std::array::from_fn(|i| self.vectors[i][k])
    }

    /// `V·diag(λ)·V†`.
    pub fn reconstruct(&self) -> Hermitian<T, N> {
        let zero = Complex::new(T::zero(), T::zero());
        let mut m = [[zero; N]; N];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let mut acc = zero;
                for k in 0..N {
                    acc = acc + self.vectors[i][k] * self.vectors[j][k].conj() * self.values[k];
                }
                *x = acc;
            }
        }
        Hermitian::symmetrized(m)
    }

    pub fn max_abs(&self) -> T {
        self.values
            .iter()
            .fold(T::zero(), |acc, v| acc.max(v.abs()))
    }
}

fn off_diagonal_norm<T: Real, const N: usize>(a: &Entries<T, N>) -> T {
    let mut acc = T::zero();
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                acc = acc + x.norm_sqr();
            }
        }
    }
    acc.sqrt()
}

pub fn eigen_decompose<T: Real, const N: usize>(
    h: &Hermitian<T, N>,
) -> Result<EigenDecomposition<T, N>> {
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let mut a = *h.entries();
    let mut v = [[zero; N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = one;
    }

    let threshold = T::JACOBI_TOL * h.frobenius_norm().max(T::one());
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off < threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(HvError::NoConvergence {
                sweeps,
                off_norm: off.to_f64_lossy(),
            });
        }
        sweeps += 1;
        for p in 0..N {
            for q in (p + 1)..N {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| {
        a[j][j]
            .re
            .partial_cmp(&a[i][i].re)
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let values = std::array::from_fn(|k| a[order[k]][order[k]].re);
    let vectors = std::array::from_fn(|i| std::array::from_fn(|k| v[i][order[k]]));
    Ok(EigenDecomposition {
        values,
        vectors,
        sweeps,
    })
}

fn rotate<T: Real, const N: usize>(
    a: &mut Entries<T, N>,
    v: &mut Entries<T, N>,
    p: usize,
    q: usize,
) {
    let g = a[p][q];
    let h = g.norm();
    if h == T::zero() {
        return;
    }
    // e^{-iφ} with g = |g| e^{iφ}
    let phase = g.conj().unscale(h);
    let app = a[p][p].re;
    let aqq = a[q][q].re;
    let theta = (aqq - app) / (T::two() * h);
    let t = {
        let t = (theta.abs() + (theta * theta + T::one()).sqrt()).recip();
        if theta < T::zero() {
            -t
        } else {
            t
        }
    };
    let c = (t * t + T::one()).sqrt().recip();
    let s = t * c;

    // U = diag(1, e^{-iφ}) · [[c, s], [-s, c]] restricted to the (p, q) plane.
    let u_pp = Complex::new(c, T::zero());
    let u_pq = Complex::new(s, T::zero());
    let u_qp = phase.scale(-s);
    let u_qq = phase.scale(c);

    // A ← A·U
    for row in a.iter_mut() {
        let (xp, xq) = (row[p], row[q]);
        row[p] = xp * u_pp + xq * u_qp;
        row[q] = xp * u_pq + xq * u_qq;
    }
    // A ← U†·A
    for j in 0..N {
        let (xp, xq) = (a[p][j], a[q][j]);
        a[p][j] = u_pp.conj() * xp + u_qp.conj() * xq;
        a[q][j] = u_pq.conj() * xp + u_qq.conj() * xq;
    }
    a[p][q] = Complex::new(T::zero(), T::zero());
    a[q][p] = Complex::new(T::zero(), T::zero());
    a[p][p] = Complex::new(app - t * h, T::zero());
    a[q][q] = Complex::new(aqq + t * h, T::zero());

    // V ← V·U
    for row in v.iter_mut() {
        let (xp, xq) = (row[p], row[q]);
        row[p] = xp * u_pp + xq * u_qp;
        row[q] = xp * u_pq + xq * u_qq;
    }
}

/// Spectral norm `max |λ|` of a Hermitian matrix.
pub fn spectral_norm<T: Real, const N: usize>(h: &Hermitian<T, N>) -> Result<T> {
    Ok(eigen_decompose(h)?.max_abs())
}
