//! Fixed-size complex Hermitian matrices.

use num_complex::Complex;

use crate::error::{HvError, Result};
use crate::scalar::Real;

pub type Entries<T, const N: usize> = [[Complex<T>; N]; N];

/// `N×N` complex matrix equal to its own conjugate transpose.
///
/// Construction through [`Hermitian::from_entries`] checks the invariant within
/// [`Real::HERMITIAN_TOL`]; internal builders that are Hermitian by construction
/// symmetrize instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hermitian<T, const N: usize> {
    m: Entries<T, N>,
}

pub type Hermitian2<T> = Hermitian<T, 2>;
pub type Hermitian4<T> = Hermitian<T, 4>;

impl<T: Real, const N: usize> Hermitian<T, N> {
    pub fn from_entries(m: Entries<T, N>) -> Result<Self> {
        let dev = hermiticity_defect(&m);
        if !dev.is_finite() || dev > T::HERMITIAN_TOL {
            return Err(HvError::invalid(format!(
                "matrix is not Hermitian (max |A - A†| = {dev})"
            )));
        }
        Ok(Self::symmetrized(m))
    }

    /// Averages `A` with `A†`, producing an exactly Hermitian matrix.
    pub(crate) fn symmetrized(mut m: Entries<T, N>) -> Self {
        for i in 0..N {
            m[i][i] = Complex::new(m[i][i].re, T::zero());
            for j in (i + 1)..N {
                let avg = (m[i][j] + m[j][i].conj()).scale(T::half());
                m[i][j] = avg;
                m[j][i] = avg.conj();
            }
        }
        Hermitian { m }
    }

    pub fn from_real_diagonal(d: [T; N]) -> Self {
        let mut m = [[Complex::new(T::zero(), T::zero()); N]; N];
        for (i, v) in d.into_iter().enumerate() {
            m[i][i] = Complex::new(v, T::zero());
        }
        Hermitian { m }
    }

    pub fn identity() -> Self {
        Self::from_real_diagonal([T::one(); N])
    }

    pub fn zero() -> Self {
        Self::from_real_diagonal([T::zero(); N])
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> Complex<T> {
        self.m[i][j]
    }

    pub fn entries(&self) -> &Entries<T, N> {
        &self.m
    }

    pub fn trace(&self) -> T {
        (0..N).fold(T::zero(), |acc, i| acc + self.m[i][i].re)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.m;
        for (row, orow) in m.iter_mut().zip(other.m.iter()) {
            for (x, y) in row.iter_mut().zip(orow.iter()) {
                *x = *x + *y;
            }
        }
        Hermitian { m }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-T::one()))
    }

    pub fn scale(&self, k: T) -> Self {
        let mut m = self.m;
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x = x.scale(k);
            }
        }
        Hermitian { m }
    }

    /// Plain matrix product; the result is generally not Hermitian.
    pub fn matmul(&self, other: &Self) -> Entries<T, N> {
        let zero = Complex::new(T::zero(), T::zero());
        let mut out = [[zero; N]; N];
        for i in 0..N {
            for j in 0..N {
                let mut acc = zero;
                for k in 0..N {
                    acc = acc + self.m[i][k] * other.m[k][j];
                }
                out[i][j] = acc;
            }
        }
        out
    }

    /// `A²`, which is Hermitian whenever `A` is.
    pub fn square(&self) -> Self {
        Self::symmetrized(self.matmul(self))
    }

    /// `Tr(A·B)` in complex arithmetic.
    pub fn trace_product(&self, other: &Self) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for i in 0..N {
            for j in 0..N {
                acc = acc + self.m[i][j] * other.m[j][i];
            }
        }
        acc
    }

    /// `⟨v|A|v⟩` in complex arithmetic.
    pub fn sandwich(&self, v: &[Complex<T>; N]) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for i in 0..N {
            let mut row = Complex::new(T::zero(), T::zero());
            for j in 0..N {
                row = row + self.m[i][j] * v[j];
            }
            acc = acc + v[i].conj() * row;
        }
        acc
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        worst
    }

    pub fn frobenius_norm(&self) -> T {
        self.m
            .iter()
            .flatten()
            .fold(T::zero(), |acc, x| acc + x.norm_sqr())
            .sqrt()
    }
}

/// Largest entrywise `|A_ij − conj(A_ji)|`.
pub fn hermiticity_defect<T: Real, const N: usize>(m: &Entries<T, N>) -> T {
    let mut worst = T::zero();
    for i in 0..N {
        for j in i..N {
            worst = worst.max((m[i][j] - m[j][i].conj()).norm());
        }
    }
    worst
}
