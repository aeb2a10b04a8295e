//! Dense complex square matrices of fixed size (2, 4 and 16 in practice).

use std::ops::{Add, Index, IndexMut, Mul};

use nalgebra::DMatrix;
use num_complex::Complex;

use crate::scalar::Real;

/// `N`×`N` complex matrix stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMatrix<T, const N: usize> {
    data: [[Complex<T>; N]; N],
}

impl<T: Real, const N: usize> CMatrix<T, N> {
    pub fn zeros() -> Self {
        Self {
            data: [[Complex::new(T::zero(), T::zero()); N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.data[i][i] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_rows(data: [[Complex<T>; N]; N]) -> Self {
        Self { data }
    }

    pub fn from_real(rows: [[T; N]; N]) -> Self {
        Self {
            data: rows.map(|r| r.map(|x| Complex::new(x, T::zero()))),
        }
    }

    /// Real diagonal matrix.
    pub fn diagonal(diag: [T; N]) -> Self {
        let mut m = Self::zeros();
        for (i, &d) in diag.iter().enumerate() {
            m.data[i][i] = Complex::new(d, T::zero());
        }
        m
    }

    /// `|u⟩⟨v|`.
    pub fn outer(u: &[Complex<T>; N], v: &[Complex<T>; N]) -> Self {
        Self {
            data: u.map(|ui| v.map(|vj| ui * vj.conj())),
        }
    }

    pub fn rows(&self) -> &[[Complex<T>; N]; N] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] = self.data[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex<T> {
        (0..N).fold(Complex::new(T::zero(), T::zero()), |acc, i| {
            acc + self.data[i][i]
        })
    }

    pub fn scale(&self, s: T) -> Self {
        let mut m = *self;
        m.data.iter_mut().flatten().for_each(|z| *z = *z * s);
        m
    }

    /// `A ρ A†`.
    pub fn conjugate_by(&self, a: &Self) -> Self {
        *a * *self * a.adjoint()
    }

    /// `⟨v|M|v⟩`.
    pub fn expectation(&self, v: &[Complex<T>; N]) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for i in 0..N {
            for j in 0..N {
                acc = acc + v[i].conj() * self.data[i][j] * v[j];
            }
        }
        acc
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.data
            .iter()
            .flatten()
            .zip(other.data.iter().flatten())
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    /// Largest `|M_ij − conj(M_ji)|`.
    pub fn hermiticity_defect(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    /// Eigenvalues in ascending order, treating the matrix as Hermitian.
    ///
    /// The decomposition runs in `f64` regardless of `T`.
    pub fn hermitian_eigenvalues(&self) -> Vec<T> {
        let m = DMatrix::<Complex<f64>>::from_fn(N, N, |i, j| {
            let z = self.data[i][j];
            Complex::new(z.re.to_f64_lossy(), z.im.to_f64_lossy())
        });
        let mut vals: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        vals.into_iter().map(T::lit).collect()
    }
}

impl<T, const N: usize> Index<(usize, usize)> for CMatrix<T, N> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i][j]
    }
}

impl<T, const N: usize> IndexMut<(usize, usize)> for CMatrix<T, N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i][j]
    }
}

impl<T: Real, const N: usize> Mul for CMatrix<T, N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.data[i][k];
                if a.re == T::zero() && a.im == T::zero() {
                    continue;
                }
                for j in 0..N {
                    m.data[i][j] = m.data[i][j] + a * rhs.data[k][j];
                }
            }
        }
        m
    }
}

impl<T: Real, const N: usize> Add for CMatrix<T, N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let mut m = self;
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] = m.data[i][j] + rhs.data[i][j];
            }
        }
        m
    }
}

/// Kronecker product `a ⊗ b`; `P` must equal `N * M`.
pub fn kron<T: Real, const N: usize, const M: usize, const P: usize>(
    a: &CMatrix<T, N>,
    b: &CMatrix<T, M>,
) -> CMatrix<T, P> {
    assert_eq!(P, N * M, "kron output dimension mismatch");
    let mut out = CMatrix::<T, P>::zeros();
    for i in 0..N {
        for j in 0..N {
            let aij = a[(i, j)];
            for k in 0..M {
                for l in 0..M {
                    out[(i * M + k, j * M + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Kronecker product of two vectors; `P` must equal `N * M`.
pub fn kron_vec<T: Real, const N: usize, const M: usize, const P: usize>(
    a: &[Complex<T>; N],
    b: &[Complex<T>; M],
) -> [Complex<T>; P] {
    assert_eq!(P, N * M, "kron output dimension mismatch");
    let mut out = [Complex::new(T::zero(), T::zero()); P];
    for i in 0..N {
        for k in 0..M {
            out[i * M + k] = a[i] * b[k];
        }
    }
    out
}

/// Partial trace of a four-qubit operator, keeping the two qubits whose
/// positions (0-based, most significant first) are `keep`, in that order.
pub fn trace_out_pair<T: Real>(rho: &CMatrix<T, 16>, keep: [usize; 2]) -> CMatrix<T, 4> {
    assert!(keep[0] < 4 && keep[1] < 4 && keep[0] != keep[1]);
    let traced: Vec<usize> = (0..4).filter(|q| !keep.contains(q)).collect();
    let bit = |q: usize| 1usize << (3 - q);
    let index = |kept: usize, env: usize| -> usize {
        let mut idx = 0;
        if kept & 0b10 != 0 {
            idx |= bit(keep[0]);
        }
        if kept & 0b01 != 0 {
            idx |= bit(keep[1]);
        }
        if env & 0b10 != 0 {
            idx |= bit(traced[0]);
        }
        if env & 0b01 != 0 {
            idx |= bit(traced[1]);
        }
        idx
    };
    let mut out = CMatrix::<T, 4>::zeros();
    for m in 0..4 {
        for n in 0..4 {
            let mut acc = Complex::new(T::zero(), T::zero());
            for e in 0..4 {
                acc = acc + rho[(index(m, e), index(n, e))];
            }
            out[(m, n)] = acc;
        }
    }
    out
}
