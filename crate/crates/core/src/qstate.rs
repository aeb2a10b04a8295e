//! One- and two-qubit density operators.
//!
//! Basis order is `|00⟩, |01⟩, |10⟩, |11⟩` with qubit A the left (most
//! significant) tensor factor. Four-qubit operators use the order `1,2,3,4`.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{kron, trace_out_pair, CMatrix};
use crate::scalar::Real;

/// The six real parameters of a two-qubit X-state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XStateParams<T> {
    /// Diagonal entries `ρ11, ρ22, ρ33, ρ44`.
    pub d: [T; 4],
    /// Coherence between `|00⟩` and `|11⟩`.
    pub c14: T,
    /// Coherence between `|01⟩` and `|10⟩`.
    pub c23: T,
}

impl<T: Real> XStateParams<T> {
    pub fn new(d: [T; 4], c14: T, c23: T) -> Result<Self> {
        let p = Self { d, c14, c23 };
        p.validate()?;
        Ok(p)
    }

    /// Checks normalization, diagonal range and positivity of both 2×2 blocks.
    pub fn validate(&self) -> Result<()> {
        let tol = T::exact_tol();
        let all = [
            self.d[0], self.d[1], self.d[2], self.d[3], self.c14, self.c23,
        ];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameters("non-finite entry".into()));
        }
        for (i, &di) in self.d.iter().enumerate() {
            if di < -tol || di > T::one() + tol {
                return Err(Error::InvalidParameters(format!(
                    "d{} = {} outside [0,1]",
                    i + 1,
                    di
                )));
            }
        }
        let sum = self.d.iter().fold(T::zero(), |a, &b| a + b);
        if (sum - T::one()).abs() > tol {
            return Err(Error::InvalidParameters(format!(
                "diagonal sums to {sum}, not 1"
            )));
        }
        if self.c14 * self.c14 > self.d[0] * self.d[3] + tol {
            return Err(Error::InvalidParameters(format!(
                "c14^2 = {} exceeds d1*d4 = {}",
                self.c14 * self.c14,
                self.d[0] * self.d[3]
            )));
        }
        if self.c23 * self.c23 > self.d[1] * self.d[2] + tol {
            return Err(Error::InvalidParameters(format!(
                "c23^2 = {} exceeds d2*d3 = {}",
                self.c23 * self.c23,
                self.d[1] * self.d[2]
            )));
        }
        Ok(())
    }

    /// Eigenvalues from the two 2×2 blocks `(d1, d4, c14)` and `(d2, d3, c23)`,
    /// ascending.
    pub fn eigenvalues(&self) -> [T; 4] {
        let block = |a: T, b: T, c: T| {
            let mean = (a + b) * T::half();
            let radius = (((a - b) * T::half()).powi(2) + c * c).sqrt();
            [mean - radius, mean + radius]
        };
        let [l1, l2] = block(self.d[0], self.d[3], self.c14);
        let [l3, l4] = block(self.d[1], self.d[2], self.c23);
        let mut ev = [l1, l2, l3, l4];
        ev.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
        ev
    }
}

/// Mixture `ν|φ⟩⟨φ| + (1−ν)|ψ⟩⟨ψ|` with `ψ = (|00⟩+|11⟩)/√2`, `φ = (|01⟩+|10⟩)/√2`.
pub fn bell_mixture<T: Real>(nu: T) -> Result<XStateParams<T>> {
    if !(nu >= T::zero() && nu <= T::one()) {
        return Err(Error::OutOfRange {
            name: "nu",
            value: nu.to_f64_lossy(),
            min: 0.0,
            max: 1.0,
        });
    }
    let a = (T::one() - nu) * T::half();
    let b = nu * T::half();
    Ok(XStateParams {
        d: [a, b, b, a],
        c14: a,
        c23: b,
    })
}

/// Deterministic random X-state for property tests.
pub fn random_x_state<T: Real>(seed: u64) -> XStateParams<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // exponential variates normalize to a uniform point on the simplex
    let w: [f64; 4] = std::array::from_fn(|_| -(1.0 - rng.random::<f64>()).ln() + 1e-300);
    let total: f64 = w.iter().sum();
    let d = w.map(|x| x / total);
    let b14 = (d[0] * d[3]).sqrt();
    let b23 = (d[1] * d[2]).sqrt();
    let c14 = if b14 > 0.0 {
        rng.random_range(-b14..=b14)
    } else {
        0.0
    };
    let c23 = if b23 > 0.0 {
        rng.random_range(-b23..=b23)
    } else {
        0.0
    };
    XStateParams {
        d: d.map(T::lit),
        c14: T::lit(c14),
        c23: T::lit(c23),
    }
}

fn validate_density<T: Real, const N: usize>(m: &CMatrix<T, N>) -> Result<()> {
    let tol = T::exact_tol();
    let herm = m.hermiticity_defect();
    if herm.is_nan() || herm > tol {
        return Err(Error::InvalidDensity(format!(
            "not Hermitian (defect {herm})"
        )));
    }
    let tr = m.trace();
    if !((tr.re - T::one()).abs() <= tol && tr.im.abs() <= tol) {
        return Err(Error::InvalidDensity(format!(
            "trace {} + {}i is not 1",
            tr.re, tr.im
        )));
    }
    let min_ev = m.hermitian_eigenvalues()[0];
    if min_ev < -T::psd_tol() {
        return Err(Error::InvalidDensity(format!(
            "negative eigenvalue {min_ev}"
        )));
    }
    Ok(())
}

/// Hermitian, unit-trace, positive semidefinite 4×4 operator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitDensity<T> {
    matrix: CMatrix<T, 4>,
}

impl<T: Real> TwoQubitDensity<T> {
    pub fn new(matrix: CMatrix<T, 4>) -> Result<Self> {
        validate_density(&matrix)?;
        Ok(Self { matrix })
    }

    #[cfg(test)]
    pub(crate) fn from_matrix_unchecked(matrix: CMatrix<T, 4>) -> Self {
        Self { matrix }
    }

    pub fn from_x_params(p: &XStateParams<T>) -> Result<Self> {
        p.validate()?;
        let mut m = CMatrix::diagonal(p.d);
        let c14 = Complex::new(p.c14, T::zero());
        let c23 = Complex::new(p.c23, T::zero());
        m[(0, 3)] = c14;
        m[(3, 0)] = c14;
        m[(1, 2)] = c23;
        m[(2, 1)] = c23;
        Ok(Self { matrix: m })
    }

    /// `|Φ⟩⟨Φ|` for one of the four Bell states.
    pub fn bell(which: BellIndex) -> Self {
        Self {
            matrix: which.projector(),
        }
    }

    pub fn maximally_mixed() -> Self {
        Self {
            matrix: CMatrix::identity().scale(T::lit(0.25)),
        }
    }

    pub fn matrix(&self) -> &CMatrix<T, 4> {
        &self.matrix
    }

    pub fn validate(&self) -> Result<()> {
        validate_density(&self.matrix)
    }

    /// Reads back the X-state parameters when every off-X entry vanishes and
    /// both coherences are real (within `EXACT_TOL`).
    pub fn to_x_params(&self) -> Option<XStateParams<T>> {
        let tol = T::exact_tol();
        let m = &self.matrix;
        for i in 0..4 {
            for j in 0..4 {
                let on_x = i == j || i + j == 3;
                if !on_x && m[(i, j)].norm() > tol {
                    return None;
                }
            }
        }
        if m[(0, 3)].im.abs() > tol || m[(1, 2)].im.abs() > tol {
            return None;
        }
        Some(XStateParams {
            d: [m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re],
            c14: (m[(0, 3)].re + m[(3, 0)].re) * T::half(),
            c23: (m[(1, 2)].re + m[(2, 1)].re) * T::half(),
        })
    }

    /// `Tr_B ρ`.
    pub fn partial_trace_b(&self) -> SingleQubitDensity<T> {
        let mut out = CMatrix::<T, 2>::zeros();
        for m in 0..2 {
            for n in 0..2 {
                out[(m, n)] = self.matrix[(2 * m, 2 * n)] + self.matrix[(2 * m + 1, 2 * n + 1)];
            }
        }
        SingleQubitDensity { matrix: out }
    }

    /// `Tr_A ρ`.
    pub fn partial_trace_a(&self) -> SingleQubitDensity<T> {
        let mut out = CMatrix::<T, 2>::zeros();
        for m in 0..2 {
            for n in 0..2 {
                out[(m, n)] = self.matrix[(m, n)] + self.matrix[(2 + m, 2 + n)];
            }
        }
        SingleQubitDensity { matrix: out }
    }

    /// `σ_A ⊗ σ_B`.
    pub fn product(a: &SingleQubitDensity<T>, b: &SingleQubitDensity<T>) -> Self {
        Self {
            matrix: kron(&a.matrix, &b.matrix),
        }
    }
}

/// Hermitian, unit-trace, positive semidefinite 2×2 operator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingleQubitDensity<T> {
    matrix: CMatrix<T, 2>,
}

impl<T: Real> SingleQubitDensity<T> {
    pub fn new(matrix: CMatrix<T, 2>) -> Result<Self> {
        validate_density(&matrix)?;
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &CMatrix<T, 2> {
        &self.matrix
    }

    pub fn validate(&self) -> Result<()> {
        validate_density(&self.matrix)
    }
}

/// Four-qubit operator `ρ_12 ⊗ ρ_34`, qubit order 1,2,3,4.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourQubitDensity<T> {
    matrix: CMatrix<T, 16>,
}

impl<T: Real> FourQubitDensity<T> {
    pub fn matrix(&self) -> &CMatrix<T, 16> {
        &self.matrix
    }

    pub fn validate(&self) -> Result<()> {
        validate_density(&self.matrix)
    }

    /// Partial trace keeping qubits `keep` (0-based positions, in order).
    pub fn reduce(&self, keep: [usize; 2]) -> CMatrix<T, 4> {
        trace_out_pair(&self.matrix, keep)
    }
}

pub fn tensor<T: Real>(a: &TwoQubitDensity<T>, b: &TwoQubitDensity<T>) -> FourQubitDensity<T> {
    FourQubitDensity {
        matrix: kron(&a.matrix, &b.matrix),
    }
}

/// The four Bell states.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BellIndex {
    /// `(|00⟩ + |11⟩)/√2`
    Psi,
    /// `(|01⟩ + |10⟩)/√2`
    Phi,
    /// `(|00⟩ − |11⟩)/√2`
    PsiMinus,
    /// `(|01⟩ − |10⟩)/√2`
    PhiMinus,
}

impl BellIndex {
    pub const ALL: [BellIndex; 4] = [
        BellIndex::Psi,
        BellIndex::Phi,
        BellIndex::PsiMinus,
        BellIndex::PhiMinus,
    ];

    /// Unnormalized ±1/0 amplitudes; the state is this vector over √2.
    fn signs(self) -> [f64; 4] {
        match self {
            BellIndex::Psi => [1.0, 0.0, 0.0, 1.0],
            BellIndex::Phi => [0.0, 1.0, 1.0, 0.0],
            BellIndex::PsiMinus => [1.0, 0.0, 0.0, -1.0],
            BellIndex::PhiMinus => [0.0, 1.0, -1.0, 0.0],
        }
    }

    pub fn vector<T: Real>(self) -> [Complex<T>; 4] {
        let s = T::FRAC_1_SQRT_2();
        self.signs().map(|v| Complex::new(T::lit(v) * s, T::zero()))
    }

    /// `|Φ⟩⟨Φ|`, built from the signs so every entry is exactly `0` or `±½`.
    pub fn projector<T: Real>(self) -> CMatrix<T, 4> {
        let s = self.signs();
        let mut m = CMatrix::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = Complex::new(T::lit(0.5 * s[i] * s[j]), T::zero());
            }
        }
        m
    }

    pub fn name(self) -> &'static str {
        match self {
            BellIndex::Psi => "psi",
            BellIndex::Phi => "phi",
            BellIndex::PsiMinus => "psi-minus",
            BellIndex::PhiMinus => "phi-minus",
        }
    }
}

impl std::str::FromStr for BellIndex {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        BellIndex::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| {
                format!("unknown Bell state '{s}' (expected psi, phi, psi-minus or phi-minus)")
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(d: [f64; 4], c14: f64, c23: f64) -> XStateParams<f64> {
        XStateParams { d, c14, c23 }
    }

    #[test]
    fn pure_basis_state() {
        let rho = TwoQubitDensity::from_x_params(&x([1.0, 0.0, 0.0, 0.0], 0.0, 0.0)).unwrap();
        let expect = CMatrix::diagonal([1.0, 0.0, 0.0, 0.0]);
        assert_eq!(*rho.matrix(), expect);
    }

    #[test]
    fn bell_psi_from_params() {
        let rho = TwoQubitDensity::from_x_params(&x([0.5, 0.0, 0.0, 0.5], 0.5, 0.0)).unwrap();
        assert_eq!(rho, TwoQubitDensity::bell(BellIndex::Psi));
    }

    #[test]
    fn half_mixture_by_hand() {
        // ½|φ⟩⟨φ| + ½|ψ⟩⟨ψ| expanded entrywise
        let rho = TwoQubitDensity::from_x_params(&x([0.25; 4], 0.25, 0.25)).unwrap();
        let hand = CMatrix::from_real([
            [0.25, 0.0, 0.0, 0.25],
            [0.0, 0.25, 0.25, 0.0],
            [0.0, 0.25, 0.25, 0.0],
            [0.25, 0.0, 0.0, 0.25],
        ]);
        assert_eq!(*rho.matrix(), hand);
        let mix = TwoQubitDensity::<f64>::bell(BellIndex::Phi)
            .matrix()
            .scale(0.5)
            + TwoQubitDensity::<f64>::bell(BellIndex::Psi)
                .matrix()
                .scale(0.5);
        assert_eq!(mix, hand);
    }

    #[test]
    fn from_x_params_rejects_each_invariant() {
        let bad = [
            x([0.5, 0.5, 0.5, 0.0], 0.0, 0.0),
            x([1.2, -0.2, 0.0, 0.0], 0.0, 0.0),
            x([0.25; 4], 0.3, 0.0),
            x([0.25; 4], 0.0, -0.26),
            x([f64::NAN, 0.0, 0.0, 1.0], 0.0, 0.0),
        ];
        for p in bad {
            assert!(
                matches!(
                    TwoQubitDensity::from_x_params(&p),
                    Err(Error::InvalidParameters(_))
                ),
                "{p:?}"
            );
        }
    }

    #[test]
    fn bell_mixture_endpoints() {
        assert_eq!(
            bell_mixture(0.0).unwrap(),
            x([0.5, 0.0, 0.0, 0.5], 0.5, 0.0)
        );
        assert_eq!(
            bell_mixture(1.0).unwrap(),
            x([0.0, 0.5, 0.5, 0.0], 0.0, 0.5)
        );
        assert_eq!(bell_mixture(0.5).unwrap(), x([0.25; 4], 0.25, 0.25));
        assert!(matches!(bell_mixture(1.5), Err(Error::OutOfRange { .. })));
        assert!(bell_mixture(-0.1).is_err());
        assert!(bell_mixture(f64::NAN).is_err());
    }

    #[test]
    fn partial_trace_examples() {
        let basis = TwoQubitDensity::from_x_params(&x([1.0, 0.0, 0.0, 0.0], 0.0, 0.0)).unwrap();
        assert_eq!(
            *basis.partial_trace_b().matrix(),
            CMatrix::diagonal([1.0, 0.0])
        );
        for nu in [0.0, 0.2, 0.5, 0.9, 1.0] {
            let rho = TwoQubitDensity::from_x_params(&bell_mixture(nu).unwrap()).unwrap();
            assert!(
                rho.partial_trace_b()
                    .matrix()
                    .max_abs_diff(&CMatrix::diagonal([0.5, 0.5]))
                    < 1e-15
            );
        }
        let diag = TwoQubitDensity::new(CMatrix::diagonal([0.4, 0.1, 0.3, 0.2])).unwrap();
        assert!(
            diag.partial_trace_b()
                .matrix()
                .max_abs_diff(&CMatrix::diagonal([0.5, 0.5]))
                < 1e-15
        );
    }

    #[test]
    fn tensor_examples() {
        let mixed = TwoQubitDensity::<f64>::maximally_mixed();
        let big = tensor(&mixed, &mixed);
        assert!(
            big.matrix()
                .max_abs_diff(&CMatrix::identity().scale(1.0 / 16.0))
                < 1e-16
        );
        let basis = TwoQubitDensity::new(CMatrix::diagonal([1.0, 0.0, 0.0, 0.0])).unwrap();
        let mut e0 = [0.0; 16];
        e0[0] = 1.0;
        assert_eq!(*tensor(&basis, &basis).matrix(), CMatrix::diagonal(e0));
        let a = TwoQubitDensity::from_x_params(&random_x_state::<f64>(3)).unwrap();
        let b = TwoQubitDensity::from_x_params(&random_x_state(4)).unwrap();
        let ab = tensor(&a, &b);
        assert!((ab.matrix().trace().re - 1.0).abs() < 1e-12);
        ab.validate().unwrap();
    }

    #[test]
    fn random_state_is_deterministic_and_valid() {
        let a: XStateParams<f64> = random_x_state(42);
        let b: XStateParams<f64> = random_x_state(42);
        assert_eq!(a, b);
        assert_ne!(a, random_x_state(43));
        TwoQubitDensity::from_x_params(&a).unwrap();
    }

    #[test]
    fn f32_states_validate() {
        let p: XStateParams<f32> = random_x_state(7);
        TwoQubitDensity::from_x_params(&p)
            .unwrap()
            .validate()
            .unwrap();
        TwoQubitDensity::from_x_params(&bell_mixture(0.3_f32).unwrap())
            .unwrap()
            .validate()
            .unwrap();
    }

    #[test]
    fn invalid_matrices_are_rejected() {
        let non_herm = CMatrix::from_real([
            [0.5, 0.1, 0.0, 0.0],
            [0.0, 0.5, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0],
        ]);
        assert!(TwoQubitDensity::new(non_herm).is_err());
        assert!(TwoQubitDensity::new(CMatrix::diagonal([0.5, 0.5, 0.5, 0.0])).is_err());
        assert!(TwoQubitDensity::new(CMatrix::diagonal([1.1, -0.1, 0.0, 0.0])).is_err());
    }

    #[test]
    fn x_params_read_back() {
        let p: XStateParams<f64> = random_x_state(11);
        let rho = TwoQubitDensity::from_x_params(&p).unwrap();
        assert_eq!(rho.to_x_params(), Some(p));
        let mut m = *rho.matrix();
        m[(0, 1)] = Complex::new(0.01, 0.0);
        m[(1, 0)] = Complex::new(0.01, 0.0);
        assert_eq!(
            TwoQubitDensity::from_matrix_unchecked(m).to_x_params(),
            None
        );
    }

    #[test]
    fn bell_names_round_trip() {
        for b in BellIndex::ALL {
            assert_eq!(b.name().parse::<BellIndex>().unwrap(), b);
            let v = b.vector::<f64>();
            let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum();
            assert!((norm - 1.0).abs() < 1e-15);
            assert!(CMatrix::outer(&v, &v).max_abs_diff(&b.projector()) < 1e-15);
        }
        assert!("bogus".parse::<BellIndex>().is_err());
    }
}
