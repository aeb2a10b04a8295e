//! Physical processes acting on two-qubit states: Rindler acceleration, local
//! non-Markovian noise channels and entanglement swapping.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{kron, kron_vec, trace_out_pair, CMatrix};
use crate::qstate::{bell_mixture, tensor, BellIndex, TwoQubitDensity, XStateParams};
use crate::scalar::Real;

/// Acceleration parameters of qubits A and B, each in `[0, π/4]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AccelerationParams<T> {
    pub r_a: T,
    pub r_b: T,
}

impl<T: Real> AccelerationParams<T> {
    pub fn new(r_a: T, r_b: T) -> Result<Self> {
        let acc = Self { r_a, r_b };
        acc.validate()?;
        Ok(acc)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, r) in [("r_a", self.r_a), ("r_b", self.r_b)] {
            if !(r >= T::zero() && r <= T::FRAC_PI_4()) {
                return Err(Error::OutOfRange {
                    name,
                    value: r.to_f64_lossy(),
                    min: 0.0,
                    max: std::f64::consts::FRAC_PI_4,
                });
            }
        }
        Ok(())
    }
}

/// Closed-form accelerated state of the Bell mixture
/// `ν|φ⟩⟨φ| + (1−ν)|ψ⟩⟨ψ|` after tracing out both region-II modes.
pub fn accelerate<T: Real>(nu: T, acc: &AccelerationParams<T>) -> Result<TwoQubitDensity<T>> {
    bell_mixture(nu)?;
    acc.validate()?;
    let half = T::half();
    // weights of |ψ⟩ = (|00⟩+|11⟩)/√2 and |φ⟩ = (|01⟩+|10⟩)/√2
    let w = (T::one() - nu) * half;
    let u = nu * half;
    let (sa, ca) = acc.r_a.sin_cos();
    let (sb, cb) = acc.r_b.sin_cos();
    let (sa2, ca2, sb2, cb2) = (sa * sa, ca * ca, sb * sb, cb * cb);
    let a11 = w * ca2 * cb2;
    let a22 = ca2 * (w * sb2 + u);
    let a33 = cb2 * (w * sa2 + u);
    let a44 = sa2 * (w * sb2 + u) + u * sb2 + w;
    let a14 = w * ca * cb;
    let a23 = u * ca * cb;
    TwoQubitDensity::from_x_params(&XStateParams {
        d: [a11, a22, a33, a44],
        c14: a14,
        c23: a23,
    })
}

/// Maps a Minkowski qubit into its (region I, region II) mode pair:
/// `|0⟩ → cos r |00⟩ + sin r |11⟩`, `|1⟩ → |10⟩`.
fn rindler_modes<T: Real>(r: T) -> [[Complex<T>; 4]; 2] {
    let re = |v: T| Complex::new(v, T::zero());
    let (s, c) = r.sin_cos();
    let z = T::zero();
    [
        [re(c), re(z), re(z), re(s)],
        [re(z), re(z), re(T::one()), re(z)],
    ]
}

/// Builds the accelerated state by expanding each Bell component in Rindler
/// modes and tracing out region II numerically. Independent of [`accelerate`].
pub fn accelerate_oracle<T: Real>(
    nu: T,
    acc: &AccelerationParams<T>,
) -> Result<TwoQubitDensity<T>> {
    bell_mixture(nu)?;
    acc.validate()?;
    let modes_a = rindler_modes(acc.r_a);
    let modes_b = rindler_modes(acc.r_b);
    let zero = Complex::new(T::zero(), T::zero());
    let mut big = CMatrix::<T, 16>::zeros();
    for (weight, bell) in [(nu, BellIndex::Phi), (T::one() - nu, BellIndex::Psi)] {
        let amp = bell.vector::<T>();
        // ordering (A_I, A_II, B_I, B_II)
        let mut v = [zero; 16];
        for a in 0..2 {
            for b in 0..2 {
                let c = amp[2 * a + b];
                let part: [Complex<T>; 16] = kron_vec(&modes_a[a], &modes_b[b]);
                for (vi, pi) in v.iter_mut().zip(part) {
                    *vi = *vi + c * pi;
                }
            }
        }
        big = big + CMatrix::outer(&v, &v).scale(weight);
    }
    TwoQubitDensity::new(trace_out_pair(&big, [0, 2]))
}

/// Dimensionless channel parameters: decay-rate ratio `g/γ` and scaled
/// time `γt`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelParams<T> {
    pub g_over_gamma: T,
    pub gamma_t: T,
}

impl<T: Real> ChannelParams<T> {
    pub fn new(g_over_gamma: T, gamma_t: T) -> Result<Self> {
        let cp = Self {
            g_over_gamma,
            gamma_t,
        };
        cp.validate()?;
        Ok(cp)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.g_over_gamma > T::zero() && self.g_over_gamma.is_finite()) {
            return Err(Error::OutOfRange {
                name: "g_over_gamma",
                value: self.g_over_gamma.to_f64_lossy(),
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        if !(self.gamma_t >= T::zero() && self.gamma_t.is_finite()) {
            return Err(Error::OutOfRange {
                name: "gamma_t",
                value: self.gamma_t.to_f64_lossy(),
                min: 0.0,
                max: f64::INFINITY,
            });
        }
        Ok(())
    }
}

/// Set of 2×2 Kraus operators with `Σ K†K = I`.
#[derive(Clone, Debug, PartialEq)]
pub struct KrausChannel<T> {
    ops: Vec<CMatrix<T, 2>>,
}

impl<T: Real> KrausChannel<T> {
    pub fn new(ops: Vec<CMatrix<T, 2>>) -> Result<Self> {
        let ch = Self { ops };
        let defect = ch.completeness_defect();
        if defect.is_nan() || defect > T::exact_tol() {
            return Err(Error::IncompleteChannel(defect.to_f64_lossy()));
        }
        Ok(ch)
    }

    pub fn identity() -> Self {
        Self {
            ops: vec![CMatrix::identity()],
        }
    }

    pub fn ops(&self) -> &[CMatrix<T, 2>] {
        &self.ops
    }

    /// Largest elementwise deviation of `Σ K†K` from the identity.
    pub fn completeness_defect(&self) -> T {
        let sum = self
            .ops
            .iter()
            .fold(CMatrix::zeros(), |acc, k| acc + k.adjoint() * *k);
        sum.max_abs_diff(&CMatrix::identity())
    }
}

/// Excited-state survival probability of the non-Markovian amplitude-damping
/// channel, `e^{−gt}[cos(λt/2) + (g/λ) sin(λt/2)]²` with `λ = √(g(2γ − g))`.
pub fn amplitude_damping_survival<T: Real>(cp: &ChannelParams<T>) -> Result<T> {
    cp.validate()?;
    let g = cp.g_over_gamma;
    if g.is_nan() || g >= T::two() {
        return Err(Error::InvalidRate(g.to_f64_lossy()));
    }
    let lambda = (g * (T::two() - g)).sqrt();
    let phase = lambda * cp.gamma_t * T::half();
    let amp = phase.cos() + g / lambda * phase.sin();
    let p = (-g * cp.gamma_t).exp() * amp * amp;
    Ok(p.max(T::zero()).min(T::one()))
}

/// Coherence factor of the pure-dephasing channel,
/// `exp{−½(γt + (γ/g)(e^{−(g/γ)γt} − 1))}`.
pub fn dephasing_factor<T: Real>(cp: &ChannelParams<T>) -> Result<T> {
    cp.validate()?;
    let g = cp.g_over_gamma;
    let t = cp.gamma_t;
    // exp_m1 keeps the small-g·t regime accurate
    let exponent = -T::half() * (t + (-g * t).exp_m1() / g);
    Ok(exponent.exp().max(T::zero()).min(T::one()))
}

/// `{|0⟩⟨0| + √P |1⟩⟨1|, √(1−P) |0⟩⟨1|}`, identity at `γt = 0`.
pub fn amplitude_damping_kraus<T: Real>(cp: &ChannelParams<T>) -> Result<KrausChannel<T>> {
    let p = amplitude_damping_survival(cp)?;
    let k1 = CMatrix::from_real([[T::one(), T::zero()], [T::zero(), p.sqrt()]]);
    let k2 = CMatrix::from_real([[T::zero(), (T::one() - p).sqrt()], [T::zero(), T::zero()]]);
    KrausChannel::new(vec![k1, k2])
}

/// `{|0⟩⟨0| + P |1⟩⟨1|, √(1−P²) |1⟩⟨1|}`, identity at `γt = 0`.
pub fn dephasing_kraus<T: Real>(cp: &ChannelParams<T>) -> Result<KrausChannel<T>> {
    let p = dephasing_factor(cp)?;
    let k1 = CMatrix::from_real([[T::one(), T::zero()], [T::zero(), p]]);
    let k2 = CMatrix::from_real([
        [T::zero(), T::zero()],
        [T::zero(), (T::one() - p * p).sqrt()],
    ]);
    KrausChannel::new(vec![k1, k2])
}

/// `Σ_ij (K_i^A ⊗ K_j^B) ρ (K_i^A ⊗ K_j^B)†`.
pub fn apply_local_channel<T: Real>(
    rho0: &TwoQubitDensity<T>,
    ch_a: &KrausChannel<T>,
    ch_b: &KrausChannel<T>,
) -> Result<TwoQubitDensity<T>> {
    let mut out = CMatrix::<T, 4>::zeros();
    for ka in ch_a.ops() {
        for kb in ch_b.ops() {
            let k: CMatrix<T, 4> = kron(ka, kb);
            out = out + rho0.matrix().conjugate_by(&k);
        }
    }
    TwoQubitDensity::new(out)
}

/// Post-selected state of qubits 1 and 4 after projecting qubits 2 and 3 of
/// `ρ_12 ⊗ ρ_34` onto the Bell state `which`.
pub fn bell_project_swap<T: Real>(
    rho12: &TwoQubitDensity<T>,
    rho34: &TwoQubitDensity<T>,
    which: BellIndex,
) -> Result<TwoQubitDensity<T>> {
    let id = CMatrix::<T, 2>::identity();
    let left: CMatrix<T, 8> = kron(&id, &which.projector::<T>());
    let m: CMatrix<T, 16> = kron(&left, &id);
    let projected = tensor(rho12, rho34).matrix().conjugate_by(&m);
    let prob = projected.trace().re;
    if prob.is_nan() || prob < T::exact_tol() {
        return Err(Error::ZeroProbabilityOutcome(prob.to_f64_lossy()));
    }
    TwoQubitDensity::new(trace_out_pair(&projected, [0, 3]).scale(prob.recip()))
}
