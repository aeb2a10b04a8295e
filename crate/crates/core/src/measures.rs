//! Pauli measurement statistics, conditional entropies, the entropic
//! steering functional and quantifier, and conditional entropy squeezing.
//!
//! All entropies are in nats.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::qstate::{SingleQubitDensity, TwoQubitDensity, XStateParams};
use crate::scalar::{xlnx, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    pub fn index(self) -> usize {
        match self {
            PauliAxis::X => 0,
            PauliAxis::Y => 1,
            PauliAxis::Z => 2,
        }
    }

    /// Eigenvectors for eigenvalues +1 and −1, each scaled so its entries are
    /// in `{0, ±1, ±i}`; the second value is the squared norm.
    fn scaled_eigenvectors<T: Real>(self) -> ([[Complex<T>; 2]; 2], T) {
        let re = |v: f64| Complex::new(T::lit(v), T::zero());
        let im = |v: f64| Complex::new(T::zero(), T::lit(v));
        match self {
            PauliAxis::X => ([[re(1.0), re(1.0)], [re(1.0), re(-1.0)]], T::two()),
            PauliAxis::Y => ([[re(1.0), im(1.0)], [re(1.0), im(-1.0)]], T::two()),
            PauliAxis::Z => ([[re(1.0), re(0.0)], [re(0.0), re(1.0)]], T::one()),
        }
    }

    /// Normalized eigenvectors `|φ_1⟩` (+1) and `|φ_2⟩` (−1).
    pub fn eigenvectors<T: Real>(self) -> [[Complex<T>; 2]; 2] {
        let (vecs, norm2) = self.scaled_eigenvectors::<T>();
        let s = norm2.sqrt().recip();
        vecs.map(|v| v.map(|z| z * s))
    }
}

/// A squeezable quadrature: σ_x or σ_y.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrature {
    X,
    Y,
}

impl From<Quadrature> for PauliAxis {
    fn from(q: Quadrature) -> Self {
        match q {
            Quadrature::X => PauliAxis::X,
            Quadrature::Y => PauliAxis::Y,
        }
    }
}

/// Outcome probabilities for measuring the same Pauli on both qubits,
/// ordered `(n,m) = (1,1), (1,2), (2,1), (2,2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JointDistribution<T> {
    pub p: [T; 4],
}

/// Outcome probabilities for one qubit, ordered `+1, −1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MarginalDistribution<T> {
    pub p: [T; 2],
}

/// Clamps values within tolerance of `[0, 1]` and renormalizes; in-range
/// input is returned untouched.
fn clamp_probabilities<T: Real, const N: usize>(raw: [T; N]) -> Result<[T; N]> {
    if let Some(bad) = raw.iter().find(|&&p| p < -T::psd_tol() || !p.is_finite()) {
        return Err(Error::NegativeProbability(bad.to_f64_lossy()));
    }
    if raw.iter().all(|&p| p >= T::zero() && p <= T::one()) {
        return Ok(raw);
    }
    let clamped = raw.map(|p| p.max(T::zero()).min(T::one()));
    let total = clamped.iter().fold(T::zero(), |a, &b| a + b);
    Ok(clamped.map(|p| p / total))
}

pub fn joint_distribution<T: Real>(
    rho: &TwoQubitDensity<T>,
    axis: PauliAxis,
) -> Result<JointDistribution<T>> {
    let (vecs, norm2) = axis.scaled_eigenvectors::<T>();
    let m = rho.matrix();
    let mut raw = [T::zero(); 4];
    for (n, a) in vecs.iter().enumerate() {
        for (k, b) in vecs.iter().enumerate() {
            let v = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]];
            raw[2 * n + k] = m.expectation(&v).re / (norm2 * norm2);
        }
    }
    Ok(JointDistribution {
        p: clamp_probabilities(raw)?,
    })
}

pub fn marginal_distribution<T: Real>(
    rho_a: &SingleQubitDensity<T>,
    axis: PauliAxis,
) -> Result<MarginalDistribution<T>> {
    let (vecs, norm2) = axis.scaled_eigenvectors::<T>();
    let raw = vecs.map(|v| rho_a.matrix().expectation(&v).re / norm2);
    Ok(MarginalDistribution {
        p: clamp_probabilities(raw)?,
    })
}

/// `−Σ p ln p` with `0 ln 0 = 0`.
pub fn shannon_entropy<T: Real>(p: &[T]) -> T {
    -p.iter().fold(T::zero(), |acc, &x| acc + xlnx(x))
}

/// `H(σ_i^B | σ_i^A)`: joint entropy minus the entropy of A's marginal.
pub fn conditional_entropy<T: Real>(rho: &TwoQubitDensity<T>, axis: PauliAxis) -> Result<T> {
    let joint = joint_distribution(rho, axis)?;
    let marginal = marginal_distribution(&rho.partial_trace_b(), axis)?;
    Ok(shannon_entropy(&joint.p) - shannon_entropy(&marginal.p))
}

/// Closed-form coefficients of the steering functional for an X-state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XCoefficients<T> {
    /// Row `i` is the Pauli axis (x, y, z), column `j` the outcome pair.
    pub x: [[T; 4]; 3],
    pub a: [T; 2],
}

pub fn x_coefficients<T: Real>(p: &XStateParams<T>) -> XCoefficients<T> {
    let two = T::two();
    let sx = two * (p.c14 + p.c23);
    let sy = two * (p.c23 - p.c14);
    let total = p.d.iter().fold(T::zero(), |a, &b| a + b);
    // x_3j = 3 d_j − Σ_{k≠j} d_k
    let z = p.d.map(|dj| T::lit(3.0) * dj - (total - dj));
    let pol = p.d[0] + p.d[1] - p.d[2] - p.d[3];
    XCoefficients {
        x: [[sx, sx, -sx, -sx], [sy, sy, -sy, -sy], z],
        a: [-pol, pol],
    }
}

/// Closed-form steering functional `I_AB` of an X-state (nats).
pub fn steering_functional<T: Real>(p: &XStateParams<T>) -> T {
    let c = x_coefficients(p);
    let joint =
        c.x.iter()
            .flatten()
            .fold(T::zero(), |acc, &x| acc + xlnx(T::one() + x) * T::half());
    let marginal =
        c.a.iter()
            .fold(T::zero(), |acc, &a| acc + xlnx(T::one() + a));
    joint - marginal
}

/// `I_AB` from the identity `6 ln 2 − 2 Σ_i H(σ_i^B|σ_i^A)`; valid for any state.
pub fn steering_functional_entropic<T: Real>(rho: &TwoQubitDensity<T>) -> Result<T> {
    let mut sum = T::zero();
    for axis in PauliAxis::ALL {
        sum = sum + conditional_entropy(rho, axis)?;
    }
    Ok(T::lit(6.0) * T::LN_2() - T::two() * sum)
}

/// Right-hand side of the entropic steering inequality for `n` outcomes:
/// `(n/2) ln(n/2) + (1 + n/2) ln(1 + n/2)`.
pub fn neur_bound<T: Real>(n: u32) -> Result<T> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidDimension(n));
    }
    let h = T::lit(f64::from(n / 2));
    Ok(xlnx(h) + xlnx(T::one() + h))
}

/// Normalizes a steering functional value to `[0, 1]` against the qubit bound
/// `2 ln 2` and the Bell-state maximum `6 ln 2`.
pub fn steering_degree<T: Real>(i_ab: T) -> T {
    let bound = T::two() * T::LN_2();
    let span = T::lit(4.0) * T::LN_2();
    ((i_ab - bound) / span).max(T::zero()).min(T::one())
}

/// One-way steering `S^{A→B}` of an X-state.
pub fn one_way_steering<T: Real>(p: &XStateParams<T>) -> T {
    steering_degree(steering_functional(p))
}

/// `Ξ = exp H(σ_i^B | σ_i^A)`, in `[½, 2]`.
pub fn xi<T: Real>(rho: &TwoQubitDensity<T>, axis: PauliAxis) -> Result<T> {
    Ok(conditional_entropy(rho, axis)?.exp())
}

fn squeezing_from_xi<T: Real>(xi_z: T, xi_q: T) -> T {
    (T::two() / xi_z.sqrt() - xi_q).max(T::zero())
}

/// Entropy squeezing factor `E = max{0, 2/√Ξ_z − Ξ_q}`.
pub fn squeezing_factor<T: Real>(rho: &TwoQubitDensity<T>, quadrature: Quadrature) -> Result<T> {
    Ok(squeezing_from_xi(
        xi(rho, PauliAxis::Z)?,
        xi(rho, quadrature.into())?,
    ))
}

/// Average-squeezing steerability `Z^{A→B} = max{0, (E_x + E_y)/2}`.
pub fn steerability_z<T: Real>(rho: &TwoQubitDensity<T>) -> Result<T> {
    let ex = squeezing_factor(rho, Quadrature::X)?;
    let ey = squeezing_factor(rho, Quadrature::Y)?;
    Ok(((ex + ey) * T::half()).max(T::zero()))
}

/// Every derived quantity for one state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SteeringReport<T> {
    /// Conditional entropies along x, y, z (nats).
    pub h_cond: [T; 3],
    pub i_ab: T,
    pub s: T,
    /// `Ξ` along x, y, z.
    pub xi: [T; 3],
    pub e_x: T,
    pub e_y: T,
    pub z: T,
}

/// Computes a [`SteeringReport`].
///
/// For X-states `i_ab` comes from the closed form and is cross-checked
/// against the entropic identity; a gap above `IDENTITY_TOL` is reported as
/// [`Error::PathDisagreement`]. Other states use the entropic value.
pub fn full_report<T: Real>(rho: &TwoQubitDensity<T>) -> Result<SteeringReport<T>> {
    let mut h_cond = [T::zero(); 3];
    for axis in PauliAxis::ALL {
        h_cond[axis.index()] = conditional_entropy(rho, axis)?;
    }
    let entropic = T::lit(6.0) * T::LN_2() - T::two() * (h_cond[0] + h_cond[1] + h_cond[2]);
    let i_ab = match rho.to_x_params() {
        Some(p) => {
            let closed = steering_functional(&p);
            let gap = (closed - entropic).abs();
            if gap.is_nan() || gap > T::identity_tol() {
                return Err(Error::PathDisagreement {
                    closed_form: closed.to_f64_lossy(),
                    entropic: entropic.to_f64_lossy(),
                });
            }
            closed
        }
        None => entropic,
    };
    let xi = h_cond.map(T::exp);
    let e_x = squeezing_from_xi(xi[2], xi[0]);
    let e_y = squeezing_from_xi(xi[2], xi[1]);
    Ok(SteeringReport {
        h_cond,
        i_ab,
        s: steering_degree(i_ab),
        xi,
        e_x,
        e_y,
        z: ((e_x + e_y) * T::half()).max(T::zero()),
    })
}
