//! Entropic (NEUR) steering and conditional entropy squeezing for two-qubit
//! states, together with the physical processes used to study them:
//! Rindler acceleration, non-Markovian local noise and entanglement swapping.
//!
//! All math is generic over a [`Real`] scalar (`f64` or `f32`). The aliases
//! at the crate root fix the scalar for the common cases.

pub mod error;
pub mod linalg;
pub mod measures;
pub mod processes;
pub mod qstate;
pub mod scalar;

pub use error::{Error, Result};
pub use linalg::CMatrix;
pub use measures::{
    conditional_entropy, full_report, joint_distribution, marginal_distribution, neur_bound,
    one_way_steering, shannon_entropy, squeezing_factor, steerability_z, steering_degree,
    steering_functional, steering_functional_entropic, x_coefficients, xi, JointDistribution,
    MarginalDistribution, PauliAxis, Quadrature, SteeringReport, XCoefficients,
};
pub use processes::{
    accelerate, accelerate_oracle, amplitude_damping_kraus, amplitude_damping_survival,
    apply_local_channel, bell_project_swap, dephasing_factor, dephasing_kraus, AccelerationParams,
    ChannelParams, KrausChannel,
};
pub use qstate::{
    bell_mixture, random_x_state, tensor, BellIndex, FourQubitDensity, SingleQubitDensity,
    TwoQubitDensity, XStateParams,
};
pub use scalar::Real;

pub type TwoQubitDensityF64 = TwoQubitDensity<f64>;
pub type SingleQubitDensityF64 = SingleQubitDensity<f64>;
pub type XStateParamsF64 = XStateParams<f64>;
pub type SteeringReportF64 = SteeringReport<f64>;
pub type KrausChannelF64 = KrausChannel<f64>;
pub type ChannelParamsF64 = ChannelParams<f64>;
pub type AccelerationParamsF64 = AccelerationParams<f64>;

pub type TwoQubitDensityF32 = TwoQubitDensity<f32>;
pub type SingleQubitDensityF32 = SingleQubitDensity<f32>;
pub type XStateParamsF32 = XStateParams<f32>;
pub type SteeringReportF32 = SteeringReport<f32>;
pub type KrausChannelF32 = KrausChannel<f32>;
pub type ChannelParamsF32 = ChannelParams<f32>;
pub type AccelerationParamsF32 = AccelerationParams<f32>;
