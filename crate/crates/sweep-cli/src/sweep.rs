//! Grid evaluation. Points are independent and run in parallel; results are
//! collected in grid order before anything is written.

use entsteer::{
    accelerate, amplitude_damping_kraus, apply_local_channel, bell_mixture, bell_project_swap,
    dephasing_kraus, full_report, AccelerationParams, ChannelParams, SteeringReport,
    TwoQubitDensity,
};
use rayon::prelude::*;
use serde::Deserialize;

use crate::config::{Mode, RbSetting, SweepConfig};
use crate::error::SweepError;
use crate::output::{emit_plot_script, write_csv};

/// One CSV row.
#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
pub struct SweepRecord {
    pub param: f64,
    pub s: f64,
    pub z: f64,
    pub e_x: f64,
    pub e_y: f64,
    pub i_ab: f64,
}

impl SweepRecord {
    pub fn from_report(param: f64, r: &SteeringReport<f64>) -> Self {
        Self {
            param,
            s: r.s,
            z: r.z,
            e_x: r.e_x,
            e_y: r.e_y,
            i_ab: r.i_ab,
        }
    }
}

/// The state a sweep evaluates at one grid value.
pub fn state_at(cfg: &SweepConfig, x: f64) -> entsteer::Result<TwoQubitDensity<f64>> {
    let nu_state = |nu: f64| TwoQubitDensity::from_x_params(&bell_mixture(nu)?);
    match cfg.mode {
        Mode::Nu => nu_state(x),
        Mode::Acceleration => {
            let r_b = match cfg.rb {
                RbSetting::Fixed(v) => v,
                RbSetting::Track => x,
            };
            accelerate(cfg.nu, &AccelerationParams::new(x, r_b)?)
        }
        Mode::AdChannel => {
            let ch = amplitude_damping_kraus(&ChannelParams::new(cfg.g_over_gamma, x)?)?;
            apply_local_channel(&nu_state(cfg.nu)?, &ch, &ch)
        }
        Mode::DephasingChannel => {
            let ch = dephasing_kraus(&ChannelParams::new(cfg.g_over_gamma, x)?)?;
            apply_local_channel(&nu_state(cfg.nu)?, &ch, &ch)
        }
        Mode::Swap => {
            let rho = nu_state(x)?;
            bell_project_swap(&rho, &rho, cfg.bell)
        }
    }
}

fn param_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Nu | Mode::Swap => "nu",
        Mode::Acceleration => "r",
        Mode::AdChannel | Mode::DephasingChannel => "gamma_t",
    }
}

/// Evaluates every grid point without touching the filesystem.
pub fn compute_records(cfg: &SweepConfig) -> Result<Vec<SweepRecord>, SweepError> {
    cfg.validate()?;
    let xs = cfg.grid.values();
    let eval = || -> Vec<Result<SweepRecord, SweepError>> {
        xs.par_iter()
            .map(|&x| {
                state_at(cfg, x)
                    .and_then(|rho| full_report(&rho))
                    .map(|r| SweepRecord::from_report(x, &r))
                    .map_err(|source| SweepError::Internal {
                        param: param_name(cfg.mode),
                        value: x,
                        source,
                    })
            })
            .collect()
    };
    let results = match cfg.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| SweepError::InvalidConfig(format!("threads: {e}")))?
            .install(eval),
        None => eval(),
    };
    results.into_iter().collect()
}

/// Runs the sweep and writes the CSV plus its plot script.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<SweepRecord>, SweepError> {
    let records = compute_records(cfg)?;
    write_csv(&cfg.out, &records)?;
    emit_plot_script(&cfg.out, cfg.mode)?;
    Ok(records)
}
