//! Parameter sweeps over the Bell-mixture family and the processes acting on
//! it, written as CSV tables with companion gnuplot scripts.

pub mod config;
pub mod error;
pub mod figures;
pub mod output;
pub mod sweep;

pub use config::{Grid, Mode, PartialConfig, RbSetting, SweepConfig};
pub use error::SweepError;
pub use figures::figure_configs;
pub use output::{emit_plot_script, parse_csv, read_csv, render_csv, write_csv};
pub use sweep::{compute_records, run_sweep, state_at, SweepRecord};
