use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use entsteer_sweep::config::RbValue;
use entsteer_sweep::{figure_configs, run_sweep, PartialConfig, SweepError};

/// Sweep entropic steering S and average entropy squeezing Z over a parameter
/// grid, writing `<out>.csv` and a gnuplot script `<out>.gp`.
#[derive(Parser, Debug)]
#[command(name = "sweep", version)]
struct Cli {
    /// nu | acceleration | ad-channel | dephasing-channel | swap
    #[arg(long)]
    mode: Option<String>,

    /// start:stop:points (bounds accept pi forms, e.g. 0:pi/4:50)
    #[arg(long)]
    grid: Option<String>,

    /// Bell-mixture parameter of the initial state
    #[arg(long)]
    nu: Option<f64>,

    /// Acceleration of qubit B, or "track" to follow r_a
    #[arg(long)]
    rb: Option<String>,

    /// Decay-rate ratio g/γ for the channel modes
    #[arg(long = "g-over-gamma")]
    g_over_gamma: Option<f64>,

    /// Bell outcome for swapping: psi | phi | psi-minus | phi-minus
    #[arg(long)]
    bell: Option<String>,

    /// Output CSV path
    #[arg(long)]
    out: Option<PathBuf>,

    /// Worker threads (defaults to all cores)
    #[arg(long)]
    threads: Option<usize>,

    /// TOML file with the same keys; flags override it
    #[arg(long)]
    config: Option<PathBuf>,

    /// Write every figure panel's sweep into this directory and exit
    #[arg(long, conflicts_with_all = ["mode", "grid", "out", "config"])]
    figures: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<(), SweepError> {
    if let Some(dir) = cli.figures {
        std::fs::create_dir_all(&dir).map_err(|source| SweepError::Io {
            path: dir.clone(),
            source,
        })?;
        for (name, mut cfg) in figure_configs(&dir) {
            cfg.threads = cli.threads;
            let records = run_sweep(&cfg)?;
            eprintln!("{name}: {} rows -> {}", records.len(), cfg.out.display());
        }
        return Ok(());
    }
    let file = match &cli.config {
        Some(path) => PartialConfig::from_toml_file(path)?,
        None => PartialConfig::default(),
    };
    let flags = PartialConfig {
        mode: cli.mode,
        grid: cli.grid,
        nu: cli.nu,
        rb: cli.rb.map(RbValue::Text),
        g_over_gamma: cli.g_over_gamma,
        bell: cli.bell,
        out: cli.out,
        threads: cli.threads,
    };
    let cfg = flags.over(file).resolve()?;
    let records = run_sweep(&cfg)?;
    eprintln!(
        "{}: {} rows -> {}",
        cfg.mode,
        records.len(),
        cfg.out.display()
    );
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sweep: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
