//! Sweep configuration: modes, grids, fixed parameters and config-file merging.

use std::f64::consts::{FRAC_PI_4, PI};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use entsteer::BellIndex;
use serde::Deserialize;

use crate::error::SweepError;

pub const DEFAULT_POINTS: usize = 201;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Nu,
    Acceleration,
    AdChannel,
    DephasingChannel,
    Swap,
}

impl Mode {
    pub const ALL: [Mode; 5] = [
        Mode::Nu,
        Mode::Acceleration,
        Mode::AdChannel,
        Mode::DephasingChannel,
        Mode::Swap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Nu => "nu",
            Mode::Acceleration => "acceleration",
            Mode::AdChannel => "ad-channel",
            Mode::DephasingChannel => "dephasing-channel",
            Mode::Swap => "swap",
        }
    }

    /// Symbol of the swept variable, used as the plot's x-axis label.
    pub fn axis_label(self) -> &'static str {
        match self {
            Mode::Nu | Mode::Swap => "ν",
            Mode::Acceleration => "r",
            Mode::AdChannel | Mode::DephasingChannel => "γt",
        }
    }

    /// Interval the swept variable may take.
    pub fn domain(self) -> (f64, f64) {
        match self {
            Mode::Nu | Mode::Swap => (0.0, 1.0),
            Mode::Acceleration => (0.0, FRAC_PI_4),
            Mode::AdChannel | Mode::DephasingChannel => (0.0, f64::INFINITY),
        }
    }

    pub fn default_grid(self) -> Grid {
        let (start, stop) = match self {
            Mode::Nu | Mode::Swap => (0.0, 1.0),
            Mode::Acceleration => (0.0, FRAC_PI_4),
            // two full revival periods at g/γ = 0.01
            Mode::AdChannel => (0.0, 100.0),
            Mode::DephasingChannel => (0.0, 30.0),
        };
        Grid {
            start,
            stop,
            points: DEFAULT_POINTS,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Mode::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| {
            format!("unknown mode '{s}' (expected nu, acceleration, ad-channel, dephasing-channel or swap)")
        })
    }
}

/// Evenly spaced sample points `start..=stop`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl Grid {
    pub fn values(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|k| {
                if k == last {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * (k as f64) / (last as f64)
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = String;

    /// Parses `start:stop:points`; bounds accept `pi` forms such as `pi/4`.
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, points] = parts.as_slice() else {
            return Err(format!("grid '{s}' must be start:stop:points"));
        };
        let points = points
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("grid points '{points}': {e}"))?;
        Ok(Grid {
            start: parse_real(start)?,
            stop: parse_real(stop)?,
            points,
        })
    }
}

/// Parses a real number, also accepting `pi`, `pi/N`, `X*pi` and `X*pi/N`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let err = || format!("cannot parse '{s}' as a number");
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim().parse::<f64>().map_err(|_| err())?),
        None => (t, 1.0),
    };
    let factor = match num.strip_suffix("pi") {
        Some("") => 1.0,
        Some(pre) => pre
            .trim_end_matches('*')
            .trim()
            .parse::<f64>()
            .map_err(|_| err())?,
        None => return Err(err()),
    };
    Ok(factor * PI / den)
}

/// Acceleration of qubit B: fixed, or equal to the swept `r_a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RbSetting {
    Fixed(f64),
    Track,
}

impl FromStr for RbSetting {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim() == "track" {
            Ok(RbSetting::Track)
        } else {
            parse_real(s).map(RbSetting::Fixed)
        }
    }
}

impl fmt::Display for RbSetting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RbSetting::Fixed(v) => write!(f, "{v}"),
            RbSetting::Track => f.write_str("track"),
        }
    }
}

/// A fully resolved sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub mode: Mode,
    pub grid: Grid,
    /// Initial Bell-mixture parameter (acceleration and channel modes).
    pub nu: f64,
    pub rb: RbSetting,
    pub g_over_gamma: f64,
    pub bell: BellIndex,
    pub out: PathBuf,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl SweepConfig {
    /// Config with the mode's default grid and figure-caption defaults.
    pub fn new(mode: Mode, out: impl Into<PathBuf>) -> Self {
        Self {
            mode,
            grid: mode.default_grid(),
            nu: 1.0,
            rb: RbSetting::Fixed(0.0),
            g_over_gamma: 0.1,
            bell: BellIndex::Psi,
            out: out.into(),
            threads: None,
        }
    }

    pub fn validate(&self) -> Result<(), SweepError> {
        let invalid =
            |field: &str, msg: String| Err(SweepError::InvalidConfig(format!("{field}: {msg}")));
        let g = &self.grid;
        if g.points < 2 {
            return invalid("grid", format!("needs at least 2 points, got {}", g.points));
        }
        if !(g.start.is_finite() && g.stop.is_finite() && g.start < g.stop) {
            return invalid(
                "grid",
                format!("start {} must be finite and below stop {}", g.start, g.stop),
            );
        }
        let (lo, hi) = self.mode.domain();
        if g.start < lo || g.stop > hi {
            return invalid(
                "grid",
                format!("{} mode requires values in [{lo}, {hi}]", self.mode),
            );
        }
        if !(0.0..=1.0).contains(&self.nu) {
            return invalid("nu", format!("{} is outside [0, 1]", self.nu));
        }
        if let RbSetting::Fixed(rb) = self.rb {
            if !(0.0..=FRAC_PI_4).contains(&rb) {
                return invalid("rb", format!("{rb} is outside [0, pi/4]"));
            }
        }
        let g_max = if self.mode == Mode::AdChannel {
            2.0
        } else {
            f64::INFINITY
        };
        if !(self.g_over_gamma > 0.0 && self.g_over_gamma < g_max) {
            return invalid(
                "g-over-gamma",
                format!("{} must lie in (0, {g_max})", self.g_over_gamma),
            );
        }
        if self.threads == Some(0) {
            return invalid("threads", "must be at least 1".into());
        }
        if self.out.as_os_str().is_empty() {
            return invalid("out", "output path is required".into());
        }
        Ok(())
    }

    /// Plot script path: the CSV path with a `.gp` extension.
    pub fn plot_path(&self) -> PathBuf {
        self.out.with_extension("gp")
    }
}

/// Optional settings, as read from a TOML config file or the command line.
#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct PartialConfig {
    pub mode: Option<String>,
    pub grid: Option<String>,
    pub nu: Option<f64>,
    pub rb: Option<RbValue>,
    pub g_over_gamma: Option<f64>,
    pub bell: Option<String>,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
}

/// `rb` may be a number or the string `"track"` in config files.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum RbValue {
    Number(f64),
    Text(String),
}

impl PartialConfig {
    pub fn from_toml_file(path: &Path) -> Result<Self, SweepError> {
        let text = std::fs::read_to_string(path).map_err(|source| SweepError::Io {
            path: path.into(),
            source,
        })?;
        toml::from_str(&text).map_err(|e| {
            SweepError::InvalidConfig(format!("config file {}: {}", path.display(), e.message()))
        })
    }

    /// Overlays `self` on `base`; fields set in `self` win.
    pub fn over(self, base: PartialConfig) -> PartialConfig {
        PartialConfig {
            mode: self.mode.or(base.mode),
            grid: self.grid.or(base.grid),
            nu: self.nu.or(base.nu),
            rb: self.rb.or(base.rb),
            g_over_gamma: self.g_over_gamma.or(base.g_over_gamma),
            bell: self.bell.or(base.bell),
            out: self.out.or(base.out),
            threads: self.threads.or(base.threads),
        }
    }

    /// Fills defaults and validates.
    pub fn resolve(self) -> Result<SweepConfig, SweepError> {
        let bad = |field: &str, msg: String| SweepError::InvalidConfig(format!("{field}: {msg}"));
        let mode: Mode = self
            .mode
            .ok_or_else(|| bad("mode", "required".into()))?
            .parse()
            .map_err(|e| bad("mode", e))?;
        let out = self.out.ok_or_else(|| bad("out", "required".into()))?;
        let mut cfg = SweepConfig::new(mode, out);
        if let Some(grid) = self.grid {
            cfg.grid = grid.parse().map_err(|e| bad("grid", e))?;
        }
        if let Some(nu) = self.nu {
            cfg.nu = nu;
        }
        if let Some(rb) = self.rb {
            cfg.rb = match rb {
                RbValue::Number(v) => RbSetting::Fixed(v),
                RbValue::Text(s) => s.parse().map_err(|e| bad("rb", e))?,
            };
        }
        if let Some(g) = self.g_over_gamma {
            cfg.g_over_gamma = g;
        }
        if let Some(bell) = self.bell {
            cfg.bell = bell.parse().map_err(|e| bad("bell", e))?;
        }
        cfg.threads = self.threads;
        cfg.validate()?;
        Ok(cfg)
    }
}
