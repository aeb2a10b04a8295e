//! Preset sweeps, one per figure panel.

use std::path::Path;

use crate::config::{Mode, RbSetting, SweepConfig};

/// Figure panel name and its sweep, with outputs under `dir`.
pub fn figure_configs(dir: &Path) -> Vec<(&'static str, SweepConfig)> {
    let make = |name: &'static str, mode: Mode| {
        (
            name,
            SweepConfig::new(mode, dir.join(format!("{name}.csv"))),
        )
    };
    let channel = |name, mode, nu, g| {
        let (name, mut cfg) = make(name, mode);
        cfg.nu = nu;
        cfg.g_over_gamma = g;
        (name, cfg)
    };
    let (_, mut fig2b) = make("fig2b", Mode::Acceleration);
    fig2b.rb = RbSetting::Track;
    vec![
        make("fig1", Mode::Nu),
        make("fig2a", Mode::Acceleration),
        ("fig2b", fig2b),
        channel("fig3a", Mode::AdChannel, 1.0, 0.01),
        channel("fig3b", Mode::AdChannel, 1.0, 0.1),
        channel("fig3c", Mode::AdChannel, 0.1, 0.1),
        channel("fig4a", Mode::DephasingChannel, 1.0, 0.01),
        channel("fig4b", Mode::DephasingChannel, 1.0, 0.1),
        channel("fig4c", Mode::DephasingChannel, 0.1, 0.1),
        make("fig5", Mode::Swap),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_are_valid_and_distinct() {
        let figs = figure_configs(Path::new("out"));
        assert_eq!(figs.len(), 10);
        for (name, cfg) in &figs {
            cfg.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(cfg.grid.points, 201);
        }
        let mut outs: Vec<_> = figs.iter().map(|(_, c)| c.out.clone()).collect();
        outs.dedup();
        assert_eq!(outs.len(), 10);
    }
}
