//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p entsteer-sweep --test acceptance`.

use std::f64::consts::{FRAC_PI_4, SQRT_2};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use entsteer::*;
use entsteer_sweep::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Tolerance for "equals 1" at curve endpoints.
const ENDPOINT_TOL: f64 = 1e-9;

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn nu_report(nu: f64) -> SteeringReport<f64> {
    full_report(&TwoQubitDensity::from_x_params(&bell_mixture(nu).unwrap()).unwrap()).unwrap()
}

fn records(mode: Mode, tweak: impl FnOnce(&mut SweepConfig)) -> Vec<SweepRecord> {
    let mut cfg = SweepConfig::new(mode, "unused.csv");
    tweak(&mut cfg);
    compute_records(&cfg).unwrap()
}

fn endpoints() -> Outcome {
    let start = Instant::now();
    let rows = records(Mode::Nu, |_| {});
    let elapsed = start.elapsed();
    let (first, last) = (rows[0], rows[rows.len() - 1]);
    let worst = [first.s, first.z, last.s, last.z]
        .iter()
        .map(|v| (v - 1.0).abs())
        .fold(0.0, f64::max);
    check(
        worst < ENDPOINT_TOL && elapsed < Duration::from_secs(1),
        format!("max |S,Z − 1| at ν∈{{0,1}} = {worst:.2e}, 201-point sweep in {elapsed:.2?}"),
    )
}

fn midpoint() -> Outcome {
    let r = nu_report(0.5);
    let target = (SQRT_2 - 1.0) / 2.0;
    check(
        r.s == 0.0 && (r.z - target).abs() < 1e-9,
        format!(
            "S(½) = {}, |Z(½) − (√2−1)/2| = {:.2e}",
            r.s,
            (r.z - target).abs()
        ),
    )
}

fn dual_path() -> Outcome {
    let mut worst: f64 = 0.0;
    for seed in 0..1000 {
        let p = random_x_state::<f64>(seed);
        let rho = TwoQubitDensity::from_x_params(&p).map_err(|e| format!("seed {seed}: {e}"))?;
        let entropic =
            steering_functional_entropic(&rho).map_err(|e| format!("seed {seed}: {e}"))?;
        worst = worst.max((steering_functional(&p) - entropic).abs());
    }
    check(
        worst < 1e-9,
        format!("max |closed − entropic| over 1000 states = {worst:.2e}"),
    )
}

fn symmetry() -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 0..=200 {
        let nu = k as f64 / 200.0;
        let (a, b) = (nu_report(nu), nu_report(1.0 - nu));
        worst = worst.max((a.s - b.s).abs()).max((a.z - b.z).abs());
    }
    check(
        worst < 1e-10,
        format!("max asymmetry over 201 points = {worst:.2e}"),
    )
}

fn channels() -> Outcome {
    let mut defect: f64 = 0.0;
    for g in [0.01, 0.1] {
        for k in 0..100 {
            let cp = ChannelParams::new(g, k as f64).unwrap();
            defect = defect
                .max(amplitude_damping_kraus(&cp).unwrap().completeness_defect())
                .max(dephasing_kraus(&cp).unwrap().completeness_defect());
        }
    }
    let mut drift: f64 = 0.0;
    for g in [0.01, 0.1] {
        let cp = ChannelParams::new(g, 0.0).unwrap();
        let channels = [
            amplitude_damping_kraus(&cp).unwrap(),
            dephasing_kraus(&cp).unwrap(),
        ];
        for seed in 0..100 {
            let rho = TwoQubitDensity::from_x_params(&random_x_state(seed)).unwrap();
            for ch in &channels {
                let out = apply_local_channel(&rho, ch, ch).unwrap();
                drift = drift.max(out.matrix().max_abs_diff(rho.matrix()));
            }
        }
    }
    check(
        defect < 1e-12 && drift < 1e-12,
        format!("max completeness defect = {defect:.2e}, max change at γt=0 = {drift:.2e}"),
    )
}

fn acceleration() -> Outcome {
    let steps = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut worst: f64 = 0.0;
    for nu in steps {
        for ra in steps.map(|f| f * FRAC_PI_4) {
            for rb in steps.map(|f| f * FRAC_PI_4) {
                let acc = AccelerationParams::new(ra, rb).unwrap();
                let diff = accelerate(nu, &acc)
                    .unwrap()
                    .matrix()
                    .max_abs_diff(accelerate_oracle(nu, &acc).unwrap().matrix());
                worst = worst.max(diff);
            }
        }
    }
    let rows = records(Mode::Acceleration, |c| {
        c.grid = Grid {
            start: 0.0,
            stop: FRAC_PI_4,
            points: 50,
        }
    });
    let monotone = rows.windows(2).all(|w| w[1].s <= w[0].s);
    check(
        worst < 1e-10 && monotone && (rows[0].s - 1.0).abs() < ENDPOINT_TOL,
        format!(
            "closed vs oracle = {worst:.2e}, S(0) = {}, non-increasing: {monotone}",
            rows[0].s
        ),
    )
}

/// Samples that rise above their predecessor and stay above their successor;
/// the first and last samples count when they beat their single neighbour.
fn local_maxima(v: &[f64]) -> usize {
    (0..v.len())
        .filter(|&i| (i == 0 || v[i] > v[i - 1]) && (i + 1 == v.len() || v[i] > v[i + 1]))
        .count()
}

fn amplitude_damping() -> Outcome {
    let slow = records(Mode::AdChannel, |c| c.g_over_gamma = 0.01);
    let fast = records(Mode::AdChannel, |c| c.g_over_gamma = 0.1);
    let starts = (slow[0].s - 1.0).abs() < ENDPOINT_TOL && (slow[0].z - 1.0).abs() < ENDPOINT_TOL;
    let s: Vec<f64> = slow.iter().map(|r| r.s).collect();
    let peaks = local_maxima(&s);
    let gap = slow
        .iter()
        .chain(&fast)
        .map(|r| (r.s - r.z).abs())
        .fold(0.0, f64::max);
    check(
        starts && peaks >= 2 && gap <= 1e-6,
        format!(
            "S(0) = {}, Z(0) = {}, local maxima of S (g/γ=0.01) = {peaks}, max |S − Z| = {gap:.2e}",
            slow[0].s, slow[0].z
        ),
    )
}

fn dephasing() -> Outcome {
    let rows = records(Mode::DephasingChannel, |c| c.g_over_gamma = 0.1);
    let (first, last) = (rows[0], rows[rows.len() - 1]);
    let starts = (first.s - 1.0).abs() < ENDPOINT_TOL && (first.z - 1.0).abs() < ENDPOINT_TOL;
    let ends = last.s < 0.05 && last.z < 0.05;
    let slack = rows.iter().map(|r| r.z - r.s).fold(f64::INFINITY, f64::min);
    check(
        starts && ends && slack >= -1e-9,
        format!(
            "start (S, Z) = ({}, {}), end = ({:.2e}, {:.2e}), min(Z − S) = {slack:.2e}",
            first.s, first.z, last.s, last.z
        ),
    )
}

fn swapping() -> Outcome {
    let swapped = records(Mode::Swap, |_| {});
    let direct = records(Mode::Nu, |_| {});
    let first = swapped[0];
    let ends = (first.s - 1.0).abs() < ENDPOINT_TOL && (first.z - 1.0).abs() < ENDPOINT_TOL;
    let mid = swapped.iter().find(|r| r.param == 0.5).map(|r| r.s);
    let swap_set: Vec<bool> = swapped.iter().map(|r| r.s > 0.0).collect();
    let direct_set: Vec<bool> = direct.iter().map(|r| r.s > 0.0).collect();
    let subset = swap_set.iter().zip(&direct_set).all(|(&a, &b)| !a || b);
    let strict = subset && swap_set != direct_set;
    let count = |v: &[bool]| v.iter().filter(|&&b| b).count();
    check(
        ends && mid == Some(0.0) && strict,
        format!(
            "ν=0 → (S, Z) = ({}, {}), S(½) = {mid:?}, steerable points: swap {} / direct {} (strict subset: {strict})",
            first.s,
            first.z,
            count(&swap_set),
            count(&direct_set)
        ),
    )
}

/// Oversubscribed pool so interleaving happens even on a single core.
const WIDE: usize = 8;

fn determinism() -> Outcome {
    let dir = std::env::temp_dir();
    for (name, cfg) in figure_configs(&dir) {
        let serial = render_csv(
            &compute_records(&SweepConfig {
                threads: Some(1),
                ..cfg.clone()
            })
            .unwrap(),
        );
        let default = render_csv(
            &compute_records(&SweepConfig {
                threads: None,
                ..cfg.clone()
            })
            .unwrap(),
        );
        let wide = render_csv(
            &compute_records(&SweepConfig {
                threads: Some(WIDE),
                ..cfg.clone()
            })
            .unwrap(),
        );
        let again = render_csv(
            &compute_records(&SweepConfig {
                threads: Some(WIDE),
                ..cfg
            })
            .unwrap(),
        );
        if serial != default || serial != wide || wide != again {
            return Err(format!("{name}: CSV bytes differ between runs"));
        }
    }
    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    Ok(format!(
        "10 figure sweeps byte-identical at 1, {cores} (all cores) and {WIDE} threads"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("endpoint equality", endpoints),
        ("midpoint values", midpoint),
        ("dual-path identity", dual_path),
        ("ν ↔ 1−ν symmetry", symmetry),
        ("channel sanity", channels),
        ("acceleration cross-path", acceleration),
        ("amplitude damping", amplitude_damping),
        ("dephasing", dephasing),
        ("entanglement swapping", swapping),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
