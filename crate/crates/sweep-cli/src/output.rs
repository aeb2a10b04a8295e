//! CSV and gnuplot output.
//!
//! CSV rows use `{:.12e}` (13 significant digits), LF endings and a fixed
//! header so identical records always produce identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::config::Mode;
use crate::error::SweepError;
use crate::sweep::SweepRecord;

pub const CSV_HEADER: &str = "param,s,z,e_x,e_y,i_ab";

/// Fixed-width scientific notation; `-0` prints as `0`.
pub fn format_value(x: f64) -> String {
    format!("{:.12e}", x + 0.0)
}

pub fn render_csv(records: &[SweepRecord]) -> String {
    let mut out = String::with_capacity(32 + records.len() * 128);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        let fields = [r.param, r.s, r.z, r.e_x, r.e_y, r.i_ab].map(format_value);
        let _ = writeln!(out, "{}", fields.join(","));
    }
    out
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> SweepError + '_ {
    move |source| SweepError::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn write_csv(path: &Path, records: &[SweepRecord]) -> Result<(), SweepError> {
    fs::write(path, render_csv(records)).map_err(io_err(path))
}

pub fn read_csv(path: &Path) -> Result<Vec<SweepRecord>, SweepError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    parse_csv(&text)
}

pub fn parse_csv(text: &str) -> Result<Vec<SweepRecord>, SweepError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| SweepError::InvalidConfig(format!("csv header: {e}")))?;
    if header.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(SweepError::InvalidConfig(format!(
            "csv header must be '{CSV_HEADER}'"
        )));
    }
    reader
        .deserialize()
        .map(|row| row.map_err(|e| SweepError::InvalidConfig(format!("csv row: {e}"))))
        .collect()
}

/// gnuplot commands drawing `s` solid and `z` dashed against the swept variable.
pub fn render_plot_script(csv_name: &str, mode: Mode) -> String {
    let png = Path::new(csv_name).with_extension("png");
    let png = png.to_string_lossy();
    let label = mode.axis_label();
    format!(
        "# {mode} sweep: S (solid) and Z (dashed) versus {label}\n\
         set encoding utf8\n\
         set datafile separator \",\"\n\
         set key autotitle columnhead\n\
         set terminal pngcairo size 800,500\n\
         set output \"{png}\"\n\
         set xlabel \"{label}\"\n\
         set ylabel \"steerability\"\n\
         set yrange [0:*]\n\
         plot \"{csv_name}\" using 1:2 with lines dashtype 1 linewidth 2 title \"S^{{A→B}}\", \\\n\
         \x20    \"{csv_name}\" using 1:3 with lines dashtype 2 linewidth 2 title \"Z^{{A→B}}\"\n"
    )
}

/// Writes `<csv basename>.gp` next to the CSV and returns its path.
pub fn emit_plot_script(csv_path: &Path, mode: Mode) -> Result<PathBuf, SweepError> {
    if !csv_path.is_file() {
        return Err(SweepError::Io {
            path: csv_path.to_path_buf(),
            source: std::io::Error::new(std::io::ErrorKind::NotFound, "CSV file does not exist"),
        });
    }
    let name = csv_path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let script = csv_path.with_extension("gp");
    fs::write(&script, render_plot_script(&name, mode)).map_err(io_err(&script))?;
    Ok(script)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_format() {
        assert_eq!(format_value(1.0), "1.000000000000e0");
        assert_eq!(format_value(0.0), "0.000000000000e0");
        assert_eq!(format_value(-0.0), "0.000000000000e0");
        assert_eq!(format_value(0.20710678118654757), "2.071067811865e-1");
    }

    #[test]
    fn header_and_line_endings() {
        let rec = SweepRecord {
            param: 0.5,
            s: 0.0,
            z: 0.2,
            e_x: 0.4,
            e_y: 0.0,
            i_ab: 1.3,
        };
        let text = render_csv(&[rec]);
        assert!(text.starts_with("param,s,z,e_x,e_y,i_ab\n"));
        assert!(!text.contains('\r'));
        assert_eq!(text.lines().count(), 2);
    }

    #[test]
    fn bad_header_is_rejected() {
        assert!(parse_csv("a,b\n1,2\n").is_err());
    }

    #[test]
    fn plot_labels_follow_mode() {
        assert!(render_plot_script("f.csv", Mode::Nu).contains("set xlabel \"ν\""));
        assert!(render_plot_script("f.csv", Mode::AdChannel).contains("set xlabel \"γt\""));
        assert!(render_plot_script("f.csv", Mode::Acceleration).contains("set xlabel \"r\""));
        let s = render_plot_script("fig1.csv", Mode::Nu);
        assert!(s.contains("\"fig1.csv\" using 1:2 with lines dashtype 1"));
        assert!(s.contains("\"fig1.csv\" using 1:3 with lines dashtype 2"));
        assert!(s.contains("set output \"fig1.png\""));
    }
}
