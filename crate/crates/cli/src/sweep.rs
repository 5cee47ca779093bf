//! Normalized interval length curves `ell_min / n` against `d_plus / n`.

use std::io::Write;

use avgdeg::bounds::ell_min_normalized;

use crate::CliError;

pub const CSV_HEADER: &str = "d_over_n,d_plus_over_n,ell_min_over_n";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub d_over_n: f64,
    pub d_plus_over_n: f64,
    pub ell_min_over_n: f64,
}

/// For each density, `steps` equispaced samples of `(sqrt(d/n), 1]` plus the
/// point `(1 + d/n) / 2`, where the length is exactly one half.
pub fn sweep_rows(densities: &[f64], steps: usize) -> Result<Vec<SweepRow>, CliError> {
    if steps == 0 {
        return Err(CliError::Usage("--steps must be positive".into()));
    }
    let mut rows = Vec::new();
    for &z0 in densities {
        if !(z0 > 0.0 && z0 < 1.0) {
            return Err(CliError::Usage(format!("d/n = {z0} must lie in (0, 1)")));
        }
        let start = z0.sqrt();
        let mut xs: Vec<f64> = (1..=steps)
            .map(|k| 1.0 - (steps - k) as f64 * (1.0 - start) / steps as f64)
            .collect();
        let mid = (1.0 + z0) / 2.0;
        if !xs.contains(&mid) {
            xs.push(mid);
            xs.sort_by(f64::total_cmp);
        }
        for x in xs {
            rows.push(SweepRow {
                d_over_n: z0,
                d_plus_over_n: x,
                ell_min_over_n: ell_min_normalized(x, z0)?,
            });
        }
    }
    Ok(rows)
}

/// Writes rows with shortest round-trip float formatting.
pub fn write_csv(rows: &[SweepRow], out: &mut impl Write) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{}",
            r.d_over_n, r.d_plus_over_n, r.ell_min_over_n
        )?;
    }
    Ok(())
}

pub fn read_csv(text: &str) -> Result<Vec<SweepRow>, CliError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == CSV_HEADER => {}
        other => return Err(CliError::Usage(format!("unexpected CSV header {other:?}"))),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let fields: Vec<f64> = line
                .split(',')
                .map(|f| f.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| CliError::Usage(format!("row {}: {e}", i + 1)))?;
            match fields[..] {
                [a, b, c] => Ok(SweepRow {
                    d_over_n: a,
                    d_plus_over_n: b,
                    ell_min_over_n: c,
                }),
                _ => Err(CliError::Usage(format!("row {}: expected 3 fields", i + 1))),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_shape() {
        let rows = sweep_rows(&[0.5], 200).unwrap();
        assert_eq!(rows.len(), 201);
        let first = rows[0];
        assert!(first.d_plus_over_n > 0.5f64.sqrt());
        assert!(first.d_plus_over_n < 0.7087);
        assert_eq!(rows.last().unwrap().d_plus_over_n, 1.0);
        let mid = rows.iter().find(|r| r.d_plus_over_n == 0.75).unwrap();
        assert!((mid.ell_min_over_n - 0.5).abs() < 1e-12);
        for r in &rows {
            assert!(r.ell_min_over_n >= 0.0 && r.ell_min_over_n <= 1.0);
        }
    }

    #[test]
    fn endpoint_value() {
        let rows = sweep_rows(&[0.25], 50).unwrap();
        let last = rows.last().unwrap();
        assert!((last.ell_min_over_n - 0.8660254).abs() < 1e-6);
    }

    #[test]
    fn csv_round_trip() {
        let rows = sweep_rows(&[0.25, 0.81], 37).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        assert_eq!(read_csv(std::str::from_utf8(&buf).unwrap()).unwrap(), rows);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(sweep_rows(&[1.0], 10).is_err());
        assert!(sweep_rows(&[0.5], 0).is_err());
        assert!(read_csv("a,b\n").is_err());
        assert!(read_csv(&format!("{CSV_HEADER}\n1,2\n")).is_err());
    }
}
