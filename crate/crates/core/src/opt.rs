//! The continuous relaxation behind the lower bound `d_minus`.
//!
//! Variables are the lower end `d_minus`, the low- and high-side average
//! degrees `dbar_minus`, `dbar_plus`, and the high-side fraction `x`:
//!
//! ```text
//! min  d_minus
//! s.t. (1 - x) dbar_minus + x dbar_plus = d          (balance)
//!      (1 - x) dbar_minus >= (dbar_plus - x n) x     (cross edges)
//!      0 <= dbar_minus <= d_minus                    (low side)
//!      d_plus <= dbar_plus <= n                      (high side)
//!      0 <= x <= 1                                   (fraction)
//! ```
//!
//! [`solve_p_grid`] is a brute-force oracle for this problem and shares no code
//! with the closed form in [`closed_form_solution`].

use std::fmt;

use crate::bounds::{opt_p_closed, to_f64, tolerance, GraphParams};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    Balance,
    CrossEdges,
    LowSide,
    HighSide,
    Fraction,
}

impl Constraint {
    pub const ALL: [Constraint; 5] = [
        Constraint::Balance,
        Constraint::CrossEdges,
        Constraint::LowSide,
        Constraint::HighSide,
        Constraint::Fraction,
    ];
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Constraint::Balance => "balance (1-x)dbar_minus + x dbar_plus = d",
            Constraint::CrossEdges => "cross edges (1-x)dbar_minus >= (dbar_plus - xn)x",
            Constraint::LowSide => "low side 0 <= dbar_minus <= d_minus",
            Constraint::HighSide => "high side d_plus <= dbar_plus <= n",
            Constraint::Fraction => "fraction 0 <= x <= 1",
        };
        f.write_str(s)
    }
}

/// Signed violation amounts, one per constraint. Positive means violated;
/// the balance entry is an absolute deviation, the cross-edge entry is
/// `(dbar_plus - x n) x - (1 - x) dbar_minus` and is zero when tight.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Residuals {
    pub balance: f64,
    pub cross_edges: f64,
    pub low_side: f64,
    pub high_side: f64,
    pub fraction: f64,
}

impl Residuals {
    pub fn get(&self, c: Constraint) -> f64 {
        match c {
            Constraint::Balance => self.balance,
            Constraint::CrossEdges => self.cross_edges,
            Constraint::LowSide => self.low_side,
            Constraint::HighSide => self.high_side,
            Constraint::Fraction => self.fraction,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub constraint: Constraint,
    pub amount: f64,
}

/// A candidate point together with its residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptSolution {
    pub d_minus: f64,
    pub dbar_minus: f64,
    pub dbar_plus: f64,
    pub x: f64,
    pub residuals: Residuals,
    pub feasible: bool,
}

impl OptSolution {
    /// Builds the point and evaluates its residuals for `(p, d_plus)` at the
    /// default tolerance `1e-9 n`.
    pub fn evaluate(
        p: &GraphParams,
        d_plus: f64,
        d_minus: f64,
        dbar_minus: f64,
        dbar_plus: f64,
        x: f64,
    ) -> Self {
        let mut s = Self {
            d_minus,
            dbar_minus,
            dbar_plus,
            x,
            residuals: Residuals::default(),
            feasible: false,
        };
        s.residuals = residuals(&s, p, d_plus);
        s.feasible = Constraint::ALL
            .iter()
            .all(|&c| s.residuals.get(c) <= tolerance(p.n()));
        s
    }

    pub fn objective(&self) -> f64 {
        self.d_minus
    }
}

fn residuals(s: &OptSolution, p: &GraphParams, d_plus: f64) -> Residuals {
    let n = p.n() as f64;
    let d = p.d_f64();
    let x = s.x;
    Residuals {
        balance: ((1.0 - x) * s.dbar_minus + x * s.dbar_plus - d).abs(),
        cross_edges: (s.dbar_plus - x * n) * x - (1.0 - x) * s.dbar_minus,
        low_side: (-s.dbar_minus).max(s.dbar_minus - s.d_minus),
        high_side: (d_plus - s.dbar_plus).max(s.dbar_plus - n),
        fraction: (-x).max(x - 1.0),
    }
}

/// Every constraint whose violation exceeds `tol`.
pub fn check_feasible(s: &OptSolution, p: &GraphParams, d_plus: f64, tol: f64) -> Vec<Violation> {
    let r = residuals(s, p, d_plus);
    Constraint::ALL
        .iter()
        .filter_map(|&c| {
            let amount = r.get(c);
            (amount > tol).then_some(Violation {
                constraint: c,
                amount,
            })
        })
        .collect()
}

fn check_d_plus(p: &GraphParams, d_plus: f64) -> Result<()> {
    // shares the domain of the closed form: d < d_plus <= n - 1, 0 < d < n - 1
    opt_p_closed(p, d_plus).map(|_| ())
}

/// The optimal point: `(0, 0, sqrt(dn), sqrt(d/n))` when `d_plus <= sqrt(dn)`,
/// otherwise `d_minus = dbar_minus = opt_p_closed`, `dbar_plus = d_plus` and
/// `x = (d_plus - sqrt(d_plus^2 - dn)) / n`, where the cross-edge constraint is tight.
pub fn closed_form_solution(p: &GraphParams, d_plus: f64) -> Result<OptSolution> {
    let value = opt_p_closed(p, d_plus)?;
    let n = p.n() as f64;
    let dn = p.dn();
    let s = if crate::bounds::above_sqrt_dn(p, d_plus) {
        let x = (d_plus - (d_plus * d_plus - dn).max(0.0).sqrt()) / n;
        OptSolution::evaluate(p, d_plus, value, value, d_plus, x)
    } else {
        OptSolution::evaluate(p, d_plus, 0.0, 0.0, dn.sqrt(), (to_f64(p.d()) / n).sqrt())
    };
    Ok(s)
}

/// Smallest `x` clamp; `x = 1` would leave `dbar_minus` undetermined.
const X_MARGIN: f64 = 1e-9;

/// Window refinements of each `x` scan.
const ROW_ROUNDS: usize = 3;

/// Grid over `[lo, hi]` with `steps` intervals, both ends included exactly.
fn grid_points(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> {
    let h = (hi - lo) / steps as f64;
    (0..=steps).map(move |i| if i == steps { hi } else { lo + i as f64 * h })
}

/// Window of `10` grid steps centred on `best`, clamped to `[lo, hi]`.
fn shrink(best: f64, lo: f64, hi: f64, width: f64, steps: usize) -> (f64, f64) {
    let half = 5.0 * width / steps as f64;
    ((best - half).max(lo), (best + half).min(hi))
}

/// `dbar_minus` from the balance equation, if the point is feasible.
fn low_average(p: &GraphParams, x: f64, y: f64) -> Option<f64> {
    let n = p.n() as f64;
    let low = (p.d_f64() - x * y) / (1.0 - x);
    (low >= 0.0 && (1.0 - x) * low >= (y - x * n) * x).then_some(low)
}

/// Best `(dbar_minus, x)` for a fixed `dbar_plus = y`, by refined scans in `x`.
fn best_in_row(p: &GraphParams, y: f64, steps: usize, rounds: usize) -> Option<(f64, f64)> {
    let (full_lo, full_hi) = (X_MARGIN, 1.0 - X_MARGIN);
    let (mut lo, mut hi) = (full_lo, full_hi);
    let mut best: Option<(f64, f64)> = None;
    for _ in 0..=rounds {
        for x in grid_points(lo, hi, steps) {
            if let Some(low) = low_average(p, x, y) {
                if best.is_none_or(|(v, bx)| low < v || (low == v && x < bx)) {
                    best = Some((low, x));
                }
            }
        }
        let (_, bx) = best?;
        (lo, hi) = shrink(bx, full_lo, full_hi, hi - lo, steps);
    }
    best
}

/// Grid minimisation over `(x, dbar_plus)`.
///
/// `dbar_minus` is eliminated through the balance equation and `d_minus` is set
/// equal to it. Every `dbar_plus` row is scanned in `x` with three tenfold
/// window refinements of its own, then the `dbar_plus` window shrinks tenfold around the
/// best row, `refine_rounds` times. Ties go to the smaller `x`, then the
/// smaller `dbar_plus`.
pub fn solve_p_grid(
    p: &GraphParams,
    d_plus: f64,
    coarse_steps: usize,
    refine_rounds: usize,
) -> Result<OptSolution> {
    check_d_plus(p, d_plus)?;
    if coarse_steps < 100 {
        return Err(Error::Domain(format!(
            "coarse_steps = {coarse_steps} must be at least 100"
        )));
    }
    if refine_rounds < 3 {
        return Err(Error::Domain(format!(
            "refine_rounds = {refine_rounds} must be at least 3"
        )));
    }
    let n = p.n() as f64;
    let (full_lo, full_hi) = (d_plus, n);
    let (mut lo, mut hi) = (full_lo, full_hi);
    let mut best: Option<(f64, f64, f64)> = None;

    for _ in 0..=refine_rounds {
        for y in grid_points(lo, hi, coarse_steps) {
            let Some((low, x)) = best_in_row(p, y, coarse_steps, ROW_ROUNDS) else {
                continue;
            };
            let better = best
                .is_none_or(|(v, bx, by)| low < v || (low == v && (x < bx || (x == bx && y < by))));
            if better {
                best = Some((low, x, y));
            }
        }
        let Some((_, _, by)) = best else {
            break;
        };
        (lo, hi) = shrink(by, full_lo, full_hi, hi - lo, coarse_steps);
    }

    let (low, x, y) = best.ok_or(Error::InfeasibleSearch)?;
    Ok(OptSolution::evaluate(p, d_plus, low, low, y, x))
}
