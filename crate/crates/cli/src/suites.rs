//! Exhaustive and oracle suites shared by `verify` and the acceptance tests.

use avgdeg::bounds::{max_edges, opt_p_closed, tolerance, GraphParams};
use avgdeg::opt::{check_feasible, closed_form_solution, solve_p_grid};
use avgdeg::sequences::{verify_theorem1, verify_theorem2_many, DegreeSequence};
use avgdeg::Result;

#[derive(Debug, Clone, Default)]
pub struct Theorem1Summary {
    pub cases: usize,
    pub sequences: usize,
    pub extremal: usize,
    /// `(n, m, sequence)` with no entry in the closed interval.
    pub violations: Vec<(usize, u64, DegreeSequence)>,
    /// `(n, m, sequence)` avoiding the open interval without the extremal shape.
    pub mismatches: Vec<(usize, u64, DegreeSequence)>,
}

/// Every `n` in `2..=n_max` and every `m` with `0 < m < n(n-1)/2`.
pub fn theorem1_suite(n_max: usize) -> Result<Theorem1Summary> {
    let mut s = Theorem1Summary::default();
    for n in 2..=n_max {
        for m in 1..max_edges(n) {
            let r = verify_theorem1(n, m)?;
            s.cases += 1;
            s.sequences += r.sequences_checked;
            s.extremal += r.extremal_sequences.len();
            s.violations
                .extend(r.violations.into_iter().map(|q| (n, m, q)));
            s.mismatches
                .extend(r.profile_mismatches.into_iter().map(|q| (n, m, q)));
        }
    }
    Ok(s)
}

/// `d_plus = k / 10` for every integer `k` with `k/10 > sqrt(dn)` and `k/10 <= n - 1`.
pub fn theorem2_grid(p: &GraphParams) -> Vec<f64> {
    let n1 = (p.n() - 1) as u64;
    let dn100 = 200 * p.m();
    (1..=10 * n1)
        .filter(|&k| k * k > dn100)
        .map(|k| k as f64 / 10.0)
        .collect()
}

#[derive(Debug, Clone, Default)]
pub struct Theorem2Summary {
    pub grid_points: usize,
    pub sequence_checks: usize,
    /// `(n, m, d_plus, sequence)` with no entry in `[d_minus, d_plus]`.
    pub violations: Vec<(usize, u64, f64, DegreeSequence)>,
    /// `(n, m, d_plus, empirical, closed form)` where the relaxation bound fails.
    pub relaxation_failures: Vec<(usize, u64, f64, usize, f64)>,
    /// Smallest `empirical d_minus - closed form` seen.
    pub min_slack: f64,
}

pub fn theorem2_suite(n_max: usize) -> Result<Theorem2Summary> {
    let mut s = Theorem2Summary {
        min_slack: f64::INFINITY,
        ..Default::default()
    };
    for n in 2..=n_max {
        for m in 1..max_edges(n) {
            let p = GraphParams::new(n, m)?;
            let grid = theorem2_grid(&p);
            if grid.is_empty() {
                continue;
            }
            for r in verify_theorem2_many(n, m, &grid)? {
                s.grid_points += 1;
                s.sequence_checks += r.sequences_checked;
                let empirical = r.empirical_d_minus.expect("computed for d_plus checks");
                let closed = opt_p_closed(&p, r.d_plus)?;
                s.min_slack = s.min_slack.min(empirical as f64 - closed);
                if (empirical as f64) < closed - 1e-9 {
                    s.relaxation_failures
                        .push((n, m, r.d_plus, empirical, closed));
                }
                s.violations
                    .extend(r.violations.into_iter().map(|q| (n, m, r.d_plus, q)));
            }
        }
    }
    Ok(s)
}

pub const OPT_ORDERS: [usize; 3] = [20, 50, 100];
pub const OPT_DENSITIES: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];
pub const OPT_POINTS: usize = 12;
pub const OPT_COARSE_STEPS: usize = 100;
pub const OPT_ROUNDS: usize = 5;

/// Parameters of each `(n, d/n)` cell, `m` rounded to an integer.
pub fn opt_cells() -> Result<Vec<GraphParams>> {
    OPT_ORDERS
        .iter()
        .flat_map(|&n| {
            OPT_DENSITIES
                .iter()
                .map(move |&z| GraphParams::from_density(n, z))
        })
        .collect()
}

/// `OPT_POINTS` equispaced values in `(d, n - 1]`, the last exactly `n - 1`.
pub fn opt_d_plus_grid(p: &GraphParams) -> Vec<f64> {
    let n1 = (p.n() - 1) as f64;
    let d = p.d_f64();
    (1..=OPT_POINTS)
        .map(|k| n1 - (OPT_POINTS - k) as f64 * (n1 - d) / OPT_POINTS as f64)
        .collect()
}

#[derive(Debug, Clone)]
pub struct OptCase {
    pub params: GraphParams,
    pub d_plus: f64,
    pub closed: f64,
    pub grid: f64,
    pub closed_feasible: bool,
    pub cross_edge_residual: f64,
}

impl OptCase {
    pub fn scaled_error(&self) -> f64 {
        (self.grid - self.closed).abs() / self.params.n() as f64
    }
}

/// Grid oracle against the closed form over every cell and `d_plus`.
pub fn opt_suite() -> Result<Vec<OptCase>> {
    let mut out = Vec::new();
    for p in opt_cells()? {
        for d_plus in opt_d_plus_grid(&p) {
            let closed = opt_p_closed(&p, d_plus)?;
            let grid = solve_p_grid(&p, d_plus, OPT_COARSE_STEPS, OPT_ROUNDS)?;
            let point = closed_form_solution(&p, d_plus)?;
            out.push(OptCase {
                params: p,
                d_plus,
                closed,
                grid: grid.objective(),
                closed_feasible: check_feasible(&point, &p, d_plus, tolerance(p.n())).is_empty(),
                cross_edge_residual: point.residuals.cross_edges,
            });
        }
    }
    Ok(out)
}
