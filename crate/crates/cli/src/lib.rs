//! Command-line front end for the `avgdeg` library.
//!
//! Exit codes: `0` success, `1` a verification found a violation, `2` invalid
//! arguments or a domain error.

pub mod suites;
pub mod sweep;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use avgdeg::bounds::{
    ell_min, extremal_profile, symmetric_upper, theorem1_interval, theorem2_lower, to_f64,
    tolerance, GraphParams, Rational,
};
use avgdeg::extremal::{build_near_extremal_theorem2, build_theorem1_extremal};
use avgdeg::opt::{check_feasible, closed_form_solution, solve_p_grid, OptSolution};
use avgdeg::sequences::{is_graphical, peel_trace, realize, DegreeSequence, Graph};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Environment variable capping `--nmax` for exhaustive runs.
pub const MAX_N_VAR: &str = "DEGSEQ_MAX_N";
const DEFAULT_MAX_N: usize = 10;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] avgdeg::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "avgdeg",
    version,
    about = "Vertex-degree intervals around the average degree"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Fixed-length interval and its extremal shape, exhaustively.
    T1,
    /// Lower bound for every d_plus on a 0.1 grid, exhaustively.
    T2,
    /// Grid oracle against the closed-form optimum.
    Opt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridPreset {
    Default,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fixed-length interval and extremal profile for (n, m).
    Interval {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u64,
    },
    /// Lower end d_minus for a given d_plus, ell_min and the complement bound.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        dplus: f64,
        /// Lower end for the complement bound (defaults to the computed d_minus).
        #[arg(long)]
        dminus: Option<f64>,
    },
    /// CSV of ell_min/n against d_plus/n for each d/n.
    Sweep {
        /// Comma-separated d/n values.
        #[arg(long, value_delimiter = ',', default_value = "0.25,0.5,0.81")]
        dn: Vec<f64>,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form optimum against the grid oracle for one (n, m, d_plus).
    Opt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        dplus: f64,
        #[arg(long, default_value_t = 100)]
        steps: usize,
        #[arg(long, default_value_t = 5)]
        rounds: usize,
    },
    /// Run an exhaustive or oracle suite.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "default")]
        grid: GridPreset,
    },
    /// Edge list of the extremal graph, or of a near-extremal one with --dplus.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        dplus: Option<f64>,
    },
    /// Peel a graph given as an edge list (`-` for stdin).
    Peel { graph: PathBuf },
    /// Edge list realizing a degree sequence.
    Realize {
        #[arg(long)]
        seq: String,
    },
    /// Report whether a degree sequence is graphical (exit 1 if not).
    CheckSeq {
        #[arg(long)]
        seq: String,
    },
}

fn fmt_f(x: f64) -> String {
    format!("{x:.6}")
}

fn fmt_r(r: Rational) -> String {
    format!("{r} ({})", fmt_f(to_f64(r)))
}

fn max_n() -> Result<usize, CliError> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{MAX_N_VAR}={v} is not an integer"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

/// Runs one command, writing results to `out`; errors are returned to the caller.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Interval { n, m } => cmd_interval(n, m, out),
        Command::Bound {
            n,
            m,
            dplus,
            dminus,
        } => cmd_bound(n, m, dplus, dminus, out),
        Command::Sweep {
            dn,
            steps,
            out: path,
        } => cmd_sweep(&dn, steps, path, out),
        Command::Opt {
            n,
            m,
            dplus,
            steps,
            rounds,
        } => cmd_opt(n, m, dplus, steps, rounds, out),
        Command::Verify {
            mode,
            nmax,
            grid: GridPreset::Default,
        } => cmd_verify(mode, nmax, out),
        Command::Extremal { n, m, dplus } => cmd_extremal(n, m, dplus, out),
        Command::Peel { graph } => cmd_peel(graph, out),
        Command::Realize { seq } => {
            let s: DegreeSequence = seq.parse()?;
            out.write_all(realize(&s)?.to_edge_list().as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::CheckSeq { seq } => {
            let s: DegreeSequence = seq.parse()?;
            let ok = is_graphical(&s);
            writeln!(
                out,
                "{s}: {}",
                if ok { "graphical" } else { "not graphical" }
            )?;
            Ok(if ok { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

fn cmd_interval(n: usize, m: u64, out: &mut dyn Write) -> Result<u8, CliError> {
    let p = GraphParams::new(n, m)?;
    let i = theorem1_interval(&p);
    writeln!(
        out,
        "n = {n}, m = {m}, d = {}, d_bar = {}",
        fmt_r(p.d()),
        fmt_r(p.d_bar())
    )?;
    writeln!(out, "interval: {i}")?;
    writeln!(out, "  lower: {}", fmt_r(i.lo))?;
    writeln!(out, "  upper: {}", fmt_r(i.hi))?;
    writeln!(out, "  length: {}", fmt_r(i.length()))?;
    match extremal_profile(&p) {
        Ok(e) => {
            writeln!(out, "extremal profile:")?;
            writeln!(
                out,
                "  |V+| = {}, degree {}",
                fmt_r(e.size_plus),
                fmt_r(e.deg_plus)
            )?;
            writeln!(
                out,
                "  |V-| = {}, degree {}",
                fmt_r(e.size_minus),
                fmt_r(e.deg_minus)
            )?;
            writeln!(out, "  realizable: {}", e.realizable)?;
        }
        Err(_) => writeln!(out, "extremal profile: none (degenerate density)")?,
    }
    Ok(EXIT_OK)
}

fn cmd_bound(
    n: usize,
    m: u64,
    d_plus: f64,
    d_minus: Option<f64>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let p = GraphParams::new(n, m)?;
    let lower = theorem2_lower(&p, d_plus)?;
    let len = ell_min(&p, d_plus)?;
    writeln!(out, "n = {n}, m = {m}, d = {}", fmt_r(p.d()))?;
    writeln!(out, "d_plus: {}", fmt_f(d_plus))?;
    writeln!(out, "d_minus: {}", fmt_f(lower))?;
    writeln!(out, "ell_min: {}", fmt_f(len))?;
    let sym_minus = d_minus.unwrap_or(lower);
    match symmetric_upper(&p, sym_minus) {
        Ok(up) => writeln!(
            out,
            "complement bound: [{}, {}]",
            fmt_f(sym_minus),
            fmt_f(up)
        )?,
        Err(e) => {
            if d_minus.is_some() {
                return Err(e.into());
            }
            writeln!(out, "complement bound: n/a ({e})")?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_sweep(
    densities: &[f64],
    steps: usize,
    path: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let rows = sweep::sweep_rows(densities, steps)?;
    match path {
        Some(path) => {
            let mut f = io::BufWriter::new(fs::File::create(&path)?);
            sweep::write_csv(&rows, &mut f)?;
            f.flush()?;
            writeln!(out, "wrote {} rows to {}", rows.len(), path.display())?;
        }
        None => {
            let mut buf = Vec::new();
            sweep::write_csv(&rows, &mut buf)?;
            out.write_all(&buf)?;
        }
    }
    Ok(EXIT_OK)
}

fn write_point(out: &mut dyn Write, label: &str, s: &OptSolution) -> io::Result<()> {
    writeln!(
        out,
        "{label}: d_minus = {}, dbar_minus = {}, dbar_plus = {}, x = {}",
        fmt_f(s.d_minus),
        fmt_f(s.dbar_minus),
        fmt_f(s.dbar_plus),
        fmt_f(s.x)
    )
}

fn cmd_opt(
    n: usize,
    m: u64,
    d_plus: f64,
    steps: usize,
    rounds: usize,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let p = GraphParams::new(n, m)?;
    let closed = closed_form_solution(&p, d_plus)?;
    let grid = solve_p_grid(&p, d_plus, steps, rounds)?;
    write_point(out, "closed form", &closed)?;
    write_point(out, "grid", &grid)?;
    let violations = check_feasible(&closed, &p, d_plus, tolerance(n));
    writeln!(
        out,
        "cross-edge residual: {:e}",
        closed.residuals.cross_edges
    )?;
    writeln!(
        out,
        "|grid - closed|: {:e}",
        (grid.objective() - closed.objective()).abs()
    )?;
    for v in &violations {
        writeln!(out, "violated: {} by {:e}", v.constraint, v.amount)?;
    }
    Ok(if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_verify(mode: Mode, n_max: usize, out: &mut dyn Write) -> Result<u8, CliError> {
    if mode != Mode::Opt {
        let cap = max_n()?;
        if n_max > cap {
            return Err(CliError::Usage(format!(
                "--nmax {n_max} exceeds {MAX_N_VAR} = {cap}"
            )));
        }
    }
    let failed = match mode {
        Mode::T1 => {
            let s = suites::theorem1_suite(n_max)?;
            writeln!(out, "cases: {}", s.cases)?;
            writeln!(out, "sequences: {}", s.sequences)?;
            writeln!(out, "violations: {}", s.violations.len())?;
            writeln!(out, "extremal sequences: {}", s.extremal)?;
            writeln!(out, "profile mismatches: {}", s.mismatches.len())?;
            for (n, m, q) in s.violations.iter().chain(&s.mismatches) {
                writeln!(out, "  n = {n}, m = {m}: {q}")?;
            }
            !s.violations.is_empty() || !s.mismatches.is_empty()
        }
        Mode::T2 => {
            let s = suites::theorem2_suite(n_max)?;
            writeln!(out, "grid points: {}", s.grid_points)?;
            writeln!(out, "sequence checks: {}", s.sequence_checks)?;
            writeln!(out, "violations: {}", s.violations.len())?;
            writeln!(out, "relaxation failures: {}", s.relaxation_failures.len())?;
            if s.grid_points > 0 {
                writeln!(
                    out,
                    "min slack (empirical - closed form): {}",
                    fmt_f(s.min_slack)
                )?;
            }
            for (n, m, d_plus, q) in &s.violations {
                writeln!(out, "  n = {n}, m = {m}, d_plus = {d_plus}: {q}")?;
            }
            !s.violations.is_empty() || !s.relaxation_failures.is_empty()
        }
        Mode::Opt => {
            let cases = suites::opt_suite()?;
            let worst = cases
                .iter()
                .map(suites::OptCase::scaled_error)
                .fold(0.0, f64::max);
            let infeasible = cases.iter().filter(|c| !c.closed_feasible).count();
            writeln!(out, "cases: {}", cases.len())?;
            writeln!(out, "max |closed - grid| / n: {worst:e}")?;
            writeln!(out, "infeasible closed-form points: {infeasible}")?;
            worst > 1e-3 || infeasible > 0
        }
    };
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

fn cmd_extremal(
    n: usize,
    m: u64,
    d_plus: Option<f64>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let r = match d_plus {
        None => build_theorem1_extremal(n, m)?,
        Some(d_plus) => build_near_extremal_theorem2(n, m, d_plus)?,
    };
    out.write_all(r.graph.to_edge_list().as_bytes())?;
    let mut err = io::stderr().lock();
    writeln!(err, "degrees: {:?}", r.graph.degrees())?;
    for g in &r.gaps {
        writeln!(
            err,
            "{}: achieved {}, target {}",
            g.quantity,
            fmt_f(g.achieved),
            fmt_f(g.target)
        )?;
    }
    for note in &r.notes {
        writeln!(err, "note: {note}")?;
    }
    Ok(EXIT_OK)
}

fn cmd_peel(path: PathBuf, out: &mut dyn Write) -> Result<u8, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(&path)?
    };
    let g = Graph::from_edge_list(&text)?;
    let steps = peel_trace(&g);
    writeln!(out, "step\tvertex\tdegree\tinterval")?;
    for (i, s) in steps.iter().enumerate() {
        writeln!(out, "{}\t{}\t{}\t{}", i + 1, s.vertex, s.degree, s.interval)?;
    }
    Ok(if steps.len() == g.n() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}
