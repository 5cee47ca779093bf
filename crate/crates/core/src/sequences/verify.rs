use std::cmp::Ordering;

use super::{enumerate_graphical, DegreeSequence};
use crate::bounds::{
    cmp_exact, extremal_profile, max_edges, opt_p_closed, theorem1_interval, theorem2_lower,
    to_f64, tolerance, ExtremalProfile, GraphParams, Interval, Rational,
};
use crate::error::{Error, Result};

/// Outcome of an exhaustive check over all graphical sequences with given `(n, m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub params: GraphParams,
    /// Upper end of the checked interval.
    pub d_plus: f64,
    /// Lower end of the checked interval.
    pub theory_lower: f64,
    pub sequences_checked: usize,
    /// Sequences with no entry in the guaranteed interval.
    pub violations: Vec<DegreeSequence>,
    /// Exact minimal lower end for `d_plus`; only computed by the `d_plus` checks.
    pub empirical_d_minus: Option<usize>,
    /// Sequences with no entry strictly inside the interval.
    pub extremal_sequences: Vec<DegreeSequence>,
    /// Extremal sequences whose multiset differs from the extremal profile.
    pub profile_mismatches: Vec<DegreeSequence>,
}

impl VerificationReport {
    /// `empirical_d_minus >= theory_lower - 1e-9` whenever it was computed.
    pub fn relaxation_holds(&self) -> bool {
        self.empirical_d_minus
            .is_none_or(|e| e as f64 >= self.theory_lower - 1e-9)
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.profile_mismatches.is_empty() && self.relaxation_holds()
    }
}

/// Largest entry strictly below `d_plus`.
fn lower_level(s: &DegreeSequence, d_plus: f64) -> Option<usize> {
    s.degrees().iter().copied().find(|&x| (x as f64) < d_plus)
}

fn check_d_plus_domain(p: &GraphParams, d_plus: f64) -> Result<()> {
    if p.is_degenerate() {
        return Err(Error::DegenerateDensity(format!(
            "d = {} for n = {}",
            p.d(),
            p.n()
        )));
    }
    if !d_plus.is_finite() || cmp_exact(d_plus, p.d()) != Ordering::Greater {
        return Err(Error::Domain(format!(
            "d_plus = {d_plus} must exceed d = {}",
            p.d()
        )));
    }
    if d_plus > (p.n() - 1) as f64 {
        return Err(Error::Domain(format!("d_plus = {d_plus} exceeds n - 1")));
    }
    Ok(())
}

fn min_lower_level<'a>(seqs: impl IntoIterator<Item = &'a DegreeSequence>, d_plus: f64) -> usize {
    seqs.into_iter()
        .map(|s| lower_level(s, d_plus).expect("d_plus > d forces an entry below d_plus"))
        .min()
        .expect("at least one graphical sequence")
}

/// Smallest `d_minus` such that some graph with `n` vertices and `m` edges has
/// every degree either `<= d_minus` or `>= d_plus`.
pub fn empirical_d_minus(n: usize, m: u64, d_plus: f64) -> Result<usize> {
    let p = GraphParams::new(n, m)?;
    check_d_plus_domain(&p, d_plus)?;
    let seqs: Vec<_> = enumerate_graphical(n, m)?.collect();
    Ok(min_lower_level(&seqs, d_plus))
}

fn expected_extremal(profile: &ExtremalProfile) -> Option<Vec<usize>> {
    if !profile.realizable || !profile.deg_plus.is_integer() || !profile.deg_minus.is_integer() {
        return None;
    }
    let count = |r: Rational| r.to_integer() as usize;
    let mut v = vec![count(profile.deg_plus); count(profile.size_plus)];
    v.extend(std::iter::repeat_n(
        count(profile.deg_minus),
        count(profile.size_minus),
    ));
    Some(v)
}

/// Checks the fixed-length interval against every graphical sequence, and
/// checks that sequences avoiding its interior have the extremal shape.
/// Degenerate densities skip the shape check.
pub fn verify_theorem1(n: usize, m: u64) -> Result<VerificationReport> {
    let p = GraphParams::new(n, m)?;
    let closed = theorem1_interval(&p);
    let open = closed.interior();
    let expected = if p.is_degenerate() {
        None
    } else {
        Some(expected_extremal(&extremal_profile(&p)?))
    };

    let mut report = VerificationReport {
        params: p,
        d_plus: to_f64(closed.hi),
        theory_lower: to_f64(closed.lo),
        sequences_checked: 0,
        violations: Vec::new(),
        empirical_d_minus: None,
        extremal_sequences: Vec::new(),
        profile_mismatches: Vec::new(),
    };
    for s in enumerate_graphical(n, m)? {
        report.sequences_checked += 1;
        if !s.degrees().iter().any(|&x| closed.contains_degree(x)) {
            report.violations.push(s.clone());
        }
        if !s.degrees().iter().any(|&x| open.contains_degree(x)) {
            if let Some(expected) = &expected {
                if expected.as_deref() != Some(s.degrees()) {
                    report.profile_mismatches.push(s.clone());
                }
            }
            report.extremal_sequences.push(s);
        }
    }
    Ok(report)
}

/// Checks `[theorem2_lower, d_plus]` against every graphical sequence.
pub fn verify_theorem2(n: usize, m: u64, d_plus: f64) -> Result<VerificationReport> {
    verify_theorem2_many(n, m, &[d_plus]).map(|mut v| v.remove(0))
}

/// [`verify_theorem2`] for several upper ends, enumerating the sequences once.
pub fn verify_theorem2_many(n: usize, m: u64, d_pluses: &[f64]) -> Result<Vec<VerificationReport>> {
    let p = GraphParams::new(n, m)?;
    if m == 0 || m >= max_edges(n) {
        return Err(Error::DegenerateDensity(format!(
            "d = {} for n = {n}",
            p.d()
        )));
    }
    let seqs: Vec<_> = enumerate_graphical(n, m)?.collect();
    let tol = tolerance(n);
    d_pluses
        .iter()
        .map(|&d_plus| {
            let lower = theorem2_lower(&p, d_plus)?;
            check_d_plus_domain(&p, d_plus)?;
            let window = Interval::closed(lower - tol, d_plus);
            let violations = seqs
                .iter()
                .filter(|s| !s.degrees().iter().any(|&x| window.contains_degree(x)))
                .cloned()
                .collect();
            let extremal_sequences = seqs
                .iter()
                .filter(|s| {
                    !s.degrees()
                        .iter()
                        .any(|&x| window.interior().contains_degree(x))
                })
                .cloned()
                .collect();
            Ok(VerificationReport {
                params: p,
                d_plus,
                theory_lower: opt_p_closed(&p, d_plus)?,
                sequences_checked: seqs.len(),
                violations,
                empirical_d_minus: Some(min_lower_level(&seqs, d_plus)),
                extremal_sequences,
                profile_mismatches: Vec::new(),
            })
        })
        .collect()
}
