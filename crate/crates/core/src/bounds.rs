//! Closed-form degree bounds around the average degree.
//!
//! Quantities that depend only on `n` and `m` (the fixed-length interval, the
//! extremal split profile and the quadratic check functions) are computed in
//! exact rational arithmetic. Everything involving `sqrt(d_plus^2 - d n)` is
//! evaluated in `f64`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Sub;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Exact rational number used for all integer-derived quantities.
pub type Rational = Ratio<i128>;

/// Scale-aware float tolerance `1e-9 * n`.
pub fn tolerance(n: usize) -> f64 {
    1e-9 * n as f64
}

pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Compares a float against a rational without rounding. Every finite `f64`
/// is a dyadic rational, so the comparison is exact.
pub fn cmp_exact(x: f64, r: Rational) -> Ordering {
    let x = BigRational::from_float(x).expect("finite float");
    let r = BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    x.cmp(&r)
}

/// Order, edge count and the exact average degrees of a graph and its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphParams {
    n: usize,
    m: u64,
    d: Rational,
    d_bar: Rational,
}

impl GraphParams {
    pub fn new(n: usize, m: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams(format!(
                "order n = {n} must be at least 2"
            )));
        }
        let max = max_edges(n);
        if m > max {
            return Err(Error::InvalidParams(format!(
                "m = {m} exceeds n(n-1)/2 = {max} for n = {n}"
            )));
        }
        let d = Rational::new(2 * m as i128, n as i128);
        let d_bar = Rational::from_integer(n as i128 - 1) - d;
        Ok(Self { n, m, d, d_bar })
    }

    /// Parameters with `m = round(density * n^2 / 2)`, i.e. `d / n` as close to
    /// `density` as an integer edge count allows.
    pub fn from_density(n: usize, density: f64) -> Result<Self> {
        if !(density.is_finite() && density >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "density {density} must be non-negative"
            )));
        }
        let m = (density * (n * n) as f64 / 2.0).round() as u64;
        Self::new(n, m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Average degree `2m / n`.
    pub fn d(&self) -> Rational {
        self.d
    }

    /// Complement average degree `n - 1 - d`.
    pub fn d_bar(&self) -> Rational {
        self.d_bar
    }

    pub fn d_f64(&self) -> f64 {
        to_f64(self.d)
    }

    pub fn d_bar_f64(&self) -> f64 {
        to_f64(self.d_bar)
    }

    /// `d * n = 2m`, exact as a float for any realistic `m`.
    pub fn dn(&self) -> f64 {
        (2 * self.m) as f64
    }

    pub fn complement(&self) -> Self {
        Self::new(self.n, max_edges(self.n) - self.m).expect("complement of valid params")
    }

    /// True when `d` is `0` or `n - 1`.
    pub fn is_degenerate(&self) -> bool {
        self.m == 0 || self.m == max_edges(self.n)
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateDensity(format!(
                "d = {} for n = {}",
                self.d, self.n
            )))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for GraphParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}, m = {}, d = {}", self.n, self.m, self.d)
    }
}

pub fn max_edges(n: usize) -> u64 {
    (n as u64 * n.saturating_sub(1) as u64) / 2
}

/// Types that integer vertex degrees can be compared against.
pub trait DegreeScalar: Copy + PartialOrd {
    fn from_degree(degree: usize) -> Self;
}

impl DegreeScalar for f64 {
    fn from_degree(degree: usize) -> Self {
        degree as f64
    }
}

impl DegreeScalar for Rational {
    fn from_degree(degree: usize) -> Self {
        Rational::from_integer(degree as i128)
    }
}

/// A real interval with independently open or closed endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl<T: Copy + PartialOrd + fmt::Debug> Interval<T> {
    pub fn new(lo: T, hi: T, lo_open: bool, hi_open: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain(format!("interval endpoints {lo:?} > {hi:?}")));
        }
        Ok(Self {
            lo,
            hi,
            lo_open,
            hi_open,
        })
    }

    pub fn closed(lo: T, hi: T) -> Self {
        debug_assert!(lo <= hi);
        Self {
            lo,
            hi,
            lo_open: false,
            hi_open: false,
        }
    }

    /// Same endpoints, both excluded.
    pub fn interior(&self) -> Self {
        Self {
            lo_open: true,
            hi_open: true,
            ..*self
        }
    }

    pub fn contains(&self, v: T) -> bool {
        let above = if self.lo_open {
            v > self.lo
        } else {
            v >= self.lo
        };
        let below = if self.hi_open {
            v < self.hi
        } else {
            v <= self.hi
        };
        above && below
    }

    pub fn length(&self) -> T
    where
        T: Sub<Output = T>,
    {
        self.hi - self.lo
    }
}

impl<T: DegreeScalar + fmt::Debug> Interval<T> {
    pub fn contains_degree(&self, degree: usize) -> bool {
        self.contains(T::from_degree(degree))
    }
}

impl<T: fmt::Display> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_open { '(' } else { '[' };
        let r = if self.hi_open { ')' } else { ']' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}

/// `(n - 2) / (2 (n - 1))`, the shrink factor of the fixed-length interval.
fn half_shrink(n: usize) -> Rational {
    Rational::new(n as i128 - 2, 2 * (n as i128 - 1))
}

/// The closed interval `[d - c d, d + c d_bar]` with `c = (n-2)/(2(n-1))`,
/// which contains a vertex degree of every graph with these parameters.
/// Its length is always `(n - 2) / 2`.
pub fn theorem1_interval(p: &GraphParams) -> Interval<Rational> {
    let c = half_shrink(p.n);
    Interval::closed(p.d - c * p.d, p.d + c * p.d_bar)
}

/// Shape of the unique graphs that avoid the open fixed-length interval: a
/// clique `V+` and an independent set `V-`, each vertex adjacent to half the
/// other side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalProfile {
    pub size_plus: Rational,
    pub size_minus: Rational,
    pub deg_plus: Rational,
    pub deg_minus: Rational,
    /// Both part sizes are even integers.
    pub realizable: bool,
}

fn is_even_integer(r: Rational) -> bool {
    r.is_integer() && r.to_integer() % 2 == 0
}

pub fn extremal_profile(p: &GraphParams) -> Result<ExtremalProfile> {
    p.require_proper()?;
    let n1 = Rational::from_integer(p.n as i128 - 1);
    let n = Rational::from_integer(p.n as i128);
    let size_plus = p.d * n / n1;
    let size_minus = p.d_bar * n / n1;
    let interval = theorem1_interval(p);
    Ok(ExtremalProfile {
        size_plus,
        size_minus,
        deg_plus: interval.hi,
        deg_minus: interval.lo,
        realizable: is_even_integer(size_plus) && is_even_integer(size_minus),
    })
}

/// True iff `d_plus > sqrt(d n)`, decided exactly.
pub fn above_sqrt_dn(p: &GraphParams, d_plus: f64) -> bool {
    if d_plus <= 0.0 {
        return false;
    }
    let x = BigRational::from_float(d_plus).expect("finite float");
    let dn = BigRational::from_integer(BigInt::from(2 * p.m));
    &x * &x > dn
}

fn require_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} = {v} is not finite")))
    }
}

fn require_at_most_n1(p: &GraphParams, d_plus: f64) -> Result<()> {
    if d_plus > (p.n - 1) as f64 {
        Err(Error::Domain(format!(
            "d_plus = {d_plus} exceeds n - 1 = {}",
            p.n - 1
        )))
    } else {
        Ok(())
    }
}

fn check_theorem2_domain(p: &GraphParams, d_plus: f64) -> Result<()> {
    p.require_proper()?;
    require_finite("d_plus", d_plus)?;
    if !above_sqrt_dn(p, d_plus) {
        return Err(Error::Domain(format!(
            "d_plus = {d_plus} must exceed sqrt(d n) = {}",
            p.dn().sqrt()
        )));
    }
    require_at_most_n1(p, d_plus)
}

/// `sqrt(d_plus^2 - d n)`, clamped at zero against rounding just above the boundary.
fn discriminant_root(p: &GraphParams, d_plus: f64) -> f64 {
    (d_plus * d_plus - p.dn()).max(0.0).sqrt()
}

/// `(d_plus - d) n / (n - d_plus + sqrt(d_plus^2 - d n))` without domain checks.
fn ell_min_unchecked(p: &GraphParams, d_plus: f64) -> f64 {
    let n = p.n as f64;
    (d_plus - p.d_f64()) * n / (n - d_plus + discriminant_root(p, d_plus))
}

/// Lower end `d_minus` of the guaranteed interval `[d_minus, d_plus]` for
/// `sqrt(d n) < d_plus <= n - 1`.
pub fn theorem2_lower(p: &GraphParams, d_plus: f64) -> Result<f64> {
    check_theorem2_domain(p, d_plus)?;
    Ok((d_plus - ell_min_unchecked(p, d_plus)).max(0.0))
}

/// Optimum of the continuous relaxation: `0` up to `sqrt(d n)` (inclusive),
/// the `theorem2_lower` value above it.
pub fn opt_p_closed(p: &GraphParams, d_plus: f64) -> Result<f64> {
    p.require_proper()?;
    require_finite("d_plus", d_plus)?;
    if cmp_exact(d_plus, p.d) != Ordering::Greater {
        return Err(Error::Domain(format!(
            "d_plus = {d_plus} must exceed d = {}",
            p.d
        )));
    }
    require_at_most_n1(p, d_plus)?;
    if above_sqrt_dn(p, d_plus) {
        theorem2_lower(p, d_plus)
    } else {
        Ok(0.0)
    }
}

/// Length `d_plus - d_minus` of the guaranteed interval.
pub fn ell_min(p: &GraphParams, d_plus: f64) -> Result<f64> {
    check_theorem2_domain(p, d_plus)?;
    Ok(ell_min_unchecked(p, d_plus))
}

/// `ell_min / n` in the scale-free coordinates `z = d_plus / n`, `z0 = d / n`.
pub fn ell_min_normalized(z: f64, z0: f64) -> Result<f64> {
    check_f_domain(z, z0)?;
    Ok((z - z0) / (1.0 - z + (z * z - z0).sqrt()))
}

/// Upper end `d_plus` such that `[d_minus, d_plus]` contains a vertex degree,
/// obtained by applying `theorem2_lower` to the complement graph.
pub fn symmetric_upper(p: &GraphParams, d_minus: f64) -> Result<f64> {
    p.require_proper()?;
    require_finite("d_minus", d_minus)?;
    if d_minus < 0.0 || cmp_exact(d_minus, p.d) != Ordering::Less {
        return Err(Error::Domain(format!(
            "d_minus = {d_minus} must lie in [0, d = {})",
            p.d
        )));
    }
    let n1 = (p.n - 1) as f64;
    let comp = p.complement();
    let comp_plus = n1 - d_minus;
    let lower = theorem2_lower(&comp, comp_plus).map_err(|_| {
        Error::Domain(format!(
            "n - 1 - d_minus = {comp_plus} must exceed sqrt(d_bar n) = {}",
            comp.dn().sqrt()
        ))
    })?;
    Ok(n1 - lower)
}

/// Expanded form of the first check function:
/// `x(xn - 1) + 2(1 - x)(d - c d) - d`.
pub fn f1_expanded(x: Rational, p: &GraphParams) -> Rational {
    let n = Rational::from_integer(p.n as i128);
    let one = Rational::one();
    let c = half_shrink(p.n);
    x * (x * n - one) + Rational::from_integer(2) * (one - x) * (p.d - c * p.d) - p.d
}

/// `(xn - 1)(x(n - 1) - d) / (n - 1)`.
pub fn f1_factored(x: Rational, p: &GraphParams) -> Rational {
    let n = Rational::from_integer(p.n as i128);
    let n1 = Rational::from_integer(p.n as i128 - 1);
    (x * n - Rational::one()) * (x * n1 - p.d) / n1
}

pub fn f1_eval(x: Rational, p: &GraphParams) -> Rational {
    let v = f1_expanded(x, p);
    debug_assert_eq!(v, f1_factored(x, p));
    v
}

/// Expanded form of the complement check function:
/// `(1 - x)((1 - x)n - 1) + 2x(n - 1 - d - c d_bar) - (n - 1 - d)`.
pub fn f2_expanded(x: Rational, p: &GraphParams) -> Rational {
    let n = Rational::from_integer(p.n as i128);
    let one = Rational::one();
    let c = half_shrink(p.n);
    let y = one - x;
    y * (y * n - one) + Rational::from_integer(2) * x * (p.d_bar - c * p.d_bar) - p.d_bar
}

/// `(x(n - 1) - d)((x - 1)n + 1) / (n - 1)`.
pub fn f2_factored(x: Rational, p: &GraphParams) -> Rational {
    let n = Rational::from_integer(p.n as i128);
    let n1 = Rational::from_integer(p.n as i128 - 1);
    (x * n1 - p.d) * ((x - Rational::one()) * n + Rational::one()) / n1
}

pub fn f2_eval(x: Rational, p: &GraphParams) -> Rational {
    let v = f2_expanded(x, p);
    debug_assert_eq!(v, f2_factored(x, p));
    v
}

fn check_f_domain(z: f64, z0: f64) -> Result<()> {
    require_finite("z", z)?;
    require_finite("z0", z0)?;
    if !(z0 > 0.0 && z0 < 1.0) {
        return Err(Error::Domain(format!("z0 = {z0} must lie in (0, 1)")));
    }
    if z * z <= z0 || z <= 0.0 {
        return Err(Error::Domain(format!(
            "z = {z} must exceed sqrt(z0) = {}",
            z0.sqrt()
        )));
    }
    if z > 1.0 {
        return Err(Error::Domain(format!("z = {z} exceeds 1")));
    }
    Ok(())
}

/// `z - (z - z0) / (1 - z + sqrt(z^2 - z0))`: the lower end `d_minus / n` as a
/// function of the high-side average `z = dbar_plus / n`.
pub fn f_eval(z: f64, z0: f64) -> Result<f64> {
    check_f_domain(z, z0)?;
    let r = (z * z - z0).sqrt();
    Ok(z - (z - z0) / (1.0 - z + r))
}

/// Derivative of [`f_eval`] in `z`; non-negative on `(sqrt(z0), 1]`.
pub fn f_prime(z: f64, z0: f64) -> Result<f64> {
    check_f_domain(z, z0)?;
    let r = (z * z - z0).sqrt();
    let den = 1.0 - z + r;
    Ok((1.0 - z) * (2.0 * z * z - z0 - 2.0 * z * r) / (r * den * den))
}
