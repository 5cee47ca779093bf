//! Degree sequences: Erdős–Gallai testing, Havel–Hakimi realization,
//! exhaustive enumeration and the empirical checks built on top of them.

mod enumerate;
mod graph;
mod verify;

use std::fmt;
use std::str::FromStr;

pub use enumerate::{enumerate_graphical, BoundedPartitions, MAX_ENUMERATION_ORDER};
pub use graph::{find_vertex_in_interval, Graph};
pub use verify::{
    empirical_d_minus, verify_theorem1, verify_theorem2, verify_theorem2_many, VerificationReport,
};

use crate::bounds::{theorem1_interval, Interval, Rational};
use crate::error::{Error, Result};

/// Degree list kept in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Self { degrees }
    }

    /// Wraps a list the caller guarantees is already non-increasing.
    pub(crate) fn from_sorted(degrees: Vec<usize>) -> Self {
        debug_assert!(degrees.windows(2).all(|w| w[0] >= w[1]));
        Self { degrees }
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn is_graphical(&self) -> bool {
        is_graphical(self)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Comma-separated integers on one line, e.g. `3,1,1,1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::new(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("degree `{}`: {e}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// Erdős–Gallai test: even sum and, for every prefix length `k`,
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)`.
pub fn is_graphical(s: &DegreeSequence) -> bool {
    let d = &s.degrees;
    let n = d.len();
    if d.iter().any(|&x| x >= n) {
        return false;
    }
    if !s.sum().is_multiple_of(2) {
        return false;
    }
    let mut prefix = 0usize;
    for k in 1..=n {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

/// Havel–Hakimi realization. Vertex `i` receives degree `s[i]`; at each step
/// the vertex with the largest residual demand is joined to the next largest
/// ones, ties going to the lower index.
pub fn realize(s: &DegreeSequence) -> Result<Graph> {
    if !is_graphical(s) {
        return Err(Error::NotGraphical(s.to_string()));
    }
    let n = s.len();
    let mut g = Graph::empty(n);
    let mut residual = s.degrees.clone();
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let v = order[0];
        let need = residual[v];
        if need == 0 {
            break;
        }
        residual[v] = 0;
        for &u in order[1..=need].iter() {
            if residual[u] == 0 {
                return Err(Error::NotGraphical(s.to_string()));
            }
            residual[u] -= 1;
            g.add_edge(v, u)?;
        }
    }
    Ok(g)
}

/// One removal in a peeling run.
#[derive(Debug, Clone, PartialEq)]
pub struct PeelStep {
    /// Vertex label in the original graph.
    pub vertex: usize,
    pub degree: usize,
    pub interval: Interval<Rational>,
}

/// Repeatedly removes the lowest-index vertex whose degree lies in the
/// fixed-length interval of the current graph. A single remaining vertex uses
/// the interval `[0, 0]`. The trace is shorter than `n` only if no vertex
/// qualified at some step.
pub fn peel_trace(g: &Graph) -> Vec<PeelStep> {
    let mut labels: Vec<usize> = (0..g.n()).collect();
    let mut current = g.clone();
    let mut steps = Vec::with_capacity(g.n());
    while current.n() > 0 {
        let interval = match current.params() {
            Some(p) => theorem1_interval(&p),
            None => Interval::closed(Rational::from_integer(0), Rational::from_integer(0)),
        };
        let Some(v) = find_vertex_in_interval(&current, &interval) else {
            break;
        };
        steps.push(PeelStep {
            vertex: labels[v],
            degree: current.degree(v),
            interval,
        });
        labels.remove(v);
        current = current.without_vertex(v);
    }
    steps
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    #[test]
    fn graphical_examples() {
        assert!(is_graphical(&seq("3,3,3,3")));
        assert!(is_graphical(&seq("3,1,1,1")));
        assert!(!is_graphical(&seq("3,3,1,1")));
        assert!(!is_graphical(&seq("2,2,0")));
        assert!(!is_graphical(&seq("1,1,1")));
        assert!(!is_graphical(&seq("3,1,1")));
        assert!(is_graphical(&seq("")));
        assert!(is_graphical(&seq("0")));
    }

    #[test]
    fn parse_and_display() {
        let s = seq(" 1, 3,1 ,1");
        assert_eq!(s.degrees(), &[3, 1, 1, 1]);
        assert_eq!(s.to_string(), "3,1,1,1");
        assert!("1,a".parse::<DegreeSequence>().is_err());
    }

    #[test]
    fn realize_examples() {
        let tri = realize(&seq("2,2,2")).unwrap();
        assert_eq!(tri, Graph::complete(3));

        let star = realize(&seq("3,1,1,1")).unwrap();
        assert_eq!(star.degrees(), &[3, 1, 1, 1]);
        assert_eq!(star.neighbors(0).collect::<Vec<_>>(), vec![1, 2, 3]);

        let path = realize(&seq("2,2,1,1")).unwrap();
        assert_eq!(path.degree_sequence(), vec![2, 2, 1, 1]);
        assert_eq!(path.edge_count(), 3);

        assert!(matches!(
            realize(&seq("3,3,1,1")),
            Err(Error::NotGraphical(_))
        ));
    }

    #[test]
    fn peel_examples() {
        let steps = peel_trace(&Graph::complete(4));
        assert_eq!(steps.len(), 4);
        assert_eq!(steps[0].degree, 3);
        assert_eq!(
            steps[0].interval,
            Interval::closed(Rational::from_integer(2), Rational::from_integer(3))
        );

        let steps = peel_trace(&Graph::empty(5));
        assert_eq!(steps.len(), 5);
        assert!(steps
            .iter()
            .all(|s| s.degree == 0 && s.interval.contains_degree(0)));
        assert_eq!(
            steps.iter().map(|s| s.vertex).collect::<Vec<_>>(),
            vec![0, 1, 2, 3, 4]
        );
    }
}
