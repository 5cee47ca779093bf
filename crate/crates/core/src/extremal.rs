//! Split-graph constructions showing the bounds are tight.
//!
//! Both builders produce a clique `V+ = 0..a` and an independent set
//! `V- = a..n` joined by a bipartite cross graph.

use std::collections::BTreeSet;

use crate::bounds::{
    above_sqrt_dn, extremal_profile, max_edges, theorem2_lower, to_f64, ExtremalProfile,
    GraphParams,
};
use crate::error::{Error, Result};
use crate::opt::{closed_form_solution, OptSolution};
use crate::sequences::Graph;

#[derive(Debug, Clone, PartialEq)]
pub enum Target {
    Profile(ExtremalProfile),
    Optimum(OptSolution),
}

/// Achieved against theoretical value of one measured quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct Gap {
    pub quantity: &'static str,
    pub achieved: f64,
    pub target: f64,
}

impl Gap {
    pub fn abs(&self) -> f64 {
        (self.achieved - self.target).abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionResult {
    pub graph: Graph,
    /// Recomputed from `graph`.
    pub achieved_params: GraphParams,
    pub achieved_degree_set: BTreeSet<usize>,
    pub high_side: Vec<usize>,
    pub low_side: Vec<usize>,
    pub target: Target,
    pub gaps: Vec<Gap>,
    /// Adjustments made to the nominal construction.
    pub notes: Vec<String>,
}

impl ConstructionResult {
    pub fn gap(&self, quantity: &str) -> Option<&Gap> {
        self.gaps.iter().find(|g| g.quantity == quantity)
    }

    /// Largest degree strictly below `d_plus`.
    pub fn lower_level(&self, d_plus: f64) -> Option<usize> {
        self.achieved_degree_set
            .iter()
            .rev()
            .copied()
            .find(|&x| (x as f64) < d_plus)
    }
}

fn finish(
    graph: Graph,
    a: usize,
    target: Target,
    gaps: Vec<Gap>,
    notes: Vec<String>,
) -> Result<ConstructionResult> {
    let n = graph.n();
    let achieved_params = GraphParams::new(n, graph.edge_count() as u64)?;
    Ok(ConstructionResult {
        achieved_degree_set: graph.degrees().iter().copied().collect(),
        achieved_params,
        high_side: (0..a).collect(),
        low_side: (a..n).collect(),
        graph,
        target,
        gaps,
        notes,
    })
}

fn add_clique(g: &mut Graph, a: usize) {
    for u in 0..a {
        for v in u + 1..a {
            g.add_edge(u, v).expect("fresh clique edge");
        }
    }
}

/// Cross edges where high vertex `i` meets low vertices
/// `(floor(i b / a) + t) mod b` for `t < b / 2`.
fn modular_cross(a: usize, b: usize) -> Vec<(usize, usize)> {
    (0..a)
        .flat_map(|i| (0..b / 2).map(move |t| (i, (i * b / a + t) % b)))
        .collect()
}

/// Greedy bipartite realization of left degrees `left` against right degrees
/// `right`: each left vertex takes the right vertices of largest remaining
/// demand. Succeeds whenever the pair satisfies the Gale–Ryser condition.
fn greedy_bipartite(left: &[usize], right: &[usize]) -> Option<Vec<(usize, usize)>> {
    let mut demand = right.to_vec();
    let mut order: Vec<usize> = (0..right.len()).collect();
    let mut edges = Vec::new();
    for (i, &k) in left.iter().enumerate() {
        order.sort_by(|&x, &y| demand[y].cmp(&demand[x]).then(x.cmp(&y)));
        if k > order.len() {
            return None;
        }
        for &j in &order[..k] {
            if demand[j] == 0 {
                return None;
            }
            demand[j] -= 1;
            edges.push((i, j));
        }
    }
    demand.iter().all(|&x| x == 0).then_some(edges)
}

fn cross_is_biregular(cross: &[(usize, usize)], a: usize, b: usize) -> bool {
    let mut right = vec![0usize; b];
    let mut seen = BTreeSet::new();
    for &(i, j) in cross {
        if !seen.insert((i, j)) {
            return false;
        }
        right[j] += 1;
    }
    right.iter().all(|&x| x == a / 2)
}

/// Split graph with clique `V+` of size `a = dn/(n-1)`, independent `V-` of
/// size `b = n - a`, each `V+` vertex adjacent to `b/2` vertices of `V-` and
/// each `V-` vertex to `a/2` vertices of `V+`. Requires `a`, `b` even integers.
pub fn build_theorem1_extremal(n: usize, m: u64) -> Result<ConstructionResult> {
    let p = GraphParams::new(n, m)?;
    let profile = extremal_profile(&p)?;
    if !profile.realizable {
        return Err(Error::NotRealizable(format!(
            "part sizes {} and {} must both be even integers",
            profile.size_plus, profile.size_minus
        )));
    }
    let a = profile.size_plus.to_integer() as usize;
    let b = profile.size_minus.to_integer() as usize;

    let mut notes = Vec::new();
    let mut cross = modular_cross(a, b);
    if !cross_is_biregular(&cross, a, b) {
        notes.push("modular cross graph not biregular; used greedy realization".to_string());
        cross = greedy_bipartite(&vec![b / 2; a], &vec![a / 2; b]).ok_or_else(|| {
            Error::NotRealizable(format!("no biregular bipartite graph with sides {a}, {b}"))
        })?;
    }

    let mut g = Graph::empty(n);
    add_clique(&mut g, a);
    for (i, j) in cross {
        g.add_edge(i, a + j)?;
    }

    let degrees = g.degrees();
    let lo = degrees.iter().copied().min().unwrap_or(0) as f64;
    let hi = degrees.iter().copied().max().unwrap_or(0) as f64;
    let gaps = vec![
        Gap {
            quantity: "average degree",
            achieved: 2.0 * g.edge_count() as f64 / n as f64,
            target: p.d_f64(),
        },
        Gap {
            quantity: "low degree",
            achieved: lo,
            target: to_f64(profile.deg_minus),
        },
        Gap {
            quantity: "high degree",
            achieved: hi,
            target: to_f64(profile.deg_plus),
        },
    ];
    finish(g, a, Target::Profile(profile), gaps, notes)
}

fn clique_edges(a: usize) -> u64 {
    max_edges(a.max(1))
}

/// Clique plus cross edges can hold exactly `m` edges.
fn split_fits(n: usize, m: u64, a: usize) -> bool {
    let clique = clique_edges(a);
    clique <= m && m - clique <= (a * (n - a)) as u64
}

/// Cross degree each high vertex needs to reach `ceil(d_plus)`.
fn cross_need(d_plus: f64, a: usize) -> usize {
    (d_plus.ceil() as usize).saturating_sub(a - 1)
}

fn meets_threshold(n: usize, m: u64, a: usize, d_plus: f64) -> bool {
    let need = cross_need(d_plus, a);
    split_fits(n, m, a) && need <= n - a && (a * need) as u64 <= m - clique_edges(a)
}

/// Near-extremal split graph for the `d_plus` bound.
///
/// The high side has `a = round(x* n)` vertices, with `x*` from the closed-form
/// optimum. If the clique and cross edges cannot hold `m` edges, or the high
/// side cannot reach degree `ceil(d_plus)`, `a` is lowered (raised only when no
/// smaller size holds `m` edges). Cross edges are added one at a time from the
/// high vertex of least cross degree to the non-adjacent low vertex of least
/// degree, ties to the lower index.
pub fn build_near_extremal_theorem2(n: usize, m: u64, d_plus: f64) -> Result<ConstructionResult> {
    let p = GraphParams::new(n, m)?;
    if !above_sqrt_dn(&p, d_plus) {
        return Err(Error::Domain(format!(
            "d_plus = {d_plus} must exceed sqrt(d n) = {}",
            p.dn().sqrt()
        )));
    }
    let optimum = closed_form_solution(&p, d_plus)?;
    let theory = theorem2_lower(&p, d_plus)?;

    let nominal = ((optimum.x * n as f64).round() as usize).clamp(1, n - 1);
    let a = (1..=nominal)
        .rev()
        .find(|&a| meets_threshold(n, m, a, d_plus))
        .or_else(|| (1..=nominal).rev().find(|&a| split_fits(n, m, a)))
        .or_else(|| (nominal + 1..n).find(|&a| split_fits(n, m, a)))
        .ok_or_else(|| {
            Error::InfeasibleConstruction(format!(
                "clique(a) <= m <= clique(a) + a(n - a) for some high-side size a (n = {n}, m = {m})"
            ))
        })?;

    let mut notes = Vec::new();
    if a != nominal {
        notes.push(format!("high-side size adjusted from {nominal} to {a}"));
    }
    if !meets_threshold(n, m, a, d_plus) {
        notes.push(format!(
            "high side cannot reach degree {} with a = {a}",
            d_plus.ceil()
        ));
    }

    let mut g = Graph::empty(n);
    add_clique(&mut g, a);
    let mut cross_deg = vec![0usize; a];
    let cross_total = m - clique_edges(a);
    for _ in 0..cross_total {
        let u = (0..a)
            .filter(|&u| cross_deg[u] < n - a)
            .min_by_key(|&u| (cross_deg[u], u))
            .expect("cross budget within a(n - a)");
        let w = (a..n)
            .filter(|&w| !g.has_edge(u, w))
            .min_by_key(|&w| (g.degree(w), w))
            .expect("high vertex has a free low neighbour");
        g.add_edge(u, w)?;
        cross_deg[u] += 1;
    }

    let high_min = (0..a).map(|u| g.degree(u)).min().unwrap_or(0) as f64;
    let level = g
        .degrees()
        .iter()
        .copied()
        .filter(|&x| (x as f64) < d_plus)
        .max()
        .map_or(f64::NAN, |x| x as f64);
    let gaps = vec![
        Gap {
            quantity: "high-side minimum degree",
            achieved: high_min,
            target: d_plus,
        },
        Gap {
            quantity: "lower level",
            achieved: level,
            target: theory,
        },
        Gap {
            quantity: "average degree",
            achieved: 2.0 * g.edge_count() as f64 / n as f64,
            target: p.d_f64(),
        },
    ];
    finish(g, a, Target::Optimum(optimum), gaps, notes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::theorem1_interval;

    #[test]
    fn small_theorem1_graph() {
        let r = build_theorem1_extremal(4, 3).unwrap();
        assert_eq!(r.high_side, vec![0, 1]);
        assert_eq!(r.low_side, vec![2, 3]);
        let edges: Vec<_> = r.graph.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 3)]);
        assert_eq!(r.graph.degree_sequence(), vec![2, 2, 1, 1]);
        assert!(r.notes.is_empty());
        assert!(r.gaps.iter().all(|g| g.abs() == 0.0));
    }

    #[test]
    fn non_integer_part_sizes_rejected() {
        // n = 8, m = 5: a = 10/7
        assert!(matches!(
            build_theorem1_extremal(8, 5),
            Err(Error::NotRealizable(_))
        ));
        // n = 5, m = 5: a = 5/2
        assert!(matches!(
            build_theorem1_extremal(5, 5),
            Err(Error::NotRealizable(_))
        ));
        assert!(matches!(
            build_theorem1_extremal(5, 0),
            Err(Error::DegenerateDensity(_))
        ));
    }

    #[test]
    fn theorem1_graph_avoids_open_interval() {
        // a = 2m/(n-1) = 4, b = 6
        let r = build_theorem1_extremal(10, 18).unwrap();
        let open = theorem1_interval(&r.achieved_params).interior();
        assert!(r.graph.degrees().iter().all(|&x| !open.contains_degree(x)));
        assert_eq!(r.achieved_params.m(), 18);
    }

    #[test]
    fn greedy_bipartite_fallback() {
        let edges = greedy_bipartite(&[2, 2, 2, 2], &[4, 4]).unwrap();
        assert_eq!(edges.len(), 8);
        assert!(cross_is_biregular(
            &greedy_bipartite(&[3; 4], &[2; 6]).unwrap(),
            4,
            6
        ));
        assert!(greedy_bipartite(&[3], &[1, 1]).is_none());
        assert!(greedy_bipartite(&[1], &[1, 1]).is_none());
    }

    #[test]
    fn near_extremal_star() {
        let r = build_near_extremal_theorem2(4, 3, 3.0).unwrap();
        assert_eq!(r.high_side, vec![0]);
        assert_eq!(r.graph.degrees(), &[3, 1, 1, 1]);
        assert_eq!(r.lower_level(3.0), Some(1));
        assert!(r.notes.is_empty());
    }

    #[test]
    fn near_extremal_large() {
        let r = build_near_extremal_theorem2(100, 1250, 60.0).unwrap();
        assert_eq!(r.achieved_params.m(), 1250);
        assert!(r.graph.is_clique(&r.high_side));
        assert!(r.graph.is_independent(&r.low_side));
        let level = r.gap("lower level").unwrap();
        assert!(level.abs() <= 2.0, "{level:?}");
        assert!(level.achieved >= level.target);
        assert!(r.gap("high-side minimum degree").unwrap().achieved >= 60.0);
    }

    #[test]
    fn near_extremal_domain() {
        assert!(build_near_extremal_theorem2(100, 1250, 50.0).is_err());
        assert!(build_near_extremal_theorem2(100, 1250, 100.0).is_err());
    }
}
