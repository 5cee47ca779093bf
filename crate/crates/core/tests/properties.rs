use proptest::prelude::*;

use avgdeg::bounds::{
    ell_min, max_edges, opt_p_closed, symmetric_upper, theorem2_lower, tolerance, GraphParams,
    Interval,
};
use avgdeg::opt::{check_feasible, closed_form_solution, solve_p_grid};
use avgdeg::sequences::{peel_trace, DegreeSequence, Graph};

/// Non-degenerate `(n, m)`.
fn proper_params() -> impl Strategy<Value = GraphParams> {
    (3usize..200)
        .prop_flat_map(|n| (Just(n), 1..max_edges(n)))
        .prop_map(|(n, m)| GraphParams::new(n, m).unwrap())
}

/// Parameters with a `d_plus` in `(sqrt(dn), n - 1]`.
fn theorem2_input() -> impl Strategy<Value = (GraphParams, f64)> {
    proper_params()
        .prop_filter("room above sqrt(dn)", |p| {
            p.dn().sqrt() < (p.n() - 1) as f64 - 1e-6
        })
        .prop_flat_map(|p| {
            let lo = p.dn().sqrt();
            let hi = (p.n() - 1) as f64;
            (Just(p), 1e-6f64..=1.0).prop_map(move |(p, t)| (p, (lo + t * (hi - lo)).min(hi)))
        })
}

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(
        n,
        edges
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

proptest! {
    #[test]
    fn params_identities(p in proper_params()) {
        prop_assert_eq!(p.d() * avgdeg::Rational::from_integer(p.n() as i128),
            avgdeg::Rational::from_integer(2 * p.m() as i128));
        prop_assert_eq!(p.d() + p.d_bar(), avgdeg::Rational::from_integer(p.n() as i128 - 1));
    }

    #[test]
    fn theorem2_bound_is_below_average((p, d_plus) in theorem2_input()) {
        let lower = theorem2_lower(&p, d_plus).unwrap();
        prop_assert!(lower >= 0.0);
        prop_assert!(lower < p.d_f64());
        prop_assert!(p.d_f64() < d_plus);
        prop_assert_eq!(opt_p_closed(&p, d_plus).unwrap(), lower);
        let len = ell_min(&p, d_plus).unwrap();
        prop_assert!((lower + len - d_plus).abs() <= tolerance(p.n()));
    }

    #[test]
    fn ell_min_is_half_order_at_midpoint(p in proper_params()) {
        let n = p.n() as f64;
        let d_plus = (n + p.d_f64()) / 2.0;
        prop_assume!(d_plus <= n - 1.0);
        let len = ell_min(&p, d_plus).unwrap();
        prop_assert!((len - n / 2.0).abs() <= 1e-12 * n);
    }

    #[test]
    fn closed_form_is_feasible_and_tight((p, d_plus) in theorem2_input()) {
        let s = closed_form_solution(&p, d_plus).unwrap();
        prop_assert!(check_feasible(&s, &p, d_plus, tolerance(p.n())).is_empty());
        prop_assert!(s.residuals.cross_edges.abs() <= tolerance(p.n()));
    }

    #[test]
    fn symmetric_upper_is_the_complement_bound((p, d_plus) in theorem2_input()) {
        // use the lower end from the bound as a valid d_minus
        let d_minus = theorem2_lower(&p, d_plus).unwrap();
        let n1 = (p.n() - 1) as f64;
        if let Ok(up) = symmetric_upper(&p, d_minus) {
            let comp = p.complement();
            prop_assert_eq!(up, n1 - theorem2_lower(&comp, n1 - d_minus).unwrap());
            prop_assert!(up > p.d_f64());
        }
    }

    #[test]
    fn complement_degrees_map_intervals(g in random_graph(), lo in 0usize..12, width in 0usize..12) {
        let n = g.n();
        let h = complement(&g);
        let hi = lo + width;
        let i = Interval::closed(lo as f64, hi as f64);
        let n1 = n as f64 - 1.0;
        let j = Interval::closed(n1 - hi as f64, n1 - lo as f64);
        for v in 0..n {
            prop_assert_eq!(i.contains_degree(g.degree(v)), j.contains(h.degree(v) as f64));
        }
    }

    #[test]
    fn peeling_completes(g in random_graph()) {
        let steps = peel_trace(&g);
        prop_assert_eq!(steps.len(), g.n());
        for s in &steps {
            prop_assert!(s.interval.contains_degree(s.degree));
        }
        let mut seen: Vec<_> = steps.iter().map(|s| s.vertex).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn edge_list_round_trip(g in random_graph()) {
        prop_assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn sequence_text_round_trip(v in proptest::collection::vec(0usize..20, 0..15)) {
        let s = DegreeSequence::new(v);
        prop_assert_eq!(s.to_string().parse::<DegreeSequence>().unwrap(), s);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn grid_never_beats_closed_form(
        n in 5usize..60,
        density in 0.05f64..0.95,
        t in 0.05f64..=1.0,
    ) {
        let p = GraphParams::from_density(n, density);
        prop_assume!(p.as_ref().is_ok_and(|p| !p.is_degenerate()));
        let p = p.unwrap();
        let d = p.d_f64();
        let d_plus = (d + t * ((n - 1) as f64 - d)).min((n - 1) as f64);
        let closed = opt_p_closed(&p, d_plus).unwrap();
        let grid = solve_p_grid(&p, d_plus, 100, 3).unwrap();
        prop_assert!(grid.objective() >= closed - tolerance(n));
        prop_assert_eq!(grid.d_minus, grid.dbar_minus);
    }
}
