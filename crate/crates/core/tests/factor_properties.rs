mod common;

use fracfactor::factor::{
    decide, deficiency, epsilon, factor_deficiency, half_integral_search, low_degree_set,
    solve_degree_bounds, validate_indicator, Certificate, LpOutcome, Method, Property, Verdict,
};
use fracfactor::{DegreeBounds, FactorBounds, Graph, VertexSet};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn subset(n: usize, mask: u64) -> VertexSet {
    VertexSet::new(n, (0..n).filter(|&v| mask >> v & 1 == 1).collect()).unwrap()
}

fn certificate_checks(g: &Graph, v: &Verdict, bounds: FactorBounds) -> bool {
    let db = DegreeBounds::uniform(g.n(), bounds);
    match &v.certificate {
        Certificate::Deficiency(w) => {
            let again = match v.property {
                Property::Covered => deficiency(g, &w.s, bounds),
                Property::Factor => factor_deficiency(g, &w.s, bounds),
            };
            !v.holds && again == *w && w.is_violation()
        }
        Certificate::Exhausted { .. } => v.holds,
        Certificate::Factor { assignment } => {
            v.holds && validate_indicator(g, assignment, &db).unwrap()
        }
        Certificate::PerEdge { assignments } => {
            v.holds
                && assignments.len() == g.m()
                && g.edges().iter().zip(assignments).all(|(&(x, y), h)| {
                    h.weight(x, y).is_some_and(One::is_one)
                        && validate_indicator(g, h, &db).unwrap()
                })
        }
        Certificate::InfeasibleEdge { certificate, .. } | Certificate::NoFactor { certificate } => {
            !v.holds && certificate.verify(g, &db).unwrap()
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn structural_and_lp_agree((g, (a, b)) in (common::graph(7), common::bounds_pair())) {
        let bounds = FactorBounds::new(a, b).unwrap();
        for property in [Property::Covered, Property::Factor] {
            let s = decide(&g, bounds, property, Method::Structural).unwrap();
            let l = decide(&g, bounds, property, Method::Lp).unwrap();
            prop_assert_eq!(s.holds, l.holds, "{:?} on {:?}", property, g.edges());
            prop_assert!(certificate_checks(&g, &s, bounds));
            prop_assert!(certificate_checks(&g, &l, bounds));
        }
    }

    #[test]
    fn covered_implies_factor((g, (a, b)) in (common::graph(8), common::bounds_pair())) {
        let bounds = FactorBounds::new(a, b).unwrap();
        if decide(&g, bounds, Property::Covered, Method::Structural).unwrap().holds {
            prop_assert!(decide(&g, bounds, Property::Factor, Method::Lp).unwrap().holds);
        }
    }

    #[test]
    fn half_integral_agrees_per_edge((g, (a, b)) in (common::graph(6), common::bounds_pair())) {
        let db = DegreeBounds::uniform(g.n(), FactorBounds::new(a, b).unwrap());
        for e in g.edges() {
            let lp = solve_degree_bounds(&g, &db, Some(e)).unwrap();
            let half = half_integral_search(&g, &db, Some(e), 15).unwrap();
            prop_assert_eq!(lp.is_feasible(), half.is_some(), "edge {:?}", e);
            if let LpOutcome::Feasible(h) = lp {
                prop_assert!(validate_indicator(&g, &h, &db).unwrap());
                prop_assert_eq!(h.weight(e.0, e.1), Some(&BigRational::one()));
            }
        }
    }

    #[test]
    fn deficiency_matches_definition(g in common::graph(9), mask in any::<u64>(), (a, b) in common::bounds_pair()) {
        let n = g.n();
        let s = subset(n, mask & ((1 << n) - 1));
        let bounds = FactorBounds::new(a, b).unwrap();
        let t = low_degree_set(&g, &s, a);
        let expect: Vec<usize> = (0..n)
            .filter(|&x| !s.contains(x) && g.degree_in_complement(&s, x) <= a as usize)
            .collect();
        prop_assert_eq!(t.as_slice(), &expect[..]);
        let w = deficiency(&g, &s, bounds);
        let sum: i64 = t.iter().map(|x| g.degree_in_complement(&s, x) as i64).sum();
        prop_assert_eq!(w.delta, b as i64 * s.len() as i64 - a as i64 * t.len() as i64 + sum);
        let eps = epsilon(&g, &s, &t, a);
        prop_assert_eq!(w.epsilon, eps);
        prop_assert!(eps <= 2);
        prop_assert_eq!(eps == 2, !g.is_independent(&s));
        prop_assert_eq!(w.is_violation(), w.delta < eps as i64);
    }

    #[test]
    fn edge_addition_never_destroys_a_factor(
        (g, order) in common::graph(8).prop_flat_map(|g| {
            let n = g.n();
            let missing: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| !g.has_edge(u, v))
                .collect();
            (Just(g), Just(missing).prop_shuffle())
        }),
        (a, b) in common::bounds_pair(),
        mask in any::<u64>(),
    ) {
        let bounds = FactorBounds::new(a, b).unwrap();
        let s = subset(g.n(), mask & ((1 << g.n()) - 1));
        let mut cur = g;
        let mut had = decide(&cur, bounds, Property::Factor, Method::Structural).unwrap().holds;
        let mut delta = factor_deficiency(&cur, &s, bounds).delta;
        for (u, v) in order {
            cur = cur.with_edge_added(u, v).unwrap();
            let has = decide(&cur, bounds, Property::Factor, Method::Structural).unwrap().holds;
            prop_assert!(has || !had, "factor lost after adding ({u},{v})");
            let next = factor_deficiency(&cur, &s, bounds).delta;
            prop_assert!(next >= delta);
            had = has;
            delta = next;
        }
    }

    #[test]
    fn degree_bounds_require_lower_at_most_upper(
        pairs in proptest::collection::vec((0u32..5, 0u32..5), 1..8),
    ) {
        let (lower, upper): (Vec<u32>, Vec<u32>) = pairs.iter().copied().unzip();
        let ordered = pairs.iter().all(|(f, g)| f <= g);
        prop_assert_eq!(DegreeBounds::new(lower, upper).is_ok(), ordered);
    }
}
