//! Property tests over randomized instances: structural invariants of the
//! generators and subdivision, permutation stability of the checkers, and
//! agreement between the pruned search and the partition oracle.

use proptest::prelude::*;

use tdc_core::*;

/// Arbitrary simple graph on up to `max_n` vertices, possibly disconnected.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &keep)| keep)
                .map(|(&e, _)| e)
                .collect();
            Graph::new(n, &edges).expect("generated edges are simple")
        })
    })
}

/// Arbitrary connected graph: a random spanning tree plus extra edges.
fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|v| (0..v).boxed()).collect();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        (parents, proptest::collection::vec(1..=20u8, len)).prop_map(
            move |(parents, extra_mask)| {
                let mut edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p, i + 1))
                    .collect();
                for (&pair, &roll) in pairs.iter().zip(&extra_mask) {
                    if roll <= 4 && !edges.contains(&pair) {
                        edges.push(pair);
                    }
                }
                Graph::new(n, &edges).expect("generated edges are simple")
            },
        )
    })
}

// Every instance family member small enough for the partition oracle gets
// both routes compared: the pruned search must agree with exhaustive
// enumeration on the whole corpus, not just on random graphs.
#[test]
fn oracle_equivalence_on_the_corpus() {
    let config = SuiteConfig::default();
    let mut compared = 0;
    for instance in build_corpus(&config) {
        let g = &instance.base;
        if g.n() > 10 || g.has_isolated_vertex() || g.n() == 0 {
            continue;
        }
        let exact = exact_tdc(g, SearchBudget::unlimited()).unwrap().value;
        let oracle = brute_tdc_oracle(g).unwrap();
        assert_eq!(exact, oracle, "disagreement on {}", instance.id);
        compared += 1;
    }
    assert!(compared >= 25, "corpus unexpectedly small: {compared}");
}

proptest! {
    #[test]
    fn adjacency_is_symmetric(g in arb_graph(9)) {
        for u in 0..g.n() {
            for &v in g.neighbors(u) {
                prop_assert!(g.neighbors(v).contains(&u));
                prop_assert!(g.has_edge(u, v) && g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.m(), g.edges().len());
    }

    #[test]
    fn subdivision_counts_and_structure(g in arb_graph(7), k in 1usize..=5) {
        let sg = subdivide(&g, k).unwrap();
        prop_assert_eq!(sg.graph().n(), g.n() + (k - 1) * g.m());
        prop_assert_eq!(sg.graph().m(), k * g.m());
        // connectivity is preserved in both directions
        prop_assert_eq!(sg.graph().is_connected(), g.is_connected());
        // girth scales by k; forests stay forests
        match g.girth() {
            Some(g0) => prop_assert_eq!(sg.graph().girth(), Some(g0 * k)),
            None => prop_assert!(sg.graph().girth().is_none()),
        }
        // even k makes every cycle even
        if k >= 2 && k % 2 == 0 {
            prop_assert!(sg.graph().is_bipartite());
        }
        // degree multiset: original degrees survive, internals have degree 2
        let mut expected: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        expected.extend(std::iter::repeat_n(2, (k - 1) * g.m()));
        expected.sort_unstable();
        let mut actual: Vec<usize> = (0..sg.graph().n()).map(|v| sg.graph().degree(v)).collect();
        actual.sort_unstable();
        prop_assert_eq!(expected, actual);
    }

    #[test]
    fn checker_verdicts_survive_color_permutation(
        g in arb_graph(7),
        raw in proptest::collection::vec(1usize..=7, 7),
        shift in 1usize..=13,
    ) {
        let raw = &raw[..g.n()];
        let c = Coloring::new(raw);
        // an order-reversing relabeling: still injective on color ids
        let permuted: Vec<usize> = raw.iter().map(|&x| shift * (8 - x)).collect();
        let p = Coloring::new(&permuted);
        prop_assert_eq!(is_proper(&g, &c).unwrap(), is_proper(&g, &p).unwrap());
        if !g.has_isolated_vertex() && g.n() > 0 {
            prop_assert_eq!(is_td_coloring(&g, &c).unwrap(), is_td_coloring(&g, &p).unwrap());
        }
    }

    #[test]
    fn own_class_never_dominates_in_proper_colorings(
        g in arb_graph(7),
        raw in proptest::collection::vec(1usize..=7, 7),
    ) {
        let c = Coloring::new(&raw[..g.n()]);
        if is_proper(&g, &c).unwrap() {
            for v in 0..g.n() {
                if let Some(class) = dominated_class(&g, &c, v).unwrap() {
                    prop_assert_ne!(class, c.color_of(v));
                }
            }
        }
    }

    #[test]
    fn td_colorings_use_at_least_two_classes(g in arb_graph(6), raw in proptest::collection::vec(1usize..=6, 6)) {
        if g.m() >= 1 && !g.has_isolated_vertex() {
            let c = Coloring::new(&raw[..g.n()]);
            if is_td_coloring(&g, &c).unwrap() {
                prop_assert!(c.num_colors() >= 2);
            }
        }
    }

    #[test]
    fn search_agrees_with_partition_oracle(g in arb_connected(7)) {
        let exact = exact_tdc(&g, SearchBudget::unlimited()).unwrap();
        let oracle = brute_tdc_oracle(&g).unwrap();
        prop_assert_eq!(exact.value, oracle);
        prop_assert!(is_td_coloring(&g, &exact.witness).unwrap());
        prop_assert_eq!(exact.witness.num_colors(), exact.value);
    }

    #[test]
    fn feasibility_is_monotone_in_t(g in arb_connected(7)) {
        let value = exact_tdc(&g, SearchBudget::unlimited()).unwrap().value;
        for t in value..=g.n() {
            prop_assert!(matches!(
                decide_tdc(&g, t, SearchBudget::unlimited()).unwrap(),
                Decision::Feasible(_)
            ));
        }
        if value > 1 {
            prop_assert!(matches!(
                decide_tdc(&g, value - 1, SearchBudget::unlimited()).unwrap(),
                Decision::Infeasible
            ));
        }
    }

    #[test]
    fn henning_sandwich_holds(g in arb_connected(7)) {
        let (gamma, witness) = exact_gamma_t(&g).unwrap();
        prop_assert!(is_total_dominating_set(&g, &witness));
        let chi = exact_chromatic(&g);
        let tdc = exact_tdc(&g, SearchBudget::unlimited()).unwrap().value;
        let bounds = henning_bounds(gamma, chi);
        prop_assert!(bounds.contains(tdc), "gamma_t={gamma} chi={chi} tdc={tdc}");
    }

    #[test]
    fn subdivision_needs_at_most_three_colors(g in arb_connected(6), k in 2usize..=4) {
        let sg = subdivide(&g, k).unwrap();
        let chi = exact_chromatic(sg.graph());
        prop_assert!(chi <= 3);
        if k % 2 == 0 {
            prop_assert_eq!(chi, 2);
        }
    }

    #[test]
    fn gamma_construction_respects_bound(g in arb_connected(5), k in 2usize..=3) {
        let sg = subdivide(&g, k).unwrap();
        let outcome = gamma_construction(&sg).unwrap();
        prop_assert!(outcome.valid);
        let (gamma, _) = exact_gamma_t(sg.graph()).unwrap();
        prop_assert!(outcome.coloring.num_colors() <= gamma + 2);
    }

    #[test]
    fn subdivision_upper_construction_is_honest(g in arb_connected(5), k in 2usize..=4) {
        let outcome = subdivision_upper_construction(&g, k).unwrap();
        if outcome.valid {
            prop_assert!(is_td_coloring(subdivide(&g, k).unwrap().graph(), &outcome.coloring).unwrap());
            prop_assert!(outcome.coloring.num_colors() <= outcome.claimed_bound);
        }
    }
}
