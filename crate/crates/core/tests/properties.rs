use proptest::prelude::*;
use proptest::sample::subsequence;

use sfactor_core::cayley::{boundary_set, cayley_graph, complement_set, delta_graph, induced_subgraph_check, translate};
use sfactor_core::clique::{
    brute_force_maximal_sets, enumerate_maximal_cliques, enumerate_maximal_independent_sets,
    extremal_independent_numbers, is_well_covered, DEFAULT_CAP,
};
use sfactor_core::constructions::{delta_bridge, greedy_construct_a};
use sfactor_core::group::finite_catalog;
use sfactor_core::stability::{cross_validate_correspondence, s_indices};
use sfactor_core::{ElementCode, EnumerableGroup, FiniteGroup, Graph, Group, Mode, SetKind, SymSet, VertexSet};

fn random_graph() -> impl Strategy<Value = Graph> {
    (1usize..=16, 1u32..=9).prop_flat_map(|(n, tenths)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(tenths as f64 / 10.0), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)
        })
    })
}

fn catalog(max: usize) -> Vec<FiniteGroup> {
    finite_catalog(max).iter().map(|d| d.build_finite().unwrap()).collect()
}

/// A catalog group of order at most `max` and a subset containing `e`.
fn group_and_subset(max: usize) -> impl Strategy<Value = (FiniteGroup, Vec<usize>)> {
    proptest::sample::select(catalog(max)).prop_flat_map(|g| {
        let n = g.order();
        subsequence((1..n).collect::<Vec<_>>(), 0..n).prop_map(move |rest| {
            let mut a = vec![0];
            a.extend(rest);
            (g.clone(), a)
        })
    })
}

fn family(g: &Graph, kind: SetKind) -> Vec<Vec<usize>> {
    let f = match kind {
        SetKind::Clique => enumerate_maximal_cliques(g, DEFAULT_CAP),
        SetKind::Independent => enumerate_maximal_independent_sets(g, DEFAULT_CAP),
    };
    f.unwrap().sets.iter().map(|s| s.to_vec()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn engine_matches_brute_force(g in random_graph()) {
        for kind in [SetKind::Clique, SetKind::Independent] {
            let oracle: Vec<Vec<usize>> = brute_force_maximal_sets(&g, kind).unwrap().sets.iter().map(|s| s.to_vec()).collect();
            prop_assert_eq!(family(&g, kind), oracle);
        }
    }

    #[test]
    fn independent_sets_are_cliques_of_complement(g in random_graph()) {
        prop_assert_eq!(family(&g, SetKind::Independent), family(&g.complement(), SetKind::Clique));
        let r = extremal_independent_numbers(&g, Mode::Exhaustive, DEFAULT_CAP).unwrap();
        let c = sfactor_core::clique::extremal_clique_numbers(&g.complement(), Mode::Exhaustive, DEFAULT_CAP).unwrap();
        prop_assert_eq!((r.max_size, r.min_maximal_size), (c.max_size, c.min_maximal_size));
        for s in family(&g, SetKind::Independent) {
            prop_assert!(r.min_maximal_size <= s.len() && s.len() <= r.max_size);
        }
    }

    #[test]
    fn early_exit_witnesses_are_sound(g in random_graph()) {
        let (covered, r) = is_well_covered(&g, DEFAULT_CAP).unwrap();
        let exact = extremal_independent_numbers(&g, Mode::Exhaustive, DEFAULT_CAP).unwrap();
        prop_assert_eq!(covered, exact.all_same_size());
        let n = g.n();
        for w in [&r.witness_max, &r.witness_min] {
            prop_assert!(g.is_maximal_independent(&VertexSet::from_elements(n, w.iter().copied())));
        }
        if !covered {
            prop_assert!(r.witness_max.len() != r.witness_min.len());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bridge_on_random_subsets((g, a) in group_and_subset(24)) {
        let b = delta_bridge(&g, &a, DEFAULT_CAP).unwrap();
        prop_assert!(b.holds(), "{:?}", b);
    }

    #[test]
    fn boundary_is_translation_invariant((g, a) in group_and_subset(24), x in any::<prop::sample::Index>()) {
        let x = x.index(g.order());
        let shifted = translate(&g, x, &a);
        let mut lhs = boundary_set(&g, &a).unwrap().elements().to_vec();
        let mut rhs = boundary_set(&g, &shifted).unwrap().elements().to_vec();
        lhs.sort_unstable();
        rhs.sort_unstable();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cayley_graphs_are_vertex_transitive((g, a) in group_and_subset(24)) {
        let gamma = cayley_graph(&g, &boundary_set(&g, &a).unwrap());
        let edges = gamma.edges();
        // g ~ h depends on gh⁻¹ only, so right translations are automorphisms.
        for x in 0..g.order() {
            for &(u, v) in &edges {
                prop_assert!(gamma.has_edge(g.product(u, x), g.product(v, x)));
            }
        }
        let complement = cayley_graph(&g, &complement_set(&g, &a).unwrap());
        prop_assert_eq!(gamma.complement().edges(), complement.edges());
        prop_assert!(induced_subgraph_check(&g, &a).unwrap());
    }

    #[test]
    fn isolated_vertices_in_delta((g, a) in group_and_subset(24)) {
        let f = complement_set(&g, &a).unwrap();
        let delta = delta_graph(&g, &f);
        for (i, &u) in f.elements().iter().enumerate() {
            let lonely = f.elements().iter().all(|&v| v == u || !f.contains(&g.product(u, g.inverse(v))));
            prop_assert_eq!(delta.degree(i) == 0, lonely);
        }
    }

    #[test]
    fn correspondence_on_order_16((g, a) in group_and_subset(16)) {
        prop_assert!(cross_validate_correspondence(&g, &a, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn s_index_bounds((g, a) in group_and_subset(24)) {
        let r = s_indices(&g, &a, DEFAULT_CAP).unwrap();
        let n = g.order();
        prop_assert!(1 <= r.lower && r.lower <= r.upper && r.upper <= n);
        prop_assert_eq!(r.upper == n, a.len() == 1);
    }
}

#[test]
fn translation_invariance_of_indices() {
    for g in catalog(12) {
        let n = g.order();
        for mask in 0u32..1 << (n - 1) {
            let a: Vec<usize> = std::iter::once(0).chain((1..n).filter(|i| mask >> (i - 1) & 1 == 1)).collect();
            let base = s_indices(&g, &a, DEFAULT_CAP).unwrap();
            for x in 1..n {
                let r = s_indices(&g, &translate(&g, x, &a), DEFAULT_CAP).unwrap();
                assert_eq!((r.lower, r.upper), (base.lower, base.upper));
            }
        }
    }
}

fn check_every_prefix(f: &[i64], steps: usize) {
    let z = EnumerableGroup::Integers;
    let f = SymSet::new(&z, f.iter().map(|&x| ElementCode::Int(x))).unwrap();
    for k in 1..=steps {
        let s = greedy_construct_a(&z, &f, k).unwrap();
        assert!(s.verify(&z, &f), "step {k}");
        assert_eq!(s.covered.len(), k);
    }
}

#[test]
fn greedy_invariants_every_step() {
    check_every_prefix(&[1, -1], 50);
    check_every_prefix(&[1, -1, 2, -2, 3, -3, 7, -7], 50);
    check_every_prefix(&[5, -5], 50);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn greedy_on_random_connection_sets(xs in proptest::collection::btree_set(1i64..30, 1..5), steps in 1usize..50) {
        let z = EnumerableGroup::Integers;
        let f = SymSet::new(&z, xs.iter().flat_map(|&x| [ElementCode::Int(x), ElementCode::Int(-x)])).unwrap();
        let s = greedy_construct_a(&z, &f, steps).unwrap();
        prop_assert!(s.verify(&z, &f));
    }

    /// A finite run to completion recovers `A⁻¹A = G \ F` exactly when `F`
    /// comes from some subset.
    #[test]
    fn greedy_closes_the_loop((g, a0) in group_and_subset(12)) {
        let f = complement_set(&g, &a0).unwrap();
        let s = greedy_construct_a(&g, &f, g.order()).unwrap();
        prop_assert!(s.verify(&g, &f));
        let mut quotients: Vec<usize> = s.a.iter().flat_map(|&x| s.a.iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.product(g.inverse(x), y)).collect();
        quotients.sort_unstable();
        quotients.dedup();
        let want: Vec<usize> = (0..g.order()).filter(|x| !f.contains(x)).collect();
        prop_assert_eq!(quotients, want);
        prop_assert_eq!(g.identity(), 0);
    }
}
