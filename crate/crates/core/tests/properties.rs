use proptest::prelude::*;

use edgegp::classes::gpe_auto;
use edgegp::distance::apsp;
use edgegp::edgelist::{parse_edgelist, write_edgelist};
use edgegp::generate::{generate, FamilySpec};
use edgegp::geodesic::{build_conflicts, is_general_position, on_common_geodesic};
use edgegp::graph6::{parse_graph6, write_graph6};
use edgegp::iso::{are_isomorphic, canonical_form};
use edgegp::reduce::{reduce, reduce_tracked, ReductionOrder};
use edgegp::solver::{certify, gpe_exact};
use edgegp::Graph;

/// Connected graph: a random tree on `n` vertices plus random chords.
fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, chords)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if chords[k] && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
}

/// Any simple graph, connected or not.
fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(0.0f64..1.0, n * (n - 1) / 2),
                0.0f64..0.6,
            )
        })
        .prop_map(|(n, coins, p)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(coins).filter(|(_, c)| *c < p).map(|(e, _)| e)).unwrap()
        })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::new(
        g.vertex_count(),
        g.edges().iter().map(|&(u, v)| (perm[u], perm[v])),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn subsets_of_general_position_sets_stay_in_general_position(
        g in connected(8),
        pick in any::<u64>(),
        drop in any::<u64>(),
    ) {
        let m = g.edge_count();
        let x: Vec<usize> = (0..m).filter(|&e| pick >> (e % 64) & 1 == 1).collect();
        if is_general_position(&g, &x).unwrap() {
            let y: Vec<usize> = x.iter().copied().filter(|&e| drop >> (e % 64) & 1 == 0).collect();
            prop_assert!(is_general_position(&g, &y).unwrap());
        }
        let best = gpe_exact(&g).unwrap();
        for skip in 0..best.witness.len() {
            let mut y = best.witness.clone();
            y.remove(skip);
            prop_assert!(is_general_position(&g, &y).unwrap());
        }
    }

    #[test]
    fn triple_test_is_symmetric(g in connected(8), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let m = g.edge_count();
        let (a, b, c) = (a.index(m), b.index(m), c.index(m));
        prop_assume!(a != b && b != c && a != c);
        let dist = apsp(&g);
        let e = |i| g.edge(i);
        let reference = on_common_geodesic(e(a), e(b), e(c), &dist).unwrap();
        for [x, y, z] in [[a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
            prop_assert_eq!(on_common_geodesic(e(x), e(y), e(z), &dist).unwrap(), reference);
        }
        // orientation of each edge is irrelevant
        let (u, v) = e(a);
        prop_assert_eq!(on_common_geodesic((v, u), e(b), e(c), &dist).unwrap(), reference);
        prop_assert_eq!(build_conflicts(&g).unwrap().contains(a, b, c), reference);
    }

    #[test]
    fn solver_output_certifies(g in connected(9)) {
        let exact = gpe_exact(&g).unwrap();
        prop_assert_eq!(certify(&g, &exact), Ok(()));
        let auto = gpe_auto(&g).unwrap();
        prop_assert_eq!(certify(&g, &auto), Ok(()));
        prop_assert_eq!(auto.value, exact.value);
        prop_assert!(exact.value <= g.edge_count());
        let small_diameter = apsp(&g).diameter().unwrap() <= 2;
        prop_assert_eq!(exact.value == g.edge_count(), small_diameter);
        prop_assert_eq!(gpe_exact(&g).unwrap(), exact);
    }

    #[test]
    fn distances_are_a_metric(g in connected(10)) {
        let d = apsp(&g);
        for u in g.vertices() {
            prop_assert_eq!(d.get(u, u), Some(0));
            for v in g.vertices() {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == Some(1), g.has_edge(u, v));
                for w in g.vertices() {
                    prop_assert!(d.get(u, w).unwrap() <= d.get(u, v).unwrap() + d.get(v, w).unwrap());
                }
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in any_graph(40)) {
        let code = write_graph6(&g);
        let back = parse_graph6(&code).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        let (mut a, mut b) = (back.edges().to_vec(), g.edges().to_vec());
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(write_graph6(&back), code);
    }

    #[test]
    fn edgelist_round_trip(g in any_graph(20)) {
        prop_assert_eq!(parse_edgelist(&write_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn reduction_is_idempotent_and_order_free(blocks in 1usize..9, max_block in 2usize..6, seed in any::<u64>()) {
        let g = generate(&FamilySpec::RandomBlockGraph { blocks, max_block, seed }).unwrap();
        let r = reduce(&g).unwrap();
        prop_assert!(are_isomorphic(&reduce(&r).unwrap(), &r));
        let other = reduce_tracked(&g, ReductionOrder::InternalFirstReversed).unwrap();
        prop_assert!(are_isomorphic(&other.graph, &r));
    }

    #[test]
    fn lifted_reduction_witness_certifies(blocks in 1usize..9, seed in any::<u64>()) {
        let g = generate(&FamilySpec::RandomBlockGraph { blocks, max_block: 4, seed }).unwrap();
        let auto = gpe_auto(&g).unwrap();
        prop_assert_eq!(certify(&g, &auto), Ok(()));
        prop_assert_eq!(auto.value, gpe_exact(&g).unwrap().value);
    }

    #[test]
    fn canonical_form_ignores_labels(g in any_graph(14), keys in proptest::collection::vec(any::<u64>(), 14)) {
        let n = g.vertex_count();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (keys[v], v));
        let h = relabel(&g, &order);
        prop_assert_eq!(canonical_form(&h), canonical_form(&g));
    }
}
