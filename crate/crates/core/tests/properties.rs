use proptest::prelude::*;

use sigrank_core::families::{cycle_rank, path_rank};
use sigrank_core::invariants::{
    cycle_sign, cycles_up_to, girth, is_balanced, is_connected, pendant_vertices, shortest_cycle,
};
use sigrank_core::{rank, rank_oracle, Sign, SignedGraph};

fn r(g: &SignedGraph) -> usize {
    rank(&g.adjacency_matrix()).rank
}

/// Random signed graph on up to `max_n` vertices. Each vertex pair gets a
/// byte: below `density` means an edge, and the low bit picks its sign.
fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (
        1..=max_n,
        0u8..=255,
        prop::collection::vec(any::<u8>(), max_n * (max_n - 1) / 2),
    )
        .prop_map(|(n, density, bytes)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    let b = bytes[k];
                    k += 1;
                    if b < density {
                        let s = if b & 1 == 0 { Sign::Positive } else { Sign::Negative };
                        edges.push((u, v, s));
                    }
                }
            }
            SignedGraph::new(n, edges).unwrap()
        })
}

fn signed_cycle(n: usize, signs: &[bool]) -> SignedGraph {
    SignedGraph::new(
        n,
        (0..n).map(|i| (i, (i + 1) % n, if signs[i] { Sign::Negative } else { Sign::Positive })),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn adjacency_matrix_mirrors_edges(g in signed_graph(10)) {
        let a = g.adjacency_matrix();
        prop_assert!(a.is_symmetric());
        prop_assert!(a.has_zero_diagonal());
        let nonzero = a.entries().iter().filter(|&&x| x != 0).count();
        prop_assert_eq!(nonzero, 2 * g.size());
        for e in g.edges() {
            prop_assert_eq!(i64::from(a.get(e.u, e.v)), e.sign.value());
        }
    }

    #[test]
    fn bareiss_matches_rational_oracle(g in signed_graph(10)) {
        let report = rank(&g.adjacency_matrix());
        prop_assert_eq!(report.rank, rank_oracle(&g.adjacency_matrix()));
        prop_assert_eq!(report.rank + report.nullity, g.order());
    }

    #[test]
    fn switching_preserves_rank_and_cycle_signs(g in signed_graph(9), mask in any::<u16>()) {
        let set: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.switch(&set).unwrap();
        prop_assert!(h.same_underlying(&g));
        prop_assert_eq!(r(&h), r(&g));
        prop_assert_eq!(is_balanced(&h), is_balanced(&g));
        for c in cycles_up_to(&g, 6) {
            prop_assert_eq!(cycle_sign(&h, &c.vertices).unwrap(), c.sign);
        }
    }

    #[test]
    fn deleting_a_multiple_preserves_rank(g in signed_graph(9)) {
        let before = r(&g);
        for pair in g.find_multiples() {
            prop_assert_eq!(r(&g.delete_vertices(&[pair.y]).unwrap()), before);
        }
        let reduced = g.reduce();
        prop_assert_eq!(r(&reduced), before);
        prop_assert!(reduced.find_multiples().is_empty());
        prop_assert_eq!(reduced.reduce(), reduced);
    }

    #[test]
    fn pendant_identity(g in signed_graph(10)) {
        let adj = g.adjacency();
        for u in pendant_vertices(&g) {
            let v = adj[u][0].0;
            let rest = g.delete_vertices(&[u, v]).unwrap();
            prop_assert_eq!(r(&g), r(&rest) + 2);
        }
    }

    #[test]
    fn induced_subgraphs_never_raise_rank(g in signed_graph(10), mask in any::<u16>()) {
        let keep: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced_subgraph(&keep).unwrap();
        prop_assert!(r(&g) >= r(&h));
    }

    #[test]
    fn balance_and_girth_agree_with_cycle_list(g in signed_graph(8)) {
        let cycles = cycles_up_to(&g, g.order());
        prop_assert_eq!(is_balanced(&g), cycles.iter().all(|c| c.sign == Sign::Positive));
        let shortest = cycles.iter().map(|c| c.len()).min();
        prop_assert_eq!(girth(&g), shortest);
        prop_assert_eq!(shortest_cycle(&g).map(|c| c.len()), shortest);
    }

    #[test]
    fn nullity_bound_for_connected_non_cycles(g in signed_graph(10)) {
        let n = g.order();
        let is_cycle = g.size() == n && g.degrees().iter().all(|&d| d == 2);
        prop_assume!(n >= 2 && is_connected(&g) && !is_cycle);
        let nullity = n - r(&g);
        let p = pendant_vertices(&g).len();
        let c = g.size() + 1 - n;
        prop_assert!(nullity < p + 2 * c, "nullity {} p {} c {}", nullity, p, c);
    }

    #[test]
    fn vertex_with_two_neighbours_on_shortest_cycle(g in signed_graph(10)) {
        let Some(c) = shortest_cycle(&g) else { return Ok(()); };
        let adj = g.adjacency();
        for u in (0..g.order()).filter(|u| !c.vertices.contains(u)) {
            let hits = adj[u].iter().filter(|(w, _)| c.vertices.contains(w)).count();
            if hits >= 2 {
                prop_assert!(c.len() <= 4);
            }
        }
    }

    #[test]
    fn near_full_rank_subgraph_dominates(g in signed_graph(10), mask in 1u16..) {
        prop_assume!(is_connected(&g));
        let keep: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        let h = g.induced_subgraph(&keep).unwrap();
        if r(&g) <= r(&h) + 1 {
            let adj = g.adjacency();
            for u in (0..g.order()).filter(|u| !keep.contains(u)) {
                prop_assert!(adj[u].iter().any(|(w, _)| keep.contains(w)));
            }
        }
    }

    #[test]
    fn cycle_rank_closed_form(n in 3usize..=40, signs in prop::collection::vec(any::<bool>(), 40)) {
        let g = signed_cycle(n, &signs);
        prop_assert_eq!(r(&g), cycle_rank(n, is_balanced(&g)));
    }
}

#[test]
fn path_and_cycle_tables_up_to_40() {
    for n in 1..=40 {
        let positive = SignedGraph::all_positive(n, (1..n).map(|i| (i - 1, i))).unwrap();
        let alternating = SignedGraph::new(
            n,
            (1..n).map(|i| (i - 1, i, if i % 2 == 0 { Sign::Negative } else { Sign::Positive })),
        )
        .unwrap();
        assert_eq!(r(&positive), path_rank(n), "P{n}");
        assert_eq!(r(&alternating), path_rank(n), "signed P{n}");
    }
    for n in 3..=40 {
        let balanced = signed_cycle(n, &vec![false; n]);
        let mut one = vec![false; n];
        one[0] = true;
        let unbalanced = signed_cycle(n, &one);
        assert_eq!(r(&balanced), cycle_rank(n, true), "balanced C{n}");
        assert_eq!(r(&unbalanced), cycle_rank(n, false), "unbalanced C{n}");
    }
}
