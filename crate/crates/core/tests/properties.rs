//! Randomized structural invariants over arbitrary small multigraphs.

use arcgraph::graph::{MultiGraph, PointConfig, VertexId};
use arcgraph::iso::{canonical_form, is_isomorphic};
use proptest::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

/// Arbitrary multigraph on up to 7 vertices and 10 edges, loops and
/// parallel edges included.
fn multigraph() -> impl Strategy<Value = MultiGraph> {
    (1usize..=7, proptest::collection::vec((0usize..7, 0usize..7), 0..10)).prop_map(
        |(n, pairs)| {
            let pairs: Vec<(usize, usize)> =
                pairs.into_iter().map(|(u, v)| (u % n, v % n)).collect();
            MultiGraph::from_edges(n, &pairs)
        },
    )
}

/// A relabeled copy: same graph, vertices inserted in permuted order.
fn shuffled_copy(g: &MultiGraph, order: &[usize]) -> MultiGraph {
    let ids: Vec<VertexId> = g.vertex_ids().collect();
    let mut h = MultiGraph::new();
    let fresh: Vec<VertexId> = ids.iter().map(|_| h.add_vertex()).collect();
    let pos: BTreeMap<VertexId, usize> =
        ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let slot = |v: VertexId| fresh[order[pos[&v]] % fresh.len()];
    // a permutation of 0..n arrives as ranks of the order values
    let mut ranked: Vec<(usize, usize)> =
        order.iter().take(ids.len()).copied().enumerate().map(|(i, o)| (o, i)).collect();
    ranked.sort();
    let perm: Vec<usize> = {
        let mut p = vec![0; ids.len()];
        for (rank, &(_, original)) in ranked.iter().enumerate() {
            p[original] = rank;
        }
        p
    };
    let _ = slot;
    for (_, u, v) in g.edges() {
        h.add_edge(fresh[perm[pos[&u]]], fresh[perm[pos[&v]]]);
    }
    h
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn degree_sum_is_twice_the_edges(g in multigraph()) {
        let sum: usize = g.vertex_ids().map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn puncture_is_monotone_and_matches_components(g in multigraph(), picks in proptest::collection::vec(0usize..7, 0..4)) {
        let vs: Vec<VertexId> = g.vertex_ids().collect();
        prop_assert_eq!(g.puncture_count(&BTreeSet::new()), g.components().len());
        let mut s: BTreeSet<VertexId> = BTreeSet::new();
        let mut last = g.puncture_count(&s);
        for p in picks {
            let v = vs[p % vs.len()];
            if !s.insert(v) {
                continue;
            }
            let next = g.puncture_count(&s);
            if g.degree(v).unwrap() == 0 {
                // an isolated vertex is a component of its own; puncturing
                // it deletes that component and nothing else
                prop_assert_eq!(next, last - 1);
            } else {
                prop_assert!(next >= last, "puncturing an edge-end never merges pieces");
            }
            last = next;
        }
    }

    #[test]
    fn puncture_agrees_with_barycentric_subdivision(g in multigraph(), picks in proptest::collection::vec(0usize..7, 0..4)) {
        let vs: Vec<VertexId> = g.vertex_ids().collect();
        let s: BTreeSet<VertexId> = picks.iter().map(|&p| vs[p % vs.len()]).collect();
        let direct = g.puncture_count(&s);
        let reference = if g.edge_count() == 0 {
            g.without_vertices(&s).components().len()
        } else {
            g.subdivide_uniform(1).graph.without_vertices(&s).components().len()
        };
        prop_assert_eq!(direct, reference);
    }

    #[test]
    fn subdivide_then_suppress_is_identity_up_to_iso(g in multigraph(), counts in proptest::collection::vec(1usize..4, 0..6)) {
        prop_assume!(g.edge_count() > 0);
        let edges: Vec<_> = g.edge_ids().collect();
        let cfg: BTreeMap<_, _> = counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (edges[i % edges.len()], c))
            .collect();
        prop_assume!(!cfg.is_empty());
        let sub = g.subdivide(&PointConfig::new(cfg).unwrap()).unwrap();
        let (a, _) = sub.graph.suppress_degree2();
        let (b, _) = g.suppress_degree2();
        prop_assert!(is_isomorphic(&a, &b), "suppression undoes subdivision");
    }

    #[test]
    fn canonical_form_matches_isomorphism(g in multigraph(), order in proptest::collection::vec(0usize..100, 7)) {
        let h = shuffled_copy(&g, &order);
        prop_assert!(is_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn suppression_is_idempotent(g in multigraph()) {
        let (a, _) = g.suppress_degree2();
        let (b, _) = a.suppress_degree2();
        prop_assert!(is_isomorphic(&a, &b));
        // no degree-2 vertex survives except a cycle's single carrier
        for v in a.vertex_ids() {
            if a.degree(v).unwrap() == 2 {
                let loops = a.edges().filter(|&(_, x, y)| x == y && x == v).count();
                prop_assert_eq!(loops, 1, "a surviving degree-2 vertex carries a loop");
            }
        }
    }
}
