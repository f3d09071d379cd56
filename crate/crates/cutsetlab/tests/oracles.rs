//! Cross-checks against slow independent oracles, plus property tests.

use proptest::prelude::*;

use cutsetlab::complex::Face;
use cutsetlab::cutset::{cut_sets, is_cut_set};
use cutsetlab::graph::{Graph, VertexSet};
use cutsetlab::verify::connected_graphs;

/// Free-vertex oracle: v is free iff its closed neighborhood induces a
/// maximal clique, decided by checking every extension directly.
fn free_vertices_oracle(g: &Graph) -> VertexSet {
    let is_clique = |s: VertexSet| {
        s.iter()
            .all(|a| s.iter().filter(|&b| b > a).all(|b| g.neighbors(a).unwrap().contains(b)))
    };
    VertexSet::from_labels(g.vertices().iter().filter(|&v| {
        let closed = g.neighbors(v).unwrap().with(v);
        is_clique(closed)
            && g.vertices()
                .iter()
                .filter(|&w| !closed.contains(w))
                .all(|w| !is_clique(closed.with(w)))
    }))
}

/// Cut-set oracle straight from the definition, recomputing component
/// counts with a plain HashSet-based flood fill.
fn is_cut_set_oracle(g: &Graph, s: VertexSet) -> bool {
    fn comps(g: &Graph, removed: VertexSet) -> usize {
        let mut seen = std::collections::HashSet::new();
        let mut count = 0;
        for v in g.vertices().iter().filter(|&v| !removed.contains(v)) {
            if seen.insert(v) {
                count += 1;
                let mut stack = vec![v];
                while let Some(u) = stack.pop() {
                    for w in g.neighbors(u).unwrap().iter() {
                        if !removed.contains(w) && seen.insert(w) {
                            stack.push(w);
                        }
                    }
                }
            }
        }
        count
    }
    s.is_empty() || s.iter().all(|i| comps(g, s) > comps(g, s.without(i)))
}

fn random_graph(n: usize, seed: u64) -> Graph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n).unwrap();
    for a in 1..=n {
        for b in (a + 1)..=n {
            if rng.gen_bool(0.4) {
                g.add_edge(a, b).unwrap();
            }
        }
    }
    g
}

#[test]
fn free_vertices_match_clique_oracle_exhaustively() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            assert_eq!(g.free_vertices(), free_vertices_oracle(&g), "{}", g.to_text());
        }
    }
}

#[test]
fn free_vertices_match_clique_oracle_on_random_graphs() {
    for seed in 0..200 {
        let g = random_graph(8, seed);
        assert_eq!(g.free_vertices(), free_vertices_oracle(&g), "{}", g.to_text());
    }
}

#[test]
fn cut_sets_match_definitional_oracle() {
    for n in 1..=5 {
        for g in connected_graphs(n) {
            let family = cut_sets(&g);
            for mask in 0..(1u64 << n) {
                let s = VertexSet::from_mask(mask);
                let expected = is_cut_set_oracle(&g, s);
                assert_eq!(family.contains(s), expected, "{} S={s}", g.to_text());
                assert_eq!(is_cut_set(&g, s), expected);
            }
        }
    }
}

proptest! {
    /// Components of G - S partition the surviving vertices.
    #[test]
    fn components_partition_survivors(edges in prop::collection::vec((1usize..=7, 1usize..=7), 0..16), mask in 0u64..128) {
        let mut g = Graph::new(7).unwrap();
        for (a, b) in edges {
            if a != b && !g.neighbors(a).unwrap().contains(b) {
                g.add_edge(a, b).unwrap();
            }
        }
        let s = VertexSet::from_mask(mask);
        let parts = g.components(s);
        let mut seen = VertexSet::EMPTY;
        for &c in &parts.components {
            prop_assert!(c.intersection(seen).is_empty());
            prop_assert!(c.intersection(s).is_empty());
            seen = seen.union(c);
        }
        prop_assert_eq!(seen, VertexSet::full(7).difference(s));
    }

    /// link(link(C, A), B) == link(C, A ∪ B) for disjoint faces A, B.
    #[test]
    fn link_composes(seed in 0u64..500, a_mask in 0u64..32, b_mask in 0u64..32) {
        let g = {
            // rejection-sample a connected graph on 5 vertices
            let mut s = seed;
            loop {
                let g = random_graph(5, s);
                if g.is_connected() {
                    break g;
                }
                s += 1;
            }
        };
        let complex = cutsetlab::complex::delta_complex(&g).unwrap().complex;
        let a = Face { y: VertexSet::from_mask(a_mask), x: VertexSet::EMPTY };
        let b = Face { y: VertexSet::EMPTY, x: VertexSet::from_mask(b_mask) };
        prop_assume!(complex.contains_face(a.union(b)));
        let direct = complex.link(a.union(b)).unwrap();
        let staged = complex.link(a).unwrap().link(b).unwrap();
        prop_assert_eq!(staged, direct);
    }
}
