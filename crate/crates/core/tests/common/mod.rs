#![allow(dead_code)]

use proptest::prelude::*;
use rootface::{Digraph, EdgeSet};

/// A DAG on `1..=max_n` vertices: a random vertex order, then a coin per
/// forward pair.
pub fn dag(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let order = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
            (
                Just(n),
                order,
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, order, coins)| {
            let mut edges = Vec::new();
            let mut c = coins.into_iter();
            for a in 0..n {
                for b in a + 1..n {
                    if c.next().unwrap() {
                        edges.push((order[a], order[b]));
                    }
                }
            }
            Digraph::new(n, edges).unwrap()
        })
}

/// A DAG together with an edge mask over it.
pub fn dag_with_mask(max_n: usize) -> impl Strategy<Value = (Digraph, EdgeSet)> {
    dag(max_n).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), prop::collection::vec(any::<bool>(), m)).prop_map(|(g, bits)| {
            let mut mask = g.empty_mask();
            for (k, b) in bits.into_iter().enumerate() {
                mask.set(k, b);
            }
            (g, mask)
        })
    })
}

pub fn reversed(g: &Digraph) -> Digraph {
    Digraph::new(g.n(), g.edges().iter().map(|&(u, v)| (v, u)).collect()).unwrap()
}
