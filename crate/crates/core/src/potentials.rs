//! Bellman-Ford shortest-path potentials on a directed multigraph with an
//! implicit zero-weight virtual source attached to every vertex.

/// `(source, target, weight)`; loops and parallel edges are allowed.
pub(crate) type WeightedEdge = (usize, usize, i64);

/// Potentials `p` with `p[t] <= p[s] + w` on every edge, or the edge indices
/// of a negative-weight directed cycle in traversal order.
pub(crate) fn shortest_potentials(
    vertex_count: usize,
    edges: &[WeightedEdge],
) -> Result<Vec<i64>, Vec<usize>> {
    let mut dist = vec![0i64; vertex_count];
    let mut pred: Vec<Option<usize>> = vec![None; vertex_count];
    let mut last_relaxed = None;
    for _ in 0..vertex_count.max(1) {
        last_relaxed = None;
        for (k, &(s, t, w)) in edges.iter().enumerate() {
            let candidate = dist[s] + w;
            if candidate < dist[t] {
                dist[t] = candidate;
                pred[t] = Some(k);
                last_relaxed = Some(t);
            }
        }
        if last_relaxed.is_none() {
            return Ok(dist);
        }
    }
    let Some(mut x) = last_relaxed else {
        return Ok(dist);
    };
    for _ in 0..vertex_count {
        let k = pred[x].expect("relaxed vertex has a predecessor");
        x = edges[k].0;
    }
    let start = x;
    let mut cycle = Vec::new();
    loop {
        let k = pred[x].expect("cycle vertex has a predecessor");
        cycle.push(k);
        x = edges[k].0;
        if x == start {
            break;
        }
    }
    cycle.reverse();
    debug_assert!(cycle.iter().map(|&k| edges[k].2).sum::<i64>() < 0);
    Err(cycle)
}
