//! Directed acyclic graphs, spanning subgraphs and the structural predicates
//! (components, alternating, transitively closed) used by the face criteria.
//!
//! Vertices are 0-based internally. The `*_one_based` constructors and the
//! text/JSON formats use the 1-based labels of the edge-list files.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A directed edge `(source, target)` with 0-based endpoints.
pub type Edge = (usize, usize);

/// Edge mask over the edge list of a parent graph; bit `k` selects edge `k`.
pub type EdgeSet = FixedBitSet;

/// Read access to a vertex count and a list of directed edges.
pub trait EdgeView {
    fn vertex_count(&self) -> usize;
    fn edge_pairs(&self) -> impl Iterator<Item = Edge> + '_;
}

/// A validated loop-free directed acyclic graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Digraph {
    /// Validates `edges` (0-based) on `n` vertices.
    ///
    /// Edge order is preserved: the position of an edge in `edges` is its
    /// identity for every [`EdgeSet`] over this graph.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut seen = HashMap::with_capacity(edges.len());
        for &(u, v) in &edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x + 1, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u + 1));
            }
            if seen.insert((u, v), ()).is_some() {
                return Err(Error::DuplicateEdge(u + 1, v + 1));
            }
        }
        let g = Digraph { n, edges };
        if let Some(v) = g.find_cycle_vertex() {
            return Err(Error::DirectedCycle(v + 1));
        }
        Ok(g)
    }

    /// Same as [`Digraph::new`] with 1-based vertex labels.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut converted = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            converted.push((u - 1, v - 1));
        }
        Self::new(n, converted)
    }

    /// The complete DAG K_n: edges `(i, j)` for `i < j` in lexicographic order.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.iter().position(|&e| e == (u, v))
    }

    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }

    /// Mask selecting every edge.
    pub fn full_mask(&self) -> EdgeSet {
        let mut m = EdgeSet::with_capacity(self.edges.len());
        m.insert_range(..);
        m
    }

    pub fn empty_mask(&self) -> EdgeSet {
        EdgeSet::with_capacity(self.edges.len())
    }

    pub fn subgraph(&self, mask: EdgeSet) -> Result<Subgraph<'_>> {
        Subgraph::from_mask(self, mask)
    }

    pub fn whole(&self) -> Subgraph<'_> {
        Subgraph {
            parent: self,
            mask: self.full_mask(),
        }
    }

    pub fn empty_subgraph(&self) -> Subgraph<'_> {
        Subgraph {
            parent: self,
            mask: self.empty_mask(),
        }
    }

    fn find_cycle_vertex(&self) -> Option<usize> {
        let mut indegree = vec![0usize; self.n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            indegree[v] += 1;
            out[u].push(v);
        }
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(u) = queue.pop_front() {
            removed += 1;
            for &v in &out[u] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
        if removed == self.n {
            None
        } else {
            (0..self.n).find(|&v| indegree[v] > 0)
        }
    }
}

impl EdgeView for Digraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn edge_pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }
}

/// A spanning subgraph `H ⊆ G`, given by a mask over the parent's edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph<'g> {
    parent: &'g Digraph,
    mask: EdgeSet,
}

impl<'g> Subgraph<'g> {
    pub fn from_mask(parent: &'g Digraph, mut mask: EdgeSet) -> Result<Self> {
        let m = parent.edge_count();
        if let Some(index) = mask.ones().find(|&k| k >= m) {
            return Err(Error::EdgeIndexOutOfRange { index, edges: m });
        }
        if mask.len() != m {
            let mut exact = EdgeSet::with_capacity(m);
            exact.extend(mask.ones());
            mask = exact;
        }
        Ok(Subgraph { parent, mask })
    }

    pub fn from_indices(parent: &'g Digraph, indices: &[usize]) -> Result<Self> {
        let m = parent.edge_count();
        let mut mask = EdgeSet::with_capacity(m);
        for &index in indices {
            if index >= m {
                return Err(Error::EdgeIndexOutOfRange { index, edges: m });
            }
            mask.insert(index);
        }
        Ok(Subgraph { parent, mask })
    }

    /// Selects edges by their 1-based endpoints.
    pub fn from_one_based_pairs(parent: &'g Digraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut mask = parent.empty_mask();
        for &(u, v) in pairs {
            let index = (u >= 1 && v >= 1)
                .then(|| parent.edge_index(u - 1, v - 1))
                .flatten()
                .ok_or(Error::EdgeNotInParent(u, v))?;
            mask.insert(index);
        }
        Ok(Subgraph { parent, mask })
    }

    pub fn parent(&self) -> &'g Digraph {
        self.parent
    }

    pub fn mask(&self) -> &EdgeSet {
        &self.mask
    }

    pub fn into_mask(self) -> EdgeSet {
        self.mask
    }

    pub fn contains(&self, edge_index: usize) -> bool {
        self.mask.contains(edge_index)
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_clear()
    }

    /// Parent edge indices of the selected edges, ascending.
    pub fn edge_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.ones()
    }

    /// Parent edge indices of `E(G) \ E(H)`, ascending.
    pub fn complement_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.parent.edge_count()).filter(move |&k| !self.mask.contains(k))
    }

    pub fn edges_one_based(&self) -> Vec<(usize, usize)> {
        self.edge_pairs().map(|(u, v)| (u + 1, v + 1)).collect()
    }
}

impl EdgeView for Subgraph<'_> {
    fn vertex_count(&self) -> usize {
        self.parent.n
    }

    fn edge_pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.mask.ones().map(|k| self.parent.edges[k])
    }
}

/// Connected components of the underlying undirected graph.
///
/// Component ids are assigned in order of each component's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentStructure {
    pub component_of: Vec<usize>,
    pub count: usize,
}

impl ComponentStructure {
    /// Vertex sets of the components, each ascending, indexed by component id.
    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.count];
        for (v, &c) in self.component_of.iter().enumerate() {
            parts[c].push(v);
        }
        parts
    }
}

pub fn undirected_components<G: EdgeView>(g: &G) -> ComponentStructure {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edge_pairs() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            // keep the smaller vertex as the root
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    let mut id_of_root = vec![usize::MAX; n];
    let mut component_of = vec![0; n];
    let mut count = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if id_of_root[r] == usize::MAX {
            id_of_root[r] = count;
            count += 1;
        }
        component_of[v] = id_of_root[r];
    }
    ComponentStructure {
        component_of,
        count,
    }
}

/// Returns a vertex that is the target of one edge and the source of another.
pub fn alternating_violation<G: EdgeView>(g: &G) -> Option<usize> {
    let n = g.vertex_count();
    let mut is_source = vec![false; n];
    let mut is_sink = vec![false; n];
    for (u, v) in g.edge_pairs() {
        is_source[u] = true;
        is_sink[v] = true;
    }
    (0..n).find(|&v| is_source[v] && is_sink[v])
}

pub fn is_alternating<G: EdgeView>(g: &G) -> bool {
    alternating_violation(g).is_none()
}

/// Splits the vertices of an alternating graph into sources `L` and sinks `R`.
///
/// Isolated vertices are placed in `L`. Both parts are ascending.
pub fn bipartition<G: EdgeView>(g: &G) -> Result<(Vec<usize>, Vec<usize>)> {
    if let Some(v) = alternating_violation(g) {
        return Err(Error::NotAlternating(v + 1));
    }
    let mut is_sink = vec![false; g.vertex_count()];
    for (_, v) in g.edge_pairs() {
        is_sink[v] = true;
    }
    let (right, left): (Vec<usize>, Vec<usize>) = (0..g.vertex_count()).partition(|&v| is_sink[v]);
    Ok((left, right))
}

pub fn is_transitively_closed<G: EdgeView>(g: &G) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![false; n * n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in g.edge_pairs() {
        adj[u * n + v] = true;
        out[u].push(v);
    }
    for (i, succ) in out.iter().enumerate() {
        for &j in succ {
            if out[j].iter().any(|&k| !adj[i * n + k]) {
                return false;
            }
        }
    }
    true
}

pub fn is_connected<G: EdgeView>(g: &G) -> bool {
    undirected_components(g).count == 1
}

/// The induced subgraph `G|_S`: edges with both endpoints in `vertices`.
pub fn induced<'g>(g: &'g Digraph, vertices: &[usize]) -> Subgraph<'g> {
    let mut member = vec![false; g.n];
    for &v in vertices {
        if v < g.n {
            member[v] = true;
        }
    }
    let mut mask = g.empty_mask();
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        if member[u] && member[v] {
            mask.insert(k);
        }
    }
    Subgraph { parent: g, mask }
}

/// The alternating-induced subgraph `G_{L,R}`: edges from `left` into `right`.
pub fn alternating_induced<'g>(
    g: &'g Digraph,
    left: &[usize],
    right: &[usize],
) -> Result<Subgraph<'g>> {
    let mut side = vec![0u8; g.n];
    for &v in left {
        if v >= g.n {
            return Err(Error::VertexOutOfRange {
                vertex: v + 1,
                n: g.n,
            });
        }
        side[v] = 1;
    }
    for &v in right {
        if v >= g.n {
            return Err(Error::VertexOutOfRange {
                vertex: v + 1,
                n: g.n,
            });
        }
        if side[v] == 1 {
            return Err(Error::OverlappingParts(v + 1));
        }
        side[v] = 2;
    }
    let mut mask = g.empty_mask();
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        if side[u] == 1 && side[v] == 2 {
            mask.insert(k);
        }
    }
    Ok(Subgraph { parent: g, mask })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1(n: usize, edges: &[(usize, usize)]) -> Digraph {
        Digraph::from_one_based(n, edges).unwrap()
    }

    fn one_based(v: &[usize]) -> Vec<usize> {
        v.iter().map(|x| x + 1).collect()
    }

    #[test]
    fn validate_examples() {
        let k3 = g1(3, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(k3, Digraph::complete(3).unwrap());
        assert_eq!(
            Digraph::from_one_based(2, &[(1, 2), (2, 1)]),
            Err(Error::DirectedCycle(1))
        );
        assert!(Digraph::from_one_based(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).is_ok());
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            Digraph::from_one_based(2, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        );
        assert_eq!(
            Digraph::from_one_based(2, &[(1, 2), (1, 2)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert_eq!(
            Digraph::from_one_based(2, &[(1, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert_eq!(
            Digraph::from_one_based(2, &[(0, 1)]),
            Err(Error::VertexOutOfRange { vertex: 0, n: 2 })
        );
        assert_eq!(
            Digraph::from_one_based(3, &[(1, 2), (2, 3), (3, 1)]).unwrap_err(),
            Error::DirectedCycle(1)
        );
        assert_eq!(Digraph::new(0, vec![]), Err(Error::NoVertices));
    }

    #[test]
    fn arbitrary_acyclic_labelings_accepted() {
        let g = g1(3, &[(3, 1), (2, 1), (3, 2)]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn components_examples() {
        let g = Digraph::complete(4).unwrap();
        let h = Subgraph::from_one_based_pairs(&g, &[(1, 2), (3, 4)]).unwrap();
        let c = undirected_components(&h);
        assert_eq!(c.count, 2);
        assert_eq!(c.parts(), vec![vec![0, 1], vec![2, 3]]);

        let c = undirected_components(&Digraph::complete(3).unwrap().empty_subgraph());
        assert_eq!(c.count, 3);

        let sq = g1(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]);
        let h = Subgraph::from_one_based_pairs(&sq, &[(1, 3), (2, 4)]).unwrap();
        assert_eq!(
            undirected_components(&h).parts(),
            vec![vec![0, 2], vec![1, 3]]
        );
    }

    #[test]
    fn alternating_examples() {
        assert!(is_alternating(&g1(4, &[(1, 3), (1, 4), (2, 3), (2, 4)])));
        let k3 = Digraph::complete(3).unwrap();
        assert!(!is_alternating(&k3));
        assert_eq!(alternating_violation(&k3), Some(1));
        assert!(is_alternating(&k3.empty_subgraph()));
    }

    #[test]
    fn bipartition_examples() {
        let (l, r) = bipartition(&g1(3, &[(1, 3), (2, 3)])).unwrap();
        assert_eq!((one_based(&l), one_based(&r)), (vec![1, 2], vec![3]));
        let (l, r) = bipartition(&g1(4, &[(1, 3), (1, 4), (2, 3), (2, 4)])).unwrap();
        assert_eq!((one_based(&l), one_based(&r)), (vec![1, 2], vec![3, 4]));
        assert_eq!(
            bipartition(&Digraph::complete(3).unwrap()),
            Err(Error::NotAlternating(2))
        );
        // isolated vertex 3 goes to L
        let (l, r) = bipartition(&g1(3, &[(2, 1)])).unwrap();
        assert_eq!((one_based(&l), one_based(&r)), (vec![2, 3], vec![1]));
    }

    #[test]
    fn transitive_closure_examples() {
        for n in 1..6 {
            assert!(is_transitively_closed(&Digraph::complete(n).unwrap()));
        }
        assert!(!is_transitively_closed(&g1(3, &[(1, 2), (2, 3)])));
        assert!(is_transitively_closed(&g1(
            4,
            &[(1, 3), (1, 4), (2, 3), (2, 4)]
        )));
    }

    #[test]
    fn alternating_induced_examples() {
        let k5 = Digraph::complete(5).unwrap();
        let h = alternating_induced(&k5, &[0, 2], &[1, 4]).unwrap();
        assert_eq!(h.edges_one_based(), vec![(1, 2), (1, 5), (3, 5)]);
        let k4 = Digraph::complete(4).unwrap();
        let h = alternating_induced(&k4, &[0, 2], &[1, 3]).unwrap();
        assert_eq!(h.edges_one_based(), vec![(1, 2), (1, 4), (3, 4)]);
        assert!(alternating_induced(&k4, &[], &[1, 3]).unwrap().is_empty());
        assert_eq!(
            alternating_induced(&k4, &[0, 1], &[1]),
            Err(Error::OverlappingParts(2))
        );
    }

    #[test]
    fn induced_subgraph() {
        let k4 = Digraph::complete(4).unwrap();
        let h = induced(&k4, &[0, 2, 3]);
        assert_eq!(h.edges_one_based(), vec![(1, 3), (1, 4), (3, 4)]);
    }

    #[test]
    fn subgraph_construction_errors() {
        let k3 = Digraph::complete(3).unwrap();
        assert_eq!(
            Subgraph::from_one_based_pairs(&k3, &[(2, 1)]),
            Err(Error::EdgeNotInParent(2, 1))
        );
        assert_eq!(
            Subgraph::from_indices(&k3, &[3]),
            Err(Error::EdgeIndexOutOfRange { index: 3, edges: 3 })
        );
        let mut mask = EdgeSet::with_capacity(8);
        mask.insert(1);
        let h = Subgraph::from_mask(&k3, mask).unwrap();
        assert_eq!(h.mask().len(), 3);
        assert_eq!(h.edges_one_based(), vec![(1, 3)]);
    }
}
