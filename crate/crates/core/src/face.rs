//! Combinatorial face criteria for subpolytopes of `Q̃_G`.
//!
//! `Q̃_H` is a face iff the contracted multigraph `H_comp` is loopless and
//! acyclic. `Q_H` is a face iff `H` is path consistent and admissible: every
//! directed cycle `C` of `H_comp` has weight-decrease total `> -|C|`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{undirected_components, ComponentStructure, Edge, EdgeSet, EdgeView, Subgraph};
use crate::potentials::{shortest_potentials, WeightedEdge};

/// A face of `Q̃_G`: `Q̃_H` when `contains_origin`, else `Q_H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceDescriptor {
    pub edges: EdgeSet,
    pub contains_origin: bool,
}

/// One edge of `H_comp`, standing for an edge of `E(G) \ E(H)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HCompEdge {
    /// Component containing the source of the underlying edge.
    pub source: usize,
    /// Component containing the target of the underlying edge.
    pub target: usize,
    /// Index of the underlying edge in the parent graph.
    pub label: usize,
    /// Endpoints of the underlying edge (0-based).
    pub endpoints: Edge,
}

impl HCompEdge {
    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// The multigraph obtained from `G` by contracting each component of `H^un`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HComp {
    pub components: ComponentStructure,
    pub edges: Vec<HCompEdge>,
}

impl HComp {
    pub fn vertex_count(&self) -> usize {
        self.components.count
    }

    pub fn first_loop(&self) -> Option<&HCompEdge> {
        self.edges.iter().find(|e| e.is_loop())
    }

    pub fn is_loopless(&self) -> bool {
        self.first_loop().is_none()
    }

    /// A directed cycle as indices into `self.edges`, in traversal order.
    /// Loops are cycles of length one.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (k, e) in self.edges.iter().enumerate() {
            out[e.source].push(k);
        }
        let mut color = vec![0u8; n];
        let mut via: Vec<usize> = vec![usize::MAX; n];
        for root in 0..n {
            if color[root] != 0 {
                continue;
            }
            // iterative DFS: (vertex, next out-edge position)
            let mut stack = vec![(root, 0usize)];
            color[root] = 1;
            while let Some(top) = stack.last_mut() {
                let (u, pos) = *top;
                if pos == out[u].len() {
                    color[u] = 2;
                    stack.pop();
                    continue;
                }
                top.1 += 1;
                let k = out[u][pos];
                let t = self.edges[k].target;
                match color[t] {
                    0 => {
                        color[t] = 1;
                        via[t] = k;
                        stack.push((t, 0));
                    }
                    1 => {
                        let mut cycle = vec![k];
                        let mut x = u;
                        while x != t {
                            cycle.push(via[x]);
                            x = self.edges[via[x]].source;
                        }
                        cycle.reverse();
                        return Some(cycle);
                    }
                    _ => {}
                }
            }
        }
        None
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }
}

pub fn build_hcomp(h: &Subgraph<'_>) -> HComp {
    let components = undirected_components(h);
    let g = h.parent();
    let edges = h
        .complement_indices()
        .map(|label| {
            let (u, v) = g.edge(label);
            HCompEdge {
                source: components.component_of[u],
                target: components.component_of[v],
                label,
                endpoints: (u, v),
            }
        })
        .collect();
    HComp { components, edges }
}

/// Why `Q̃_H` fails to be a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TildeViolation {
    /// An edge of `G \ H` inside one component of `H^un` (parent edge index).
    Loop { edge: usize },
    /// A directed cycle of `H_comp` (parent edge indices, in order).
    Cycle { edges: Vec<usize> },
}

pub fn check_tilde_face(h: &Subgraph<'_>) -> std::result::Result<HComp, TildeViolation> {
    let hc = build_hcomp(h);
    if let Some(e) = hc.first_loop() {
        return Err(TildeViolation::Loop { edge: e.label });
    }
    if let Some(cycle) = hc.find_cycle() {
        return Err(TildeViolation::Cycle {
            edges: cycle.iter().map(|&k| hc.edges[k].label).collect(),
        });
    }
    Ok(hc)
}

pub fn is_tilde_face(h: &Subgraph<'_>) -> bool {
    check_tilde_face(h).is_ok()
}

/// The parts `V(H_i^un)` when `H` is a disjoint union of induced subgraphs
/// of `G` (equivalently, `H_comp` is loopless).
pub fn loopless_partition(h: &Subgraph<'_>) -> Option<Vec<Vec<usize>>> {
    let hc = build_hcomp(h);
    hc.is_loopless().then(|| hc.components.parts())
}

/// Integer vertex weights with `w(j) = w(i) + 1` along every edge of `H`,
/// shifted so each component of `H^un` has minimum 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFunction {
    pub w: Vec<i64>,
}

impl WeightFunction {
    pub fn get(&self, v: usize) -> i64 {
        self.w[v]
    }
}

/// A vertex that received two different labels during path labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathConflict {
    pub vertex: usize,
    /// Parent index of the edge that produced the second label.
    pub edge: usize,
    pub existing: i64,
    pub proposed: i64,
}

/// Breadth-first labeling of each component of `H^un`, starting from its
/// smallest vertex and visiting incident edges in parent index order.
pub fn weight_function(h: &Subgraph<'_>) -> std::result::Result<WeightFunction, PathConflict> {
    let g = h.parent();
    let n = g.n();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for k in h.edge_indices() {
        let (u, v) = g.edge(k);
        incident[u].push(k);
        incident[v].push(k);
    }
    let mut label: Vec<Option<i64>> = vec![None; n];
    let mut w = vec![0i64; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if label[root].is_some() {
            continue;
        }
        label[root] = Some(0);
        let mut members = vec![root];
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let lx = label[x].unwrap();
            for &k in &incident[x] {
                let (u, v) = g.edge(k);
                let (y, want) = if u == x { (v, lx + 1) } else { (u, lx - 1) };
                match label[y] {
                    None => {
                        label[y] = Some(want);
                        members.push(y);
                        queue.push_back(y);
                    }
                    Some(existing) if existing != want => {
                        return Err(PathConflict {
                            vertex: y,
                            edge: k,
                            existing,
                            proposed: want,
                        });
                    }
                    Some(_) => {}
                }
            }
        }
        let min = members.iter().map(|&v| label[v].unwrap()).min().unwrap();
        for &v in &members {
            w[v] = label[v].unwrap() - min;
        }
    }
    Ok(WeightFunction { w })
}

pub fn path_consistency(h: &Subgraph<'_>) -> Option<WeightFunction> {
    weight_function(h).ok()
}

pub fn weight_decrease(w: &WeightFunction, e: &HCompEdge) -> i64 {
    w.get(e.endpoints.0) - w.get(e.endpoints.1)
}

/// A directed cycle of `H_comp` whose weight-decrease total is `<= -|C|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityViolation {
    /// Parent edge indices of the cycle, in traversal order.
    pub cycle: Vec<usize>,
    pub wd_total: i64,
}

/// Shortest-path potentials for the weights `(wd(e) + 1)(m + 1) - 1`, i.e.
/// `wd(e) + 1 - 1/(m + 1)` scaled by `m + 1` where `m = |E(H_comp)|`.
///
/// Cycle totals of `wd + 1` are integers, so a cycle with total `<= 0` is
/// exactly a negative cycle of the perturbed weights.
pub(crate) fn scaled_shift_potentials(
    hc: &HComp,
    w: &WeightFunction,
) -> std::result::Result<(Vec<i64>, i64), AdmissibilityViolation> {
    let scale = hc.edges.len() as i64 + 1;
    let weighted: Vec<WeightedEdge> = hc
        .edges
        .iter()
        .map(|e| (e.source, e.target, (weight_decrease(w, e) + 1) * scale - 1))
        .collect();
    match shortest_potentials(hc.vertex_count(), &weighted) {
        Ok(p) => Ok((p, scale)),
        Err(cycle) => Err(AdmissibilityViolation {
            wd_total: cycle
                .iter()
                .map(|&k| weight_decrease(w, &hc.edges[k]))
                .sum(),
            cycle: cycle.iter().map(|&k| hc.edges[k].label).collect(),
        }),
    }
}

pub fn check_admissible(
    hc: &HComp,
    w: &WeightFunction,
) -> std::result::Result<(), AdmissibilityViolation> {
    scaled_shift_potentials(hc, w).map(|_| ())
}

pub fn is_admissible(h: &Subgraph<'_>, w: &WeightFunction) -> bool {
    check_admissible(&build_hcomp(h), w).is_ok()
}

/// Why `Q_H` fails to be a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QViolation {
    PathConflict(PathConflict),
    Inadmissible(AdmissibilityViolation),
}

/// Path consistency and admissibility; on success returns the pieces the
/// certificate construction needs.
pub fn check_q_face(h: &Subgraph<'_>) -> std::result::Result<(HComp, WeightFunction), QViolation> {
    let w = weight_function(h).map_err(QViolation::PathConflict)?;
    let hc = build_hcomp(h);
    check_admissible(&hc, &w).map_err(QViolation::Inadmissible)?;
    Ok((hc, w))
}

/// For empty `H` this is the empty face, which counts as a face.
pub fn is_q_face(h: &Subgraph<'_>) -> bool {
    check_q_face(h).is_ok()
}

/// `dim Q̃_H = n - r`, `r` the number of components of `H^un`.
pub fn tilde_dimension<G: EdgeView>(h: &G) -> isize {
    h.vertex_count() as isize - undirected_components(h).count as isize
}

/// `dim Q_H = n - r - 1` for alternating `H` (`-1` is the empty polytope).
pub fn q_dimension_alternating<G: EdgeView>(h: &G) -> Result<isize> {
    if let Some(v) = crate::graph::alternating_violation(h) {
        return Err(Error::NotAlternating(v + 1));
    }
    Ok(tilde_dimension(h) - 1)
}
