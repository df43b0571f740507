//! Face enumeration and f-vectors of `Q̃_G`, plus closed-form generators for
//! complete graphs, alternating graphs and transitively closed graphs.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{is_q_face, is_tilde_face, tilde_dimension, FaceDescriptor};
use crate::graph::{
    alternating_induced, alternating_violation, bipartition, induced, is_transitively_closed,
    undirected_components, Digraph, EdgeSet, Subgraph,
};
use crate::hull::{dimension_or_empty, enumerate_faces_bruteforce, VertexSet, DEFAULT_VERTEX_CAP};

pub const DEFAULT_EDGE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EnumeratedFace {
    pub dim: isize,
    pub face: FaceDescriptor,
}

/// Face counts by dimension.
///
/// Proper nonempty faces are always counted; the empty face (dimension -1)
/// and the polytope itself only when the matching flag is set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector {
    pub counts: BTreeMap<isize, u64>,
    pub include_empty: bool,
    pub include_improper: bool,
}

impl FVector {
    pub fn get(&self, dim: isize) -> u64 {
        self.counts.get(&dim).copied().unwrap_or(0)
    }

    /// Counts for dimensions `0..=max`, zero-filled.
    pub fn dense(&self, max: isize) -> Vec<u64> {
        (0..=max).map(|d| self.get(d)).collect()
    }

    fn bump(&mut self, dim: isize, by: u64) {
        if by > 0 {
            *self.counts.entry(dim).or_insert(0) += by;
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FaceFlags {
    pub include_empty: bool,
    pub include_improper: bool,
}

impl FaceFlags {
    pub fn all() -> Self {
        FaceFlags {
            include_empty: true,
            include_improper: true,
        }
    }
}

fn mask_from_bits(bits: u64, m: usize) -> EdgeSet {
    let mut mask = EdgeSet::with_capacity(m);
    for k in 0..m {
        if bits >> k & 1 == 1 {
            mask.insert(k);
        }
    }
    mask
}

/// Every nonempty face of `Q̃_G` found by the combinatorial criteria over all
/// `H ⊆ G`, including `Q̃_G` itself. Sorted by dimension, then descriptor.
pub fn enumerate_faces(g: &Digraph, edge_cap: usize) -> Result<Vec<EnumeratedFace>> {
    let m = g.edge_count();
    if m > edge_cap || m >= 64 {
        return Err(Error::TooLarge {
            size: m,
            cap: edge_cap,
        });
    }
    let mut faces: Vec<EnumeratedFace> = (0u64..1 << m)
        .into_par_iter()
        .flat_map_iter(|bits| {
            let h = Subgraph::from_mask(g, mask_from_bits(bits, m)).expect("mask fits");
            let mut found = Vec::with_capacity(2);
            if is_tilde_face(&h) {
                found.push(EnumeratedFace {
                    dim: tilde_dimension(&h),
                    face: FaceDescriptor {
                        edges: h.mask().clone(),
                        contains_origin: true,
                    },
                });
            }
            if !h.is_empty() && is_q_face(&h) {
                found.push(EnumeratedFace {
                    dim: q_face_dimension(&h),
                    face: FaceDescriptor {
                        edges: h.mask().clone(),
                        contains_origin: false,
                    },
                });
            }
            found
        })
        .collect();
    faces.sort();
    Ok(faces)
}

/// Affine dimension of `Q_H` by exact rank.
pub fn q_face_dimension(h: &Subgraph<'_>) -> isize {
    let roots = VertexSet::roots(h.parent());
    let pts: Vec<Vec<i64>> = h.edge_indices().map(|k| roots.points[k].clone()).collect();
    dimension_or_empty(&pts)
}

fn fvector_from_faces(faces: &[EnumeratedFace], top: isize, flags: FaceFlags) -> FVector {
    let mut f = FVector {
        include_empty: flags.include_empty,
        include_improper: flags.include_improper,
        ..FVector::default()
    };
    for face in faces {
        // Q̃_G is the only face of top dimension
        if face.dim == top && !flags.include_improper {
            continue;
        }
        f.bump(face.dim, 1);
    }
    if flags.include_empty {
        f.bump(-1, 1);
    }
    f
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FVectorMode {
    /// Combinatorial criteria over all subgraphs.
    Oracle,
    /// Linear-programming face test over all vertex subsets.
    BruteForce,
    /// Closed-form generators; requires `G = K_n`.
    KnFormula,
}

pub fn fvector(g: &Digraph, mode: FVectorMode, flags: FaceFlags) -> Result<FVector> {
    let top = tilde_dimension(g);
    match mode {
        FVectorMode::Oracle => {
            let faces = enumerate_faces(g, DEFAULT_EDGE_CAP)?;
            Ok(fvector_from_faces(&faces, top, flags))
        }
        FVectorMode::BruteForce => {
            let lattice = enumerate_faces_bruteforce(&VertexSet::tilde(g), DEFAULT_VERTEX_CAP)?;
            let mut f = FVector {
                include_empty: flags.include_empty,
                include_improper: flags.include_improper,
                ..FVector::default()
            };
            for face in &lattice.faces {
                let skip = (face.dim == -1 && !flags.include_empty)
                    || (face.dim == lattice.dim && !flags.include_improper);
                if !skip {
                    f.bump(face.dim, 1);
                }
            }
            Ok(f)
        }
        FVectorMode::KnFormula => {
            let kn = Digraph::complete(g.n())?;
            let same: BTreeSet<_> = g.edges().iter().collect();
            if same != kn.edges().iter().collect() {
                return Err(Error::NotComplete);
            }
            Ok(kn_fvector(g.n(), KnPart::Both, flags))
        }
    }
}

/// One interval block `(K_[a,b])_{L,R}` of a face `Q_H` of `Q̃_{K_n}`; vertices
/// are 0-based and both parts ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KnBlock {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl KnBlock {
    fn min(&self) -> usize {
        self.left[0].min(self.right[0])
    }

    fn max(&self) -> usize {
        *self.left.last().unwrap().max(self.right.last().unwrap())
    }
}

/// Canonical data `(L_1, R_1), ..., (L_ℓ, R_ℓ)` for a face `Q_H ⊂ Q̃_{K_n}`:
/// the smallest vertex of each block lies in `L_i`, the largest in `R_i`, and
/// blocks are separated (`max R_i < min L_{i+1}`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KnFaceDatum {
    pub blocks: Vec<KnBlock>,
}

impl KnFaceDatum {
    pub fn is_canonical(&self) -> bool {
        for b in &self.blocks {
            if b.left.is_empty() || b.right.is_empty() {
                return false;
            }
            if !b.left.windows(2).all(|w| w[0] < w[1]) || !b.right.windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
            if b.left.iter().any(|v| b.right.binary_search(v).is_ok()) {
                return false;
            }
            if b.min() != b.left[0] || b.max() != *b.right.last().unwrap() {
                return false;
            }
        }
        self.blocks
            .windows(2)
            .all(|w| w[0].right.last().unwrap() < &w[1].left[0])
    }

    /// `E(H) = {(a, b) : a ∈ L_i, b ∈ R_i, a < b}` as a mask over `K_n`.
    pub fn to_mask(&self, kn: &Digraph) -> EdgeSet {
        let mut mask = kn.empty_mask();
        for b in &self.blocks {
            for &a in &b.left {
                for &c in &b.right {
                    if a < c {
                        mask.insert(kn.edge_index(a, c).expect("edge of K_n"));
                    }
                }
            }
        }
        mask
    }

    /// Reads the blocks back from `H`: per component with an edge, its
    /// sources and sinks. `None` if `H` is not alternating.
    pub fn from_subgraph(h: &Subgraph<'_>) -> Option<KnFaceDatum> {
        if alternating_violation(h).is_some() {
            return None;
        }
        let comps = undirected_components(h);
        let mut is_source = vec![false; h.parent().n()];
        let mut is_sink = vec![false; h.parent().n()];
        for k in h.edge_indices() {
            let (u, v) = h.parent().edge(k);
            is_source[u] = true;
            is_sink[v] = true;
        }
        let mut blocks: Vec<KnBlock> = comps
            .parts()
            .into_iter()
            .filter(|p| p.len() > 1)
            .map(|p| KnBlock {
                left: p.iter().copied().filter(|&v| is_source[v]).collect(),
                right: p.iter().copied().filter(|&v| is_sink[v]).collect(),
            })
            .collect();
        blocks.sort_by_key(|b| b.min());
        Some(KnFaceDatum { blocks })
    }
}

/// Face masks `H = K_[1,n_1] ⊔ K_[n_1+1,n_2] ⊔ ... ⊔ K_[n_ℓ+1,n]` over
/// `Digraph::complete(n)`, one per composition of `n` (2^(n-1) in total).
pub fn kn_tilde_faces(n: usize) -> Result<Vec<EdgeSet>> {
    let kn = Digraph::complete(n)?;
    let mut out = Vec::with_capacity(1 << (n - 1));
    for cuts in 0u64..1 << (n - 1) {
        // bit i set: a block ends after vertex i
        let mut parts: Vec<Vec<usize>> = vec![vec![0]];
        for v in 1..n {
            if cuts >> (v - 1) & 1 == 1 {
                parts.push(Vec::new());
            }
            parts.last_mut().unwrap().push(v);
        }
        let mut mask = kn.empty_mask();
        for p in &parts {
            mask.union_with(induced(&kn, p).mask());
        }
        out.push(mask);
    }
    Ok(out)
}

/// All canonical [`KnFaceDatum`] with at least one block.
pub fn kn_q_face_data(n: usize) -> Vec<KnFaceDatum> {
    fn extend(n: usize, start: usize, prefix: &mut Vec<KnBlock>, out: &mut Vec<KnFaceDatum>) {
        for lo in start..n {
            for hi in lo + 1..n {
                let interior: Vec<usize> = (lo + 1..hi).collect();
                // each interior vertex: 0 isolated, 1 in L, 2 in R
                for code in 0..3usize.pow(interior.len() as u32) {
                    let (mut left, mut right) = (vec![lo], Vec::new());
                    let mut c = code;
                    for &v in &interior {
                        match c % 3 {
                            1 => left.push(v),
                            2 => right.push(v),
                            _ => {}
                        }
                        c /= 3;
                    }
                    right.push(hi);
                    prefix.push(KnBlock { left, right });
                    out.push(KnFaceDatum {
                        blocks: prefix.clone(),
                    });
                    extend(n, hi + 1, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    extend(n, 0, &mut Vec::new(), &mut out);
    out
}

/// Masks over `Digraph::complete(n)` of every nonempty `H` with `Q_H` a face.
pub fn kn_q_faces(n: usize) -> Result<Vec<EdgeSet>> {
    let kn = Digraph::complete(n)?;
    Ok(kn_q_face_data(n).iter().map(|d| d.to_mask(&kn)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnPart {
    Tilde,
    Q,
    Both,
}

/// f-vector of `Q̃_{K_n}` from the generators. Faces `Q̃_H` with `n - d`
/// components number `C(n-1, n-d-1)`; faces `Q_H` are counted by generation
/// with dimension `n - r - 1`.
///
/// `KnPart::Tilde` reports the raw counts for `d = 0..n-1`, which include
/// `Q̃_{K_n}` itself.
pub fn kn_fvector(n: usize, part: KnPart, flags: FaceFlags) -> FVector {
    let mut f = FVector {
        include_empty: flags.include_empty,
        include_improper: flags.include_improper || part == KnPart::Tilde,
        ..FVector::default()
    };
    if part != KnPart::Q {
        for d in 0..n {
            let count = binomial((n - 1) as u64, (n - d - 1) as u64);
            if d == n - 1 && !f.include_improper {
                continue;
            }
            f.bump(d as isize, count);
        }
    }
    if part != KnPart::Tilde {
        for datum in kn_q_face_data(n) {
            let covered: usize = datum
                .blocks
                .iter()
                .map(|b| b.left.len() + b.right.len())
                .sum();
            let components = datum.blocks.len() + (n - covered);
            f.bump(n as isize - components as isize - 1, 1);
        }
    }
    if flags.include_empty {
        f.bump(-1, 1);
    }
    f
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn require_connected(g: &Digraph) -> Result<()> {
    if undirected_components(g).count != 1 {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// Facets `Q̃_H` of `Q̃_G` for alternating connected `G`, deduplicated and
/// sorted by mask.
///
/// Candidates are `G|_{A ⊔ N(A)} ⊔ G|_{[n] \ (A ⊔ N(A))}` over sink sets
/// `A ⊆ R`, together with `G|_{[n] \ {l}} ⊔ {l}` for each source `l ∈ L`;
/// those whose underlying undirected graph has exactly two components are
/// facets. The second family covers facets where the component of `H` that
/// is a source of `H_comp` is a lone source vertex, which no `A ⊆ R`
/// produces (the square graph has two such facets).
pub fn facets_alternating(g: &Digraph) -> Result<Vec<EdgeSet>> {
    let mut seen: BTreeSet<EdgeSet> = facets_from_sink_sets(g)?.into_iter().collect();
    let (left, _) = bipartition(g)?;
    for &l in &left {
        let rest: Vec<usize> = (0..g.n()).filter(|&v| v != l).collect();
        let h = induced(g, &rest);
        if undirected_components(&h).count == 2 {
            seen.insert(h.into_mask());
        }
    }
    Ok(seen.into_iter().collect())
}

/// Only the `A ⊆ R` family of [`facets_alternating`].
pub fn facets_from_sink_sets(g: &Digraph) -> Result<Vec<EdgeSet>> {
    let (_, right) = bipartition(g)?;
    require_connected(g)?;
    if right.len() >= 64 {
        return Err(Error::TooLarge {
            size: right.len(),
            cap: 63,
        });
    }
    let mut seen = BTreeSet::new();
    for bits in 0u64..1 << right.len() {
        let mut in_block = vec![false; g.n()];
        for (t, &a) in right.iter().enumerate() {
            if bits >> t & 1 == 1 {
                in_block[a] = true;
            }
        }
        // add N(A)
        let a_set = in_block.clone();
        for &(u, v) in g.edges() {
            if a_set[u] {
                in_block[v] = true;
            }
            if a_set[v] {
                in_block[u] = true;
            }
        }
        let inside: Vec<usize> = (0..g.n()).filter(|&v| in_block[v]).collect();
        let outside: Vec<usize> = (0..g.n()).filter(|&v| !in_block[v]).collect();
        let mut mask = induced(g, &inside).into_mask();
        mask.union_with(induced(g, &outside).mask());
        let h = Subgraph::from_mask(g, mask)?;
        if undirected_components(&h).count == 2 {
            seen.insert(h.into_mask());
        }
    }
    Ok(seen.into_iter().collect())
}

/// Faces `Q̃_H` of codimension `d` for alternating connected `G`, as
/// intersections of `d` facets whose underlying graph has `d + 1` components.
pub fn faces_alternating_codim(g: &Digraph, d: usize) -> Result<Vec<EdgeSet>> {
    let facets = facets_alternating(g)?;
    if d == 0 {
        return Ok(vec![g.full_mask()]);
    }
    let mut seen = BTreeSet::new();
    for combo in facets.iter().combinations(d) {
        let mut mask = combo[0].clone();
        for other in &combo[1..] {
            mask.intersect_with(other);
        }
        let h = Subgraph::from_mask(g, mask)?;
        if undirected_components(&h).count == d + 1 {
            seen.insert(h.into_mask());
        }
    }
    Ok(seen.into_iter().collect())
}

/// Facets `Q_H` (origin excluded) of `Q̃_G` for transitively closed connected
/// `G`: the graphs `G_{L,R}` over partitions `L ⊔ R = [n]` that are connected.
pub fn facets_transitively_closed(g: &Digraph) -> Result<Vec<EdgeSet>> {
    if !is_transitively_closed(g) {
        return Err(Error::NotTransitivelyClosed);
    }
    require_connected(g)?;
    let n = g.n();
    if n >= 64 {
        return Err(Error::TooLarge { size: n, cap: 63 });
    }
    let mut seen = BTreeSet::new();
    for bits in 0u64..1 << n {
        let (left, right): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| bits >> v & 1 == 1);
        let h = alternating_induced(g, &left, &right)?;
        if undirected_components(&h).count == 1 {
            seen.insert(h.into_mask());
        }
    }
    Ok(seen.into_iter().collect())
}
