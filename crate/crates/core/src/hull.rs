//! Brute-force face decisions for `Q̃_G` straight from the definition of a
//! face: a vertex subset `S` is the vertex set of a face iff some hyperplane
//! contains `S` and leaves every other vertex strictly on one side.
//!
//! This module shares no code with the combinatorial criteria in `face`.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Digraph, EdgeSet};
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::rational::{self, Rational};

pub const DEFAULT_VERTEX_CAP: usize = 16;

/// Vertices of `Q̃_G` (origin first) or `Q_G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    pub ambient_dim: usize,
    pub points: Vec<Vec<i64>>,
    /// Index of the origin in `points`, if present.
    pub origin: Option<usize>,
    /// Parent edge index of each point (`None` for the origin).
    pub edge_of_point: Vec<Option<usize>>,
}

impl VertexSet {
    /// `{0} ∪ {e_i - e_j : (i, j) ∈ E(G)}`; point `k + 1` is edge `k`.
    pub fn tilde(g: &Digraph) -> Self {
        let mut points = vec![vec![0; g.n()]];
        let mut edge_of_point = vec![None];
        for (k, &(i, j)) in g.edges().iter().enumerate() {
            points.push(root(g.n(), i, j));
            edge_of_point.push(Some(k));
        }
        VertexSet {
            ambient_dim: g.n(),
            points,
            origin: Some(0),
            edge_of_point,
        }
    }

    /// `{e_i - e_j : (i, j) ∈ E(G)}`; point `k` is edge `k`.
    pub fn roots(g: &Digraph) -> Self {
        VertexSet {
            ambient_dim: g.n(),
            points: g.edges().iter().map(|&(i, j)| root(g.n(), i, j)).collect(),
            origin: None,
            edge_of_point: (0..g.edge_count()).map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Point indices of `Q̃_H` (with origin) or `Q_H` for an edge mask `H`.
    pub fn subset_for(&self, edges: &EdgeSet, with_origin: bool) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        for (p, e) in self.edge_of_point.iter().enumerate() {
            match e {
                Some(k) if edges.contains(*k) => s.insert(p),
                None if with_origin => s.insert(p),
                _ => {}
            }
        }
        s
    }

    /// Inverse of [`VertexSet::subset_for`].
    pub fn edges_of(&self, subset: &FixedBitSet, edge_count: usize) -> (EdgeSet, bool) {
        let mut edges = EdgeSet::with_capacity(edge_count);
        let mut origin = false;
        for p in subset.ones() {
            match self.edge_of_point[p] {
                Some(k) => edges.insert(k),
                None => origin = true,
            }
        }
        (edges, origin)
    }

    /// Maps explicit points to indices; fails on anything that is not a vertex.
    pub fn indices_of(&self, points: &[Vec<i64>]) -> Result<FixedBitSet> {
        let mut s = FixedBitSet::with_capacity(self.len());
        for q in points {
            let p = self
                .points
                .iter()
                .position(|x| x == q)
                .ok_or(Error::NotASubsetOfVertices)?;
            s.insert(p);
        }
        Ok(s)
    }
}

fn root(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = -1;
    v
}

/// Outcome of a brute-force face test. When `is_face`, the hyperplane
/// `c·x = c0` contains the subset and every other vertex has `c·x >= c0 + margin`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTest {
    pub is_face: bool,
    pub c: Vec<Rational>,
    pub c0: Rational,
    pub margin: Rational,
}

/// Decides whether `subset` is the vertex set of a face.
///
/// Maximizes `δ` subject to `c·v = c·s0` on the subset, `c·v >= c·s0 + δ` off
/// it, `-1 <= c_i <= 1` and `δ <= 1`. Every point has coordinate sum zero, so
/// substituting `c = y - 1` with `0 <= y <= 2` leaves these rows unchanged.
/// The empty set and the full vertex set are faces by convention.
pub fn is_face_bruteforce(vs: &VertexSet, subset: &FixedBitSet) -> Result<FaceTest> {
    if subset.ones().any(|p| p >= vs.len()) {
        return Err(Error::NotASubsetOfVertices);
    }
    let n = vs.ambient_dim;
    let zero = Rational::zero;
    let members: Vec<usize> = subset.ones().collect();
    if members.is_empty() {
        return Ok(FaceTest {
            is_face: true,
            c: vec![zero(); n],
            c0: rational::int(-1),
            margin: rational::int(1),
        });
    }
    if members.len() == vs.len() {
        return Ok(FaceTest {
            is_face: true,
            c: vec![zero(); n],
            c0: zero(),
            margin: zero(),
        });
    }
    let base = &vs.points[members[0]];
    let diff =
        |p: usize| -> Vec<i64> { vs.points[p].iter().zip(base).map(|(a, b)| a - b).collect() };
    // variables: y_0..y_{n-1}, delta
    let mut objective = vec![0; n + 1];
    objective[n] = 1;
    let mut lp = LinearProgram::new(n + 1, objective);
    for &p in &members[1..] {
        let mut row = diff(p);
        row.push(0);
        lp.add(row, Relation::Equal, 0);
    }
    for p in (0..vs.len()).filter(|p| !subset.contains(*p)) {
        let mut row: Vec<i64> = diff(p).into_iter().map(|x| -x).collect();
        row.push(1);
        lp.add(row, Relation::LessEq, 0);
    }
    for i in 0..=n {
        let mut row = vec![0; n + 1];
        row[i] = 1;
        lp.add(row, Relation::LessEq, if i < n { 2 } else { 1 });
    }
    let solution = match lp.solve() {
        LpOutcome::Optimal(s) => s,
        other => unreachable!("face LP is feasible and bounded, got {other:?}"),
    };
    let one = rational::int(1);
    let c: Vec<Rational> = solution.x[..n].iter().map(|y| y - &one).collect();
    let c0 = dot(&c, base);
    Ok(FaceTest {
        is_face: solution.value.is_positive(),
        c,
        c0,
        margin: solution.value,
    })
}

pub fn dot(c: &[Rational], v: &[i64]) -> Rational {
    c.iter()
        .zip(v)
        .filter(|(_, &x)| x != 0)
        .map(|(a, &x)| a * Rational::from_integer(BigInt::from(x)))
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// Rank of `{v - v_0}` by fraction-free Gaussian elimination.
pub fn affine_dimension(points: &[Vec<i64>]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::EmptySet);
    };
    let mut rows: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| (a - b) as i128).collect())
        .collect();
    let cols = first.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            let f = rows[r][col];
            if f == 0 {
                continue;
            }
            let p = rows[rank][col];
            for k in col..cols {
                rows[r][k] = rows[r][k] * p - rows[rank][k] * f;
            }
            let g = rows[r]
                .iter()
                .fold(0i128, |acc, &x| num_integer::gcd(acc, x));
            if g > 1 {
                rows[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Dimension with the empty set reported as `-1`.
pub fn dimension_or_empty(points: &[Vec<i64>]) -> isize {
    affine_dimension(points).map_or(-1, |d| d as isize)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFace {
    pub members: FixedBitSet,
    pub dim: isize,
}

/// Every face of a polytope given by its vertices, including the empty face
/// (dimension -1) and the polytope itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    pub dim: isize,
    pub faces: Vec<LatticeFace>,
}

impl FaceLattice {
    pub fn facets(&self) -> impl Iterator<Item = &LatticeFace> {
        self.faces.iter().filter(move |f| f.dim == self.dim - 1)
    }

    pub fn contains(&self, members: &FixedBitSet) -> bool {
        self.faces.iter().any(|f| &f.members == members)
    }
}

/// Tests every subset of the vertices; faces come out ordered by their
/// member bitmask.
pub fn enumerate_faces_bruteforce(vs: &VertexSet, cap: usize) -> Result<FaceLattice> {
    let count = vs.len();
    if count > cap || count >= 63 {
        return Err(Error::TooLarge { size: count, cap });
    }
    let faces: Vec<LatticeFace> = (0u64..1 << count)
        .into_par_iter()
        .filter_map(|bits| {
            let mut members = FixedBitSet::with_capacity(count);
            for p in 0..count {
                if bits >> p & 1 == 1 {
                    members.insert(p);
                }
            }
            let test = is_face_bruteforce(vs, &members).expect("indices in range");
            test.is_face.then(|| {
                let pts: Vec<Vec<i64>> = members.ones().map(|p| vs.points[p].clone()).collect();
                LatticeFace {
                    dim: dimension_or_empty(&pts),
                    members,
                }
            })
        })
        .collect();
    Ok(FaceLattice {
        dim: dimension_or_empty(&vs.points),
        faces,
    })
}
