//! Exact supporting hyperplanes `{x : c·x = c0}` witnessing positive face
//! decisions, and an independent checker for them.
//!
//! For `Q̃_H` (origin face) a certificate satisfies: `c0 = 0`; `c_i >= c_j` on
//! every edge of `G`; equality exactly on the edges of `H`. For `Q_H` it
//! satisfies: `c0 < 0`; `c_i - c_j >= c0` on every edge of `G`; equality
//! exactly on the edges of `H`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::face::{check_q_face, check_tilde_face, scaled_shift_potentials, HComp, WeightFunction};
use crate::graph::Subgraph;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    #[serde(with = "rational::serde_vec")]
    pub c: Vec<Rational>,
    #[serde(with = "rational::serde_one")]
    pub c0: Rational,
}

impl Certificate {
    pub fn scaled(&self, factor: &Rational) -> Certificate {
        Certificate {
            c: self.c.iter().map(|x| x * factor).collect(),
            c0: &self.c0 * factor,
        }
    }
}

/// Per-component offsets `d` with `wd(e) + d_s(e) - d_t(e) > -1` on `H_comp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftVector {
    pub d: Vec<Rational>,
}

/// Linear extension `f` of the loopless acyclic `H_comp`, with
/// `f(source) > f(target)` on every edge, lifted to the vertices of `G`.
///
/// Kahn's algorithm; among available components the smallest id goes first
/// and receives the largest value.
pub fn tilde_certificate(h: &Subgraph<'_>) -> Result<Certificate> {
    let hc = check_tilde_face(h).map_err(|_| Error::NotAFace)?;
    let k = hc.vertex_count();
    let mut indegree = vec![0usize; k];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
    for e in &hc.edges {
        indegree[e.target] += 1;
        out[e.source].push(e.target);
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..k).filter(|&x| indegree[x] == 0).map(Reverse).collect();
    let mut f = vec![0i64; k];
    let mut next = k as i64;
    while let Some(Reverse(x)) = ready.pop() {
        f[x] = next;
        next -= 1;
        for &y in &out[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(Reverse(y));
            }
        }
    }
    debug_assert_eq!(next, 0);
    let c = hc
        .components
        .component_of
        .iter()
        .map(|&comp| rational::int(f[comp]))
        .collect();
    Ok(Certificate {
        c,
        c0: Rational::zero(),
    })
}

/// Bellman-Ford potentials for the edge weights `wd(e) + 1 - 1/(m+1)`, from a
/// virtual source joined to every component by a zero-weight edge.
pub fn solve_shift_vector(hc: &HComp, w: &WeightFunction) -> Result<ShiftVector> {
    let (potentials, scale) = scaled_shift_potentials(hc, w).map_err(|v| Error::NotAdmissible {
        total: v.wd_total,
        length: v.cycle.len(),
    })?;
    Ok(ShiftVector {
        d: potentials
            .into_iter()
            .map(|p| rational::ratio(p, scale))
            .collect(),
    })
}

/// `c_v = w(v) + d_{comp(v)}`, `c0 = -1`.
pub fn q_certificate(h: &Subgraph<'_>) -> Result<Certificate> {
    let (hc, w) = check_q_face(h).map_err(|_| Error::NotAFace)?;
    let shift = solve_shift_vector(&hc, &w)?;
    let c = hc
        .components
        .component_of
        .iter()
        .enumerate()
        .map(|(v, &comp)| rational::int(w.get(v)) + &shift.d[comp])
        .collect();
    Ok(Certificate {
        c,
        c0: rational::int(-1),
    })
}

pub fn certificate(h: &Subgraph<'_>, contains_origin: bool) -> Result<Certificate> {
    if contains_origin {
        tilde_certificate(h)
    } else {
        q_certificate(h)
    }
}

/// Exact check of the supporting-hyperplane conditions for `Q̃_H`
/// (`contains_origin`) or `Q_H`.
pub fn verify_certificate(h: &Subgraph<'_>, cert: &Certificate, contains_origin: bool) -> bool {
    let g = h.parent();
    if cert.c.len() != g.n() {
        return false;
    }
    if contains_origin {
        if !cert.c0.is_zero() {
            return false;
        }
    } else if !cert.c0.is_negative() {
        return false;
    }
    // Vertex e_i - e_j evaluates to c_i - c_j; the origin evaluates to 0.
    let floor = if contains_origin {
        Rational::zero()
    } else {
        cert.c0.clone()
    };
    g.edges().iter().enumerate().all(|(k, &(i, j))| {
        let value = &cert.c[i] - &cert.c[j];
        if h.contains(k) {
            value == floor
        } else {
            value > floor
        }
    })
}

/// Smallest slack `c_i - c_j - floor` over the edges of `G \ H`, `None` if
/// `H = G`.
pub fn strict_slack(
    h: &Subgraph<'_>,
    cert: &Certificate,
    contains_origin: bool,
) -> Option<Rational> {
    let g = h.parent();
    let floor = if contains_origin {
        Rational::zero()
    } else {
        cert.c0.clone()
    };
    h.complement_indices()
        .map(|k| {
            let (i, j) = g.edge(k);
            &cert.c[i] - &cert.c[j] - &floor
        })
        .min()
}
