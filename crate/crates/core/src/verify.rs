//! Cross-checks of the combinatorial face criteria against the LP oracle.

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::{certificate, verify_certificate};
use crate::error::{Error, Result};
use crate::face::{is_q_face, is_tilde_face};
use crate::graph::{Digraph, EdgeSet, Subgraph};
use crate::hull::{is_face_bruteforce, VertexSet};

/// Every labeled DAG on `n` vertices, in a fixed order. Each unordered pair
/// is absent, forward or backward; cyclic choices are dropped.
pub fn all_dags(n: usize) -> Result<Vec<Digraph>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    if pairs.len() > 15 {
        return Err(Error::TooLarge { size: n, cap: 6 });
    }
    let total = 3usize.pow(pairs.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut edges = Vec::with_capacity(pairs.len());
        for &(i, j) in &pairs {
            match c % 3 {
                1 => edges.push((i, j)),
                2 => edges.push((j, i)),
                _ => {}
            }
            c /= 3;
        }
        match Digraph::new(n, edges) {
            Ok(g) => out.push(g),
            Err(Error::DirectedCycle(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// A DAG from a uniformly random vertex order followed by a fair coin per
/// forward pair, redrawn until it has at most `max_edges` edges.
pub fn random_dag<R: Rng + ?Sized>(n: usize, max_edges: usize, rng: &mut R) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.shuffle(rng);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(0.5) {
                    edges.push((order[a], order[b]));
                }
            }
        }
        if edges.len() <= max_edges {
            edges.sort_unstable();
            return Digraph::new(n, edges);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Question {
    Tilde,
    Q,
}

impl Question {
    pub fn contains_origin(self) -> bool {
        self == Question::Tilde
    }
}

/// A subgraph where the two oracles disagree, shrunk to a minimal instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub question: Question,
    pub n: usize,
    /// 1-based edges of `G`.
    pub graph: Vec<(usize, usize)>,
    /// 1-based edges of `H`.
    pub subgraph: Vec<(usize, usize)>,
    pub combinatorial: bool,
    pub bruteforce: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub graphs: usize,
    pub checks: usize,
    pub positive: usize,
    pub certificates_verified: usize,
    pub disagreements: Vec<Disagreement>,
    /// Positive decisions whose certificate failed verification.
    pub certificate_failures: Vec<Disagreement>,
}

impl CrossCheckReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty() && self.certificate_failures.is_empty()
    }

    pub fn merge(mut self, other: CrossCheckReport) -> CrossCheckReport {
        self.graphs += other.graphs;
        self.checks += other.checks;
        self.positive += other.positive;
        self.certificates_verified += other.certificates_verified;
        self.disagreements.extend(other.disagreements);
        self.certificate_failures.extend(other.certificate_failures);
        self
    }

    pub fn summary(&self) -> String {
        format!(
            "{} checks, {} disagreements",
            self.checks,
            self.disagreements.len()
        )
    }
}

fn combinatorial(h: &Subgraph<'_>, q: Question) -> bool {
    match q {
        Question::Tilde => is_tilde_face(h),
        Question::Q => is_q_face(h),
    }
}

fn bruteforce(h: &Subgraph<'_>, q: Question) -> Result<bool> {
    let vs = VertexSet::tilde(h.parent());
    let subset = vs.subset_for(h.mask(), q.contains_origin());
    Ok(is_face_bruteforce(&vs, &subset)?.is_face)
}

fn disagrees(h: &Subgraph<'_>, q: Question) -> bool {
    bruteforce(h, q).map_or(true, |b| b != combinatorial(h, q))
}

/// Greedily deletes edges (from `G \ H`, then from both `G` and `H`) and
/// trailing isolated vertices while the disagreement persists.
fn shrink(h: &Subgraph<'_>, q: Question) -> Disagreement {
    shrink_by(h, q, |h| disagrees(h, q))
}

fn shrink_by(h: &Subgraph<'_>, q: Question, fails: impl Fn(&Subgraph<'_>) -> bool) -> Disagreement {
    let g = h.parent();
    let mut n = g.n();
    let mut edges: Vec<((usize, usize), bool)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(k, &e)| (e, h.contains(k)))
        .collect();
    let build = |n: usize, edges: &[((usize, usize), bool)]| -> Option<(Digraph, EdgeSet)> {
        let g = Digraph::new(n, edges.iter().map(|&(e, _)| e).collect()).ok()?;
        let mut mask = g.empty_mask();
        for (k, &(_, inside)) in edges.iter().enumerate() {
            mask.set(k, inside);
        }
        Some((g, mask))
    };
    let still = |n: usize, edges: &[((usize, usize), bool)]| {
        build(n, edges).is_some_and(|(g, mask)| {
            let h = Subgraph::from_mask(&g, mask).expect("mask fits");
            fails(&h)
        })
    };
    let mut progress = true;
    while progress {
        progress = false;
        for pass_inside in [false, true] {
            let mut k = 0;
            while k < edges.len() {
                if edges[k].1 != pass_inside {
                    k += 1;
                    continue;
                }
                let mut trial = edges.clone();
                trial.remove(k);
                if still(n, &trial) {
                    edges = trial;
                    progress = true;
                } else {
                    k += 1;
                }
            }
        }
        while n > 1
            && edges.iter().all(|&((u, v), _)| u != n - 1 && v != n - 1)
            && still(n - 1, &edges)
        {
            n -= 1;
            progress = true;
        }
    }
    let (g, mask) = build(n, &edges).expect("shrunk instance is valid");
    let h = Subgraph::from_mask(&g, mask).expect("mask fits");
    Disagreement {
        question: q,
        n,
        graph: g.edges_one_based(),
        subgraph: h.edges_one_based(),
        combinatorial: combinatorial(&h, q),
        bruteforce: bruteforce(&h, q).unwrap_or(false),
    }
}

/// Both questions for every `H ⊆ G`, and the certificate of every positive
/// combinatorial decision.
pub fn cross_check(g: &Digraph) -> Result<CrossCheckReport> {
    let m = g.edge_count();
    if m >= 20 {
        return Err(Error::TooLarge { size: m, cap: 19 });
    }
    let vs = VertexSet::tilde(g);
    let per_mask = |bits: u64| -> Result<CrossCheckReport> {
        let mut mask = g.empty_mask();
        for k in 0..m {
            mask.set(k, bits >> k & 1 == 1);
        }
        let h = Subgraph::from_mask(g, mask)?;
        let mut report = CrossCheckReport::default();
        for q in [Question::Tilde, Question::Q] {
            let ours = combinatorial(&h, q);
            let subset = vs.subset_for(h.mask(), q.contains_origin());
            let theirs = is_face_bruteforce(&vs, &subset)?.is_face;
            report.checks += 1;
            if ours != theirs {
                report.disagreements.push(shrink(&h, q));
            }
            if ours {
                report.positive += 1;
                let ok = certificate(&h, q.contains_origin())
                    .is_ok_and(|c| verify_certificate(&h, &c, q.contains_origin()));
                if ok {
                    report.certificates_verified += 1;
                } else {
                    report.certificate_failures.push(Disagreement {
                        question: q,
                        n: g.n(),
                        graph: g.edges_one_based(),
                        subgraph: h.edges_one_based(),
                        combinatorial: ours,
                        bruteforce: theirs,
                    });
                }
            }
        }
        Ok(report)
    };
    let mut report = (0u64..1 << m)
        .into_par_iter()
        .map(per_mask)
        .try_reduce(CrossCheckReport::default, |a, b| Ok(a.merge(b)))?;
    report.graphs = 1;
    Ok(report)
}

pub fn cross_check_all(graphs: &[Digraph]) -> Result<CrossCheckReport> {
    graphs
        .par_iter()
        .map(cross_check)
        .try_reduce(CrossCheckReport::default, |a, b| Ok(a.merge(b)))
}
