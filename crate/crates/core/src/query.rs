//! Face queries with a certificate for positive answers and a checkable
//! witness for negative ones.

use serde::Serialize;

use crate::certificate::{certificate, Certificate};
use crate::face::{check_q_face, check_tilde_face, QViolation, TildeViolation};
use crate::graph::{Digraph, Subgraph};
use crate::verify::Question;

/// First violated condition; all vertices and edges 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Diagnostic {
    /// An edge of `G \ H` with both ends in one component of `H^un`.
    Loop { edge: (usize, usize) },
    /// A directed cycle of `H_comp`.
    HcompCycle { edges: Vec<(usize, usize)> },
    /// Two labels for one vertex along different paths of `H`.
    PathConflict {
        vertex: usize,
        edge: (usize, usize),
        labels: (i64, i64),
    },
    /// A cycle of `H_comp` with weight-decrease total at most `-length`.
    Inadmissible {
        edges: Vec<(usize, usize)>,
        wd_total: i64,
        length: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QueryResult {
    pub kind: Question,
    pub answer: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<Diagnostic>,
}

fn one_based(g: &Digraph, k: usize) -> (usize, usize) {
    let (u, v) = g.edge(k);
    (u + 1, v + 1)
}

fn diagnose(h: &Subgraph<'_>, kind: Question) -> Option<Diagnostic> {
    let g = h.parent();
    let labels = |ks: &[usize]| ks.iter().map(|&k| one_based(g, k)).collect();
    match kind {
        Question::Tilde => match check_tilde_face(h) {
            Ok(_) => None,
            Err(TildeViolation::Loop { edge }) => Some(Diagnostic::Loop {
                edge: one_based(g, edge),
            }),
            Err(TildeViolation::Cycle { edges }) => Some(Diagnostic::HcompCycle {
                edges: labels(&edges),
            }),
        },
        Question::Q => match check_q_face(h) {
            Ok(_) => None,
            Err(QViolation::PathConflict(c)) => Some(Diagnostic::PathConflict {
                vertex: c.vertex + 1,
                edge: one_based(g, c.edge),
                labels: (c.existing, c.proposed),
            }),
            Err(QViolation::Inadmissible(v)) => Some(Diagnostic::Inadmissible {
                length: v.cycle.len(),
                edges: labels(&v.cycle),
                wd_total: v.wd_total,
            }),
        },
    }
}

/// Decides `Q̃_H` (`kind = Tilde`) or `Q_H` and attaches the evidence.
pub fn query(h: &Subgraph<'_>, kind: Question) -> QueryResult {
    match diagnose(h, kind) {
        Some(d) => QueryResult {
            kind,
            answer: false,
            certificate: None,
            diagnostic: Some(d),
        },
        None => QueryResult {
            kind,
            answer: true,
            certificate: certificate(h, kind.contains_origin()).ok(),
            diagnostic: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn square() -> Digraph {
        Digraph::from_one_based(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap()
    }

    #[test]
    fn k3_whole_conflicts_at_vertex_3() {
        let k3 = Digraph::complete(3).unwrap();
        let r = query(&k3.whole(), Question::Q);
        assert!(!r.answer);
        assert!(matches!(
            r.diagnostic,
            Some(Diagnostic::PathConflict { vertex: 3, .. })
        ));
    }

    #[test]
    fn square_pyramid_inadmissible_cycle() {
        let g = square();
        let h = Subgraph::from_one_based_pairs(&g, &[(1, 3), (2, 4)]).unwrap();
        let r = query(&h, Question::Q);
        match r.diagnostic {
            Some(Diagnostic::Inadmissible {
                mut edges,
                wd_total,
                length,
            }) => {
                edges.sort();
                assert_eq!(edges, vec![(1, 4), (2, 3)]);
                assert_eq!(wd_total, -2);
                assert_eq!(length, 2);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn positive_tilde_query() {
        let k3 = Digraph::complete(3).unwrap();
        let h = Subgraph::from_one_based_pairs(&k3, &[(1, 2)]).unwrap();
        let r = query(&h, Question::Tilde);
        assert!(r.answer);
        assert_eq!(r.certificate.unwrap().c, vec![int(2), int(2), int(1)]);
        let json = serde_json::to_string(&query(&h, Question::Tilde)).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"tilde","answer":true,"certificate":{"c":["2/1","2/1","1/1"],"c0":"0/1"}}"#
        );
    }

    #[test]
    fn tilde_diagnostics() {
        let k3 = Digraph::complete(3).unwrap();
        let h = Subgraph::from_one_based_pairs(&k3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(
            query(&h, Question::Tilde).diagnostic,
            Some(Diagnostic::Loop { edge: (1, 3) })
        );
        let g = square();
        let h = Subgraph::from_one_based_pairs(&g, &[(1, 3), (2, 4)]).unwrap();
        let r = query(&h, Question::Tilde);
        assert!(
            matches!(r.diagnostic, Some(Diagnostic::HcompCycle { ref edges }) if edges.len() == 2)
        );
    }
}
