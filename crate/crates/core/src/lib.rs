//! Faces of root polytopes of directed acyclic graphs.
//!
//! For a DAG `G` on `[n]`, `Q_G = conv{e_i - e_j : (i, j) ∈ E(G)}` and
//! `Q̃_G = conv({0} ∪ Q_G)`. Every face of `Q̃_G` is `Q̃_H` or `Q_H` for a
//! subgraph `H ⊆ G`; this crate decides which subgraphs give faces, produces
//! exact supporting hyperplanes, and enumerates face lattices. An exact LP
//! oracle decides the same questions from the definition of a face.

pub mod certificate;
pub mod enumeration;
pub mod error;
pub mod face;
pub mod graph;
pub mod hull;
pub mod io;
pub mod lp;
mod potentials;
pub mod query;
pub mod rational;
pub mod verify;

pub use certificate::{certificate, verify_certificate, Certificate};
pub use enumeration::{
    enumerate_faces, fvector, kn_q_faces, kn_tilde_faces, EnumeratedFace, FVector, FVectorMode,
    FaceFlags, KnFaceDatum,
};
pub use error::{Error, Result};
pub use face::{is_q_face, is_tilde_face, FaceDescriptor, HComp, WeightFunction};
pub use graph::{Digraph, Edge, EdgeSet, Subgraph};
pub use hull::{is_face_bruteforce, VertexSet};
pub use query::{query, Diagnostic, QueryResult};
pub use rational::Rational;
pub use verify::{cross_check, Question};
