//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p rootface --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use rootface::enumeration::{
    binomial, enumerate_faces, faces_alternating_codim, facets_alternating,
    facets_transitively_closed, kn_q_faces, kn_tilde_faces, q_face_dimension, DEFAULT_EDGE_CAP,
};
use rootface::face::{check_q_face, tilde_dimension, QViolation};
use rootface::graph::undirected_components;
use rootface::hull::{enumerate_faces_bruteforce, DEFAULT_VERTEX_CAP};
use rootface::verify::{all_dags, cross_check_all, random_dag, CrossCheckReport};
use rootface::{is_q_face, Digraph, EdgeSet, FaceDescriptor, Subgraph, VertexSet};

const RANDOM_SEED: u64 = 0x5eed_2020;
const RANDOM_GRAPHS: usize = 500;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g1(n: usize, edges: &[(usize, usize)]) -> Digraph {
    Digraph::from_one_based(n, edges).expect("valid graph")
}

fn square() -> Digraph {
    g1(4, &[(1, 3), (1, 4), (2, 3), (2, 4)])
}

fn sub<'g>(g: &'g Digraph, pairs: &[(usize, usize)]) -> Subgraph<'g> {
    Subgraph::from_one_based_pairs(g, pairs).expect("edges of the parent")
}

fn report_line(r: &CrossCheckReport) -> String {
    format!(
        "{} graphs, {}, {} positive",
        r.graphs,
        r.summary(),
        r.positive
    )
}

fn check_report(r: &CrossCheckReport) -> Outcome {
    match r.disagreements.first() {
        None => Ok(report_line(r)),
        Some(d) => Err(format!("{}; first: {d:?}", report_line(r))),
    }
}

fn exhaustive() -> rootface::Result<CrossCheckReport> {
    let mut graphs = Vec::new();
    for n in 1..=4 {
        graphs.extend(all_dags(n)?);
    }
    cross_check_all(&graphs)
}

fn sampled() -> rootface::Result<CrossCheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let graphs: Vec<Digraph> = (0..RANDOM_GRAPHS)
        .map(|i| random_dag(5 + i % 2, 10, &mut rng))
        .collect::<rootface::Result<_>>()?;
    cross_check_all(&graphs)
}

/// Proper nonempty f-vector from the LP oracle, dims 0..dim-1.
fn bruteforce_fvector(g: &Digraph) -> Vec<usize> {
    let lattice = enumerate_faces_bruteforce(&VertexSet::tilde(g), DEFAULT_VERTEX_CAP).unwrap();
    (0..lattice.dim)
        .map(|d| lattice.faces.iter().filter(|f| f.dim == d).count())
        .collect()
}

fn criterion_3() -> Outcome {
    let k3 = Digraph::complete(3).unwrap();
    ensure(!is_q_face(&k3.whole()), || {
        "Q_{K_3} reported as a face".into()
    })?;
    let f = bruteforce_fvector(&k3);
    ensure(f == vec![4, 4], || format!("f-vector {f:?}"))?;
    Ok(format!("is_q_face(K_3, K_3) = false, f = {f:?}"))
}

fn criterion_4() -> Outcome {
    let g = square();
    let f = bruteforce_fvector(&g);
    ensure(f == vec![5, 8, 5], || format!("f-vector {f:?}"))?;
    let h = sub(&g, &[(1, 3), (2, 4)]);
    match check_q_face(&h) {
        Err(QViolation::Inadmissible(v)) => {
            ensure(v.wd_total == -2 && v.cycle.len() == 2, || format!("{v:?}"))?;
            let mut cycle: Vec<_> = v.cycle.iter().map(|&k| g.edge(k)).collect();
            cycle.sort();
            ensure(cycle == vec![(0, 3), (1, 2)], || format!("cycle {cycle:?}"))?;
            Ok(format!("f = {f:?}, cycle {{(1,4),(2,3)}} with wd total -2"))
        }
        other => Err(format!("expected an inadmissible cycle, got {other:?}")),
    }
}

fn criterion_5() -> Outcome {
    let k4 = Digraph::complete(4).unwrap();
    let h1 = sub(&k4, &[(1, 2), (3, 4)]);
    let h2 = sub(&k4, &[(1, 2), (1, 4), (3, 4)]);
    ensure(is_q_face(&h1) && is_q_face(&h2), || "not both faces".into())?;
    let (d1, d2) = (q_face_dimension(&h1), q_face_dimension(&h2));
    ensure((d1, d2) == (1, 2), || format!("dims {d1}, {d2}"))?;
    let k4_faces = enumerate_faces_bruteforce(&VertexSet::tilde(&k4), DEFAULT_VERTEX_CAP).unwrap();
    let vs = VertexSet::tilde(&k4);
    ensure(
        k4_faces.contains(&vs.subset_for(h1.mask(), false))
            && k4_faces.contains(&vs.subset_for(h2.mask(), false)),
        || "brute force rejects one of them".into(),
    )?;
    Ok("dim Q_{H_1} = 1, dim Q_{H_2} = 2, both faces".into())
}

fn criterion_6(reports: &[&CrossCheckReport]) -> Outcome {
    let positive: usize = reports.iter().map(|r| r.positive).sum();
    let verified: usize = reports.iter().map(|r| r.certificates_verified).sum();
    let first = reports.iter().find_map(|r| r.certificate_failures.first());
    ensure(first.is_none() && verified == positive, || {
        format!("{verified}/{positive} verified; first failure {first:?}")
    })?;
    Ok(format!("{verified}/{positive} certificates verified"))
}

fn oracle_masks(g: &Digraph, origin: bool) -> BTreeSet<EdgeSet> {
    enumerate_faces(g, DEFAULT_EDGE_CAP)
        .unwrap()
        .into_iter()
        .filter(|f| f.face.contains_origin == origin)
        .map(|f| f.face.edges)
        .collect()
}

fn criterion_7() -> Outcome {
    for n in 1..=6 {
        let kn = Digraph::complete(n).unwrap();
        let tilde: Vec<EdgeSet> = kn_tilde_faces(n).unwrap();
        let tilde_set: BTreeSet<EdgeSet> = tilde.iter().cloned().collect();
        ensure(tilde.len() == tilde_set.len(), || {
            format!("n={n}: duplicate tilde faces")
        })?;
        ensure(tilde_set == oracle_masks(&kn, true), || {
            format!("n={n}: tilde sets differ")
        })?;
        for d in 0..n {
            let got = tilde
                .iter()
                .filter(|m| {
                    tilde_dimension(&Subgraph::from_mask(&kn, (*m).clone()).unwrap()) == d as isize
                })
                .count() as u64;
            let want = binomial((n - 1) as u64, (n - d - 1) as u64);
            ensure(got == want, || {
                format!(
                    "n={n}, d={d}: {got} != C({}, {}) = {want}",
                    n - 1,
                    n - d - 1
                )
            })?;
        }
        let q: Vec<EdgeSet> = kn_q_faces(n).unwrap();
        let q_set: BTreeSet<EdgeSet> = q.iter().cloned().collect();
        ensure(q.len() == q_set.len(), || {
            format!("n={n}: duplicate q faces")
        })?;
        let mut oracle_q = oracle_masks(&kn, false);
        oracle_q.remove(&kn.empty_mask());
        ensure(q_set == oracle_q, || {
            format!(
                "n={n}: q sets differ ({} generated, {} oracle)",
                q_set.len(),
                oracle_q.len()
            )
        })?;
    }
    Ok("n = 1..6 generator sets equal oracle sets, tilde counts binomial".into())
}

/// Origin-containing (or not) facets of `Q̃_G` from the LP oracle.
fn bruteforce_facets(g: &Digraph, origin: bool) -> BTreeSet<EdgeSet> {
    let vs = VertexSet::tilde(g);
    let lattice = enumerate_faces_bruteforce(&vs, DEFAULT_VERTEX_CAP).unwrap();
    lattice
        .facets()
        .map(|f| vs.edges_of(&f.members, g.edge_count()))
        .filter(|(_, o)| *o == origin)
        .map(|(e, _)| e)
        .collect()
}

fn criterion_8() -> Outcome {
    let alternating = [
        ("square", square()),
        ("zigzag", g1(6, &[(1, 4), (2, 4), (2, 5), (3, 5), (3, 6)])),
        (
            "K_{3,3}",
            g1(
                6,
                &[
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 4),
                    (2, 5),
                    (2, 6),
                    (3, 4),
                    (3, 5),
                    (3, 6),
                ],
            ),
        ),
    ];
    for (name, g) in &alternating {
        let facets: BTreeSet<EdgeSet> = facets_alternating(g).unwrap().into_iter().collect();
        let want = bruteforce_facets(g, true);
        ensure(facets == want, || {
            format!(
                "{name}: {} facets, brute force {}",
                facets.len(),
                want.len()
            )
        })?;
        let tilde_faces: Vec<FaceDescriptor> = enumerate_faces(g, DEFAULT_EDGE_CAP)
            .unwrap()
            .into_iter()
            .map(|f| f.face)
            .filter(|f| f.contains_origin)
            .collect();
        for d in 0..g.n() {
            let got: BTreeSet<EdgeSet> =
                faces_alternating_codim(g, d).unwrap().into_iter().collect();
            let want: BTreeSet<EdgeSet> = tilde_faces
                .iter()
                .filter(|f| {
                    let h = Subgraph::from_mask(g, f.edges.clone()).unwrap();
                    undirected_components(&h).count == d + 1
                })
                .map(|f| f.edges.clone())
                .collect();
            ensure(got == want, || {
                format!(
                    "{name}, d={d}: {} codim faces, oracle {}",
                    got.len(),
                    want.len()
                )
            })?;
        }
    }
    for n in [3, 4] {
        let kn = Digraph::complete(n).unwrap();
        let got: BTreeSet<EdgeSet> = facets_transitively_closed(&kn)
            .unwrap()
            .into_iter()
            .collect();
        let want = bruteforce_facets(&kn, false);
        ensure(got == want, || {
            format!("K_{n}: {} facets, brute force {}", got.len(), want.len())
        })?;
    }
    Ok("square, zigzag, K_{3,3}; K_3, K_4 all match".into())
}

/// Faces as point sets of the tilde vertex set: origin is bit 0, edge k is
/// bit k+1.
fn point_bits(face: &FaceDescriptor, m: usize) -> u64 {
    let mut bits = u64::from(face.contains_origin);
    for k in face.edges.ones() {
        debug_assert!(k < m);
        bits |= 1 << (k + 1);
    }
    bits
}

fn is_intersection_of(target: u64, facets: &[u64], d: usize) -> bool {
    let above: Vec<u64> = facets
        .iter()
        .copied()
        .filter(|&f| f & target == target)
        .collect();
    fn search(target: u64, above: &[u64], start: usize, left: usize, acc: u64) -> bool {
        if left == 0 {
            return acc == target;
        }
        (start..above.len()).any(|i| search(target, above, i + 1, left - 1, acc & above[i]))
    }
    search(target, &above, 0, d, u64::MAX)
}

fn criterion_9() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=4 {
        for g in all_dags(n).unwrap() {
            let m = g.edge_count();
            let top = tilde_dimension(&g);
            let faces = enumerate_faces(&g, DEFAULT_EDGE_CAP).unwrap();
            let facets: Vec<u64> = faces
                .iter()
                .filter(|f| f.dim == top - 1)
                .map(|f| point_bits(&f.face, m))
                .collect();
            for f in &faces {
                let d = (top - f.dim) as usize;
                let target = point_bits(&f.face, m);
                let all = (1u64 << (m + 1)) - 1;
                let ok = if d == 0 {
                    target == all
                } else {
                    is_intersection_of(target, &facets, d)
                };
                ensure(ok, || {
                    format!("{:?}: face {:?} of codim {d}", g.edges_one_based(), f.face)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} faces, each an intersection of codim-many facets"
    ))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut line = |k: usize, what: &str, started: Instant, outcome: Outcome| {
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{k}] {what}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{k}] {what}: {detail} ({secs:.1}s)");
            }
        }
    };

    let t = Instant::now();
    let exhaustive = exhaustive().expect("exhaustive cross-check runs");
    line(
        1,
        "oracle equivalence, all DAGs n <= 4",
        t,
        check_report(&exhaustive),
    );

    let t = Instant::now();
    let sampled = sampled().expect("sampled cross-check runs");
    line(
        2,
        &format!("oracle equivalence, {RANDOM_GRAPHS} random DAGs n in {{5,6}}, |E| <= 10, seed {RANDOM_SEED:#x}"),
        t,
        check_report(&sampled),
    );

    let t = Instant::now();
    line(3, "K_3 triangle and rhombus", t, criterion_3());
    let t = Instant::now();
    line(4, "square pyramid", t, criterion_4());
    let t = Instant::now();
    line(5, "K_4 faces H_1 and H_2", t, criterion_5());
    let t = Instant::now();
    line(
        6,
        "certificate soundness",
        t,
        criterion_6(&[&exhaustive, &sampled]),
    );
    let t = Instant::now();
    line(7, "K_n generators", t, criterion_7());
    let t = Instant::now();
    line(8, "facet characterizations", t, criterion_8());
    let t = Instant::now();
    line(9, "faces as intersections of facets", t, criterion_9());

    if failed == 0 {
        println!("acceptance: 9/9 passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 failed");
        ExitCode::FAILURE
    }
}
