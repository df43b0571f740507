use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use rootface::enumeration::{
    enumerate_faces, fvector, kn_fvector, kn_q_face_data, kn_tilde_faces, EnumeratedFace, FVector,
    FVectorMode, FaceFlags, KnPart,
};
use rootface::io::{parse_graph, parse_subgraph};
use rootface::rational;
use rootface::verify::{cross_check, cross_check_all, random_dag, CrossCheckReport};
use rootface::{query, Certificate, Diagnostic, Digraph, Error, QueryResult, Question, Subgraph};

const FACE: u8 = 0;
const NOT_FACE: u8 = 1;
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "rootface", version, about = "Faces of root polytopes of DAGs")]
struct Cli {
    /// Worker threads for enumerate and verify (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Origin {
    /// Ask about Q̃_H, the face through the origin.
    #[arg(long)]
    with_origin: bool,
    /// Ask about Q_H.
    #[arg(long)]
    without_origin: bool,
}

impl Origin {
    fn question(&self) -> Question {
        if self.with_origin {
            Question::Tilde
        } else {
            Question::Q
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Oracle,
    Bruteforce,
    Kn,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a subgraph gives a face; prints a certificate or the
    /// first violated condition.
    Check {
        graph: PathBuf,
        subgraph: PathBuf,
        #[command(flatten)]
        origin: Origin,
    },
    /// Print the supporting hyperplane of a face.
    Cert {
        graph: PathBuf,
        subgraph: PathBuf,
        #[command(flatten)]
        origin: Origin,
    },
    /// List every nonempty face of Q̃_G found by the combinatorial criteria.
    /// The f-vector counts proper faces unless trivial faces are included.
    Enumerate {
        graph: PathBuf,
        #[arg(long, default_value_t = rootface::enumeration::DEFAULT_EDGE_CAP)]
        max_edges: usize,
        /// Also list the empty face, and count it and Q̃_G in the f-vector.
        #[arg(long)]
        include_trivial_faces: bool,
    },
    /// Faces of Q̃_{K_n} from the closed-form generators.
    Kn {
        n: usize,
        /// Print counts by dimension instead of the faces.
        #[arg(long)]
        fvector: bool,
        /// Only faces through the origin.
        #[arg(long)]
        tilde_only: bool,
        #[arg(long)]
        include_trivial_faces: bool,
    },
    /// Face counts by dimension.
    Fvector {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Oracle)]
        mode: Mode,
        #[arg(long, default_value_t = rootface::enumeration::DEFAULT_EDGE_CAP)]
        max_edges: usize,
        #[arg(long)]
        include_trivial_faces: bool,
    },
    /// Compare the combinatorial criteria with the LP oracle on every
    /// subgraph of one graph or of seeded random DAGs.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        graph: Option<PathBuf>,
        /// Random DAGs: vertex count, maximum edge count, seed, graph count.
        #[arg(long, num_args = 4, value_names = ["N", "M", "SEED", "COUNT"])]
        random: Option<Vec<u64>>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Digraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_subgraph<'g>(g: &'g Digraph, path: &Path) -> Result<Subgraph<'g>, Failure> {
    parse_subgraph(g, &read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn vector(c: &[rootface::Rational]) -> String {
    let parts: Vec<String> = c.iter().map(rational::to_string).collect();
    format!("({})", parts.join(", "))
}

fn certificate_text(cert: &Certificate) -> String {
    format!(
        "c = {}, c0 = {}",
        vector(&cert.c),
        rational::to_string(&cert.c0)
    )
}

fn pairs(edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges.iter().map(|(u, v)| format!("({u},{v})")).collect();
    format!("{{{}}}", parts.join(","))
}

fn diagnostic_text(d: &Diagnostic) -> String {
    match d {
        Diagnostic::Loop { edge } => {
            format!("loop: edge {} joins one component of H", pairs(&[*edge]))
        }
        Diagnostic::HcompCycle { edges } => format!("cycle in H_comp: {}", pairs(edges)),
        Diagnostic::PathConflict {
            vertex,
            edge,
            labels,
        } => format!(
            "path-consistency conflict at vertex {vertex}: labels {} and {} via edge {}",
            labels.0,
            labels.1,
            pairs(&[*edge])
        ),
        Diagnostic::Inadmissible {
            edges,
            wd_total,
            length,
        } => format!(
            "inadmissible cycle {} with total wd {wd_total} over {length} edges",
            pairs(edges)
        ),
    }
}

fn query_text(r: &QueryResult) -> String {
    let what = match r.kind {
        Question::Tilde => "Q̃_H",
        Question::Q => "Q_H",
    };
    match (&r.certificate, &r.diagnostic) {
        (Some(c), _) => format!("{what} is a face\n{}", certificate_text(c)),
        (None, Some(d)) => format!("{what} is not a face\n{}", diagnostic_text(d)),
        (None, None) => format!("{what} is a face"),
    }
}

fn cmd_check(
    cli: &Cli,
    graph: &Path,
    sub: &Path,
    origin: &Origin,
    cert_only: bool,
) -> Result<u8, Failure> {
    let g = load_graph(graph)?;
    let h = load_subgraph(&g, sub)?;
    let r = query(&h, origin.question());
    let code = if r.answer { FACE } else { NOT_FACE };
    let out = match (cert_only, cli.json) {
        (false, true) => json(&r),
        (false, false) => query_text(&r),
        (true, true) => match &r.certificate {
            Some(c) => json(c),
            None => json(&r),
        },
        (true, false) => match &r.certificate {
            Some(c) => certificate_text(c),
            None => query_text(&r),
        },
    };
    println!("{out}");
    Ok(code)
}

#[derive(Serialize)]
struct FaceJson {
    edges: Vec<(usize, usize)>,
    origin: bool,
    dim: isize,
}

#[derive(Serialize)]
struct FacesJson {
    faces: Vec<FaceJson>,
    fvector: BTreeMap<isize, u64>,
}

fn face_json(g: &Digraph, face: &EnumeratedFace) -> FaceJson {
    FaceJson {
        edges: face
            .face
            .edges
            .ones()
            .map(|k| {
                let (u, v) = g.edge(k);
                (u + 1, v + 1)
            })
            .collect(),
        origin: face.face.contains_origin,
        dim: face.dim,
    }
}

fn print_faces(cli: &Cli, faces: &FacesJson) {
    if cli.json {
        println!("{}", json(faces));
        return;
    }
    for f in &faces.faces {
        let kind = if f.origin { "tilde" } else { "q" };
        println!("{:>2} {kind:<5} {}", f.dim, pairs(&f.edges));
    }
    println!("f-vector: {}", fvector_text(&faces.fvector));
}

fn fvector_text(counts: &BTreeMap<isize, u64>) -> String {
    let parts: Vec<String> = counts.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn print_fvector(cli: &Cli, f: &FVector) {
    if cli.json {
        println!("{}", json(&f.counts));
    } else {
        println!("{}", fvector_text(&f.counts));
    }
}

fn flags(include_trivial: bool) -> FaceFlags {
    FaceFlags {
        include_empty: include_trivial,
        include_improper: include_trivial,
    }
}

/// Every given face, plus the empty face on request; the f-vector leaves out
/// `Q̃_G` unless trivial faces are included.
fn listing(g: &Digraph, faces: &[EnumeratedFace], include_trivial: bool) -> FacesJson {
    let mut listed: Vec<FaceJson> = faces.iter().map(|f| face_json(g, f)).collect();
    if include_trivial {
        listed.insert(
            0,
            FaceJson {
                edges: Vec::new(),
                origin: false,
                dim: -1,
            },
        );
    }
    let top = rootface::face::tilde_dimension(g);
    let mut counts = BTreeMap::new();
    for f in &listed {
        if f.dim != top || include_trivial {
            *counts.entry(f.dim).or_insert(0) += 1;
        }
    }
    FacesJson {
        faces: listed,
        fvector: counts,
    }
}

fn cmd_enumerate(
    cli: &Cli,
    graph: &Path,
    max_edges: usize,
    include_trivial: bool,
) -> Result<u8, Failure> {
    let g = load_graph(graph)?;
    let faces = enumerate_faces(&g, max_edges)?;
    print_faces(cli, &listing(&g, &faces, include_trivial));
    Ok(FACE)
}

fn cmd_kn(
    cli: &Cli,
    n: usize,
    fvec: bool,
    tilde_only: bool,
    include_trivial: bool,
) -> Result<u8, Failure> {
    if n == 0 {
        return Err(Error::NoVertices.into());
    }
    let part = if tilde_only {
        KnPart::Tilde
    } else {
        KnPart::Both
    };
    if fvec {
        print_fvector(cli, &kn_fvector(n, part, flags(include_trivial)));
        return Ok(FACE);
    }
    let kn = Digraph::complete(n)?;
    let mut faces: Vec<EnumeratedFace> = kn_tilde_faces(n)?
        .into_iter()
        .map(|edges| {
            let h = Subgraph::from_mask(&kn, edges.clone()).expect("mask over K_n");
            EnumeratedFace {
                dim: rootface::face::tilde_dimension(&h),
                face: rootface::FaceDescriptor {
                    edges,
                    contains_origin: true,
                },
            }
        })
        .collect();
    if !tilde_only {
        for datum in kn_q_face_data(n) {
            let edges = datum.to_mask(&kn);
            let h = Subgraph::from_mask(&kn, edges.clone()).expect("mask over K_n");
            faces.push(EnumeratedFace {
                dim: rootface::face::tilde_dimension(&h) - 1,
                face: rootface::FaceDescriptor {
                    edges,
                    contains_origin: false,
                },
            });
        }
    }
    faces.sort();
    print_faces(cli, &listing(&kn, &faces, include_trivial));
    Ok(FACE)
}

fn cmd_fvector(
    cli: &Cli,
    graph: &Path,
    mode: Mode,
    max_edges: usize,
    include_trivial: bool,
) -> Result<u8, Failure> {
    let g = load_graph(graph)?;
    let mode = match mode {
        Mode::Oracle => {
            if g.edge_count() > max_edges {
                return Err(Error::TooLarge {
                    size: g.edge_count(),
                    cap: max_edges,
                }
                .into());
            }
            FVectorMode::Oracle
        }
        Mode::Bruteforce => FVectorMode::BruteForce,
        Mode::Kn => FVectorMode::KnFormula,
    };
    print_fvector(cli, &fvector(&g, mode, flags(include_trivial))?);
    Ok(FACE)
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    summary: String,
    #[serde(flatten)]
    report: &'a CrossCheckReport,
}

fn cmd_verify(cli: &Cli, graph: Option<&Path>, random: Option<&[u64]>) -> Result<u8, Failure> {
    let (report, seed) = match (graph, random) {
        (Some(path), _) => (cross_check(&load_graph(path)?)?, None),
        (None, Some(&[n, m, seed, count])) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let graphs = (0..count)
                .map(|_| random_dag(n as usize, m as usize, &mut rng))
                .collect::<rootface::Result<Vec<_>>>()?;
            (cross_check_all(&graphs)?, Some(seed))
        }
        _ => {
            return Err(Failure::Input(
                "verify needs a graph file or --random N M SEED COUNT".into(),
            ))
        }
    };
    if cli.json {
        println!(
            "{}",
            json(&VerifyJson {
                seed,
                summary: report.summary(),
                report: &report,
            })
        );
    } else {
        if let Some(seed) = seed {
            println!("seed {seed}, {} graphs", report.graphs);
        }
        println!("{}", report.summary());
        println!(
            "{}/{} certificates verified",
            report.certificates_verified, report.positive
        );
        for d in report
            .disagreements
            .iter()
            .chain(&report.certificate_failures)
        {
            println!(
                "reproducer ({:?}): n = {}, G = {}, H = {}, combinatorial {}, LP {}",
                d.question,
                d.n,
                pairs(&d.graph),
                pairs(&d.subgraph),
                d.combinatorial,
                d.bruteforce
            );
        }
    }
    Ok(if report.is_clean() { FACE } else { NOT_FACE })
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    match &cli.command {
        Command::Check {
            graph,
            subgraph,
            origin,
        } => cmd_check(cli, graph, subgraph, origin, false),
        Command::Cert {
            graph,
            subgraph,
            origin,
        } => cmd_check(cli, graph, subgraph, origin, true),
        Command::Enumerate {
            graph,
            max_edges,
            include_trivial_faces,
        } => cmd_enumerate(cli, graph, *max_edges, *include_trivial_faces),
        Command::Kn {
            n,
            fvector,
            tilde_only,
            include_trivial_faces,
        } => cmd_kn(cli, *n, *fvector, *tilde_only, *include_trivial_faces),
        Command::Fvector {
            graph,
            mode,
            max_edges,
            include_trivial_faces,
        } => cmd_fvector(cli, graph, *mode, *max_edges, *include_trivial_faces),
        Command::Verify { graph, random } => cmd_verify(cli, graph.as_deref(), random.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
