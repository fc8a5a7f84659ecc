//! Command-line front end for embedkit.
//!
//! Exit codes: 0 when the command succeeded and any checked property holds,
//! 1 when a checked property fails (the report carries the evidence), 2 on
//! usage, input or precondition errors.

pub mod format;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use embedkit::polyhedral::PolyhedralViolation;
use embedkit::{
    build_dual, check_polyhedral, classify_types, enumerate, equivalent, CompareError, EmbeddedGraph, EnumerateError,
    Graph, Reference, Relation, WitnessError, DEFAULT_BUDGET,
};
use serde::Serialize;
use thiserror::Error;

use crate::format::{looks_like_rotation_file, parse_graph6, parse_rotation_file, Graph6Error, ParseError};
use crate::report::*;

#[derive(Debug, Parser)]
#[command(
    name = "embedkit",
    version,
    about = "Rotation systems, faces, genus and polyhedrality of small graphs"
)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximum number of rotation systems to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the face walks of an embedding.
    Faces { file: PathBuf },
    /// Euler genus of an embedding.
    Genus { file: PathBuf },
    /// Polyhedrality verdict with the first violation found.
    Check { file: PathBuf },
    /// Dual multigraph summary and simplicity.
    Dual { file: PathBuf },
    /// Per-vertex types of a candidate against a reference embedding.
    Compare { reference: PathBuf, candidate: PathBuf },
    /// Non-polyhedrality certificate for a candidate against a plane reference.
    Witness { reference: PathBuf, candidate: PathBuf },
    /// Genus distribution over all rotation systems.
    Census { graph: String },
    /// Exhaustively check a uniqueness claim on a graph.
    Verify { claim: ClaimArg, graph: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClaimArg {
    /// One polyhedral embedding up to mirror image, and it is plane.
    Whitney,
    /// Simple-dual embeddings of a cubic planar graph are plane.
    Cubic,
    /// Graphs with a 1- or 2-cut have no polyhedral embedding.
    Cuts,
    /// Polyhedral embeddings of a planar graph are plane.
    Plane,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{input}: {source}")]
    Graph6 { input: String, source: Graph6Error },
    #[error(transparent)]
    Compare(#[from] CompareError),
    #[error(transparent)]
    Witness(#[from] WitnessError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Rendered {
    code: i32,
    json: String,
    text: String,
}

fn render<T: Serialize>(code: i32, report: &T, text: String) -> Rendered {
    let mut json = serde_json::to_string_pretty(report).expect("reports serialize");
    json.push('\n');
    Rendered { code, json, text }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_embedding(path: &Path) -> Result<EmbeddedGraph, CliError> {
    parse_rotation_file(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

/// A graph argument is a file (rotation file or graph6) or a literal graph6 string.
fn load_graph(arg: &str) -> Result<Graph, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let bytes = read(path)?;
        if std::str::from_utf8(&bytes).is_ok_and(looks_like_rotation_file) {
            return Ok(load_embedding(path)?.underlying());
        }
        return parse_graph6(&bytes).map_err(|source| CliError::Graph6 {
            input: arg.to_string(),
            source,
        });
    }
    parse_graph6(arg.as_bytes()).map_err(|source| CliError::Graph6 {
        input: arg.to_string(),
        source,
    })
}

fn name(path: &Path) -> String {
    path.display().to_string()
}

fn face_line(face: &embedkit::FaceWalk) -> String {
    let darts: Vec<String> = face.darts().iter().map(|d| d.to_string()).collect();
    format!("{} (length {}): {}", face, face.len(), darts.join(" "))
}

fn genera(map: &std::collections::BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = map.iter().map(|(g, c)| format!("{g}: {c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn faces_cmd(file: &Path) -> Result<Rendered, CliError> {
    let g = load_embedding(file)?;
    let faces = g.faces();
    let mut text = format!("faces: {}\n", faces.len());
    for face in &faces {
        writeln!(text, "  {}", face_line(face)).unwrap();
    }
    let report = FacesReport {
        command: "faces",
        inputs: vec![name(file)],
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        faces: faces.iter().map(Face::from).collect(),
    };
    Ok(render(0, &report, text))
}

fn genus_cmd(file: &Path) -> Result<Rendered, CliError> {
    let g = load_embedding(file)?;
    let report = GenusReport {
        command: "genus",
        inputs: vec![name(file)],
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        faces: g.face_count(),
        genus: g.genus(),
    };
    let text = format!(
        "genus: {}\nvertices: {}, edges: {}, faces: {}\n",
        report.genus, report.vertices, report.edges, report.faces
    );
    Ok(render(0, &report, text))
}

fn check_cmd(file: &Path) -> Result<Rendered, CliError> {
    let g = load_embedding(file)?;
    let verdict = check_polyhedral(&g);
    let genus = g.genus();
    let mut text = format!("polyhedral: {}, genus: {}\n", verdict.polyhedral(), genus);
    let faces = g.faces();
    let violation = verdict.violation.as_ref().map(|v| match v {
        PolyhedralViolation::NonSimpleFace(face) => {
            writeln!(text, "violation: non-simple face {}", face_line(face)).unwrap();
            Violation::NonSimpleFace { face: face.into() }
        }
        PolyhedralViolation::BadPair { first, second, kind } => {
            writeln!(
                text,
                "violation: faces {} and {} meet in {:?}",
                faces[*first], faces[*second], kind
            )
            .unwrap();
            Violation::BadPair {
                faces: [*first, *second],
                first: (&faces[*first]).into(),
                second: (&faces[*second]).into(),
                intersection: kind.into(),
            }
        }
    });
    let report = CheckReport {
        command: "check",
        inputs: vec![name(file)],
        polyhedral: verdict.polyhedral(),
        genus,
        violation,
    };
    Ok(render(if report.polyhedral { 0 } else { 1 }, &report, text))
}

fn dual_cmd(file: &Path) -> Result<Rendered, CliError> {
    let g = load_embedding(file)?;
    let dual = build_dual(&g);
    let report = DualReport::new(vec![name(file)], &dual);
    let mut text = format!(
        "dual: {} vertices, {} edges, {} loops, {} parallel\nsimple: {}\n",
        report.vertices, report.edges, report.loops, report.parallel, report.simple
    );
    for e in &dual.edges {
        writeln!(
            text,
            "  faces {}-{} across edge {}-{}",
            e.faces.0, e.faces.1, e.primal.0, e.primal.1
        )
        .unwrap();
    }
    Ok(render(if report.simple { 0 } else { 1 }, &report, text))
}

fn compare_cmd(reference: &Path, candidate: &Path) -> Result<Rendered, CliError> {
    let (r, c) = (load_embedding(reference)?, load_embedding(candidate)?);
    let types = classify_types(&r, &c)?;
    let codes: Vec<i8> = types.types.iter().map(|t| t.code()).collect();
    let listed: Vec<String> = types
        .types
        .iter()
        .enumerate()
        .map(|(v, t)| format!("{v}:{t}"))
        .collect();
    let text = format!("relation: {}\ntypes: {}\n", types.relation, listed.join(" "));
    let report = CompareReport {
        command: "compare",
        inputs: vec![name(reference), name(candidate)],
        relation: types.relation.to_string(),
        types: codes,
    };
    debug_assert_eq!(types.relation != Relation::Distinct, equivalent(&r, &c)?);
    Ok(render(
        if types.relation == Relation::Distinct { 1 } else { 0 },
        &report,
        text,
    ))
}

fn witness_cmd(reference: &Path, candidate: &Path) -> Result<Rendered, CliError> {
    let (r, c) = (load_embedding(reference)?, load_embedding(candidate)?);
    let witness = Reference::new(&r)?.extract(&c)?;
    let verified = witness.verify(&r, &c).is_ok();
    let mut text = format!("anchor: {}\n", witness.anchor);
    match &witness.certificate {
        embedkit::Certificate::NonSimpleFace(face) => {
            writeln!(text, "certificate: NonSimpleFace {}", face_line(face)).unwrap();
        }
        embedkit::Certificate::CrossingPair { first, second, kind } => {
            writeln!(text, "certificate: CrossingPair").unwrap();
            writeln!(text, "  first:  {}", face_line(first)).unwrap();
            writeln!(text, "  second: {}", face_line(second)).unwrap();
            writeln!(text, "  intersection: {kind:?}").unwrap();
        }
    }
    writeln!(text, "candidate polyhedral: false\nverified: {verified}").unwrap();
    let report = WitnessReport {
        command: "witness",
        inputs: vec![name(reference), name(candidate)],
        anchor: (&witness.anchor).into(),
        certificate: (&witness.certificate).into(),
        verified,
    };
    Ok(render(0, &report, text))
}

fn census_cmd(arg: &str, budget: usize) -> Result<Rendered, CliError> {
    let graph = load_graph(arg)?;
    let census = enumerate::genus_census(&graph, arg, budget)?;
    let mut text = format!(
        "graph: {}\nrotation systems: {}\nraw by genus: {}\nclasses by genus: {}\npolyhedral by genus: {}\npolyhedral classes: {}\n",
        census.label,
        census.total,
        genera(&census.raw_by_genus),
        genera(&census.classes_by_genus),
        genera(&census.polyhedral_raw_by_genus),
        census.polyhedral_classes
    );
    for r in &census.polyhedral_representatives {
        writeln!(text, "  #{} genus {}: {:?}", r.index, r.genus, r.embedding.rotations()).unwrap();
    }
    let report = report::CensusReport {
        command: "census",
        inputs: vec![arg.to_string()],
        graph: census.label.clone(),
        total: census.total,
        raw_by_genus: census.raw_by_genus.clone(),
        classes_by_genus: census.classes_by_genus.clone(),
        polyhedral_raw_by_genus: census.polyhedral_raw_by_genus.clone(),
        polyhedral_classes: census.polyhedral_classes,
        polyhedral_representatives: census.polyhedral_representatives.iter().map(Embedding::from).collect(),
    };
    Ok(render(0, &report, text))
}

fn verify_cmd(claim: ClaimArg, arg: &str, budget: usize) -> Result<Rendered, CliError> {
    let graph = load_graph(arg)?;
    let result = match claim {
        ClaimArg::Whitney => enumerate::verify_whitney(&graph, budget)?,
        ClaimArg::Cubic => enumerate::verify_cubic_corollary(&graph, budget)?,
        ClaimArg::Cuts => enumerate::verify_low_connectivity(&graph, budget)?,
        ClaimArg::Plane => enumerate::verify_polyhedral_plane_only(&graph, budget)?,
    };
    let mut text = format!(
        "claim: {}\nresult: {}\nrotation systems: {}\n",
        result.claim,
        if result.pass() { "pass" } else { "fail" },
        result.systems
    );
    if let Some(genera) = &result.polyhedral_class_genera {
        let listed: Vec<String> = genera.iter().map(|g| g.to_string()).collect();
        writeln!(
            text,
            "polyhedral classes: {}, genus: {}",
            genera.len(),
            listed.join(",")
        )
        .unwrap();
    }
    if let Some(c) = &result.counterexample {
        writeln!(
            text,
            "counterexample: {} (genus {}): {:?}",
            c.reason,
            c.genus,
            c.embedding.rotations()
        )
        .unwrap();
    }
    let report = VerifyReport {
        command: "verify",
        inputs: vec![arg.to_string()],
        claim: result.claim.to_string(),
        pass: result.pass(),
        systems: result.systems,
        polyhedral_class_genera: result.polyhedral_class_genera.clone(),
        counterexample: result.counterexample.as_ref().map(CounterexampleReport::from),
    };
    Ok(render(if result.pass() { 0 } else { 1 }, &report, text))
}

pub fn execute(cli: &Cli) -> Outcome {
    let rendered = match &cli.command {
        Command::Faces { file } => faces_cmd(file),
        Command::Genus { file } => genus_cmd(file),
        Command::Check { file } => check_cmd(file),
        Command::Dual { file } => dual_cmd(file),
        Command::Compare { reference, candidate } => compare_cmd(reference, candidate),
        Command::Witness { reference, candidate } => witness_cmd(reference, candidate),
        Command::Census { graph } => census_cmd(graph, cli.budget),
        Command::Verify { claim, graph } => verify_cmd(*claim, graph, cli.budget),
    };
    match rendered {
        Ok(r) => Outcome {
            code: r.code,
            stdout: if cli.json { r.json } else { r.text },
            stderr: String::new(),
        },
        Err(err) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(err) => {
            let code = err.exit_code();
            let message = err.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: message,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: message,
                }
            }
        }
    }
}
