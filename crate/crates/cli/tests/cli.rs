use std::path::PathBuf;
use std::process::{Command, Output};

use embedkit::{catalog, EmbeddedGraph, Graph};
use embedkit_cli::format::{parse_graph6, parse_rotation_file, to_graph6, to_rotation_file};
use proptest::prelude::*;
use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn embedkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_embedkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = embedkit(&full);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

#[test]
fn check_exit_codes() {
    let out = embedkit(&["check", &fixture("k4p.rot")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("polyhedral: true, genus: 0"));

    let out = embedkit(&["check", &fixture("k4f.rot")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("polyhedral: false, genus: 1"));

    for bad in [
        "bad_duplicate.rot",
        "bad_truncated.rot",
        "bad_asymmetric.rot",
        "missing.rot",
    ] {
        let out = embedkit(&["check", &fixture(bad)]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn parse_errors_name_the_line() {
    let out = embedkit(&["genus", &fixture("bad_duplicate.rot")]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"));
    let out = embedkit(&["genus", &fixture("bad_asymmetric.rot")]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(embedkit(&[]).status.code(), Some(2));
    assert_eq!(embedkit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(embedkit(&["verify", "nonsense", "C~"]).status.code(), Some(2));
    assert_eq!(embedkit(&["--help"]).status.code(), Some(0));
}

#[test]
fn faces_and_genus() {
    let (code, report) = json(&["faces", &fixture("k4f.rot")]);
    assert_eq!(code, 0);
    let lengths: Vec<usize> = report["faces"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["darts"].as_array().unwrap().len())
        .collect();
    assert_eq!(lengths, [3, 9]);

    let (code, report) = json(&["genus", &fixture("k4f.rot")]);
    assert_eq!(code, 0);
    assert_eq!(report["genus"], 1);
    assert_eq!(report["faces"], 2);

    let (_, report) = json(&["genus", &fixture("edge.rot")]);
    assert_eq!(report["genus"], 0);
    assert_eq!(report["faces"], 1);
}

#[test]
fn dual_reports_loops() {
    let (code, report) = json(&["dual", &fixture("k4p.rot")]);
    assert_eq!((code, report["simple"].as_bool()), (0, Some(true)));
    let (code, report) = json(&["dual", &fixture("k4f.rot")]);
    assert_eq!(code, 1);
    assert_eq!(report["loops"], 3);
    assert_eq!(report["vertices"], 2);
    let (code, report) = json(&["dual", &fixture("c4.rot")]);
    assert_eq!(code, 1);
    assert_eq!(report["loops"], 0);
}

#[test]
fn compare_and_witness() {
    let (code, report) = json(&["compare", &fixture("k4p.rot"), &fixture("k4f.rot")]);
    assert_eq!(code, 1);
    assert_eq!(report["relation"], "distinct");
    assert_eq!(report["types"], serde_json::json!([1, 1, 1, -1]));

    let (code, report) = json(&["compare", &fixture("k4p.rot"), &fixture("k4p.rot")]);
    assert_eq!((code, report["relation"].as_str()), (0, Some("equal")));

    let (code, report) = json(&["witness", &fixture("k4p.rot"), &fixture("k4f.rot")]);
    assert_eq!(code, 0);
    assert_eq!(report["anchor"]["type"], "MixedEdge");
    assert_eq!(report["anchor"]["edge"], serde_json::json!([0, 3]));
    assert_eq!(report["certificate"]["type"], "NonSimpleFace");
    assert_eq!(report["verified"], true);

    let (code, report) = json(&["witness", &fixture("octahedron.rot"), &fixture("octahedron_swap.rot")]);
    assert_eq!(code, 0);
    assert_eq!(report["anchor"]["type"], "Type2Vertex");
    assert_eq!(report["anchor"]["vertex"], 0);
}

#[test]
fn witness_rejects_bad_inputs() {
    let out = embedkit(&["witness", &fixture("k4p.rot"), &fixture("k4p.rot")]);
    assert_eq!(out.status.code(), Some(2));
    let out = embedkit(&["witness", &fixture("k4f.rot"), &fixture("k4p.rot")]);
    assert_eq!(out.status.code(), Some(2));
    let out = embedkit(&["witness", &fixture("k4p.rot"), &fixture("cube.rot")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn census_from_every_graph_source() {
    for source in [fixture("k4.g6"), fixture("k4p.rot"), "C~".to_string()] {
        let (code, report) = json(&["census", &source]);
        assert_eq!(code, 0);
        assert_eq!(report["total"], 16);
        assert_eq!(report["raw_by_genus"], serde_json::json!({"0": 2, "1": 14}));
        assert_eq!(report["classes_by_genus"], serde_json::json!({"0": 1, "1": 7}));
        assert_eq!(report["polyhedral_classes"], 1);
    }
}

#[test]
fn verify_subcommands() {
    let out = embedkit(&["verify", "whitney", &fixture("k4.g6")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("polyhedral classes: 1, genus: 0"));

    assert_eq!(
        embedkit(&["verify", "cubic", &fixture("cube.rot")]).status.code(),
        Some(0)
    );
    assert_eq!(
        embedkit(&["verify", "plane", &fixture("prism.rot")]).status.code(),
        Some(0)
    );
    assert_eq!(embedkit(&["verify", "cuts", &fixture("c4.rot")]).status.code(), Some(0));
    assert_eq!(embedkit(&["verify", "cuts", "C~"]).status.code(), Some(2));
    assert_eq!(
        embedkit(&["verify", "cubic", &fixture("octahedron.rot")]).status.code(),
        Some(2)
    );
    // K3,3 is not planar
    assert_eq!(embedkit(&["verify", "whitney", "EFz_"]).status.code(), Some(2));
}

#[test]
fn budget_is_enforced() {
    let out = embedkit(&["--budget", "100", "census", &fixture("octahedron.rot")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("100"));
}

#[test]
fn json_output_is_deterministic() {
    let runs = [
        vec!["--json", "faces", "K4F"],
        vec!["--json", "check", "K4F"],
        vec!["--json", "dual", "K4F"],
        vec!["--json", "witness", "K4P", "K4F"],
        vec!["--json", "census", "PRISM"],
        vec!["--json", "verify", "whitney", "PRISM"],
    ];
    for args in runs {
        let args: Vec<String> = args
            .iter()
            .map(|a| match *a {
                "K4F" => fixture("k4f.rot"),
                "K4P" => fixture("k4p.rot"),
                "PRISM" => fixture("prism.rot"),
                other => other.to_string(),
            })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = embedkit(&args);
        let second = embedkit(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(serde_json::from_slice::<Value>(&first.stdout).is_ok());
    }
}

#[test]
fn library_run_matches_binary() {
    let path = fixture("k4f.rot");
    let outcome = embedkit_cli::run(["embedkit", "--json", "check", &path]);
    let out = embedkit(&["--json", "check", &path]);
    assert_eq!(outcome.code, 1);
    assert_eq!(outcome.stdout.as_bytes(), out.stdout);
}

#[test]
fn fixtures_round_trip() {
    for name in [
        "k4p.rot",
        "k4f.rot",
        "c4.rot",
        "edge.rot",
        "cube.rot",
        "prism.rot",
        "octahedron.rot",
    ] {
        let bytes = std::fs::read(fixture(name)).unwrap();
        let g = parse_rotation_file(&bytes).unwrap();
        assert_eq!(to_rotation_file(&g).as_bytes(), bytes, "{name}");
    }
    assert_eq!(
        parse_rotation_file(&std::fs::read(fixture("cube.rot")).unwrap()).unwrap(),
        catalog::cube_plane()
    );
}

fn random_embedding() -> impl Strategy<Value = EmbeddedGraph> {
    (2usize..=9)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
                proptest::collection::vec(any::<bool>(), n * n),
                proptest::collection::vec(any::<u64>(), n * n),
            )
        })
        .prop_map(|(n, parents, extra, keys)| {
            let mut adjacency = vec![Vec::new(); n];
            let mut add = |u: usize, v: usize| {
                if !adjacency[u].contains(&v) {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            };
            for (i, parent) in parents.iter().enumerate() {
                add(parent.index(i + 1), i + 1);
            }
            for u in 0..n {
                for v in u + 1..n {
                    if extra[u * n + v] {
                        add(u, v);
                    }
                }
            }
            for (v, rotation) in adjacency.iter_mut().enumerate() {
                rotation.sort_by_key(|&u| keys[v * n + u]);
            }
            EmbeddedGraph::new(n, adjacency).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rotation_file_round_trip(g in random_embedding()) {
        let text = to_rotation_file(&g);
        prop_assert_eq!(parse_rotation_file(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in random_embedding()) {
        let graph: Graph = g.underlying();
        prop_assert_eq!(parse_graph6(to_graph6(&graph).as_bytes()).unwrap(), graph);
    }
}
