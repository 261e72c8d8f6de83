use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn dispersion(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dispersion"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

const SQUARE: &str = "# unit square plus centre\n0 0\n1 0\n0 1\n1 1\n0.5 0.5\n";

#[test]
fn exact_and_clique_agree_on_generated_points() {
    for seed in 0..5u64 {
        let s = seed.to_string();
        let run = |algo: &str| {
            let out = dispersion(
                &[
                    "solve",
                    "--k",
                    "4",
                    "--algo",
                    algo,
                    "--dist",
                    "uniform-square",
                    "--n",
                    "18",
                    "--seed",
                    &s,
                ],
                None,
            );
            assert_eq!(
                out.status.code(),
                Some(0),
                "{}",
                String::from_utf8_lossy(&out.stderr)
            );
            json_of(&out)
        };
        let exact = run("exact");
        let clique = run("clique");
        assert_eq!(exact["value2"], clique["value2"]);
        assert_eq!(exact["seed"], Value::from(seed));
        assert_eq!(exact["config"]["prng"], "chacha8");
    }
}

#[test]
fn stdin_input_matches_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.txt");
    std::fs::write(&path, SQUARE).unwrap();

    let from_file = dispersion(
        &["solve", "--k", "4", "--input", path.to_str().unwrap()],
        None,
    );
    let from_stdin = dispersion(&["solve", "--k", "4"], Some(SQUARE));
    assert_eq!(from_file.status.code(), Some(0));
    let a = json_of(&from_file);
    let b = json_of(&from_stdin);
    assert_eq!(a["indices"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(a["value2"], 1.0);
    assert_eq!(a["indices"], b["indices"]);
    assert_eq!(a["status"], "exact");
}

#[test]
fn gen_is_reproducible_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pts.txt");
    let p = path.to_str().unwrap();
    let out = dispersion(
        &[
            "gen",
            "--dist",
            "uniform-cube",
            "--n",
            "25",
            "--seed",
            "7",
            "--out",
            p,
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let again = dispersion(
        &["gen", "--dist", "uniform-cube", "--n", "25", "--seed", "7"],
        None,
    );
    assert_eq!(std::fs::read(&path).unwrap(), again.stdout);

    let from_file = json_of(&dispersion(&["solve", "--k", "3", "--input", p], None));
    let generated = json_of(&dispersion(
        &[
            "solve",
            "--k",
            "3",
            "--dist",
            "uniform-cube",
            "--n",
            "25",
            "--seed",
            "7",
        ],
        None,
    ));
    assert_eq!(from_file["value2"], generated["value2"]);
    assert_eq!(from_file["indices"], generated["indices"]);
    assert_eq!(from_file["d"], 3);
}

#[test]
fn graph_input_uses_clique_solver() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "0 1 2 3\n1 0 3 1\n2 3 0 4\n3 1 4 0\n").unwrap();
    let out = dispersion(
        &[
            "solve",
            "--k",
            "3",
            "--algo",
            "clique",
            "--graph",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json_of(&out);
    assert_eq!(v["indices"], serde_json::json!([0, 2, 3]));
    assert_eq!(v["value"], 2.0);

    let out = dispersion(
        &[
            "solve",
            "--k",
            "3",
            "--algo",
            "exact",
            "--graph",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    // malformed input
    let out = dispersion(&["solve", "--k", "2"], Some("0 0\n1 x\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    // k larger than n
    let out = dispersion(&["solve", "--k", "9"], Some(SQUARE));
    assert_eq!(out.status.code(), Some(2));
    // unknown flag
    assert_eq!(
        dispersion(&["solve", "--kk", "2"], None).status.code(),
        Some(2)
    );
    // lattice with too few occupied disks reports failure, fallback recovers
    let failed = dispersion(&["solve", "--k", "3", "--algo", "lattice"], Some(SQUARE));
    assert_eq!(failed.status.code(), Some(1));
    assert_eq!(json_of(&failed)["status"], "failed");
    let recovered = dispersion(
        &["solve", "--k", "3", "--algo", "lattice", "--fallback"],
        Some(SQUARE),
    );
    assert_eq!(recovered.status.code(), Some(0));
    assert_eq!(json_of(&recovered)["config"]["fallback_used"], true);
}

#[test]
fn bounds_subcommand() {
    let out = dispersion(&["bounds", "--k", "4"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let packing = v["opt_upper_bound"].as_f64().unwrap();
    assert!((packing - 1.16116).abs() < 1e-4, "{packing}");
    let ratio = v["ratio_guarantee"].as_f64().unwrap();
    assert!((ratio - 0.995f64.powf(1.5) / 1.002).abs() < 1e-12);
    assert_eq!(
        dispersion(&["bounds", "--k", "1"], None).status.code(),
        Some(2)
    );
}

#[test]
fn bench_subcommand_reports_exponent() {
    let out = dispersion(
        &[
            "bench",
            "--algo",
            "greedy",
            "--k",
            "5",
            "--sizes",
            "200,400,800,1600",
            "--repeats",
            "1",
        ],
        None,
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json_of(&out);
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    assert!(v["fitted_exponent"].as_f64().unwrap().is_finite());
    let bad = dispersion(&["bench", "--k", "4", "--sizes", "10,20"], None);
    assert_eq!(bad.status.code(), Some(2));
}
