use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

const RPS: &str = r#"{"name": "rps", "players": 2, "strategies": [3, 3],
  "payoffs": [[0, -1, 1, 1, 0, -1, -1, 1, 0], [0, 1, -1, -1, 0, 1, 1, -1, 0]]}"#;

// Symmetric three-player game with constants (1, 1, 2, -1, 1, -1).
const SYMMETRIC: &str = r#"{"players": 3, "strategies": [2, 2, 2],
  "payoffs": [[1, 1, 1, -1, 2, 1, 1, -1], [1, 1, 2, 1, 1, -1, 1, -1], [1, 2, 1, 1, 1, 1, -1, -1]]}"#;

fn game_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamedecomp")).args(args).output().unwrap()
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn rps_decomposes_to_its_harmonic_part() {
    let f = game_file(RPS);
    let doc = run_json(&["decompose", path(&f)]);
    let input: Value = serde_json::from_str(RPS).unwrap();
    let c = &doc["components"];
    assert_eq!(c["pure-harmonic"]["payoffs"], input["payoffs"]);
    for zero in ["pure-potential", "nonstrategic"] {
        assert!(c[zero]["payoffs"].as_array().unwrap().iter().flat_map(|r| r.as_array().unwrap()).all(|x| x == 0));
    }
    assert_eq!(doc["exactness"]["components_sum_to_input"], true);
    assert_eq!(doc["output"], "exact");
}

#[test]
fn zero_game_has_zero_components() {
    let f = game_file(r#"{"players": 2, "strategies": [2, 2], "payoffs": [[0, 0, 0, 0], [0, 0, 0, 0]]}"#);
    let doc = run_json(&["decompose", path(&f)]);
    for name in ["pure-potential", "nonstrategic", "pure-harmonic"] {
        assert_eq!(doc["components"][name]["payoffs"], serde_json::json!([[0, 0, 0, 0], [0, 0, 0, 0]]));
    }
}

#[test]
fn decomposition_components_reparse_and_resum() {
    let f = game_file(
        r#"{"players": 2, "strategies": [2, 3], "payoffs": [[3, -1, 4, 1, -5, 9], ["2/3", 6, -5, 3, 5, -8]]}"#,
    );
    let doc = run_json(&["decompose", path(&f)]);
    let parts: Vec<gamedecomp::Game> = ["pure-potential", "nonstrategic", "pure-harmonic"]
        .iter()
        .map(|k| gamedecomp::game::game_from_json(&doc["components"][k], 4096).unwrap())
        .collect();
    let sum = parts[0].checked_add(&parts[1]).unwrap().checked_add(&parts[2]).unwrap();
    let input = gamedecomp::parse_game(&std::fs::read_to_string(f.path()).unwrap()).unwrap();
    assert_eq!(sum, input);
}

#[test]
fn classify_rps() {
    let f = game_file(RPS);
    let doc = run_json(&["classify", path(&f)]);
    let m = &doc["memberships"];
    assert_eq!(m["pure-harmonic"], true);
    assert_eq!(m["harmonic"], true);
    for k in ["pure-potential", "nonstrategic", "potential"] {
        assert_eq!(m[k], false, "{k}");
    }
    assert_eq!(doc["all_agree"], true);
}

#[test]
fn classify_nonstrategic_game() {
    // Each player's payoff depends only on the opponent's strategy.
    let f = game_file(r#"{"players": 2, "strategies": [2, 2], "payoffs": [[1, 4, 1, 4], [2, 2, 7, 7]]}"#);
    let m = run_json(&["classify", path(&f)])["memberships"].clone();
    for k in ["nonstrategic", "potential", "harmonic"] {
        assert_eq!(m[k], true, "{k}");
    }
    assert_eq!(m["pure-potential"], false);
    assert_eq!(m["pure-harmonic"], false);
}

#[test]
fn classify_symmetric_two_player_non_potential() {
    // Symmetric [2;3,3] game with c - b + d - f - g + h = 1.
    let (a, b, c, d, e, f_, g, h, i) = (0, 0, 1, 0, 0, 0, 0, 0, 0);
    let p1 = [a, b, c, d, e, f_, g, h, i];
    let p2 = [a, d, g, b, e, h, c, f_, i];
    let text = serde_json::json!({"players": 2, "strategies": [3, 3], "payoffs": [p1, p2]}).to_string();
    let file = game_file(&text);
    assert_eq!(run_json(&["classify", path(&file)])["memberships"]["potential"], false);
}

#[test]
fn shifted_potential_reproduces_reference_values() {
    let f = game_file(SYMMETRIC);
    let doc = run_json(&["potential", path(&f), "--shift=-9/8"]);
    assert_eq!(doc["verdict"], "potential");
    assert_eq!(strings(&doc["potential_function"]), ["-2", "-1", "-1", "-1", "-1", "-1", "-1", "-1"]);
    assert_eq!(doc["shift"], "-9/8");
    assert_eq!(doc["routes_agree_up_to_constant"], true);
    assert_eq!(doc["profiles"][1], serde_json::json!([1, 1, 2]));
    // The space-separated form of the flag is accepted too.
    let doc = run_json(&["potential", path(&f), "--shift", "-9/8"]);
    assert_eq!(strings(&doc["potential_function"])[0], "-2");
}

#[test]
fn rps_is_a_not_potential_verdict() {
    let f = game_file(RPS);
    let out = run(&["potential", path(&f)]);
    assert!(out.status.success());
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["potential"], false);
    assert_eq!(doc["verdict"], "not potential");
    assert!(doc.get("potential_function").is_none());
}

#[test]
fn experimental_raw_vector_is_labeled() {
    let f = game_file(RPS);
    let doc = run_json(&["potential", path(&f), "--experimental-raw"]);
    let raw = &doc["experimental_raw_vector"];
    assert!(raw["note"].as_str().unwrap().starts_with("experimental"));
    assert_eq!(raw["values"].as_array().unwrap().len(), 9 + 3 + 3);
}

fn reference_matrix(file: &str, scale: i64) -> Vec<Vec<String>> {
    let path = format!("{}/../core/tests/data/{file}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|x| {
                    let r = gamedecomp::linalg::rational::frac(x.parse().unwrap(), scale);
                    gamedecomp::linalg::format_rational(&r)
                })
                .collect()
        })
        .collect()
}

#[test]
fn project_reproduces_reference_matrices() {
    for (space, file, scale) in
        [("3:2,2,2", "potential_projection_3x2.txt", 48), ("2:3,3", "potential_projection_2x3.txt", 18)]
    {
        let doc = run_json(&["project", "--space", space, "--kind", "potential"]);
        let got: Vec<Vec<String>> = doc["matrix"].as_array().unwrap().iter().map(strings).collect();
        assert_eq!(got, reference_matrix(file, scale), "{space}");
        assert_eq!(doc["components_sum_to_identity"], true);
    }
}

#[test]
fn project_all_kinds_and_csv() {
    for kind in ["pure-potential", "nonstrategic", "pure-harmonic", "potential", "harmonic"] {
        let doc = run_json(&["project", "--space", "2:2,3", "--kind", kind]);
        assert_eq!(doc["rows"], 12);
        assert_eq!(doc["kind"], kind);
    }
    let out = run(&["project", "--space", "2:2,2", "--kind", "nonstrategic", "--format", "csv", "--decimal", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "0.50,0.00,0.50,0.00,0.00,0.00,0.00,0.00");
    assert_eq!(text.lines().count(), 8);
    assert!(String::from_utf8_lossy(&out.stderr).contains("approximate"));
}

#[test]
fn decimal_output_is_labeled_approximate() {
    let doc = run_json(&["project", "--space", "2:2,2", "--kind", "potential", "--decimal", "3"]);
    assert!(doc["output"].as_str().unwrap().starts_with("approximate"));
    assert!(doc["matrix"][0][0].as_str().unwrap().contains('.'));
}

#[test]
fn nash_report() {
    let f = game_file(RPS);
    let doc = run_json(&["nash", path(&f)]);
    assert_eq!(doc["pure_equilibria"], serde_json::json!([]));
    assert_eq!(doc["uniform_mixed_is_nash"], true);
    let f = game_file(r#"{"players": 2, "strategies": [2, 2], "payoffs": [[2, 0, 0, 1], [2, 0, 0, 1]]}"#);
    let doc = run_json(&["nash", path(&f)]);
    assert_eq!(doc["pure_equilibria"], serde_json::json!([[1, 1], [2, 2]]));
    assert_eq!(doc["uniform_mixed_is_nash"], false);
}

#[test]
fn verify_passes_on_sample_games() {
    for text in [
        RPS,
        SYMMETRIC,
        r#"{"players": 3, "strategies": [2, 1, 3], "payoffs": [[1, 2, 3, 4, 5, 6], [0, 0, 1, 1, 2, 2], ["1/2", -3, 7, 0, 2, 9]]}"#,
    ] {
        let f = game_file(text);
        let doc = run_json(&["verify", path(&f)]);
        assert_eq!(doc["all_passed"], true);
        assert!(doc["checks"].as_array().unwrap().len() >= 10);
    }
}

#[test]
fn output_is_deterministic() {
    let f = game_file(SYMMETRIC);
    for args in [vec!["decompose", path(&f)], vec!["classify", path(&f)], vec!["verify", path(&f)]] {
        assert_eq!(run(&args).stdout, run(&args).stdout);
    }
}

#[test]
fn trivial_players_are_flagged() {
    let out = run(&["project", "--space", "2:2,1", "--kind", "potential"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning: player 2 has a single strategy"));
}

#[test]
fn space_override() {
    let f = game_file(r#"{"payoffs": [[1, 1, 0, 0], [1, 0, 1, 0]]}"#);
    let doc = run_json(&["classify", path(&f), "--space", "2:2,2"]);
    assert_eq!(doc["space"], "[2;2,2]");
    let out = run(&["classify", path(&f), "--space", "2:3,3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("payoff count mismatch"));
}

#[test]
fn errors_go_to_stderr_with_nonzero_exit() {
    let bad = game_file(r#"{"players": 2, "strategies": [2, 2], "payoffs": [[1, 2, 3], [1, 2, 3, 4]]}"#);
    let cases: Vec<Vec<&str>> = vec![
        vec!["decompose", path(&bad)],
        vec!["decompose", "/nonexistent/game.json"],
        vec!["classify", path(&bad), "--format", "csv"],
        vec!["project", "--space", "2:2", "--kind", "potential"],
        vec!["project", "--space", "2:2,2", "--kind", "bogus"],
        vec!["potential", path(&bad), "--bogus-flag"],
    ];
    for args in cases {
        let out = run(&args);
        assert!(!out.status.success(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
