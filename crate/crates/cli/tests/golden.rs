//! Runs the binary on fixed inputs and compares exit code, stdout and stderr
//! with the files in `tests/golden/`. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

struct Case {
    name: &'static str,
    args: &'static [&'static str],
    env: &'static [(&'static str, &'static str)],
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case { name, args, env: &[] }
}

const CASES: &[Case] = &[
    case("spectra_a_k3", &["spectra", "--in", "k3.el", "--matrix", "a"]),
    case("spectra_l_c5", &["spectra", "--in", "c5.g6", "--matrix", "l"]),
    case("spectra_q_p3", &["spectra", "--in", "p3.el", "--matrix", "q"]),
    case("energy_e_k4", &["energy", "--in", "k4.g6", "--kind", "e"]),
    case("energy_le_p3", &["energy", "--in", "p3.el", "--kind", "le"]),
    case("energy_le_plus_c5", &["energy", "--in", "c5.g6", "--kind", "le+"]),
    case("construct_edc_k2", &["construct", "--in", "k2.el", "--op", "edc", "--out", "edgelist"]),
    case("construct_edc_k_p3", &["construct", "--in", "p3.el", "--op", "edc^k", "--k", "2", "--out", "graph6"]),
    case("construct_double_k3", &["construct", "--in", "k3.el", "--op", "double", "--out", "edgelist"]),
    case("construct_kfold_k2", &["construct", "--in", "k2.el", "--op", "kfold", "--k", "3", "--out", "edgelist"]),
    case("construct_line_k4", &["construct", "--in", "k4.g6", "--op", "line", "--out", "graph6"]),
    case("construct_complement_c5", &["construct", "--in", "c5.g6", "--op", "complement", "--out", "graph6"]),
    case(
        "construct_join_k2_p3",
        &["construct", "--in", "k2.el", "--with", "p3.el", "--op2", "join", "--out", "edgelist"],
    ),
    case(
        "construct_cartesian_k2_k2",
        &["construct", "--in", "k2.el", "--with", "k2.el", "--op2", "cartesian", "--out", "graph6"],
    ),
    case(
        "construct_kronecker_k3_k2",
        &["construct", "--in", "k3.el", "--with", "k2.el", "--op2", "kronecker", "--out", "edgelist"],
    ),
    case(
        "construct_edc_then_union",
        &["construct", "--in", "k2.el", "--op", "edc", "--with", "k1.el", "--op2", "union", "--out", "edgelist"],
    ),
    case("construct_missing_k", &["construct", "--in", "k2.el", "--op", "kfold", "--out", "edgelist"]),
    case("trees_exact_k4", &["trees", "--in", "k4.g6", "--method", "exact"]),
    case("trees_eigen_c5", &["trees", "--in", "c5.g6", "--method", "eigen"]),
    case("trees_edc_formula_k2", &["trees", "--in", "k2.el", "--method", "edc-formula"]),
    case("trees_edc_formula_k3", &["trees", "--in", "k3.el", "--method", "edc-formula"]),
    case("verify_edc_laplacian_k3", &["verify", "--in", "k3.el", "--theorem", "3.2"]),
    case("verify_cartesian_l", &["verify", "--in", "p3.el", "--in2", "c4.g6", "--theorem", "2.1", "--matrix", "l"]),
    case("verify_kfold_adjacency", &["verify", "--in", "c5.g6", "--theorem", "2.5", "--k", "3"]),
    case("verify_doubling_not_bipartite", &["verify", "--in", "k3.el", "--theorem", "4.2"]),
    case("verify_iterated_cospectral", &["verify", "--in", "c5.g6", "--in2", "k4.g6", "--theorem", "3.8", "--k", "2"]),
    case("verify_cover_chain", &["verify", "--in", "k2.el", "--theorem", "cover-chain", "--s", "2"]),
    case("verify_deviation_zero_eps", &["verify", "--in", "c5.g6", "--theorem", "3.2", "--eps", "0"]),
    case("verify_family_id_rejected", &["verify", "--in", "k3.el", "--theorem", "4.10"]),
    case("verify_unknown_theorem", &["verify", "--in", "k3.el", "--theorem", "9.9"]),
    case("family_join_edc_k3", &["family", "--theorem", "4.3", "--in", "k3.el", "--p", "9", "--k", "3"]),
    case("family_join_iterated_p3", &["family", "--theorem", "4.4", "--in", "p3.el", "--t", "2"]),
    case("family_join_double_k3", &["family", "--theorem", "4.6", "--in", "k3.el"]),
    case("family_join_kfold_k3", &["family", "--theorem", "4.7", "--in", "k3.el", "--k", "3"]),
    case("family_mixed_double_cover", &["family", "--theorem", "4.8", "--in", "w48a.g6", "--in2", "w48b.g6"]),
    case("family_mixed_second_cover", &["family", "--theorem", "4.9", "--in", "w49a.g6", "--in2", "w49b.g6"]),
    case("family_cross", &["family", "--theorem", "eq41", "--in", "w48a.g6", "--in2", "weq41b.g6"]),
    case("family_cartesian_k3", &["family", "--theorem", "4.10", "--in", "k3.el", "--in2", "k3.el", "--p", "5"]),
    case("family_cartesian_bipartite", &["family", "--theorem", "4.10", "--in", "p3.el", "--p", "3"]),
    case("family_mixed_needs_second", &["family", "--theorem", "4.8", "--in", "k3.el"]),
    case("family_small_p", &["family", "--theorem", "4.3", "--in", "k3.el", "--p", "8", "--k", "3"]),
    case("error_bad_endpoint", &["energy", "--in", "bad_endpoint.el"]),
    case("error_bad_syntax", &["spectra", "--in", "bad_syntax.el"]),
    case("error_missing_file", &["spectra", "--in", "missing.el"]),
    case("error_unknown_flag", &["spectra", "--in", "k3.el", "--bogus"]),
    case("error_unknown_command", &["frobnicate"]),
    Case {
        name: "error_vertex_cap",
        args: &["construct", "--in", "k3.el", "--op", "edc^k", "--k", "3", "--out", "edgelist"],
        env: &[("SPECGRAPH_MAX_VERTICES", "16")],
    },
    Case {
        name: "error_bad_vertex_cap",
        args: &["energy", "--in", "k3.el"],
        env: &[("SPECGRAPH_MAX_VERTICES", "lots")],
    },
];

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(case: &Case) -> String {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_specgraph"));
    cmd.args(case.args).current_dir(manifest().join("tests/data")).env_remove("SPECGRAPH_MAX_VERTICES");
    for (k, v) in case.env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().expect("exited normally"),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr),
    )
}

fn golden_path(name: &str) -> PathBuf {
    manifest().join("tests/golden").join(format!("{name}.txt"))
}

#[test]
fn cli_matches_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some_and(|v| v == "1");
    let mut mismatches = Vec::new();
    for case in CASES {
        let actual = run(case);
        let path = golden_path(case.name);
        if update {
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(&path, &actual).unwrap();
            continue;
        }
        let expected = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if expected != actual {
            mismatches.push(format!("{}:\n--- expected\n{expected}\n--- actual\n{actual}", case.name));
        }
    }
    assert!(mismatches.is_empty(), "{} golden mismatches\n{}", mismatches.len(), mismatches.join("\n"));
}

#[test]
fn every_golden_file_has_a_case() {
    let dir = manifest().join("tests/golden");
    let Ok(entries) = fs::read_dir(&dir) else { return };
    for entry in entries {
        let path = entry.unwrap().path();
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap().to_string();
        assert!(CASES.iter().any(|c| c.name == stem), "stale golden file {}", path.display());
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for case in CASES.iter().filter(|c| c.args[0] != "construct").take(12) {
        assert_eq!(run(case), run(case), "{}", case.name);
    }
}

fn exit_code(case: &Case) -> i32 {
    run(case).lines().next().and_then(|l| l.strip_prefix("exit: ")).and_then(|c| c.parse().ok()).unwrap()
}

fn find(name: &str) -> &'static Case {
    CASES.iter().find(|c| c.name == name).unwrap()
}

#[test]
fn exit_code_contract() {
    assert_eq!(exit_code(find("verify_edc_laplacian_k3")), 0);
    assert_eq!(exit_code(find("verify_doubling_not_bipartite")), 0);
    assert_eq!(exit_code(find("verify_deviation_zero_eps")), 3);
    assert_eq!(exit_code(find("error_bad_endpoint")), 1);
    assert_eq!(exit_code(find("error_bad_syntax")), 1);
    assert_eq!(exit_code(find("error_unknown_flag")), 2);
    assert_eq!(exit_code(find("error_unknown_command")), 2);
    assert_eq!(exit_code(find("error_vertex_cap")), 1);
}

#[test]
fn constructed_graph6_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .args(["construct", "--in", "k3.el", "--op", "edc", "--out", "graph6"])
        .current_dir(manifest().join("tests/data"))
        .output()
        .unwrap();
    let file = dir.path().join("cover.g6");
    fs::write(&file, &out.stdout).unwrap();
    let spectra = Command::new(env!("CARGO_BIN_EXE_specgraph"))
        .args(["energy", "--in", file.to_str().unwrap(), "--kind", "e"])
        .output()
        .unwrap();
    assert!(spectra.status.success());
    let report: serde_json::Value = serde_json::from_slice(&spectra.stdout).unwrap();
    assert_eq!(report["inputs"][0]["n"], 6);
    assert_eq!(report["result"]["value"], 6);
}

#[test]
fn documented_examples() {
    let data = manifest().join("tests/data");
    let json = |args: &[&str]| -> serde_json::Value {
        let out = Command::new(env!("CARGO_BIN_EXE_specgraph")).args(args).current_dir(&data).output().unwrap();
        serde_json::from_slice(&out.stdout).unwrap()
    };
    assert_eq!(json(&["trees", "--in", "k2.el", "--method", "edc-formula"])["result"]["count"], 4);
    assert_eq!(json(&["verify", "--in", "k3.el", "--theorem", "3.2"])["result"]["verdict"], "confirmed");
    let fam = json(&["family", "--theorem", "4.10", "--in", "k3.el", "--in2", "k3.el", "--p", "5"]);
    assert_eq!(fam["result"]["report"]["computed"], serde_json::json!([64, 64]));
    assert_eq!(fam["result"]["report"]["verdict"], "confirmed");
}
