//! End-to-end tests driving the built binary.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE_P: &str = "x^8 - 2x^7 - 17x^6 + 16x^5 + 115x^4 + 22x^3 - 279x^2 - 324x - 108";
const EXAMPLE_DP: &str = "8x^7 - 14x^6 - 102x^5 + 80x^4 + 460x^3 + 66x^2 - 558x - 324";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recsubres"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not valid JSON: {e}\n{}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn rprs_reproduces_example_levels() {
    let out = run(&["rprs", EXAMPLE_P, EXAMPLE_DP]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["command"], "rprs");
    assert_eq!(v["j_indices"], serde_json::json!([8, 5, 2, 0]));
    let levels = v["levels"].as_array().unwrap();
    assert_eq!(levels.len(), 3);
    let total: usize = levels
        .iter()
        .map(|l| l["elements"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 11);
    // third element of level 1 carries the fraction 75/16 in the lead
    let p3 = &levels[0]["elements"][2];
    assert_eq!(p3["coefficients_desc"][0], "75/16");
    assert_eq!(p3["degree"], 6);
    // level 3 ends in the constant 51200/841
    let last = &levels[2]["elements"][2];
    assert_eq!(last["coefficients_desc"][0], "51200/841");
    assert_eq!(v["complete"], true);
}

#[test]
fn prs_of_coprime_pair_is_single_level_rprs() {
    let out = run(&["rprs", "x^2 + 1", "x"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["levels"].as_array().unwrap().len(), 1);
}

#[test]
fn prs_rejects_equal_degrees_with_typed_message() {
    let out = run(&["prs", "x^2 + 1", "x^2 - 1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("degree order"), "stderr was: {err}");
}

#[test]
fn rootcount_of_example_is_eight() {
    let out = run(&["rootcount", EXAMPLE_P]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["count"], 8);
    assert_eq!(v["per_level"], serde_json::json!([3, 3, 2]));
}

#[test]
fn rootcount_of_definite_quadratic_is_zero() {
    let out = run(&["rootcount", "x^2 + 1"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["count"], 0);
}

#[test]
fn rootcount_rejects_non_polynomial_input() {
    let out = run(&["rootcount", "x +* 2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["rootcount", "x + y"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn subres_classic_range_error() {
    let out = run(&["subres", "x^3 + 1", "x^2 - 4", "--kind", "classic", "--j", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("out of range"), "stderr was: {err}");
}

#[test]
fn subres_recursive_level_two_closed_form() {
    let out = run(&[
        "subres", EXAMPLE_P, EXAMPLE_DP, "--kind", "recursive", "--k", "2", "--j", "3",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["dims"], serde_json::json!([18, 15]));
    // frozen expected values: (B_1)^3 r_{2,3} S_3(P_1^{(2)}, P_2^{(2)})
    assert_eq!(
        v["polynomial"]["coefficients_desc"],
        serde_json::json!([
            "43296768000000",
            "-22394880000000",
            "-258287616000000",
            "-192595968000000"
        ])
    );
}

#[test]
fn subres_requires_k_for_recursive_kinds() {
    let out = run(&["subres", EXAMPLE_P, EXAMPLE_DP, "--kind", "nested", "--j", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn subres_reduced_via_coefficient_files() {
    // degree-(6,5) pair with a degree-4 gcd, fed through @file inputs
    let dir = std::env::temp_dir().join(format!("recsubres-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f_path = dir.join("f.json");
    let g_path = dir.join("g.json");
    let mut f = std::fs::File::create(&f_path).unwrap();
    write!(f, r#"["1", "3", "5", "2", "-5", "11", "15"]"#).unwrap();
    let mut g = std::fs::File::create(&g_path).unwrap();
    write!(g, r#"["1", "8", "5", "-13", "10", "21"]"#).unwrap();
    let out = run(&[
        "subres",
        &format!("@{}", f_path.display()),
        &format!("@{}", g_path.display()),
        "--kind",
        "reduced",
        "--k",
        "2",
        "--j",
        "2",
        "--matrix",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["dims"], serde_json::json!([5, 3]));
    assert_eq!(v["matrix"]["rows"], 5);
    assert_eq!(v["matrix"]["cols"], 3);
    assert!(v["u_det"].is_string());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_passes_on_example_input() {
    let out = run(&["verify", EXAMPLE_P, EXAMPLE_DP]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["all_passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] != false));
    for identity in [
        "fundamental_theorem",
        "recursive_subresultant",
        "recursive_vs_nested",
        "nested_vs_reduced",
        "border_elimination",
    ] {
        assert!(
            checks.iter().any(|c| c["identity"] == identity),
            "missing identity {identity}"
        );
    }
}

#[test]
fn verify_passes_on_generated_seed() {
    let out = run(&["verify", "--seed", "7"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["generated_seed"], 7);
}

#[test]
fn verify_names_the_corrupted_identity() {
    let out = run(&["verify", EXAMPLE_P, EXAMPLE_DP, "--corrupt", "recursive"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["all_passed"], false);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["identity"] == "recursive_subresultant" && c["pass"] == false));
    // the other identities still pass
    assert!(checks
        .iter()
        .all(|c| c["identity"] == "recursive_subresultant" || c["pass"] != false));
}

#[test]
fn verify_with_monic_rule() {
    let out = run(&["verify", EXAMPLE_P, EXAMPLE_DP, "--rule", "monic"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout_json(&out)["all_passed"], true);
}

#[test]
fn bench_empty_sweep_gives_empty_table() {
    let out = run(&["bench", "--sweep", "8..7"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["rows"].as_array().unwrap().len(), 0);
}

#[test]
fn bench_reports_example_sizes() {
    let out = run(&["bench", EXAMPLE_P, EXAMPLE_DP]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let rows = v["rows"].as_array().unwrap();
    let row = rows
        .iter()
        .find(|r| r["k"] == 2 && r["j"] == 3)
        .expect("row for (2,3)");
    assert_eq!(row["recursive_dims"], serde_json::json!([18, 15]));
    assert_eq!(row["reduced_dims"], serde_json::json!([6, 3]));
}

#[test]
fn bench_csv_sweep_has_monotone_recursive_sizes() {
    let out = run(&["bench", "--sweep", "6..9", "--csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "m,n,k,j,recursive_rows,recursive_cols,reduced_rows,reduced_cols,recursive_us,reduced_us"
    );
    // per m, the (k=1, j=0) row count grows with the degree
    let mut k1_rows: Vec<(usize, usize)> = Vec::new();
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        if cells[2] == "1" && cells[3] == "0" {
            k1_rows.push((cells[0].parse().unwrap(), cells[4].parse().unwrap()));
        }
    }
    assert_eq!(k1_rows.len(), 4);
    for pair in k1_rows.windows(2) {
        assert!(pair[0].0 < pair[1].0 && pair[0].1 < pair[1].1);
    }
}

#[test]
fn compact_json_flag_emits_single_line() {
    let out = run(&["rootcount", "x^2 - 1", "--json"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim().lines().count(), 1);
    let v: Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["count"], 2);
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = run(&["rootcount", "x", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_skips_reduced_checks_on_singular_border() {
    let out = run(&[
        "verify",
        "x^6 + 5x^5 + 11x^4 + 13x^3 + 10x^2 + 18x + 5",
        "x^5 + 5x^4 + 6x^3 + 3x^2 + 10x + 3",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["all_passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["identity"] == "nested_vs_reduced"
        && c["skipped"]
            .as_str()
            .is_some_and(|s| s.contains("level 2") && s.contains("singular"))));
}

#[test]
fn singular_border_is_surfaced_with_level() {
    // F = D (x^2 + 3x + 5), G = D (x + 3) with D = x^4 + 2x^3 + 3x + 1:
    // dependent border rows at level 2
    let out = run(&[
        "subres",
        "x^6 + 5x^5 + 11x^4 + 13x^3 + 10x^2 + 18x + 5",
        "x^5 + 5x^4 + 6x^3 + 3x^2 + 10x + 3",
        "--kind",
        "reduced",
        "--k",
        "2",
        "--j",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("level 2") && err.contains("singular"), "stderr was: {err}");
}
