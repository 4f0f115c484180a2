//! End-to-end CLI checks against golden files in `tests/golden`.
//!
//! Set `NULLKIT_BLESS=1` to rewrite the golden files from current output.

use std::path::{Path, PathBuf};

use nullkit::cli::run;
use nullkit::report::{RunReport, Status, SCHEMA_VERSION};

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn data(name: &str) -> String {
    dir().join("data").join(name).display().to_string()
}

/// Runs `nullkit <args>` with `@name` expanded to a data file path.
fn nullkit(args: &[&str]) -> nullkit::cli::Outcome {
    let mut argv = vec!["nullkit".to_string()];
    argv.extend(args.iter().map(|a| match a.strip_prefix('@') {
        Some(name) => data(name),
        None => a.to_string(),
    }));
    run(argv)
}

/// Replaces wall-clock columns (`<number>ms`) with a placeholder.
fn mask_timings(s: &str) -> String {
    s.lines()
        .map(|l| {
            l.split_inclusive(' ')
                .map(|w| {
                    let t = w.trim_end();
                    match t.strip_suffix("ms") {
                        Some(num) if !num.is_empty() && num.parse::<f64>().is_ok() => w.replacen(t, "<time>", 1),
                        _ => w.to_string(),
                    }
                })
                .collect::<String>()
        })
        .map(|l| l + "\n")
        .collect()
}

fn golden(name: &str, args: &[&str]) {
    let out = nullkit(args);
    let actual = format!("{}[exit {}]\n", mask_timings(&out.stdout), out.code);
    let path = dir().join("golden").join(format!("{}.txt", name));
    if std::env::var_os("NULLKIT_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {} (stderr: {})", name, out.stderr);
}

#[test]
fn goldens() {
    golden("vanishing_p1", &["vanishing", "--projective", "--method", "colon", "--input", "@p1.null"]);
    golden("compare_p1", &["compare", "--input", "@p1.null"]);
    golden("compare_embedded", &["compare", "--input", "@p1_embedded.null"]);
    golden("compare_tower", &["compare", "--input", "@tower.null"]);
    golden("gb_lex_tower", &["gb", "--order", "lex", "--input", "@tower.null"]);
    golden("points_conic", &["points", "--projective", "--input", "@conic.null"]);
    golden("points_x1", &["points", "--affine", "--input", "@x1.null"]);
    golden("vanishing_affine_x1", &["vanishing", "--affine", "--input", "@x1.null"]);
    golden("vanishing_empty", &["vanishing", "--projective", "--input", "@maximal.null"]);
    golden("certify_p1", &["certify", "--input", "@p1.null", "--poly", "X0"]);
    golden(
        "saturate_embedded",
        &["ideal-op", "--op", "saturate", "--input", "@p1_embedded.null", "--with", "@maximal.null"],
    );
    golden("eliminate_tower", &["ideal-op", "--op", "eliminate", "--k", "1", "--input", "@tower.null"]);
    golden("search_r1_x1", &["search", "--family", "r1", "--target", "X1", "--ideal", "@x1.null"]);
    golden(
        "search_r3_small",
        &["search", "--family", "r3", "--target", "X2^2 + X2", "--ideal", "@x1.null", "--bounds", "m=1,degp=2"],
    );
    golden("nonradical", &["search", "--nonradical", "--q", "2", "--n", "2", "--maxdeg", "2"]);
    golden("nonradical_n0", &["search", "--nonradical", "--q", "2", "--n", "0", "--maxdeg", "2"]);
    golden("normalized_tower", &["gb", "--input", "@tower.null", "--emit-normalized"]);
    golden("suite_counterexample", &["suite", "counterexample"]);
}

#[test]
fn worked_example_prints_x0() {
    let out = nullkit(&["vanishing", "--projective", "--method", "colon", "--input", "@p1.null"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "X0\n"));
}

#[test]
fn input_errors_exit_2_with_location() {
    let out = nullkit(&["vanishing", "--input", "@bad_var.null"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("3:12"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let out = nullkit(&["vanishing", "--input", "@bad_tower.null"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("inconsistent field tower"), "{}", out.stderr);
    let out = nullkit(&["points", "--input", "@missing.null"]);
    assert_eq!(out.code, 2);
    let out = nullkit(&["frobnicate"]);
    assert_eq!(out.code, 2);
    let out = nullkit(&["certify", "--input", "@p1.null", "--poly", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("not in the vanishing ideal"), "{}", out.stderr);
    let out = nullkit(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("compare"));
}

#[test]
fn failed_suite_exits_1() {
    let out = nullkit(&["suite", "counterexample", "--bounds", "m=0,degp=0,degargs=0,chain=0,inner=0"]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert!(out.stdout.contains("(c) pass (vacuous)"), "{}", out.stdout);
    assert!(out.stdout.contains("(d) FAIL"), "{}", out.stdout);
    let out = nullkit(&["suite", "counterexample", "--ideal", "@maximal.null"]);
    assert_eq!(out.code, 2, "the override must use the counterexample ring: {}", out.stderr);
}

#[test]
fn json_reports_follow_schema() {
    let out = nullkit(&["--json", "compare", "--input", "@p1_embedded.null"]);
    assert_eq!(out.code, 0);
    let r: RunReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r.schema_version, SCHEMA_VERSION);
    assert_eq!(r.status, Status::Ok);
    assert_eq!(r.command[0], "--json");
    let methods: Vec<(&str, usize)> = r.methods.iter().map(|m| (m.method.as_str(), m.quotient_rounds)).collect();
    assert_eq!(methods, [("colon", 1), ("saturation", 2), ("oracle", 0)]);
    assert!(r.methods.iter().all(|m| m.gb == ["X0"]));
    assert_eq!(r.field.unwrap().coeffs.literal, "GF(2)");

    let out = nullkit(&["--json", "ideal-op", "--op", "saturate", "--input", "@p1_embedded.null", "--with", "@maximal.null"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"]["op"], "saturate");
    assert_eq!(v["result"]["iterations"], 2);
    assert_eq!(v["result"]["gb"][0], "X0");
    assert_eq!(v["result"]["inputs"].as_array().unwrap().len(), 2);

    let out = nullkit(&["--json", "vanishing", "--input", "@bad_var.null"]);
    assert_eq!(out.code, 2);
    let r: RunReport = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r.status, Status::InputError);
    assert!(r.error.unwrap().contains("3:12"));
}

#[test]
fn normalized_output_round_trips() {
    for file in ["p1.null", "p1_embedded.null", "tower.null", "conic.null", "x1.null"] {
        let first = nullkit(&["gb", "--emit-normalized", "--input", &format!("@{}", file)]);
        assert_eq!(first.code, 0);
        let tmp = std::env::temp_dir().join(format!("nullkit-roundtrip-{}-{}", std::process::id(), file));
        std::fs::write(&tmp, &first.stdout).unwrap();
        let second = run(["nullkit", "gb", "--emit-normalized", "--input", tmp.to_str().unwrap()]);
        std::fs::remove_file(&tmp).ok();
        assert_eq!(first.stdout, second.stdout, "{}", file);
        let gb_a = nullkit(&["gb", "--input", &format!("@{}", file)]);
        let gb_b = run(["nullkit", "gb", "--input", &data(file)]);
        assert_eq!(gb_a, gb_b);
    }
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["search", "--family", "r2", "--target", "X2^2 + X2", "--ideal", "@x1.null", "--bounds", "m=1,degp=3"];
    let one = nullkit(&[&["--threads", "1"][..], &args[..]].concat());
    let four = nullkit(&[&["--threads", "4"][..], &args[..]].concat());
    assert_eq!(one, four);
    assert_eq!(one.code, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_nullkit");
    let ok = std::process::Command::new(bin)
        .args(["vanishing", "--projective", "--input", &data("p1.null")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "X0\n");
    let bad = std::process::Command::new(bin)
        .args(["gb", "--input", &data("bad_var.null")])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
