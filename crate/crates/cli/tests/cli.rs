use std::process::Command;

use loop_schubert::polyring::VarEnv;
use loop_schubert::QPoly;
use loop_schubert_cli::{run, TableRecord, EXIT_CHECK_FAILED, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("loop-schubert").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn line<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines().find_map(|l| l.strip_prefix(key)).map(str::trim).unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn affine_rho_is_h1() {
    let (code, out, _) = call(&["affine", "--n", "3", "--lambda", "w:1,1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(line(&out, "S^"), "h1");
    assert_eq!(line(&out, "m^lambda"), "s0");
}

#[test]
fn affine_word_and_lambda_agree() {
    let (code, out, _) = call(&["affine", "--n", "4", "--lambda", "w:0,-1,0", "--word", "sigma^2 s0 s3 s1 s0"]);
    assert_eq!(code, EXIT_OK);
    let p = QPoly::parse(&VarEnv::h(4), line(&out, "S^")).unwrap();
    assert_eq!(p, QPoly::parse(&VarEnv::h(4), "h2^2 - h1 * h3").unwrap());
    let (code, _, err) = call(&["affine", "--n", "4", "--lambda", "w:-1,0,0", "--word", "sigma^2 s0 s3 s1 s0"]);
    assert_eq!(code, EXIT_PRECONDITION, "{err}");
}

#[test]
fn affine_accepts_windows() {
    let (_, by_word, _) = call(&["affine", "--n", "3", "--word", "sigma s1 s0", "--json"]);
    let r: TableRecord = serde_json::from_str(&by_word).unwrap();
    let x = loop_schubert::parse::parse_affine_element(3, "sigma s1 s0").unwrap();
    let (code, by_window, _) = call(&["affine", "--n", "3", "--word", &x.to_string(), "--json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(serde_json::from_str::<TableRecord>(&by_window).unwrap(), r);
}

#[test]
fn factorize_examples() {
    let (code, out, _) = call(&["factorize", "--type", "C2", "--word", "s0 s1 s0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(line(&out, "lambda"), "w:0,1");
    let (code, out, _) = call(&["factorize", "--type", "[[2,-1],[-1,2]]", "--word", "s1 s0", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lambda"], serde_json::json!([0, 1]));
    assert_eq!(v["length"], 2);
    let (code, _, _) = call(&["factorize", "--type", "A2", "--word", "s0 s1"]);
    assert_eq!(code, EXIT_PRECONDITION);
    let (code, _, _) = call(&["factorize", "--type", "[[2,-3],[-3,2]]", "--word", "s1"]);
    assert_eq!(code, EXIT_PRECONDITION);
}

#[test]
fn flag_variety_commands() {
    let (_, out, _) = call(&["double", "--n", "3", "--w", "[2,3,1]"]);
    let env = loop_schubert::demazure::flag_env(3);
    assert_eq!(
        QPoly::parse(&env, out.trim()).unwrap(),
        QPoly::parse(&env, "x1 * x2 - y1 * x1 - y1 * x2 + y1^2").unwrap()
    );
    let (_, out, _) = call(&["single", "--n", "3", "--w", "3 1 2"]);
    assert_eq!(out.trim(), "x1^2");
    let (code, out, _) = call(&["fixed-point", "--n", "3", "--w", "1", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["text"],
        "x1^2 * x2 - y2 * x1 * x2 - y1 * x1 * x2 + y1 * y2 * x2 - y1 * x1^2 + y1 * y2 * x1 + y1^2 * x1 - y1^2 * y2"
    );
}

#[test]
fn theorem_a_reports() {
    let (code, out, _) = call(&["theorem-a", "--n", "3", "--lambda", "w:0,-1", "--mu", "w:0,-1", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["nu"], serde_json::json!([0, -2]));
    assert_eq!(v["identity_holds"], true);
    let (code, out, _) = call(&["theorem-a", "--n", "3", "--lambda", "w:1,1", "--mu", "w:1,0"]);
    assert_eq!(code, EXIT_PRECONDITION);
    assert!(out.contains("preconditions fail"));
}

#[test]
fn bad_input_exit_codes() {
    assert_eq!(call(&["affine", "--n", "3", "--lambda", "w:1"]).0, EXIT_USAGE);
    assert_eq!(call(&["affine", "--n", "3"]).0, EXIT_USAGE);
    assert_eq!(call(&["double", "--n", "3", "--w", "s0"]).0, EXIT_USAGE);
    assert_eq!(call(&["no-such-command"]).0, EXIT_USAGE);
    assert_eq!(call(&["factorize", "--type", "X9", "--word", "s1"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_ne!(EXIT_CHECK_FAILED, EXIT_PRECONDITION);
}

#[test]
fn table_json_round_trip_and_determinism() {
    let dir = std::env::temp_dir().join(format!("loop-schubert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let (code, _, _) = call(&["table", "--n", "3", "--max-length", "4", "--out", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let rows: Vec<TableRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&rows).unwrap() + "\n", text);
    let lens: Vec<(usize, Vec<i64>)> = rows.iter().map(|r| (r.length, r.lambda.clone())).collect();
    let mut sorted = lens.clone();
    sorted.sort();
    assert_eq!(lens, sorted);
    for r in &rows {
        assert!(r.reproduces().unwrap());
        let p = r.schubert().unwrap();
        assert!(p.is_zero() || p.dim() == Some(2 * r.length as u32), "{r:?}");
    }
    // partitions with parts at most 2, once for each power of sigma
    let per_len: Vec<usize> = (0..=4).map(|l| rows.iter().filter(|r| r.length == l).count()).collect();
    assert_eq!(per_len, vec![3, 3, 6, 6, 9]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tilde_fields_round_trip() {
    let (_, out, _) = call(&["affine", "--n", "3", "--lambda", "w:0,-1", "--tilde", "--json"]);
    let r: TableRecord = serde_json::from_str(&out).unwrap();
    let x = QPoly::from_json(r.tilde_x.as_ref().unwrap()).unwrap();
    let env = x.env().clone();
    assert_eq!(x, QPoly::parse(&env, "x1^2 * x2 * x3 - x1^2 * x2^2").unwrap());
    assert!(r.tilde_xy.is_some());
}

#[test]
fn verify_paper_all_pass() {
    let (code, out, _) = call(&["verify-paper"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("FAIL"));
    let (_, json, _) = call(&["verify-paper", "--json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert!(rows.len() >= 40 && rows.iter().all(|r| r["pass"] == true));
}

#[test]
fn size_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_loop-schubert"))
        .args(["affine", "--n", "3", "--lambda", "w:0,-2"])
        .env("LOOP_SCHUBERT_MAX_DEGREE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_PRECONDITION));
    let out =
        Command::new(env!("CARGO_BIN_EXE_schubert")).args(["double", "--n", "3", "--w", "s1 s2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "x1 * x2 - y1 * x2 - y1 * x1 + y1^2");
}
