use reptype::cli::{execute, Outcome, EXIT_INPUT, EXIT_OK, EXIT_UNSUPPORTED};

fn run(args: &[&str]) -> Outcome {
    execute(std::iter::once("reptype").chain(args.iter().copied()))
}

#[test]
fn seeded_output_is_byte_identical() {
    for args in [
        &["certify", "corpus:elab_3_2", "--strategy", "lemma-family", "--field", "3", "--seed", "11", "--verify-trail"]
            [..],
        &["complexity", "corpus:qci_7", "--family", "m", "--lambda", "2", "--seed", "3"][..],
        &["scan", "corpus:nfam_host", "--family", "n", "--format", "csv", "--seed", "5"][..],
    ] {
        let a = run(args);
        assert_eq!(a.code, EXIT_OK, "{args:?}: {}", a.stderr);
        assert_eq!(a, run(args), "{args:?}");
    }
}

#[test]
fn verify_trail_is_clean() {
    let o = run(&[
        "certify",
        "corpus:c5_3",
        "--strategy",
        "factor",
        "--ideal",
        "xy-yx",
        "--quotient",
        "corpus:elab_3_2",
        "--field",
        "3",
        "--field",
        "3,2",
        "--verify-trail",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["certificate"]["verdict"], "WildEvidence");
    assert_eq!(v["trail_check"]["all_ok"], true);
}

#[test]
fn factor_rule_mismatch_is_a_strategy_error() {
    let o = run(&[
        "certify",
        "corpus:c5_3",
        "--strategy",
        "factor",
        "--ideal",
        "x",
        "--quotient",
        "corpus:elab_3_2",
        "--field",
        "3",
    ]);
    assert_eq!(o.code, EXIT_UNSUPPORTED, "{}", o.stderr);
    let o = run(&["certify", "corpus:c5_3", "--strategy", "factor"]);
    assert_eq!(o.code, EXIT_UNSUPPORTED);
}

#[test]
fn malformed_inputs_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"algebra_ref": "corpus:kleinfour", "dim": 2, "actions": {"x": [[0, 1]]}}"#).unwrap();
    let o = run(&["resolve", "--module", bad.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_INPUT);
    assert!(o.stderr.contains("actions.x"), "{}", o.stderr);
    let pres = dir.path().join("bad.toml");
    std::fs::write(&pres, "name = \"bad\"\ngenerators = [\"x\"]\nrelations = [\"x^2 +\"]\n[field]\np = 2\ne = 1\n")
        .unwrap();
    assert_eq!(run(&["algebra-check", pres.to_str().unwrap()]).code, EXIT_INPUT);
    assert_eq!(run(&["resolve", "corpus:kleinfour", "--field", "4"]).code, EXIT_INPUT);
    assert_eq!(run(&["bogus"]).code, EXIT_INPUT);
}

#[test]
fn module_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.toml");
    std::fs::write(
        &m,
        "algebra_ref = \"corpus:kleinfour\"\ndim = 2\n[actions]\nx = [[0, 1], [0, 0]]\ny = [[0, 0], [0, 0]]\n",
    )
    .unwrap();
    let out = dir.path().join("table.csv");
    let o = run(&[
        "resolve",
        "--module",
        m.to_str().unwrap(),
        "--format",
        "csv",
        "--cutoff",
        "4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(out).unwrap();
    assert_eq!(csv.lines().next(), Some("n,b_n,len_Pn,dim_syzygy"));
    assert_eq!(csv.lines().count(), 6);
}

#[test]
fn growth_certificate_via_cli() {
    let o = run(&["certify", "corpus:elab_2_3", "--strategy", "theorem-growth", "--format", "text"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.contains("WildAssumingFg"), "{}", o.stdout);
}
