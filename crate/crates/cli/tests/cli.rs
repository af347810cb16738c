//! End-to-end checks of the command-line surface, driven in process.

use twopart_cli::run;

fn exec(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("twopart".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn bound_example_sp_rank2() {
    let (code, out, _) = exec(&["bound", "--family", "Sp", "--rank", "2", "--q", "5", "--target", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("5/32"), "{out}");
}

#[test]
fn census_pair_probability() {
    let (code, out, _) = exec(&[
        "census",
        "--builtin",
        "GL,2,3",
        "--pm-against",
        "builtin:GL,2,3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("89/256"), "{out}");
    assert!(out.contains("0.3476562500"), "{out}");
}

#[test]
fn table4_shape_and_rows() {
    let (code, out, _) = exec(&["tables", "table4", "--qmod4", "1"]);
    assert_eq!(code, 0);
    let data_rows = out
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("group") && !l.is_empty())
        .count();
    assert_eq!(data_rows, 28);
    assert!(out.contains("SO_8+\tt\t21/64"), "{out}");

    let (code, out3, _) = exec(&["tables", "table4", "--qmod4", "3"]);
    assert_eq!(code, 0);
    assert!(out3.contains("SO_6+\tt\t3/8"), "{out3}");
}

#[test]
fn table1_is_byte_stable() {
    let (code, a, _) = exec(&["tables", "table1"]);
    let (_, b, _) = exec(&["tables", "table1"]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert!(a.contains("0.1175101895"));
    assert!(a.contains("2208"));
}

#[test]
fn deterministic_output_across_runs() {
    let args = [
        "bound", "--family", "GL", "--rank", "4", "--q", "5", "--target", "8", "--projective",
    ];
    let (_, a, _) = exec(&args);
    let (_, b, _) = exec(&args);
    assert_eq!(a, b);
}

#[test]
fn json_format_carries_exact_rationals() {
    let (code, out, _) = exec(&[
        "--format", "json", "bound", "--family", "Sp", "--rank", "2", "--q", "5", "--target", "1",
    ]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
    let value = &parsed[0]["rows"][0]["value"];
    assert_eq!(value["num"], "5");
    assert_eq!(value["den"], "32");
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let (code, _, err) = exec(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn domain_error_is_exit_one() {
    let (code, _, err) = exec(&["bound", "--family", "Sp", "--rank", "2", "--q", "4", "--target", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("odd prime power"), "{err}");
}

#[test]
fn census_from_file_and_sampler_seeding() {
    let dir = std::env::temp_dir().join("twopart-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.group");
    std::fs::write(&path, "3 3 6\n0 1 0 1 0 0 0 0 1\n0 0 1 1 0 0 0 1 0\n").unwrap();
    let (code, out, _) = exec(&["census", "--file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("total 6"), "{out}");

    let (c1, a, _) = exec(&["--seed", "9", "census", "--builtin", "SL,2,3", "--sample", "300"]);
    let (c2, b, _) = exec(&["--seed", "9", "census", "--builtin", "SL,2,3", "--sample", "300"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    assert!(a.contains("APPROXIMATE"));
}

#[test]
fn exact_flag_drops_float_columns() {
    let (code, out, _) = exec(&[
        "--exact", "bound", "--family", "Sp", "--rank", "2", "--q", "5", "--target", "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("5/32"));
    assert!(!out.contains("value_float"), "{out}");
    assert!(!out.contains("0.15625"), "{out}");
}

#[test]
fn table1_fixture_override() {
    let dir = std::env::temp_dir().join("twopart-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("alt_table1.tsv");
    // Same shape as the bundled table, one recognizable digit string.
    let mut text = String::from(
        "interval\tn_min_sym\tsym_bound\tn_min_classical\tlinear_bound\tsymplectic_bound\n",
    );
    for i in 0..8 {
        text.push_str(&format!(
            "[row{i})\t{}\t0.1234567890\t{}\t0.0617283945\t0.0308641972\n",
            i + 2,
            i + 3
        ));
    }
    std::fs::write(&path, text).unwrap();
    let (code, out, _) = exec(&[
        "--table1-fixture",
        path.to_str().unwrap(),
        "tables",
        "table1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("0.1234567890"), "{out}");
    assert!(!out.contains("0.1175101895"), "{out}");
}

#[test]
fn odd_bounds_example() {
    let (code, out, _) = exec(&["odd-bounds", "--family", "Sp", "--rank", "2", "--q", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("5/32"), "{out}");
    assert!(out.contains("7/32"), "{out}");

    let (code, out, _) = exec(&[
        "odd-bounds", "--family", "SO+", "--rank", "2", "--q", "5", "--variant", "omega",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("1/8"), "{out}");
}

#[test]
fn pm_subcommand_reports_three_methods() {
    let (code, out, _) = exec(&["pm", "--family", "GL", "--d", "9", "--m", "3", "--q", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("balanced"));
    assert!(out.contains("per-rank"));
    assert!(out.contains("dimension-only"));
}
