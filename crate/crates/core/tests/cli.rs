//! End-to-end checks of the command-line front end: exit codes, report
//! formats, spec-file handling, and the output invariants (full-decimal
//! integers, json/csv agreement, deterministic ordering).

use std::io::Write as _;

use foliation_census::cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("folcensus".to_string()).chain(args.iter().map(|s| s.to_string()));
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn spec_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn verify_quick_preset_passes() {
    let (code, out, _) = run(&["verify", "--preset", "quick", "--format", "table"]);
    assert_eq!(code, 0);
    for name in [
        "symmetric_identity",
        "whitney",
        "chow_relation",
        "census",
        "subvariety",
        "mutation_guard",
    ] {
        assert!(out.contains(&format!("check {name}: pass")), "{out}");
    }
}

#[test]
fn verify_single_check_selection() {
    let (code, out, _) = run(&["verify", "--preset", "quick", "--check", "whitney"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["name"], "whitney");
    assert!(v[0]["failures"].as_array().unwrap().is_empty());

    let (code, _, err) = run(&["verify", "--check", "bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("check"));
}

#[test]
fn spec_file_full_report() {
    let f = spec_file(
        r#"{
            "schema": 1,
            "n": 3,
            "k": 2,
            "components": [
                {"w": [1, 1], "ell": 1, "embedded_points": 0},
                {"w": [1, 2], "ell": 0}
            ]
        }"#,
    );
    let (code, out, _) = run(&["counts", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["baum_bott"].to_string(), "15");
    assert_eq!(v["components"][0]["nu"].to_string(), "-12");
    // milnor from the supplied embedded count: 0 - (-12)
    assert_eq!(v["components"][0]["milnor"].to_string(), "12");
    assert_eq!(v["components"][0]["milnor_is_lower_bound"], false);
    assert_eq!(v["components"][1]["milnor_is_lower_bound"], true);
    assert_eq!(
        v["components"][1]["invariant_center_count"].to_string(),
        "4"
    );
    assert_eq!(v["disjointness_assumed"], true);
}

#[test]
fn spec_file_subvariety_pair() {
    let f = spec_file(
        r#"{
            "schema": 1,
            "n": 4,
            "k": 2,
            "pair": {"w": [1, 1, 1], "v": [1, 1], "ell": 1, "embedded_off_w": 2}
        }"#,
    );
    let (code, out, _) = run(&["subvariety", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["blowup_strict"].to_string(), "3"); // n+2-d
    assert_eq!(v["blowup_exceptional"].to_string(), "2"); // n+1-d
    assert_eq!(v["nu_v_w"].to_string(), "1");
    assert_eq!(v["embedded_assumed_zero"], false);
    assert_eq!(v["closed_form_diagnostic"]["omega_matches"], true);
}

#[test]
fn minimal_spec_without_schema_field() {
    // schema defaults to version 1
    let f = spec_file(r#"{"n": 3, "k": 2, "components": [{"w": [1, 1], "ell": 1}]}"#);
    let (code, out, _) = run(&["counts", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["components"][0]["nu"].to_string(), "-12");
}

#[test]
fn spec_file_with_both_sections() {
    let f = spec_file(
        r#"{
            "schema": 1,
            "n": 4,
            "k": 2,
            "components": [{"w": [1, 1], "ell": 1}],
            "pair": {"w": [1, 1, 1], "v": [1, 1], "ell": 1}
        }"#,
    );
    let path = f.path().to_str().unwrap().to_string();
    let (code, out, _) = run(&["counts", "--spec", &path]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["components"][0]["blowup_total"].to_string(), "12");
    let (code, out, _) = run(&["subvariety", "--spec", &path]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["nu_v_w"].to_string(), "1");
}

#[test]
fn verify_default_preset_passes() {
    let (code, out, _) = run(&["verify", "--preset", "default"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
    for check in v.as_array().unwrap() {
        assert!(check["failures"].as_array().unwrap().is_empty());
    }
}

#[test]
fn spec_file_rejections() {
    // m >= d in the pair
    let f =
        spec_file(r#"{"schema": 1, "n": 4, "k": 2, "pair": {"w": [1, 1], "v": [1, 1], "ell": 0}}"#);
    let (code, _, err) = run(&["subvariety", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("m"), "{err}");

    // unknown field
    let f = spec_file(r#"{"schema": 1, "n": 3, "k": 2, "componnts": []}"#);
    let (code, _, err) = run(&["counts", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(
        err.contains("componnts") || err.contains("unknown field"),
        "{err}"
    );

    // wrong schema version
    let f = spec_file(r#"{"schema": 7, "n": 3, "k": 2, "components": []}"#);
    let (code, _, err) = run(&["counts", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("schema"), "{err}");

    // malformed json
    let f = spec_file("{not json");
    let (code, _, _) = run(&["counts", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);

    // missing file
    let (code, _, _) = run(&["counts", "--spec", "/nonexistent/spec.json"]);
    assert_eq!(code, 2);
}

#[test]
fn report_round_trips_and_reevaluates() {
    let f = spec_file(
        r#"{"schema": 1, "n": 4, "k": 3,
            "components": [{"w": [1, 2], "ell": 2, "embedded_points": 5}]}"#,
    );
    let (code, out, _) = run(&["counts", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    // rebuild the spec from the emitted report and re-evaluate
    let n = v["n"].as_u64().unwrap() as u32;
    let k = v["k"].as_u64().unwrap() as u32;
    let comp = &v["components"][0];
    let w: Vec<u32> = comp["w"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as u32)
        .collect();
    let ell = comp["ell"].as_u64().unwrap() as u32;
    let center = foliation_census::symfun::MultiDegree::new(w).unwrap();
    use foliation_census::invariants;
    assert_eq!(
        invariants::nu(n, k, &center, ell).to_string(),
        comp["nu"].to_string()
    );
    assert_eq!(
        invariants::count_blowup_total(n, k, &center, ell).to_string(),
        comp["blowup_total"].to_string()
    );
    assert_eq!(
        invariants::count_exceptional(n, k, &center, ell).to_string(),
        comp["exceptional"].to_string()
    );
    assert_eq!(
        invariants::baum_bott(n, k).to_string(),
        v["baum_bott"].to_string()
    );
}

const SWEEP_ARGS: [&str; 12] = [
    "sweep",
    "--preset",
    "quick",
    "--n-max",
    "4",
    "--d-max",
    "3",
    "--k-max",
    "2",
    "--max-entry",
    "2",
    "--ell-policy",
];

#[test]
fn sweep_csv_and_json_carry_identical_values() {
    let mut args = SWEEP_ARGS.to_vec();
    args.push("all");
    let mut csv_args = args.clone();
    csv_args.extend(["--format", "csv"]);
    let (code, csv_out, _) = run(&csv_args);
    assert_eq!(code, 0);
    let mut json_args = args.clone();
    json_args.extend(["--format", "json"]);
    let (code, json_out, _) = run(&json_args);
    assert_eq!(code, 0);

    let mut reader = csv::Reader::from_reader(csv_out.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let csv_rows: Vec<Vec<(String, String)>> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            headers
                .iter()
                .map(String::from)
                .zip(r.iter().map(String::from))
                .collect()
        })
        .collect();
    let json_rows: Vec<serde_json::Value> = serde_json::from_str(json_out.trim()).unwrap();
    assert_eq!(csv_rows.len(), json_rows.len());
    for (c, j) in csv_rows.iter().zip(&json_rows) {
        for (key, val) in c {
            if key == "w" {
                let jw: Vec<String> = j["w"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.to_string())
                    .collect();
                assert_eq!(val, &jw.join(","));
            } else {
                assert_eq!(val, &j[key].to_string(), "column {key}");
            }
        }
    }
}

#[test]
fn sweep_is_deterministic_and_sorted() {
    let mut args = SWEEP_ARGS.to_vec();
    args.push("all");
    args.extend(["--format", "csv"]);
    let (_, first, _) = run(&args);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
    // rows ascend in (n, d, w, k, ell)
    let mut reader = csv::Reader::from_reader(first.as_bytes());
    let keys: Vec<(u32, u32, String, u32, u32)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (
                r[0].parse().unwrap(),
                r[1].parse().unwrap(),
                r[2].to_string(),
                r[4].parse().unwrap(),
                r[5].parse().unwrap(),
            )
        })
        .collect();
    assert!(!keys.is_empty());
    assert!(keys.windows(2).all(|w| w[0] <= w[1]), "rows not sorted");
}

#[test]
fn no_non_integer_numeric_tokens() {
    fn assert_integral(v: &serde_json::Value) {
        match v {
            serde_json::Value::Number(n) => {
                let s = n.to_string();
                assert!(
                    !s.contains('.') && !s.contains('e') && !s.contains('E'),
                    "non-integer numeric token {s}"
                );
            }
            serde_json::Value::Array(items) => items.iter().for_each(assert_integral),
            serde_json::Value::Object(map) => map.values().for_each(assert_integral),
            _ => {}
        }
    }
    let mut args = SWEEP_ARGS.to_vec();
    args.push("all");
    args.extend(["--format", "json"]);
    let (_, json_out, _) = run(&args);
    assert_integral(&serde_json::from_str(json_out.trim()).unwrap());

    let (_, counts, _) = run(&["counts", "--n", "7", "--k", "6", "--w", "1,1", "--ell", "5"]);
    assert_integral(&serde_json::from_str(counts.trim()).unwrap());
    assert!(!counts.contains('.'));
}

#[test]
fn sweep_json_reevaluates() {
    let mut args = SWEEP_ARGS.to_vec();
    args.push("all");
    args.extend(["--format", "json"]);
    let (_, json_out, _) = run(&args);
    let rows: Vec<serde_json::Value> = serde_json::from_str(json_out.trim()).unwrap();
    assert!(!rows.is_empty());
    use foliation_census::invariants;
    use foliation_census::symfun::MultiDegree;
    for row in rows {
        let n = row["n"].as_u64().unwrap() as u32;
        let k = row["k"].as_u64().unwrap() as u32;
        let ell = row["ell"].as_u64().unwrap() as u32;
        let w: Vec<u32> = row["w"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as u32)
            .collect();
        let w = MultiDegree::new(w).unwrap();
        assert_eq!(
            invariants::nu(n, k, &w, ell).to_string(),
            row["nu"].to_string()
        );
        assert_eq!(
            invariants::count_exceptional(n, k, &w, ell).to_string(),
            row["exceptional"].to_string()
        );
    }
}

#[test]
fn sweep_invalid_range_exits_2() {
    let (code, _, err) = run(&["sweep", "--preset", "quick", "--n-min", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("n"), "{err}");

    let (code, _, err) = run(&["sweep", "--preset", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("preset"), "{err}");
}

#[test]
fn large_degree_values_are_exact() {
    // k = 12 on P^9 with a degree-12 surface component: values far beyond
    // machine words must be printed exactly
    let (code, out, _) = run(&[
        "counts",
        "--n",
        "9",
        "--k",
        "12",
        "--w",
        "12,12,12,12,12,12,12",
        "--ell",
        "11",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    use foliation_census::invariants;
    use foliation_census::symfun::MultiDegree;
    let w = MultiDegree::new(vec![12; 7]).unwrap();
    assert_eq!(
        v["blowup_total"].to_string(),
        invariants::count_blowup_total(9, 12, &w, 11).to_string()
    );
    // spot: baum_bott(9,12) = (12^10 - 1)/11
    assert_eq!(v["baum_bott"].to_string(), "5628851293");
}
