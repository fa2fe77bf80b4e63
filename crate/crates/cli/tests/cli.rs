use std::path::PathBuf;
use std::process::Command;

use permlattice::Permutation;
use permlattice_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

struct Output {
    code: u8,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("permlattice").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let o = cli(args);
    assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn classify_interval_above_atom() {
    let v = json(&[
        "classify-interval",
        "--order",
        "bruhat",
        "--bottom",
        "1324",
        "--top",
        "3412",
    ]);
    for key in ["predicate_result", "structural_result"] {
        assert_eq!(v[key]["lattice"], true);
        assert_eq!(v[key]["modular"], false);
        assert_eq!(v[key]["rank"], 3);
    }
    assert_eq!(v["agree"], true);
    assert_eq!(v["subject"]["bottom"], "1324");
    assert_eq!(v["subject"]["kind"], "bruhat");
}

#[test]
fn generator_endpoints() {
    let a = json(&["classify-interval", "--bottom", "1324", "--top", "3412"]);
    for bottom in ["s2", "2", "σ2"] {
        assert_eq!(
            json(&["classify-interval", "--bottom", bottom, "--top", "3412"]),
            a,
            "{bottom}"
        );
    }
    let v = json(&[
        "classify-interval",
        "--bottom",
        "s1",
        "--top",
        "s1",
        "--n",
        "3",
    ]);
    assert_eq!(v["subject"]["top"], "213");
    assert_eq!(v["structural_result"]["boolean"], true);
    let o = cli(&["classify-interval", "--bottom", "s1", "--top", "s2"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("--n"));
}

#[test]
fn general_bruhat_interval_has_no_predicate() {
    let v = json(&["classify-interval", "--bottom", "2143", "--top", "2341"]);
    assert!(v["predicate_result"].is_null());
    assert!(v["structural_result"].is_object());
    let v = json(&[
        "classify-interval",
        "--bottom",
        "2143",
        "--top",
        "4321",
        "--structural",
        "never",
    ]);
    assert!(v["structural_result"].is_null());
}

#[test]
fn classify_poi_both_orders() {
    let v = json(&["classify-poi", "3412"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["predicate_result"]["lattice"], false);
    assert_eq!(reports[1]["subject"]["kind"], "weak");
    assert_eq!(reports[1]["predicate_result"]["distributive"], true);
    // comma form for large degree; structural skipped automatically
    let v = json(&["classify-poi", "2,1,3,4,5,6,7,8,9,10", "--order", "weak"]);
    assert_eq!(v[0]["subject"]["top"], "2,1,3,4,5,6,7,8,9,10");
    assert!(v[0]["structural_result"].is_null());
    assert_eq!(v[0]["predicate_result"]["boolean"], true);
}

#[test]
fn reduced_words_listing() {
    let o = cli(&["reduced-words", "2143"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "[1,3]\n[3,1]\n");
    assert_eq!(cli(&["reduced-words", "4321", "--count"]).stdout, "16\n");
    assert_eq!(cli(&["reduced-words", "123"]).stdout, "[]\n");
    assert_eq!(
        cli(&["reduced-words", "4321", "--cap", "5"]).code,
        EXIT_USAGE
    );
}

const BOOLEAN_ATOM_ROWS: [&[u64]; 7] = [
    &[4, 4],
    &[12, 16, 12],
    &[32, 48, 48, 32],
    &[84, 128, 144, 128, 84],
    &[220, 336, 384, 384, 336, 220],
    &[576, 880, 1008, 1024, 1008, 880, 576],
    &[1508, 2304, 2640, 2688, 2688, 2640, 2304, 1508],
];

#[test]
fn census_csv_reproduces_boolean_atom_table() {
    let o = cli(&["census", "--table", "4", "--n", "3..9"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let mut reader = csv::Reader::from_reader(o.stdout.as_bytes());
    let headers: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        headers,
        ["n", "k", "order", "class", "counted", "formula", "match", "method"]
    );
    let mut seen = 0;
    for record in reader.records() {
        let r = record.unwrap();
        let n: usize = r[0].parse().unwrap();
        let k: usize = r[1].parse().unwrap();
        assert_eq!(
            r[4].parse::<u64>().unwrap(),
            BOOLEAN_ATOM_ROWS[n - 3][k - 1]
        );
        assert_eq!(&r[6], "true");
        assert_eq!(&r[7], "constructive");
        seen += 1;
    }
    assert_eq!(seen, 35);
}

#[test]
fn census_json_and_pretty() {
    let v = json(&["census", "--table", "3", "--n", "4", "--format", "json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r["match"] == true && r["k"].is_null()));
    let weak_lattice = rows
        .iter()
        .find(|r| r["order"] == "weak" && r["class"] == "lattice")
        .unwrap();
    assert_eq!(weak_lattice["counted"], 24);

    let o = cli(&["census", "--table", "support", "--n", "2..4", "--pretty"]);
    assert!(o.stdout.lines().next().unwrap().contains("counted"));
    assert!(o.stdout.contains("boolean-over-support"));
    assert!(!o.stdout.contains("NO"));
}

#[test]
fn census_modes_and_limits() {
    let o = cli(&[
        "census",
        "--table",
        "5",
        "--n",
        "3..4",
        "--mode",
        "both",
        "--workers",
        "2",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("structural") && o.stdout.contains("predicate"));
    assert!(o.stderr.is_empty());
    assert_eq!(
        cli(&["census", "--table", "3", "--n", "6", "--mode", "structural"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        cli(&["census", "--table", "3", "--n", "10"]).code,
        EXIT_USAGE
    );
    assert_eq!(cli(&["census", "--table", "7"]).code, EXIT_USAGE);
    assert_eq!(
        cli(&["census", "--table", "3", "--n", "5..3"]).code,
        EXIT_USAGE
    );
    assert_eq!(
        cli(&["census", "--table", "3", "--workers", "0"]).code,
        EXIT_USAGE
    );
}

#[test]
fn verify_reports_agreement() {
    let o = cli(&["verify", "--n", "2..5"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o
        .stderr
        .contains("0 formula mismatches, 0 method disagreements"));
    let o = cli(&[
        "verify",
        "--n",
        "6..7",
        "--mode",
        "predicate",
        "--table",
        "support",
        "--table",
        "3",
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert_ne!(EXIT_OK, EXIT_MISMATCH);
}

#[test]
fn hasse_is_byte_stable() {
    let golden = include_str!("golden/atom_interval.dot");
    let o = cli(&[
        "hasse", "--order", "bruhat", "--bottom", "s2", "--top", "3412",
    ]);
    assert_eq!(o.stdout, golden);
    assert_eq!(
        cli(&["hasse", "--bottom", "1324", "--top", "3412"]).stdout,
        golden
    );
    assert_eq!(golden.matches("[label=").count(), 10);
    assert_eq!(golden.matches(" -> ").count(), 16);
}

#[test]
fn hasse_highlights_boolean_over_support() {
    let o = cli(&["hasse", "--top", "4321", "--highlight-support"]);
    assert_eq!(o.stdout.matches("[label=").count(), 24);
    assert_eq!(o.stdout.matches("color=red,").count(), 15);
    let o = cli(&[
        "hasse", "--order", "weak", "--bottom", "2413", "--top", "2413",
    ]);
    assert_eq!(o.stdout.matches("[label=").count(), 1);
}

#[test]
fn classify_poset_fixtures() {
    let v = json(&["classify-poset", &fixture("diamond.txt")]);
    assert_eq!(v["modular"], true);
    assert_eq!(v["distributive"], false);
    let v = json(&["classify-poset", &fixture("crown.txt")]);
    assert_eq!(v["lattice"], false);
    assert_eq!(
        cli(&["classify-poset", "/nonexistent/poset.txt"]).code,
        EXIT_USAGE
    );
}

#[test]
fn printed_permutations_reparse() {
    let v = json(&[
        "classify-interval",
        "--order",
        "weak",
        "--bottom",
        "2134",
        "--top",
        "2341",
    ]);
    for key in ["bottom", "top"] {
        let text = v["subject"][key].as_str().unwrap();
        assert_eq!(text.parse::<Permutation>().unwrap().to_string(), text);
    }
    for line in cli(&["hasse", "--top", "4321"])
        .stdout
        .lines()
        .filter(|l| l.contains("[label="))
    {
        let one_line = line.split('"').nth(1).unwrap().split("\\n").next().unwrap();
        assert_eq!(
            one_line.parse::<Permutation>().unwrap().to_string(),
            one_line
        );
    }
}

#[test]
fn usage_errors() {
    assert_eq!(
        cli(&["classify-interval", "--bottom", "2341", "--top", "2143"]).code,
        EXIT_USAGE
    );
    assert_eq!(cli(&["classify-poi", "1224"]).code, EXIT_USAGE);
    assert_eq!(cli(&["reduced-words", "abc"]).code, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(
        cli(&["classify-interval", "--order", "left", "--top", "21"]).code,
        EXIT_USAGE
    );
    let help = cli(&["--help"]);
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("classify-interval"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_permlattice");
    let ok = Command::new(bin)
        .args(["reduced-words", "2143"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "[1,3]\n[3,1]\n");
    let bad = Command::new(bin)
        .args(["classify-poi", "5"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}
