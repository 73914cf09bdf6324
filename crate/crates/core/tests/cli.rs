use std::process::Command;

use ftc_core::cli::run;

fn ftc(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["ftc"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_ftc"));
    c.env_remove("FTC_SEED");
    c
}

#[test]
fn shuffle_of_two_words() {
    let (code, out, _) = ftc(&["shuffle", "[0,1]", "[2]"]);
    assert_eq!((code, out.as_str()), (0, "[0,1,2] + [0,2,1] + [2,0,1]\n"));
}

#[test]
fn calculators() {
    // Binomial convolution: entry 3 is 3·2·6 + 3·3·5 = 81, entry 4 is 6·3·6 = 108.
    assert_eq!(ftc(&["hurwitz-mul", "(1, 2, 3)", "(4, 5, 6)"]).1, "(4, 13, 38, 81, 108)\n");
    assert_eq!(ftc(&["hurwitz-mul", "(1, 1)", "(1, 1)", "--ring", "Z/2"]).1, "(1)\n");
    // Heads multiply, tails shuffle: [y][y] = [y^2].
    assert_eq!(ftc(&["mixshuffle", "[1]", "[1]"]).1, "[2]\n");
    assert_eq!(ftc(&["zinbiel", "x^2", "x^3", "--instance", "poly-ftc"]).1, "1/4*x^6\n");
    assert_eq!(ftc(&["zinbiel", "[0]", "[1]", "--instance", "shuffle-zinbiel"]).1, "[0,1]\n");
}

#[test]
fn check_laws_exit_codes() {
    let (code, out, _) = ftc(&["check-laws", "--instance", "poly-ftc"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains("holds-on-samples")).count(), 5);

    let (code, out, _) = ftc(&["check-laws", "--instance", "zero-integration"]);
    assert_eq!(code, 1);
    assert!(out.contains("ftc1: violated at m = 1 [D(P(m)) = m]: 0 != 1"), "{out}");
}

#[test]
fn usage_and_construction_errors() {
    let (code, _, err) = ftc(&["check-laws", "--instance", "nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown instance"));
    assert_eq!(ftc(&["shuffle", "x^-1", "[0]"]).0, 2);
    assert_eq!(ftc(&["check-laws", "--instance", "poly-ftc", "--bogus"]).0, 2);
    assert_eq!(ftc(&["zinbiel", "1", "[0]", "--instance", "shuffle-zinbiel"]).0, 2);
    let spec = r#"{"construction": "from-derivation", "carrier": "poly", "ring": "Z/3"}"#;
    let (code, _, err) = ftc(&["check-laws", "--instance", spec]);
    assert_eq!(code, 3);
    assert!(err.contains("degree 3"), "{err}");
    let (code, _, _) = ftc(&["check-laws", "--instance", r#"{"construction": "diff-algebra", "carrier": "poly", "colour": 1}"#]);
    assert_eq!(code, 2);
}

#[test]
fn json_reports_are_versioned() {
    let (code, out, _) = ftc(&["check-laws", "--instance", "zero-both", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schemaVersion"], 1);
    let ftc1 = v["reports"].as_array().unwrap().iter().find(|r| r["law"] == "ftc1").unwrap();
    assert_eq!(ftc1["status"], "violated");
    assert_eq!(ftc1["witness"]["inputs"][0]["value"], "1");
}

#[test]
fn conversions() {
    let (code, out, _) = ftc(&["convert", "ftc-to-zin", "--instance", "poly-ftc"]);
    assert_eq!(code, 0);
    assert!(out.contains("x ◁ x = 1/2*x^3"), "{out}");
    let (code, out, _) = ftc(&["convert", "zin-to-ftc", "--instance", "shuffle-zinbiel"]);
    assert_eq!(code, 0);
    assert!(out.contains("P([0,1]) = (0 | [0,1])"), "{out}");
    assert_eq!(ftc(&["convert", "zin-to-ftc", "--instance", "poly-ftc"]).0, 2);
    assert_eq!(ftc(&["roundtrip", "--instance", "shuffle-zinbiel", "--samples", "50"]).0, 0);
}

#[test]
fn env_seed_overrides_flag() {
    let out = bin()
        .args(["check-laws", "--instance", "poly-ftc", "--seed", "0", "--samples", "20"])
        .env("FTC_SEED", "7")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("seed 7"));
    let bad = bin().args(["list"]).env("FTC_SEED", "seven").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn suite_is_identical_across_worker_counts() {
    let json = |threads: &str| {
        let out = bin()
            .args(["suite", "--seed", "3", "--seeds", "2", "--samples", "40", "--format", "json"])
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let one = json("1");
    assert_eq!(one, json("4"));
    let v: serde_json::Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(v["seeds"], serde_json::json!([3, 4]));
    assert_eq!(v["summary"]["mismatched"], 0);
    // Planted violations are reported as matched violations.
    let planted = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["instance"] == "poly-mut-d-shift" && e["law"] == "leibniz")
        .count();
    assert_eq!(planted, 2);
}
