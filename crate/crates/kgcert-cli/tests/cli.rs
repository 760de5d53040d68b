//! End-to-end tests of the `kgcert` binary: worked examples, the exit-code
//! contract, certificate round-trips, and report stability.

use std::path::PathBuf;
use std::process::Command;

fn kgcert(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kgcert"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("terminated by signal");
    (code, String::from_utf8(out.stdout).expect("report is utf-8"))
}

fn scratch(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("kgcert-test-{}-{name}", std::process::id()));
    p
}

/// Splits a repro line back into arguments, honoring single quotes.
fn shell_split(line: &str) -> Vec<String> {
    let mut args = Vec::new();
    let mut current = String::new();
    let mut quoted = false;
    let mut pending = false;
    for ch in line.chars() {
        match ch {
            '\'' => {
                quoted = !quoted;
                pending = true;
            }
            c if c.is_whitespace() && !quoted => {
                if pending {
                    args.push(std::mem::take(&mut current));
                    pending = false;
                }
            }
            c => {
                current.push(c);
                pending = true;
            }
        }
    }
    if pending {
        args.push(current);
    }
    args
}

#[test]
fn strongly_reduced_quadrinomial_passes() {
    let (code, out) = kgcert(&["check-strong", "--field", "Q", "--r", "1 + x + y + x*y"]);
    assert_eq!(code, 0, "report:\n{out}");
    assert!(out.contains("result: strongly-reduced"));
}

#[test]
fn certificate_search_emits_a_file_that_verifies() {
    let cert = scratch("search.cert");
    let (code, out) = kgcert(&[
        "cert-search",
        "--group",
        "Z/2",
        "--field",
        "GF(5)",
        "--r",
        "g - 2",
        "--radius",
        "1",
        "--cert-out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "report:\n{out}");
    assert!(out.contains("result: certificate-verified"));
    let (code, out) = kgcert(&["verify", "--cert", cert.to_str().unwrap()]);
    assert_eq!(code, 0, "report:\n{out}");
    assert!(out.contains("result: verified"));
}

#[test]
fn freiheit_scan_without_candidates_is_inconclusive() {
    let (code, out) = kgcert(&[
        "scan-freiheit",
        "--r",
        "x^-2*y^-3*x^2*y^3 - 1",
        "--kill",
        "x",
        "--radius",
        "2",
    ]);
    assert_eq!(code, 2, "report:\n{out}");
    assert!(out.contains("result: no-violation"));
}

#[test]
fn every_certificate_emitting_command_round_trips_through_verify() {
    let cases: Vec<(&str, Vec<&str>)> = vec![
        (
            "finite-order",
            vec![
                "cert-binomial", "--family", "finite-order", "--n", "4", "--field", "Q",
                "--c", "3",
            ],
        ),
        (
            "affine",
            vec![
                "cert-binomial", "--family", "affine", "--alpha", "-3/2", "--field", "Q",
                "--c", "2",
            ],
        ),
        (
            "golden",
            vec![
                "cert-binomial", "--family", "golden", "--field", "golden", "--c", "t",
            ],
        ),
        (
            "trinomial",
            vec![
                "cert-trinomial", "--group", "wreath", "--field", "GF(5)", "--g",
                "({0:1}, 0)", "--h", "({}, 1)",
            ],
        ),
        (
            "cyclic-search",
            vec![
                "cert-search", "--group", "Z/6", "--field", "Q", "--r", "g - 2",
                "--radius", "2",
            ],
        ),
    ];
    for (name, mut args) in cases {
        let cert = scratch(&format!("{name}.cert"));
        args.push("--cert-out");
        args.push(cert.to_str().unwrap());
        let owned: Vec<&str> = args.clone();
        let (code, out) = kgcert(&owned);
        assert_eq!(code, 0, "{name} emit failed:\n{out}");
        let (code, out) = kgcert(&["verify", "--cert", cert.to_str().unwrap()]);
        assert_eq!(code, 0, "{name} verify failed:\n{out}");
        assert!(out.contains("result: verified"), "{name}:\n{out}");
    }
}

#[test]
fn verify_rejects_a_tampered_certificate() {
    let cert = scratch("tampered.cert");
    let (code, _) = kgcert(&[
        "cert-binomial", "--family", "finite-order", "--n", "4", "--field", "Q",
        "--c", "3", "--cert-out", cert.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered = text.replacen("sandwich: -27/80 |", "sandwich: -27/81 |", 1);
    assert_ne!(text, tampered, "expected the leading sandwich coefficient to tamper");
    std::fs::write(&cert, tampered).unwrap();
    let (code, out) = kgcert(&["verify", "--cert", cert.to_str().unwrap()]);
    assert_eq!(code, 1, "report:\n{out}");
    assert!(out.contains("result: not-verified"));
    assert!(out.contains("residual:"));
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0: definitive positive results.
    assert_eq!(kgcert(&["check-strong", "--r", "1 + x + y + x*y"]).0, 0);
    assert_eq!(kgcert(&["magnus-weight", "--word", "x^-1*y^-1*x*y"]).0, 0);
    assert_eq!(kgcert(&["units", "--field", "GF(2)", "--group", "Z/4"]).0, 0);

    // 1: definitive negative results.
    let (code, out) = kgcert(&["check-strong", "--r", "x + y*x"]);
    assert_eq!(code, 1, "report:\n{out}");
    assert!(out.contains("result: not-strongly-reduced"));
    let (code, out) = kgcert(&["refute-trinomial", "--f", "x^2", "--g", "x", "--h", "y"]);
    assert_eq!(code, 1, "report:\n{out}");
    assert!(out.contains("result: refuted"));
    let dump = scratch("blocked.cert");
    let (code, out) = kgcert(&[
        "cert-binomial", "--family", "finite-order", "--n", "4", "--field", "GF(5)",
        "--c", "2", "--cert-out", dump.to_str().unwrap(),
    ]);
    assert_eq!(code, 1, "report:\n{out}");
    assert!(out.contains("result: order-violation"));
    assert_eq!(kgcert(&["units", "--field", "GF(2)", "--group", "Z/3"]).0, 1);

    // 2: bounded searches that end without a definitive answer.
    let (code, out) = kgcert(&[
        "cert-search", "--group", "free(x,y)", "--field", "Q", "--r", "x - 2",
        "--radius", "1",
    ]);
    assert_eq!(code, 2, "report:\n{out}");
    assert!(out.contains("result: not-found"));
    assert_eq!(kgcert(&["magnus-weight", "--word", "x^-1*y^-1*x*y", "--cap", "1"]).0, 2);

    // 3: usage and input errors.
    assert_eq!(kgcert(&["no-such-command"]).0, 3);
    assert_eq!(kgcert(&["check-strong"]).0, 3);
    assert_eq!(kgcert(&["check-strong", "--field", "GF(6)", "--r", "1 + x"]).0, 3);
    assert_eq!(kgcert(&["verify", "--cert", "/nonexistent/path.cert"]).0, 3);
    assert_eq!(kgcert(&["parse", "--elem", "g"]).0, 3);

    // 0: help and version are not errors.
    assert_eq!(kgcert(&["--help"]).0, 0);
    assert_eq!(kgcert(&["--version"]).0, 0);
}

#[test]
fn reports_embed_the_run_configuration() {
    let (_, out) = kgcert(&[
        "find-ab", "--field", "GF(5)", "--r", "1 + x + y + x*y", "--radius", "1",
        "--threads", "2", "--seed", "7",
    ]);
    for line in [
        "kgcert report v1",
        "command: find-ab",
        "threads: 2",
        "seed: 7",
        "field: GF(5)",
        "group: free(x,y)",
        "r: 1 + x + y + x*y",
        "radius: 1",
        "pair-cap: 1000000",
        "exit: 0",
    ] {
        assert!(out.contains(line), "missing `{line}` in:\n{out}");
    }
    assert!(out.contains("repro: kgcert find-ab"), "missing repro line:\n{out}");
}

#[test]
fn rerunning_the_repro_line_reproduces_the_report() {
    let (_, out) = kgcert(&["reduce-c", "--r", "x^-1*y + x^-1 + y*x"]);
    let repro = out
        .lines()
        .find_map(|l| l.strip_prefix("repro: kgcert "))
        .expect("repro line");
    let args = shell_split(repro);
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let (code, again) = kgcert(&refs);
    assert_eq!(code, 0);
    assert_eq!(out, again, "repro run diverged");
}

#[test]
fn thread_count_does_not_change_any_output() {
    let strip = |s: &str| -> String {
        s.lines()
            .filter(|l| !l.starts_with("threads:") && !l.starts_with("repro:"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    for args in [
        vec!["cert-search", "--group", "Z/2", "--field", "GF(5)", "--r", "g - 2",
             "--radius", "1"],
        vec!["scan-freiheit", "--r", "x^-2*y^-3*x^2*y^3 - 1", "--kill", "x",
             "--radius", "2"],
        vec!["gen-sentences", "--m", "2", "--m-prime", "2"],
        vec!["find-ab", "--r", "1 + x + y + x*y", "--radius", "2"],
    ] {
        let mut one = args.clone();
        one.extend(["--threads", "1"]);
        let mut four = args.clone();
        four.extend(["--threads", "4"]);
        let (c1, o1) = kgcert(&one);
        let (c4, o4) = kgcert(&four);
        assert_eq!(c1, c4, "exit codes diverged for {args:?}");
        assert_eq!(strip(&o1), strip(&o4), "reports diverged for {args:?}");
    }
}

#[test]
fn sentence_emission_matches_the_frozen_golden_file() {
    let out_path = scratch("sentences.txt");
    let (code, _) = kgcert(&[
        "gen-sentences", "--m", "2", "--m-prime", "2", "--sentences-out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let emitted = std::fs::read_to_string(&out_path).unwrap();
    let golden_path =
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/sentences_2x2_native.txt");
    let golden = std::fs::read_to_string(golden_path).unwrap();
    assert_eq!(emitted, golden, "sentence output drifted from the golden file");
}

#[test]
fn prune_drops_sentences_and_reports_the_count() {
    let full_path = scratch("sentences_full.txt");
    let (code, _) = kgcert(&[
        "gen-sentences", "--m", "2", "--m-prime", "2", "--sentences-out",
        full_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let pruned_path = scratch("sentences_pruned.txt");
    let (code, report) = kgcert(&[
        "gen-sentences", "--m", "2", "--m-prime", "2", "--prune", "--sentences-out",
        pruned_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(report.contains("prune-note:"), "pruning must be labeled as a heuristic");
    let count = |p: &PathBuf| std::fs::read_to_string(p).unwrap().lines().count();
    let (full, pruned) = (count(&full_path), count(&pruned_path));
    assert!(pruned < full, "pruning should drop at least one sentence");
    assert!(pruned > 0, "pruning should not empty the 2x2 grid");
    assert!(report.contains(&format!("pruned: {}", full - pruned)));
}

#[test]
fn inferred_and_explicit_free_groups_agree() {
    let (_, inferred) = kgcert(&["check-strong", "--r", "1 + x + y + x*y"]);
    let (_, explicit) = kgcert(&[
        "check-strong", "--group", "free(x,y)", "--r", "1 + x + y + x*y",
    ]);
    let result = |s: &str| -> String {
        s.lines()
            .filter(|l| l.starts_with("result:") || l.starts_with("group:"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(result(&inferred), result(&explicit));
}

#[test]
fn number_field_scalars_survive_the_certificate_file_format() {
    let cert = scratch("golden-roundtrip.cert");
    let (code, _) = kgcert(&[
        "cert-binomial", "--family", "golden", "--field", "golden", "--c", "t - 1",
        "--cert-out", cert.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&cert).unwrap();
    assert!(text.starts_with("kgcert certificate v1\n"));
    assert!(text.contains("field: Q[t]/(t^2 - t - 1)"));
    let (code, out) = kgcert(&["verify", "--cert", cert.to_str().unwrap()]);
    assert_eq!(code, 0, "report:\n{out}");
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let path = scratch("report.txt");
    let (code, stdout) = kgcert(&[
        "magnus-weight", "--word", "x^-1*y^-1*x*y", "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty(), "report leaked to stdout: {stdout}");
    let report = std::fs::read_to_string(&path).unwrap();
    assert!(report.contains("weight: 2"));
    assert!(report.contains("exit: 0"));
}
