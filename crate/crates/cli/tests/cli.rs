use std::path::PathBuf;
use std::process::Command;

use crossed_hopf::fixtures::{cyclic_hopf, group_algebra};
use crossed_hopf::{CycScalar, FiniteGroup};
use crossed_hopf_cli::fixtures::{kz4_bicharacter, trivial_z2};
use crossed_hopf_cli::format::{parse_structure_file, serialize, to_json, write_pretty, StructureFile};
use crossed_hopf_cli::run;
use serde_json::Value;

fn fixture(stem: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{stem}.json")).display().to_string()
}

fn cli(args: &[&str]) -> crossed_hopf_cli::RunResult {
    run(std::iter::once("crossed-hopf").chain(args.iter().copied()))
}

#[test]
fn trivial_z2_parses_to_the_canonical_group_algebra() {
    let f = parse_structure_file(&std::fs::read_to_string(fixture("trivial_z2")).unwrap()).unwrap();
    assert_eq!(f.hopf, group_algebra(FiniteGroup::cyclic(2)));
    assert_eq!(f, trivial_z2());
}

#[test]
fn kz4_parses_with_conductor_four_and_its_cobraiding() {
    let f = parse_structure_file(&std::fs::read_to_string(fixture("kz4_bicharacter")).unwrap()).unwrap();
    assert_eq!(f.conductor, 4);
    let c = f.cobraiding.as_ref().unwrap();
    let want = kz4_bicharacter();
    assert_eq!(c, want.cobraiding.as_ref().unwrap());
    // gamma(a (x) a) = i
    assert_eq!(c.gamma(&f.hopf, 1, 1).get(0, 0), &CycScalar::zeta(4));
    assert_eq!(f.cotwist, want.cotwist);
    assert_eq!(f.hopf, want.hopf);
}

fn with_edit(stem: &str, from: &str, to: &str) -> String {
    let text = std::fs::read_to_string(fixture(stem)).unwrap();
    assert!(text.contains(from), "edit anchor missing");
    text.replacen(from, to, 1)
}

/// Line and column of the first occurrence of `needle`.
fn position(text: &str, needle: &str) -> (usize, usize) {
    let at = text.find(needle).unwrap();
    let line = text[..at].matches('\n').count() + 1;
    let col = at - text[..at].rfind('\n').map_or(0, |k| k + 1) + 1;
    (line, col)
}

#[test]
fn wrong_comultiplication_shape_is_diagnosed_with_position() {
    // one 2-dim component whose comultiplication is given as 2x3
    let file = StructureFile::bare(1, cyclic_hopf(2));
    let mut v = to_json(&file);
    v["components"][0]["delta"] = serde_json::json!([["1", "0", "0"], ["0", "1", "0"]]);
    let text = write_pretty(&v);
    let diags = parse_structure_file(&text).unwrap_err();
    assert_eq!(diags.len(), 1, "{diags:?}");
    let d = &diags[0];
    assert!(d.message.contains("shape mismatch") && d.message.contains("2x3"), "{}", d.message);
    // points at the opening bracket of the offending matrix
    let (line, col) = position(&text, "\"delta\": [");
    assert_eq!((d.line, d.column), (line, col + "\"delta\": ".len()), "{}", d.message);
}

#[test]
fn unknown_keys_are_rejected_with_position() {
    let text = with_edit("trivial_z2", "\"conductor\": 1", "\"conductor\": 1,\n  \"colour\": \"blue\"");
    let diags = parse_structure_file(&text).unwrap_err();
    assert!(diags.iter().any(|d| d.message.contains("colour")), "{diags:?}");
    let (line, _) = position(&text, "\"colour\"");
    assert!(diags.iter().any(|d| d.line == line), "{diags:?}");
}

#[test]
fn unresolved_labels_and_bad_scalars_are_diagnosed() {
    let text = with_edit("trivial_z2", "\"right\": \"1\"", "\"right\": \"7\"");
    assert!(!parse_structure_file(&text).unwrap_err().is_empty());
    let text = with_edit("kz4_bicharacter", "\"cyc(4)[0,1]\"", "\"cyc(4)[0,x]\"");
    assert!(!parse_structure_file(&text).unwrap_err().is_empty());
    let diags = parse_structure_file("{ \"conductor\": 1, ").unwrap_err();
    assert_eq!(diags.len(), 1);
}

#[test]
fn every_fixture_round_trips() {
    for (stem, built) in crossed_hopf_cli::fixtures::shipped() {
        let text = std::fs::read_to_string(fixture(stem)).unwrap();
        let parsed = parse_structure_file(&text).unwrap();
        assert_eq!(serialize(&parsed), text, "{stem}");
        assert_eq!(parsed, built, "{stem}");
    }
}

#[test]
fn verify_passes_on_kz4() {
    let r = cli(&["verify", &fixture("kz4_bicharacter")]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("cobraiding.quasi_commutativity"));
    assert!(r.stdout.ends_with("status: pass\n"));
}

#[test]
fn verify_names_the_broken_antipode() {
    let r = cli(&["verify", &fixture("ks3_mutated_antipode"), "--report=machine"]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.contains(&"antipode.left"), "{failed:?}");
    assert_eq!(v["exit_code"], 1);
}

#[test]
fn relaxed_antipode_flag_skips_the_conjugation_check() {
    let r = cli(&["verify", &fixture("ks3"), "--strict-phi-antipode=off", "--report=machine"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let c = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "antipode.conjugation").unwrap();
    assert_eq!(c["status"], "skipped");
}

#[test]
fn smatrix_on_kz3_is_three_by_three_and_invertible() {
    let r = cli(&["smatrix", &fixture("kz3_pointed"), "--report=machine"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let results = v["results"].as_array().unwrap();
    let get = |n: &str| results.iter().find(|x| x["name"] == n).unwrap()["value"].clone();
    let s = get("s");
    assert_eq!(s.as_array().unwrap().len(), 3);
    assert!(s.as_array().unwrap().iter().all(|row| row.as_array().unwrap().len() == 3));
    let det: CycScalar = get("det").as_str().unwrap().parse().unwrap();
    assert!(!det.is_zero());
}

#[test]
fn modularity_verdicts() {
    assert_eq!(cli(&["modular", &fixture("kz3_pointed")]).code, 0);
    let r = cli(&["modular", &fixture("kz2_symmetric")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("fail    modular.s_invertible"));
    assert_eq!(cli(&["modular", &fixture("trivial")]).code, 0);
}

#[test]
fn corrupted_structures_fail_the_named_identity() {
    let r = cli(&["verify", &fixture("kz4_corrupt_gamma")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("fail    cobraiding.multiplicative_first"));
    let r = cli(&["verify", &fixture("kz4_corrupt_tau")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("fail    cotwist.convolution_inverse_left"));
}

#[test]
fn center_and_ribbon_commands_report_the_broken_candidates() {
    let r = cli(&["center", &fixture("kz3_pointed"), "--report=machine"]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let status = |n: &str| v["checks"].as_array().unwrap().iter().find(|c| c["name"] == n).unwrap()["status"].clone();
    assert_eq!(status("omega.center.multiplicative"), "pass");
    assert_eq!(status("broken.center.multiplicative"), "fail");
    assert_eq!(status("induced.in_natural_span"), "pass");
    let results = v["results"].as_array().unwrap();
    assert!(results.iter().any(|x| x["name"] == "natural_dim.V1" && x["value"] == 3));

    let r = cli(&["ribbon-check", &fixture("kz4_bicharacter")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("pass    member.ribbon.theta_omega"));
    assert!(r.stdout.contains("fail    non_member.ribbon.theta_omega"));
}

#[test]
fn family_flag_selects_a_declared_family() {
    assert_eq!(cli(&["braiding-check", &fixture("kz4_bicharacter"), "--family=regulars"]).code, 0);
    let r = cli(&["braiding-check", &fixture("kz4_bicharacter"), "--family=nope"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("unknown family"));
}

#[test]
fn usage_and_input_errors_exit_with_two() {
    assert_eq!(cli(&["frobnicate", &fixture("trivial")]).code, 2);
    assert_eq!(cli(&["verify"]).code, 2);
    assert_eq!(cli(&["verify", "/nonexistent/file.json"]).code, 2);
    assert_eq!(cli(&["verify", &fixture("trivial"), "--report=xml"]).code, 2);
    // smatrix without a cobraiding
    let r = cli(&["smatrix", &fixture("sweedler")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("cobraiding"));
}

#[test]
fn binary_matches_the_in_process_driver() {
    let exe = env!("CARGO_BIN_EXE_crossed-hopf");
    for (args, code) in [
        (vec!["verify", "kz4_bicharacter"], 0),
        (vec!["verify", "ks3_mutated_antipode"], 1),
        (vec!["nonsense", "trivial"], 2),
    ] {
        let path = fixture(args[1]);
        let out = Command::new(exe).arg(args[0]).arg(&path).output().unwrap();
        assert_eq!(out.status.code(), Some(code), "{args:?}");
        let inproc = cli(&[args[0], &path]);
        assert_eq!(String::from_utf8(out.stdout).unwrap(), inproc.stdout);
    }
}
