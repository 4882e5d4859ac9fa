use gcross::cli::{run, DefinitionDocument, Loaded, Outcome, Report};
use gcross::crossed::CrossedSystem;
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::Command;
use tempfile::TempDir;

const EXAMPLES: &[&str] = &[
    "matrix-2",
    "matrix-3",
    "matrix-4-gf2",
    "ff-skew-2-1",
    "ff-skew-2-2",
    "ff-skew-2-3",
    "ff-skew-3-2",
    "quaternion",
    "cbrt2",
    "klein-galois",
    "gf2-c2",
    "gf3-c3",
    "q-c2",
    "q-c4",
    "q-klein",
    "non-strong",
    "zero-fiber",
];

fn gcross(args: &[&str]) -> Outcome {
    run(std::iter::once("gcross").chain(args.iter().copied()))
}

fn emit(dir: &TempDir, name: &str) -> PathBuf {
    let path = dir.path().join(format!("{name}.json"));
    let out = gcross(&["example", name, "--emit", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    path
}

fn structured(args: &[&str]) -> (u8, Report) {
    let mut full = vec!["--format", "structured"];
    full.extend_from_slice(args);
    let out = gcross(&full);
    let rep = Report::parse(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}{}", out.stdout, out.stderr));
    (out.code, rep)
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn every_example_emits_and_revalidates() {
    let dir = TempDir::new().unwrap();
    for name in EXAMPLES {
        let path = emit(&dir, name);
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = DefinitionDocument::parse(&text).unwrap();
        assert_eq!(doc.to_json(), text, "{name} does not round-trip");
        let (code, rep) = structured(&["validate", p(&path)]);
        assert_eq!(code, 0, "{name}: {}", rep.to_text());
        assert!(rep.passed());
    }
}

#[test]
fn example_without_emit_prints_the_document() {
    let out = gcross(&["example", "quaternion"]);
    assert_eq!(out.code, 0);
    let doc = DefinitionDocument::parse(&out.stdout).unwrap();
    assert_eq!(doc.metadata.name, "quaternion");
}

#[test]
fn corrupted_cocycle_is_rejected_with_a_triple_witness() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "quaternion");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let entry = v["system"]["cocycle"].as_array_mut().unwrap().iter_mut().find(|c| c["arrows"] == serde_json::json!([1, 1])).unwrap();
    entry["value"] = serde_json::json!(["-2"]);
    std::fs::write(&path, serde_json::to_string_pretty(&v).unwrap()).unwrap();

    let (code, rep) = structured(&["validate", p(&path)]);
    assert_eq!(code, 1);
    let e = rep.entry("crossed-system").unwrap();
    assert_eq!(e.verdict, gcross::report::Verdict::Fail);
    let w = e.witnesses.iter().find(|w| w.check == "cocycle-identity").expect("cocycle-identity witness");
    assert_eq!(w.witness.len(), 3);
    // associativity is not attempted after the axioms fail
    assert!(rep.entry("associativity").is_none());

    // replay through the library
    let doc = DefinitionDocument::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let Loaded::System { groupoid, fibers, action, cocycle } = doc.load().unwrap() else { panic!() };
    let sys = CrossedSystem::new(groupoid, fibers, action, cocycle).unwrap();
    let g = sys.groupoid();
    let (s, t, u) = (w.witness[0], w.witness[1], w.witness[2]);
    let (st, tu) = (g.compose(s, t).unwrap(), g.compose(t, u).unwrap());
    let a = sys.target_fiber(s);
    assert_ne!(a.mul(sys.beta(s, t), sys.beta(st, u)), a.mul(&sys.alpha(s, sys.beta(t, u)), sys.beta(s, tu)));
    assert!(sys.validate().violations.iter().any(|x| x.check == "cocycle-identity" && x.witness == w.witness));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "matrix-2");
    let text = std::fs::read_to_string(&path).unwrap();
    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, &text[..text.len() / 2]).unwrap();
    assert_eq!(gcross(&["validate", p(&truncated)]).code, 2);
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(gcross(&["validate", p(&empty)]).code, 2);
    assert_eq!(gcross(&["validate", p(&dir.path().join("missing.json"))]).code, 2);
    assert_eq!(gcross(&["check", p(&path), "--property", "bogus"]).code, 2);
    assert_eq!(gcross(&["example", "no-such-example"]).code, 2);
    assert_eq!(gcross(&["frobnicate"]).code, 2);

    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["version"] = Value::String("gcross/0".into());
    let wrong = dir.path().join("version.json");
    std::fs::write(&wrong, v.to_string()).unwrap();
    assert_eq!(gcross(&["validate", p(&wrong)]).code, 2);

    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["system"]["cocycle"] = serde_json::json!([{"arrows": [0, 99], "value": "1"}]);
    let dangling = dir.path().join("dangling.json");
    std::fs::write(&dangling, v.to_string()).unwrap();
    assert_eq!(gcross(&["validate", p(&dangling)]).code, 2);
}

#[test]
fn help_exits_0() {
    let out = gcross(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("separability"));
}

#[test]
fn structured_reports_parse_back_losslessly() {
    let dir = TempDir::new().unwrap();
    for name in ["cbrt2", "gf2-c2", "non-strong", "zero-fiber"] {
        let path = emit(&dir, name);
        for args in [
            vec!["validate", p(&path)],
            vec!["check", p(&path), "--property", "crossed-product"],
            vec!["separability", p(&path), "--construct-casimir", "--from-casimir"],
            vec!["simplicity", p(&path)],
        ] {
            let mut full = vec!["--format", "structured"];
            full.extend_from_slice(&args);
            let out = gcross(&full);
            let rep = Report::parse(&out.stdout).unwrap();
            assert_eq!(rep.to_structured(), out.stdout);
            assert_eq!(rep.exit_status, out.code);
            let saved = dir.path().join("report.json");
            std::fs::write(&saved, &out.stdout).unwrap();
            let again = gcross(&["report", p(&saved)]);
            assert_eq!(again.code, out.code);
            assert_eq!(again.stdout, rep.to_text());
        }
    }
}

#[test]
fn matrix_3_is_a_crossed_product_with_units() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "matrix-3");
    let (code, rep) = structured(&["check", p(&path), "--property", "crossed-product"]);
    assert_eq!(code, 0);
    let units = rep.entry("crossed-product").unwrap().data["units"].as_object().unwrap();
    assert_eq!(units.len(), 9);
    let (code, _) = structured(&["separability", p(&path)]);
    assert_eq!(code, 0);
}

#[test]
fn klein_galois_is_object_unital() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "klein-galois");
    let (code, rep) = structured(&["check", p(&path), "--property", "object-unital"]);
    assert_eq!(code, 0, "{}", rep.to_text());
    let (code, _) = structured(&["check", p(&path), "--property", "skew"]);
    assert_eq!(code, 0);
    let (code, _) = structured(&["check", p(&path), "--property", "twisted"]);
    assert_eq!(code, 1);
}

#[test]
fn gf2_c2_has_zero_trace_image() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "gf2-c2");
    let out = gcross(&["separability", p(&path)]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("trace image = 0"), "{}", out.stdout);
    let (code, rep) = structured(&["separability", p(&path), "--construct-casimir"]);
    assert_eq!(code, 1);
    let cas = rep.entry("casimir").unwrap();
    assert_eq!(cas.data["enumerated_families"], serde_json::json!(0));
}

#[test]
fn cbrt2_is_separable_with_trivial_isotropy() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "cbrt2");
    let (code, rep) = structured(&["separability", p(&path), "--construct-casimir", "--from-casimir"]);
    assert_eq!(code, 0, "{}", rep.to_text());
    let objects = rep.entry("separability").unwrap().data["objects"].as_array().unwrap().clone();
    assert_eq!(objects.len(), 3);
    assert!(objects.iter().all(|o| o["isotropy_size"] == 1));
    let (code, _) = structured(&["simplicity", p(&path)]);
    assert_eq!(code, 0);
}

#[test]
fn negative_controls_through_the_cli() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "non-strong");
    let (code, rep) = structured(&["check", p(&path), "--property", "strongly-graded"]);
    assert_eq!(code, 1);
    let e = rep.entry("strongly-graded").unwrap();
    assert_eq!(e.witnesses.iter().map(|w| w.witness.clone()).collect::<Vec<_>>(), vec![vec![1]]);
    let (code, rep) = structured(&["check", p(&path), "--property", "crossed-product"]);
    assert_eq!(code, 1);
    assert_eq!(rep.entry("crossed-product").unwrap().verdict, gcross::report::Verdict::NotCertified);

    let path = emit(&dir, "zero-fiber");
    let (code, rep) = structured(&["validate", p(&path)]);
    assert_eq!(code, 0);
    assert_eq!(rep.warnings.len(), 1, "{:?}", rep.warnings);
}

#[test]
fn simplicity_methods_through_the_cli() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "q-c2");
    let (code, rep) = structured(&["simplicity", p(&path)]);
    assert_eq!(code, 1);
    assert!(rep.entries[0].data["witness_ideal"].is_array());
    let path = emit(&dir, "matrix-2-gf2");
    let (code, rep) = structured(&["simplicity", p(&path), "--method", "exhaustive"]);
    assert_eq!(code, 0);
    assert_eq!(rep.entries[0].data["method"], "exhaustive");
    let (code, rep) = structured(&["simplicity", p(&path), "--method", "trace-form"]);
    assert_eq!(code, 1);
    assert_eq!(rep.entries[0].verdict, gcross::report::Verdict::Undecided);
}

#[test]
fn binary_exit_codes() {
    let dir = TempDir::new().unwrap();
    let path = emit(&dir, "gf2-c2");
    let bin = env!("CARGO_BIN_EXE_gcross");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["validate", p(&path)]), Some(0));
    assert_eq!(status(&["separability", p(&path)]), Some(1));
    assert_eq!(status(&["validate", "/nonexistent.json"]), Some(2));
}
