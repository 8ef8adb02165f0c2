//! Every JSON document the CLI can emit validates against the schema shipped for its
//! subcommand, and the schemas are strict enough to reject structural mutations.
//!
//! Commands run in-process through the same entry point as the binary; output goes to
//! temp files via --out so stdout stays quiet under the test harness.

use jsonschema::JSONSchema;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

fn schema(name: &str) -> JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("reading {}: {e}", path.display()));
    let value: Value = serde_json::from_str(&text).unwrap();
    JSONSchema::compile(&value).unwrap_or_else(|e| panic!("compiling {name}: {e}"))
}

fn scratch_path(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("spectough-schemas-{}-{tag}.json", std::process::id()))
}

/// Run a subcommand with --out, assert the exit code, and return the parsed document.
fn run_to_json(tag: &str, args: &[&str], want_code: i32) -> Value {
    let out = scratch_path(tag);
    let mut argv: Vec<String> = vec!["spectough".into()];
    argv.extend(args.iter().map(|s| s.to_string()));
    argv.push("--out".into());
    argv.push(out.to_str().unwrap().into());
    let code = spectough::cli::main_with_args(argv);
    assert_eq!(code, want_code, "exit code for {args:?}");
    let text = std::fs::read_to_string(&out).unwrap();
    std::fs::remove_file(&out).ok();
    serde_json::from_str(&text).unwrap()
}

fn assert_valid(schema: &JSONSchema, doc: &Value, context: &str) {
    if let Err(errors) = schema.validate(doc) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("{context}: schema violations {msgs:?}");
    }
}

#[test]
fn all_schemas_compile() {
    for name in [
        "invariants.schema.json",
        "rho.schema.json",
        "quotient.schema.json",
        "family.schema.json",
        "check.schema.json",
        "search.schema.json",
        "sweep.schema.json",
    ] {
        schema(name);
    }
}

#[test]
fn invariants_document_validates() {
    let s = schema("invariants.schema.json");
    let doc = run_to_json("inv-star", &["invariants", "--g6", "D?{"], 0);
    assert_valid(&s, &doc, "K_{1,4} invariants");
    let doc = run_to_json("inv-complete", &["invariants", "--g6", "D~{"], 0);
    assert_valid(&s, &doc, "K_5 invariants (None-valued fields)");

    // Type drift must be rejected.
    let mut bad = doc;
    bad["n"] = json!("five");
    assert!(!s.is_valid(&bad));
}

#[test]
fn rho_documents_validate() {
    let s = schema("rho.schema.json");
    let fam = run_to_json(
        "rho-fam",
        &["rho", "--family", "s=1;parts=3,1,1", "--alpha", "0,1/2"],
        0,
    );
    assert_valid(&s, &fam, "family source (quotient columns present)");
    assert_eq!(fam["rows"].as_array().unwrap().len(), 2);
    assert!(fam["rows"][0]["rho_quotient"].is_number());

    let plain = run_to_json("rho-g6", &["rho", "--g6", "D?{", "--alpha", "1/4"], 0);
    assert_valid(&s, &plain, "graph6 source (no quotient columns)");
    assert!(plain["rows"][0].get("rho_quotient").is_none());

    // additionalProperties is false throughout.
    let mut bad = plain;
    bad["surprise"] = json!(1);
    assert!(!s.is_valid(&bad));
}

#[test]
fn quotient_document_validates() {
    let s = schema("quotient.schema.json");
    let doc = run_to_json(
        "quot",
        &["quotient", "--family", "s=2;parts=5,1,1,1", "--alpha", "0,1/2"],
        0,
    );
    assert_valid(&s, &doc, "split join quotient");
    assert_eq!(doc["evaluations"].as_array().unwrap().len(), 2);
}

#[test]
fn family_document_validates() {
    let s = schema("family.schema.json");
    for (tag, spec) in [
        ("fam-delta", "n=12;delta=2"),
        ("fam-tau", "n=52;tau=3"),
        ("fam-b", "n=30;b=2"),
    ] {
        let doc = run_to_json(tag, &["family", "--family-extremal", spec], 0);
        assert_valid(&s, &doc, spec);
    }
}

#[test]
fn check_document_validates() {
    let s = schema("check.schema.json");
    let doc = run_to_json(
        "check-t11",
        &[
            "check",
            "t11",
            "--family-extremal",
            "n=8;delta=1",
            "--alpha",
            "0,1/2",
        ],
        0,
    );
    assert_valid(&s, &doc, "t11 extremal verdicts");

    let doc2 = run_to_json(
        "check-t12b",
        &["check", "t12b", "--family-extremal", "n=30;b=2", "--alpha", "1/2"],
        0,
    );
    assert_valid(&s, &doc2, "t12b extremal verdicts (rational tau field)");

    // Required keys must not be droppable.
    let mut bad = doc;
    bad.as_object_mut().unwrap().remove("all_respected");
    assert!(!s.is_valid(&bad));
}

#[test]
fn search_and_audit_documents_validate() {
    let s = schema("search.schema.json");
    let doc = run_to_json(
        "search-ex",
        &["search", "t11", "--n", "5", "--mode", "exhaustive", "--alpha", "0,1/2"],
        0,
    );
    assert_valid(&s, &doc, "exhaustive t11 search");
    assert_eq!(doc["examined"], json!(21));

    let doc = run_to_json(
        "search-rand",
        &[
            "search", "t12a", "--n", "9", "--mode", "random", "--count", "40", "--seed",
            "7", "--tau", "2",
        ],
        0,
    );
    assert_valid(&s, &doc, "random t12a search");

    let doc = run_to_json("audit", &["audit", "--nmax", "5"], 0);
    assert_valid(&s, &doc, "equivalence audit");

    // A violation entry without its detail string must be rejected.
    let mut bad = doc;
    bad["violations"] = json!([{ "graph6": "D?{" }]);
    assert!(!s.is_valid(&bad));
}

#[test]
fn sweep_document_validates() {
    let s = schema("sweep.schema.json");
    let doc = run_to_json(
        "sweep",
        &["sweep", "--nmax", "8", "--smax", "2", "--tmax", "2", "--alpha", "0,1/2"],
        0,
    );
    assert_valid(&s, &doc, "sweep rows");
    assert!(!doc.as_array().unwrap().is_empty());
    assert!(!s.is_valid(&json!({"rows": []})));
}
