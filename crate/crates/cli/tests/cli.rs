use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

use frobring_cli::commands::CatalogIndex;
use frobring_cli::report::{canonical_json, CertificateReport};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_frobring"));
    c.env_remove("FROBRING_ORDER_CAP");
    c
}

fn rings_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("rings")
}

fn ring(name: &str) -> String {
    rings_dir()
        .join(format!("{name}.ring"))
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn certificate(name: &str) -> Value {
    json(&["classify", &ring(name)])
}

#[test]
fn classify_z4_is_frobenius() {
    let c = certificate("z4");
    assert_eq!(c["classification"]["frobenius"], true);
    assert_eq!(c["character"]["present"], true);
    assert_eq!(c["dual"]["cyclic_right_module"], true);
    assert_eq!(
        c["character"]["values_on_basis"],
        serde_json::json!([[1, 4]])
    );
}

#[test]
fn classify_local_ring_is_not_qf() {
    let c = certificate("local8");
    assert_eq!(c["classification"]["quasi_frobenius"], false);
    assert_eq!(c["character"]["present"], false);
    assert_eq!(c["dual"]["cyclic_right_module"], false);
    assert_eq!(c["pseudo_injective"]["left"], false);
    assert_eq!(c["macwilliams"][0]["holds"], false);
}

#[test]
fn classify_matrix_ring_is_semisimple() {
    let c = certificate("m2f2");
    assert_eq!(c["classification"]["semisimple"], true);
    assert_eq!(c["classification"]["mu"], serde_json::json!([2]));
}

#[test]
fn certificates_round_trip_and_are_reproducible() {
    for name in ["z4", "local8", "m2f2xf3", "t2f2"] {
        let a = stdout(&run(&["classify", &ring(name)]));
        let b = stdout(&run(&["classify", &ring(name)]));
        assert_eq!(a, b, "{name}");
        let cert: CertificateReport = serde_json::from_str(&a).unwrap();
        assert!(cert.hash_is_valid() && cert.is_consistent(), "{name}");
        let again: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(
            canonical_json(&cert).unwrap(),
            canonical_json(&again).unwrap()
        );
    }
}

#[test]
fn text_and_json_carry_the_same_verdicts() {
    for name in ["z4", "local8", "t2f2", "f2s3"] {
        let c = certificate(name);
        let text = stdout(&run(&["classify", &ring(name), "--format", "text"]));
        let field = |key: &str| {
            text.lines()
                .find_map(|l| l.trim().strip_prefix(key).filter(|r| r.starts_with(' ')))
                .map(|r| r.trim().to_string())
                .unwrap_or_else(|| panic!("{key} missing in {name}"))
        };
        let cl = &c["classification"];
        for key in [
            "semisimple",
            "quasi_frobenius",
            "frobenius",
            "socle_embeds_left",
            "socle_embeds_right",
        ] {
            assert_eq!(field(key), cl[key].to_string(), "{name} {key}");
        }
        assert_eq!(
            field("torsion_free_character"),
            c["character"]["present"].to_string()
        );
        assert_eq!(
            field("dual_cyclic"),
            c["dual"]["cyclic_right_module"].to_string()
        );
        assert_eq!(
            field("pseudo_injective_left"),
            c["pseudo_injective"]["left"].to_string()
        );
        assert_eq!(field("content_hash"), c["content_hash"].as_str().unwrap());
        let holds = c["macwilliams"][0]["holds"].as_bool().unwrap();
        assert_eq!(field("macwilliams n=1").starts_with("holds"), holds);
    }
}

#[test]
fn verify_reports_scope() {
    let v = json(&[
        "verify",
        &ring("z4"),
        "--length",
        "2",
        "--max-code-size",
        "16",
    ]);
    assert_eq!(v["scope"]["holds"], true);
    assert_eq!(v["scope"]["length"], 2);
    assert_eq!(v["scope"]["code_size_cap"], 16);

    let v = json(&["verify", &ring("local8"), "--length", "1"]);
    let ce = &v["scope"]["counterexample"];
    assert_eq!(v["scope"]["holds"], false);
    assert_eq!(
        ce["graph_labels"],
        serde_json::json!([[["0"], ["0"]], [["x"], ["y"]]])
    );
    assert_eq!(ce["domain_generators"], serde_json::json!([[2]]));

    let v = json(&[
        "verify",
        &ring("z4"),
        "--length",
        "2",
        "--max-code-size",
        "0",
    ]);
    assert_eq!(v["scope"]["holds"], true);
    assert_eq!(v["scope"]["codes"], 0);
    assert_eq!(v["scope"]["code_size_cap"], 0);
}

#[test]
fn verify_with_cross_check_runs_the_oracle() {
    let v = json(&[
        "verify",
        &ring("f2c4"),
        "--length",
        "2",
        "--max-code-size",
        "16",
        "--cross-check",
    ]);
    assert_eq!(v["scope"]["holds"], true);
    assert_eq!(v["scope"]["homs"], v["scope"]["oracle_runs"]);
}

#[test]
fn search_finds_length_one_counterexample() {
    let s = json(&["search", &ring("local8")]);
    assert_eq!(s["counterexample"]["length"], 1);
    let s = json(&[
        "search",
        &ring("z4"),
        "--max-length",
        "2",
        "--max-code-size",
        "16",
    ]);
    assert!(s["counterexample"].is_null());
}

#[test]
fn dual_and_character_commands() {
    let d = json(&["dual", &ring("m2f2")]);
    assert_eq!(d["invariant_factors"], serde_json::json!([2, 2, 2, 2]));
    assert_eq!(d["cyclic_right_module"], true);
    assert_eq!(d["pairing_nondegenerate"], true);
    let d = json(&["dual", &ring("local8")]);
    assert_eq!(d["generating_characters"], 0);

    let c = json(&["character", &ring("f4"), "--table"]);
    assert_eq!(c["character"]["present"], true);
    assert_eq!(c["semisimple"]["left_torsion_free"], true);
    assert_eq!(c["semisimple"]["right_torsion_free"], true);
    assert_eq!(c["table"].as_array().unwrap().len(), 4);
    let c = json(&["character", &ring("z4")]);
    assert!(c["semisimple"].is_null());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.ring");
    fs::write(&bad, "matrix 2 zmood 2\n").unwrap();
    let o = run(&["classify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1, column 10"));

    assert_eq!(
        run(&["classify", "/no/such/file.ring"]).status.code(),
        Some(1)
    );
    assert_eq!(
        run(&["classify", &ring("z4"), "--frobnicate"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["--version"]).status.code(), Some(0));

    let o = bin()
        .args(["classify", &ring("m2f2")])
        .env("FROBRING_ORDER_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", &ring("m2f2"), "--length", "2", "--hom-cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

fn catalog_of(dir: &Path, rings: &[&str]) {
    for r in rings {
        fs::copy(
            rings_dir().join(format!("{r}.ring")),
            dir.join(format!("{r}.ring")),
        )
        .unwrap();
    }
}

fn read_index(dir: &Path) -> CatalogIndex {
    serde_json::from_str(&fs::read_to_string(dir.join("certificates/index.json")).unwrap()).unwrap()
}

#[test]
fn catalog_run_and_rerun() {
    let dir = tempfile::tempdir().unwrap();
    catalog_of(dir.path(), &["z2", "z4", "z6", "f4", "m2f2", "local8"]);
    let d = dir.path().to_str().unwrap();
    let o = run(&["catalog", d]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("6 computed, 0 unchanged"));
    let index = read_index(dir.path());
    assert_eq!(index.rings.len(), 6);
    assert_eq!(index.summary.frobenius, 5);
    assert_eq!(index.summary.neither, 1);
    assert_eq!(index.summary.equivalences_agree, 6);
    for e in &index.rings {
        let text =
            fs::read_to_string(dir.path().join("certificates").join(&e.certificate)).unwrap();
        let cert: CertificateReport = serde_json::from_str(&text).unwrap();
        assert_eq!(cert.content_hash, e.content_hash);
    }
    let before = fs::read_to_string(dir.path().join("certificates/index.json")).unwrap();

    let o = run(&["catalog", d]);
    assert!(stdout(&o).contains("0 computed, 6 unchanged"));
    let after = fs::read_to_string(dir.path().join("certificates/index.json")).unwrap();
    assert_eq!(before, after);

    fs::write(dir.path().join("z4.ring"), "# edited\nname Z/4\nzmod 4\n").unwrap();
    let o = run(&["catalog", d]);
    assert!(stdout(&o).contains("1 computed, 5 unchanged"));
}

#[test]
fn catalog_collects_errors_and_continues() {
    let dir = tempfile::tempdir().unwrap();
    catalog_of(dir.path(), &["z4", "local8"]);
    fs::write(dir.path().join("broken.ring"), "product zmod 2 ;\n").unwrap();
    let o = run(&["catalog", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let index = read_index(dir.path());
    assert_eq!(index.rings.len(), 2);
    assert_eq!(index.errors.len(), 1);
    assert_eq!(index.errors[0].file, "broken.ring");
    assert_eq!(index.errors[0].exit_code, 1);
}

#[test]
fn empty_catalog_gives_empty_index() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["catalog", dir.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let index = read_index(dir.path());
    assert!(index.rings.is_empty() && index.errors.is_empty());
    assert_eq!(index.summary.rings, 0);
}

/// Checks the subset of JSON Schema used by the shipped schema.
fn validate(schema: &Value, root: &Value, v: &Value, path: &str) -> Result<(), String> {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let name = r.trim_start_matches("#/$defs/");
        return validate(&root["$defs"][name], root, v, path);
    }
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        let ok = options
            .iter()
            .filter(|s| validate(s, root, v, path).is_ok())
            .count();
        return if ok == 1 {
            Ok(())
        } else {
            Err(format!("{path}: {ok} oneOf branches match"))
        };
    }
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => vec![],
        };
        let actual = match v {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(n) if n.is_u64() || n.is_i64() => "integer",
            Value::Number(_) => "number",
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        if !types.contains(&actual) {
            return Err(format!("{path}: {actual} is not {types:?}"));
        }
    }
    if let Some(Value::Array(allowed)) = schema.get("enum") {
        if !allowed.contains(v) {
            return Err(format!("{path}: {v} not allowed"));
        }
    }
    if let (Some(min), Some(n)) = (schema.get("minimum").and_then(Value::as_i64), v.as_i64()) {
        if n < min {
            return Err(format!("{path}: {n} below {min}"));
        }
    }
    if let Value::Object(map) = v {
        for key in schema["required"].as_array().into_iter().flatten() {
            if !map.contains_key(key.as_str().unwrap()) {
                return Err(format!("{path}: missing {key}"));
            }
        }
        for (k, sub) in map {
            match schema.get("properties").and_then(|p| p.get(k)) {
                Some(s) => validate(s, root, sub, &format!("{path}.{k}"))?,
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return Err(format!("{path}: unexpected key {k}"))
                }
                None => {}
            }
        }
    }
    if let Value::Array(items) = v {
        let len = items.len() as u64;
        if schema
            .get("minItems")
            .and_then(Value::as_u64)
            .is_some_and(|m| len < m)
            || schema
                .get("maxItems")
                .and_then(Value::as_u64)
                .is_some_and(|m| len > m)
        {
            return Err(format!("{path}: {len} items out of range"));
        }
        if let Some(s) = schema.get("items") {
            for (i, item) in items.iter().enumerate() {
                validate(s, root, item, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

#[test]
fn certificates_match_the_shipped_schema() {
    let docs = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs");
    let schema: Value =
        serde_json::from_str(&fs::read_to_string(docs.join("certificate.schema.json")).unwrap())
            .unwrap();
    for name in ["z4", "local8", "m2f2xf3", "f2s3"] {
        let c = certificate(name);
        validate(&schema, &schema, &c, name).unwrap();
    }
    for entry in fs::read_dir(docs.join("examples")).unwrap() {
        let path = entry.unwrap().path();
        let c: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        validate(&schema, &schema, &c, &path.display().to_string()).unwrap();
        let cert: CertificateReport = serde_json::from_value(c).unwrap();
        assert!(cert.hash_is_valid(), "{}", path.display());
    }
    let mut broken = certificate("z4");
    broken["classification"]["mu"] = serde_json::json!("one");
    assert!(validate(&schema, &schema, &broken, "broken").is_err());
}
