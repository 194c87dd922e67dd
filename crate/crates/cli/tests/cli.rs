//! End-to-end runs of the `hyperkit` binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hyperkit::format::ObjectFile;
use hyperkit::{analyze, find_isomorphism, zoo, Hypermagma};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(test: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperkit-cli-{}-{test}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn load(path: &Path) -> Hypermagma {
    ObjectFile::parse(&fs::read_to_string(path).unwrap()).unwrap().to_hypermagma().unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Runs `construct` into `dir/name.json` and loads the result.
fn construct(dir: &Path, name: &str, args: &[&str]) -> Hypermagma {
    let out = dir.join(format!("{name}.json"));
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path_str(&out)]);
    let o = run(&full);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    load(&out)
}

#[test]
fn check_reports_classification_and_witness() {
    let cases = [
        ("krasner.json", "canonical hypergroup; associative: true"),
        ("z2.json", "abelian group; associative: true"),
        ("s3.json", "group; associative: true"),
        ("f9.json", "abelian group; associative: true"),
        ("fano.json", "commutative mosaic; associative: false; witness (1, 1, 2)"),
        ("n5.json", "commutative mosaic; associative: false; witness"),
        ("empty.json", "initial hypermagma; associative: true"),
    ];
    for (file, head) in cases {
        let o = run(&["check", path_str(&data(file))]);
        assert_eq!(o.status.code(), Some(0), "{file}");
        let text = stdout(&o);
        assert!(text.lines().next().unwrap().starts_with(head), "{file}: {text}");
    }
    let text = stdout(&run(&["check", path_str(&data("krasner.json"))]));
    assert!(text.contains("witness single-valued: (1, 1)"));
}

#[test]
fn check_json_is_machine_readable() {
    let o = run(&["check", "--json", path_str(&data("fano.json"))]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "matroid");
    assert_eq!(v["classification"], "commutative mosaic");
    assert_eq!(v["associative"], false);
    assert!(v["witnesses"].as_array().unwrap().iter().any(|w| w["axiom"] == "associative"));
}

#[test]
fn check_describes_morphisms() {
    let text = stdout(&run(&["check", path_str(&data("frobenius.json"))]));
    assert!(text.starts_with("morphism from canonical hypergroup (5) to canonical hypergroup (5)"));
    assert!(text.contains("strict: true") && text.contains("injective: true"));
}

#[test]
fn exit_codes() {
    let dir = scratch("exit");
    assert_eq!(run(&["check", "/no/such/file.json"]).status.code(), Some(2));
    let bad_json = dir.join("bad.json");
    fs::write(&bad_json, "{ not json").unwrap();
    assert_eq!(run(&["check", path_str(&bad_json)]).status.code(), Some(2));
    let extra = dir.join("extra.json");
    fs::write(&extra, r#"{"kind":"hypermagma","carrier":["a"],"table":[[["a"]]],"colour":1}"#).unwrap();
    assert_eq!(run(&["check", path_str(&extra)]).status.code(), Some(2));
    let label = dir.join("label.json");
    fs::write(&label, r#"{"kind":"hypermagma","carrier":["a"],"table":[[["b"]]]}"#).unwrap();
    let o = run(&["check", path_str(&label)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("UnknownLabel"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "tensor", "--op", "smash", "a", "b"]).status.code(), Some(2));
    // Unitization needs labels from the carrier.
    let o = run(&["construct", "unitize", path_str(&data("krasner.json")), "--set", "zz"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn product_and_coproduct_write_their_legs() {
    let dir = scratch("limits");
    let z2 = path_str(&data("z2.json")).to_string();
    let p = construct(&dir, "p", &["product", &z2, &z2]);
    assert!(find_isomorphism(&p, &zoo::klein()).is_some());
    for leg in ["p.proj0.json", "p.proj1.json"] {
        let f = ObjectFile::parse(&fs::read_to_string(dir.join(leg)).unwrap()).unwrap().to_morphism().unwrap();
        assert!(f.kind().surjective && f.is_colax());
    }
    let c = construct(&dir, "c", &["coproduct", "--tag", "uhmag", &z2, &z2]);
    assert_eq!(c.size(), 3);
    assert!(dir.join("c.inj0.json").exists() && dir.join("c.inj1.json").exists());
}

#[test]
fn equalizer_and_coequalizer_of_frobenius() {
    let dir = scratch("frob");
    let (frob, id) = (data("frobenius.json"), data("f9q_identity.json"));
    let e = construct(&dir, "e", &["equalizer", path_str(&frob), path_str(&id)]);
    assert_eq!(e.labels(), ["0", "1", "i"]);
    assert!(dir.join("e.incl0.json").exists());
    let q = construct(&dir, "q", &["coequalizer", "--tag", "hmag", path_str(&frob), path_str(&id)]);
    assert_eq!(q.size(), 4);
    assert!(dir.join("q.quotient.json").exists());
}

#[test]
fn tensors_homs_and_free_objects() {
    let dir = scratch("tensor");
    let (z2, k) = (path_str(&data("z2.json")).to_string(), path_str(&data("krasner.json")).to_string());
    let t = construct(&dir, "t", &["tensor", "--op", "boxtimes", &z2, &z2]);
    assert!(find_isomorphism(&t, &zoo::z2()).is_some());
    let d = construct(&dir, "d", &["tensor", "--op", "boxdot", &z2, &z2]);
    assert_eq!(d.size(), 4);
    let h = construct(&dir, "h", &["hom", "--tag", "can", &z2, &k]);
    assert_eq!(h.size(), 2);
    let f = construct(&dir, "f", &["free", "--tag", "cmsc", "--gens", "1"]);
    assert!(find_isomorphism(&f, &zoo::sign_mosaic()).is_some());
    assert!(analyze(&f).classification.is_commutative_mosaic());
    let c = construct(&dir, "cf", &["cofree", "--carrier", "a,b"]);
    assert_eq!(c.size(), 2);
    let u = construct(&dir, "u", &["unitize", &k, "--set", "1"]);
    assert_eq!(u.size(), 1);
}

#[test]
fn zoo_constructions() {
    let dir = scratch("zoo");
    let q = construct(&dir, "q", &["from-ring", path_str(&data("f9.json")), "--quotient-units", "--subgroup", "f3x"]);
    assert!(find_isomorphism(&q, &zoo::f9_hypergroup()).is_some());
    let conj = construct(&dir, "conj", &["from-group", "--construction", "conj", path_str(&data("s3.json"))]);
    assert_eq!(conj.size(), 3);
    assert!(analyze(&conj).classification.is_hypergroup());
    let orbit = construct(&dir, "orbit", &["from-group", "--construction", "orbit", path_str(&data("klein.json")), "--action", "neg"]);
    assert!(analyze(&orbit).classification.is_canonical_hypergroup());
    let dc = construct(
        &dir,
        "dc",
        &["from-group", "--construction", "dcoset", path_str(&data("s3.json")), "--subgroup", "012,021"],
    );
    assert_eq!(dc.size(), 2);
    let fano = construct(&dir, "fano", &["from-matroid", path_str(&data("fano.json"))]);
    assert_eq!(fano.size(), 8);
    let n5 = construct(&dir, "n5", &["from-lattice", path_str(&data("n5.json"))]);
    assert!(!analyze(&n5).associative);
}

#[test]
fn construct_output_is_deterministic() {
    let dir = scratch("det");
    let (v, k) = (data("klein.json"), data("krasner.json"));
    let args = ["construct", "hom", "--tag", "cmsc", path_str(&v), path_str(&k)];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let out = dir.join("h.json");
    let mut with_out = args.to_vec();
    with_out.extend_from_slice(&["-o", path_str(&out)]);
    assert!(run(&with_out).status.success());
    assert_eq!(fs::read(&out).unwrap(), a.stdout);
    // The written file is already canonical.
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(ObjectFile::parse(&text).unwrap().to_canonical(), text);
}

#[test]
fn suite_runs_selected_checks() {
    let o = run(&["paper-suite", "--only", "klein-four"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("PASS klein-four\n"), "{text}");
    assert!(text.contains("1 of 1 checks passed"));
    let o = run(&["paper-suite", "--only", "z2-boxtimes"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL z2-boxtimes"));
    assert_eq!(run(&["paper-suite", "--only", "no-such-check"]).status.code(), Some(2));
}

#[test]
fn suite_output_does_not_depend_on_jobs() {
    let only = "krasner,can-z2-k,f9-quotient,representing-objects,coequalizer-example,strict-classifier,nakano";
    let one = run(&["paper-suite", "--only", only, "--jobs", "1"]);
    let four = run(&["paper-suite", "--only", only, "--jobs", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let json = run(&["paper-suite", "--only", "krasner", "--json", "--timings"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v[0]["name"], "krasner");
    assert!(v[0]["elapsed_ms"].is_number());
    let plain: serde_json::Value = serde_json::from_slice(&run(&["paper-suite", "--only", "krasner", "--json"]).stdout).unwrap();
    assert!(plain[0].get("elapsed_ms").is_none());
}
