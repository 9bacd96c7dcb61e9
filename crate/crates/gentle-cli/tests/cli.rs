use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "gentle", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn gentle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gentle"))
        .args(args)
        .env_remove("GENTLE_FIELD_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gentle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn validate_exit_codes() {
    let ok = gentle(&["validate", &data("exm1.alg")]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok), "gentle, homologically smooth\n");

    let printed = gentle(&["validate", &data("exm2-literal.alg")]);
    assert_eq!(printed.status.code(), Some(1));
    assert!(stdout(&printed).contains("at most one arrow c such that ac not in I"));

    let completed = gentle(&["validate", &data("exm2.alg")]);
    assert_eq!(completed.status.code(), Some(1));
    assert!(stdout(&completed).contains("not homologically smooth"));

    let missing = gentle(&["validate", "no-such-file.alg"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn hom_table_text() {
    let o = gentle(&["hom", &data("exm1.alg"), "--from", "e@2", "--to", "d c^-"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0: 2\ntotal: 2\n");
}

#[test]
fn member_refutes_c_over_ab() {
    let o = gentle(&["member", &data("exm1.alg"), "--target", "e@4", "--collection", &data("exm1-AB.coll")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("not generated"), "{out}");
    assert!(out.contains("marked point c"), "{out}");
}

#[test]
fn member_writes_certificate() {
    let cert = tmp("ab.cert");
    let o = gentle(&[
        "member",
        &data("exm1.alg"),
        "--target",
        "a^- d c^-",
        "-c",
        &data("exm1-AB.coll"),
        "--cert",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&cert).unwrap();
    assert!(text.starts_with("# gentle certificate\ntarget: a^- d c^-\n"));
    assert!(text.contains("glue: "));
}

#[test]
fn json_schema_tag() {
    let o = gentle(&["--format=json", "classify", &data("exm1.alg"), "d c^-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "gentle/1");
    assert_eq!(v["verb"], "classify");
    assert_eq!(v["result"]["kind"], "exceptional");
    assert_eq!(v["result"]["self_hom"], 1);
}

#[test]
fn usage_errors() {
    assert_eq!(gentle(&["--field", "4", "bands", &data("exm1.alg")]).status.code(), Some(2));
    assert_eq!(gentle(&["hom", &data("a2.alg"), "--from", "zz", "--to", "a"]).status.code(), Some(2));
    assert_eq!(gentle(&["no-such-verb"]).status.code(), Some(2));
}

#[test]
fn field_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_gentle"))
        .args(["--format=json", "cone", &data("a2.alg"), "--from", "e@2", "--to", "e@1", "--shift", "0"])
        .env("GENTLE_FIELD_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["summands"][0]["word"], "a");
}

#[test]
fn emitted_lists_reparse() {
    // enumerated strings, a reduction and a pointed collection all feed back in
    let strings = tmp("exm1.str");
    let o = gentle(&["--max-letters", "2", "strings", &data("exm1.alg"), "--classify"]);
    std::fs::write(&strings, &o.stdout).unwrap();
    let again = gentle(&["--max-letters", "2", "strings", &data("exm1.alg"), "--classify"]);
    assert_eq!(o.stdout, again.stdout);

    let pointed = tmp("ab-pointed.coll");
    let o = gentle(&["pointed", &data("exm1.alg"), "-c", &data("exm1-AB.coll")]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(&pointed, &o.stdout).unwrap();
    let o2 = gentle(&["pointed", &data("exm1.alg"), "-c", pointed.to_str().unwrap()]);
    assert_eq!(o2.status.code(), Some(0));
    assert!(stdout(&o2).contains("basepoint: a"));

    let eq = gentle(&["equiv", &data("exm1.alg"), &data("exm1-AB.coll"), pointed.to_str().unwrap()]);
    assert_eq!(eq.status.code(), Some(0));

    let r = gentle(&["regions", &data("exm1.alg"), "-c", pointed.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert!(stdout(&r).contains("tau orbit"));
}

#[test]
fn leq_both_ways_fails() {
    let (ab, cd) = (data("exm1-AB.coll"), data("exm1-CD.coll"));
    assert_eq!(gentle(&["leq", &data("exm1.alg"), &ab, &cd]).status.code(), Some(1));
    assert_eq!(gentle(&["leq", &data("exm1.alg"), &cd, &ab]).status.code(), Some(1));
}

#[test]
fn eliminate_bands_gives_strings() {
    let o = gentle(&["eliminate-bands", &data("exm1.alg"), "-g", &data("exm1-band.str")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let strings: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(strings.len(), 2);
    assert!(!out.lines().any(|l| !l.starts_with('#') && l.starts_with('[')));
}

#[test]
fn poset_of_a2() {
    let o = gentle(&["--max-letters", "4", "poset", &data("a2.alg")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.matches("[label=").count(), 4);
    assert_eq!(out.matches(" -> ").count(), 3);
}

#[test]
fn render_is_reproducible() {
    let args = ["--max-letters", "4", "render", "hasse", &data("a2.alg"), "--reproducible"];
    let a = gentle(&args);
    let b = gentle(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("<svg"));
    let stamped = gentle(&["render", "complex", &data("exm1.alg"), "[a b^- c d^-]"]);
    assert!(stdout(&stamped).contains("generated at unix time"));
}

#[test]
fn render_star_of_pointed_collection() {
    let pointed = tmp("star.coll");
    let o = gentle(&["pointed", &data("exm1.alg"), "-c", &data("exm1-AB.coll")]);
    std::fs::write(&pointed, &o.stdout).unwrap();
    let svg = tmp("star.svg");
    let r = gentle(&[
        "render",
        "star",
        &data("exm1.alg"),
        "-c",
        pointed.to_str().unwrap(),
        "-o",
        svg.to_str().unwrap(),
        "--reproducible",
    ]);
    assert_eq!(r.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("<path") && text.contains("τ("));
}

#[test]
fn paths_between_vertices() {
    let o = gentle(&["paths", &data("exm2.alg"), "--from", "3", "--to", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3 -> 2: c.a\n");
}
