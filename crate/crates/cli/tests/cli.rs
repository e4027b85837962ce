use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const K4: &str = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const P6: &str = "p edge 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n";
const P5: &str = "p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n";

fn shield_text() -> String {
    let mut s = String::from("c shield\np edge 12 15\n");
    for i in 1..=12 {
        s += &format!("e {} {}\n", i, i % 12 + 1);
    }
    s + "e 2 4\ne 6 8\ne 10 12\n"
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn peds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peds")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn shield_by_oracle() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "shield.txt", &shield_text());
    let out = peds(&["solve", s(&f), "--class", "oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["outcome"]["weight"], 3.0);
    assert_eq!(r["outcome"]["kind"], "Efficient");
    assert_eq!(r["outcome"]["edges"], serde_json::json!([[2, 4], [6, 8], [10, 12]]));
    assert!(r.get("wall_ms").is_none());
}

#[test]
fn k4_and_p6_under_p5_free_class() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.txt", K4);
    let out = peds(&["solve", s(&k4), "--class", "p5-free"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!((r["outcome"]["weight"].as_f64(), r["outcome"]["kind"].as_str()), (Some(6.0), Some("Trivial")));

    let p6 = write(&dir, "p6.txt", P6);
    let out = peds(&["solve", s(&p6), "--class", "p5-free"]);
    assert_eq!(out.status.code(), Some(2));
    let r = json(&out);
    assert_eq!(r["outcome"]["status"], "p5_certificate");
    let cert: Vec<String> = r["outcome"]["vertices"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
    let check = peds(&["verify", s(&p6), "--p5", &cert.join(",")]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(json(&check)["outcome"]["induced_p5"], true);
}

#[test]
fn not_in_class_exit_code() {
    let dir = TempDir::new().unwrap();
    let p6 = write(&dir, "p6.txt", P6);
    let out = peds(&["solve", s(&p6), "--class", "cubic-claw-free"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["outcome"]["status"], "not_in_class");
}

#[test]
fn errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "p edge 2 1\ne 1 3\n");
    assert_eq!(peds(&["solve", s(&bad)]).status.code(), Some(1));
    assert_eq!(peds(&["solve", "/nonexistent/file"]).status.code(), Some(1));
    assert_eq!(peds(&["gen", "cubic", "--n", "5"]).status.code(), Some(1));
    assert_eq!(peds(&["bench", ""]).status.code(), Some(1));
}

#[test]
fn generated_split_graph_is_solved_optimally() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("split.txt");
    assert!(peds(&["gen", "split", "--n", "12", "--seed", "7", "--out", s(&f)]).status.success());
    let out = peds(&["solve", s(&f), "--class", "p5-free"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["outcome"]["status"], "optimal");
}

#[test]
fn generated_inflation_is_cubic_claw_free() {
    let out = peds(&["gen", "inflate", "--base", "K4"]);
    assert!(out.status.success());
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "i.txt", &String::from_utf8(out.stdout).unwrap());
    let r = json(&peds(&["solve", s(&f)]));
    assert_eq!(r["instance"]["cubic_claw_free"], true);
    assert_eq!(r["solver"], "cubic-claw-free");
}

#[test]
fn same_seed_same_bytes() {
    let a = peds(&["gen", "cubic", "--n", "20", "--seed", "4", "--weights=-3:3"]);
    let b = peds(&["gen", "cubic", "--n", "20", "--seed", "4", "--weights=-3:3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let dir = TempDir::new().unwrap();
    let f = write(&dir, "g.txt", &String::from_utf8(a.stdout).unwrap());
    let x = peds(&["solve", s(&f), "--class", "p5-free"]);
    let y = peds(&["solve", s(&f), "--class", "p5-free"]);
    assert_eq!(x.stdout, y.stdout);
}

#[test]
fn verify_and_enumerate() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "shield.txt", &shield_text());
    let r = json(&peds(&["enumerate", s(&f)]));
    let sizes: Vec<u64> =
        r["outcome"]["sets"].as_array().unwrap().iter().map(|x| x["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, vec![3, 7, 7, 7, 15]);

    let bad = peds(&["verify", s(&f), "--edges", "1-2"]);
    assert_eq!(bad.status.code(), Some(4));
    assert_eq!(json(&bad)["outcome"]["peds"], false);
}

#[test]
fn gadgets_and_classification() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.txt", K4);
    let m = peds(&["gadget", "magnify", s(&k4)]);
    assert!(String::from_utf8(m.stdout).unwrap().starts_with("p edge 48 66\n"));
    let r = json(&peds(&["gadget", "subdivide", s(&k4), "--k", "1", "--check"]));
    assert_eq!(r["outcome"]["agree"], true);

    let p5 = write(&dir, "p5.txt", P5);
    let r = json(&peds(&["classify", "--h", s(&p5), "--d", "3"]));
    assert_eq!(r["outcome"]["Polynomial"]["q"], 5);
    assert_eq!(r["outcome"]["Polynomial"]["component_bound"], 40);
}

#[test]
fn hfree_solver() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.txt", K4);
    let p5 = write(&dir, "p5.txt", P5);
    let out = peds(&["solve", s(&k4), "--class", "hfree", "--h", s(&p5), "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["outcome"]["weight"], 6.0);
    assert_eq!(peds(&["solve", s(&k4), "--class", "hfree"]).status.code(), Some(1));
}

#[test]
fn timing_is_opt_in() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.txt", K4);
    let r = json(&peds(&["solve", s(&k4), "--timing"]));
    assert!(r["wall_ms"].is_number());
}
