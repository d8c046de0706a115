use std::path::PathBuf;
use std::process::{Command, Output};

use crystal_embed::crystal::{Cartan, CartanType};
use crystal_embed::json::Element;
use crystal_embed::kn::{KnModel, KnTableau};
use crystal_embed::tableaux::letters;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_crystal-embed"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn read_json(path: &PathBuf) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn dimensions() {
    for (args, want) in [
        (vec!["--type", "B", "--n", "3", "--spin"], "8"),
        (vec!["--type", "c", "--n", "2", "--lambda", "1,1"], "5"),
        (vec!["--type", "B", "--n", "5", "--lambda", "7/2,7/2,7/2,5/2,1/2"], "8968960"),
        (vec!["--type", "C", "--n", "4"], "1"),
    ] {
        let o = run(&[&["dim"], &args[..]].concat());
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(stdout(&o), want);
    }
    let o = run(&["dim", "--type", "C", "--n", "2", "--spin"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn worked_examples_pass() {
    let o = run(&["verify", "--suite", "paper-examples"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn usage_errors_and_cap() {
    assert_eq!(run(&["enumerate", "--type", "D", "--n", "2"]).status.code(), Some(2));
    let out = scratch("capped.json");
    let o = run(&[
        "enumerate",
        "--type",
        "C",
        "--n",
        "3",
        "--lambda",
        "2,1",
        "--model",
        "kn",
        "--cap",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["enumerate", "--type", "C", "--n", "2", "--model", "verma", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn enumeration_round_trips_and_is_deterministic() {
    let a = scratch("b2.json");
    let b = scratch("b2-again.json");
    for path in [&a, &b] {
        let o = run(&[
            "enumerate",
            "--type",
            "B",
            "--n",
            "2",
            "--lambda",
            "3/2,1/2",
            "--model",
            "kn",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let g = read_json(&a);
    let nodes = g["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 16);
    for node in nodes {
        assert_eq!(&Element::from_json(node).unwrap().to_json(), node);
    }

    let dot = scratch("b2.dot");
    let o = run(&[
        "enumerate",
        "--type",
        "B",
        "--n",
        "2",
        "--spin",
        "--lambda",
        "1",
        "--model",
        "spinor",
        "--format",
        "dot",
        "--out",
        dot.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph"));

    let mapped = scratch("b2-xi.json");
    let o = run(&["map", "--which", "xi", "--in", a.to_str().unwrap(), "--out", mapped.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let m = read_json(&mapped);
    assert_eq!(m["nodes"].as_array().unwrap().len(), 16);
    assert_eq!(m["edges"], g["edges"]);
    assert!(m["nodes"].as_array().unwrap().iter().all(|d| d["model"] == "lusztig"));
}

#[test]
fn xi_on_a_c5_tableau() {
    let model = KnModel::new(Cartan::new(CartanType::C, 5), &[4, 4, 3, 2], false);
    let t = KnTableau {
        cols: vec![letters(&[4, -4, -2, -1]), letters(&[1, 5, -5, -2]), letters(&[3, -5, -2]), letters(&[5, -3])],
        spin: None,
    };
    let input = scratch("c5.json");
    std::fs::write(&input, Element::Kn(model, t).to_json().to_string()).unwrap();
    let out = scratch("c5-xi.json");
    let o = run(&["map", "--which", "xi", "--in", input.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let d = read_json(&out);
    let entries = |key: &str| -> Vec<(u64, u64, u64)> {
        d[key]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e[0].as_u64().unwrap(), e[1].as_u64().unwrap(), e[2].as_u64().unwrap()))
            .filter(|e| e.2 > 0)
            .collect()
    };
    let mut plus = entries("dplus");
    plus.sort();
    assert_eq!(plus, vec![(1, 3, 1), (2, 2, 1), (2, 4, 3), (3, 5, 1), (4, 5, 1), (5, 5, 1)]);
    let mut minus = entries("dminus");
    minus.sort();
    assert_eq!(minus, vec![(1, 3, 1), (1, 4, 1), (1, 5, 1), (2, 4, 1), (2, 5, 1), (3, 5, 2)]);
}

#[test]
fn seeded_verification_is_reproducible() {
    let args = ["verify", "--suite", "lusztig", "--type", "C", "--n", "2", "--samples", "50", "--seed", "9"];
    let a = run(&args);
    assert!(a.status.success());
    let strip = |o: &Output| stdout(o).lines().map(|l| l.split(" [").next().unwrap().to_string()).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&run(&args)));
}
