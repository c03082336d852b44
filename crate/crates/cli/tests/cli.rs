use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

use logfan::fan::FanMorphism;
use logfan::verify::{element_hom, even_quadrant, four_ray_monoid};
use logfan::wire;

fn logfan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logfan"))
        .args(args)
        .env_remove("LOGFAN_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = logfan(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    wire::parse(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn write_tmp(name: &str, v: &Value) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, wire::render(v)).unwrap();
    path
}

fn natural(n: usize) -> Value {
    let gens: Vec<Value> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            json!({ "free": v })
        })
        .collect();
    json!({ "free_dim": n, "generators": gens })
}

fn diagonal_hom() -> Value {
    json!({ "source": natural(1), "target": natural(2), "images": [{ "free": [1, 1] }] })
}

#[test]
fn hom_vertical_from_file() {
    let h = write_tmp("diagonal.json", &diagonal_hom());
    let v = ok_json(&["hom", "vertical", "--hom", h.to_str().unwrap()]);
    assert_eq!(v, json!({ "vertical": true }));
    let axis = json!({ "source": natural(1), "target": natural(2), "matrix": [[1], [0]] });
    let v = ok_json(&["hom", "vertical", "--hom", &axis.to_string()]);
    assert_eq!(v, json!({ "vertical": false }));
}

#[test]
fn even_quadrant_vertical_boundary_has_two_cones() {
    let p = even_quadrant();
    let theta = element_hom(&p, &[2, 0]).unwrap();
    let m = FanMorphism::spec_of(&theta).unwrap();
    let path = write_tmp("even_quadrant_morphism.json", &wire::morphism_to_json(&m));
    let v = ok_json(&["fan", "vertical-boundary", "--morphism", path.to_str().unwrap()]);
    assert_eq!(v["cones"], json!(2));
    assert_eq!(v["vertical"], json!(false));
    assert_eq!(v["fan"]["cones"].as_array().unwrap().len(), 1);
    let h = wire::hom_to_json(&theta).to_string();
    let w = ok_json(&["fan", "vertical-boundary", "--hom", &h]);
    assert_eq!(w, v);
}

#[test]
fn verify_acyclic_on_four_ray_example() {
    let p = write_tmp("p3d.json", &wire::monoid_to_json(&four_ray_monoid()));
    let t = write_tmp("t.json", &json!({ "free": [1, 1, 0] }));
    let v = ok_json(&[
        "topo",
        "verify-acyclic",
        "--monoid",
        p.to_str().unwrap(),
        "--theta",
        t.to_str().unwrap(),
    ]);
    assert_eq!(v["acyclic"], json!(true));
    assert_eq!(v["vertical"], json!(false));
    assert_eq!(v["note"], Value::Null);
    assert_eq!(v["vertical_subfan"]["rank"], json!(3));
}

#[test]
fn workspace_names_resolve() {
    let ws = json!({
        "monoids": { "n1": natural(1), "n2": natural(2) },
        "homs": { "diag": { "source": "n1", "target": "n2", "images": [{ "free": [1, 1] }] } },
    });
    let path = write_tmp("workspace.json", &ws);
    let w = path.to_str().unwrap();
    assert_eq!(
        ok_json(&["--workspace", w, "hom", "vertical", "--hom", "diag"]),
        json!({ "vertical": true })
    );
    let v = ok_json(&[
        "--workspace",
        w,
        "topo",
        "verify-acyclic",
        "--monoid",
        "n2",
        "--theta",
        "diag",
    ]);
    assert_eq!(v["acyclic"], json!(true));
    assert!(v["note"].is_string());
}

#[test]
fn dangling_workspace_reference_is_a_usage_error() {
    let ws = json!({ "homs": { "h": { "source": "missing", "target": "missing", "images": [] } } });
    let path = write_tmp("dangling.json", &ws);
    let out = logfan(&["--workspace", path.to_str().unwrap(), "monoid", "info", "--monoid", "h"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing"));
}

#[test]
fn exit_codes() {
    let out = logfan(&["monoid", "info", "--monoid", r#"{"free_dim": 2, "generators": ["#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1 column"));

    let out = logfan(&["monoid", "info", "--monoid", r#"{"free_dim": 2, "free_dim": 2}"#]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate key"));

    let out = logfan(&["monoid", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = logfan(&["monoid", "info", "--monoid", "/nonexistent/p.json"]);
    assert_eq!(out.status.code(), Some(2));

    let n2 = natural(2).to_string();
    let out = logfan(&[
        "topo",
        "verify-acyclic",
        "--monoid",
        &n2,
        "--theta",
        r#"{"free": [0, 0]}"#,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("theta is trivial"));

    let q = json!({ "free_dim": 1, "generators": [{ "free": [2] }, { "free": [3] }] }).to_string();
    let out = logfan(&["monoid", "dual", "--monoid", &q]);
    assert_eq!(out.status.code(), Some(0));
    let out = logfan(&["topo", "verify-acyclic", "--monoid", &q, "--theta", r#"{"free": [2]}"#]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not saturated"));
}

#[test]
fn monoid_commands() {
    let even = wire::monoid_to_json(&even_quadrant()).to_string();
    let info = ok_json(&["monoid", "info", "--monoid", &even]);
    assert_eq!(info["rank"], json!(2));
    assert_eq!(info["sharp"], json!(true));
    assert_eq!(info["saturated"], json!(true));
    assert_eq!(info["faces"], json!(4));
    let faces = ok_json(&["monoid", "faces", "--monoid", &even]);
    assert_eq!(faces["faces"].as_array().unwrap().len(), 4);

    let q = json!({ "free_dim": 1, "generators": [{ "free": [2] }, { "free": [3] }] }).to_string();
    let sat = ok_json(&["monoid", "saturate", "--monoid", &q]);
    assert_eq!(sat["monoid"]["generators"], json!([{ "free": ["1"], "tor": [] }]));

    let tor = json!({
        "free_dim": 1,
        "torsion": [2],
        "generators": [{ "free": [1], "tor": [0] }, { "free": [0], "tor": [1] }],
    })
    .to_string();
    let split = ok_json(&["monoid", "split-torsion", "--monoid", &tor]);
    assert_eq!(split["tor"], json!(["2"]));
}

#[test]
fn hom_pushout_and_cokernel() {
    let h = diagonal_hom().to_string();
    let cok = ok_json(&["hom", "cokernel", "--hom", &h]);
    assert_eq!(cok["is_group"], json!(true));
    let po = ok_json(&["hom", "pushout", "--left", &h, "--right", &h]);
    assert!(po["result"]["generators"].is_array());
    assert_eq!(ok_json(&["hom", "exact", "--hom", &h]), json!({ "exact": true }));
}

#[test]
fn fan_commands() {
    let quadrant = json!({ "rank": 2, "cones": [{ "rays": [[1, 0], [0, 1]] }] }).to_string();
    let star = ok_json(&["fan", "star", "--fan", &quadrant, "--point", "1,1"]);
    assert_eq!(star["fan"]["cones"].as_array().unwrap().len(), 2);
    let star_s = star["fan"].to_string();
    let sub = ok_json(&["fan", "is-subdivision", "--fine", &star_s, "--coarse", &quadrant]);
    assert_eq!(sub, json!({ "subdivision": true }));
    let sub = ok_json(&["fan", "is-subdivision", "--fine", &quadrant, "--coarse", &star_s]);
    assert_eq!(sub, json!({ "subdivision": false }));
    let other = ok_json(&["fan", "star", "--fan", &quadrant, "--point", "[1,2]"])["fan"].to_string();
    let refined = ok_json(&["fan", "refine", "--fan", &star_s, "--fan", &other]);
    assert_eq!(refined["fan"]["cones"].as_array().unwrap().len(), 3);

    let cone = json!({ "rank": 2, "cones": [{ "rays": [[0, 1], [3, -1]] }] }).to_string();
    let smooth = ok_json(&["fan", "smooth", "--fan", &cone]);
    assert_eq!(smooth["trace"].as_array().unwrap().last(), Some(&json!([])));

    let spec = ok_json(&["fan", "spec", "--monoid", &natural(2).to_string()]);
    assert_eq!(spec["fan"]["cones"].as_array().unwrap().len(), 1);
}

#[test]
fn topo_commands() {
    let quadrant = json!({ "rank": 2, "cones": [{ "rays": [[1, 0], [0, 1]] }] }).to_string();
    let cs = ok_json(&["topo", "cross-section", "--fan", &quadrant, "--height", "1,1"]);
    let complex = cs["complex"].to_string();
    let h = ok_json(&["topo", "homology", "--complex", &complex]);
    assert_eq!(h["acyclic"], json!(true));
    assert_eq!(h["euler_characteristic"], json!(1));

    let circle = json!({
        "vertices": [["0", "0"], ["1", "0"], ["0", "1"]],
        "cells": [[0, 1], [1, 2], [0, 2]],
    })
    .to_string();
    let h = ok_json(&["topo", "homology", "--complex", &circle]);
    assert_eq!(h["acyclic"], json!(false));
    assert_eq!(h["homology"][1], json!({ "degree": 1, "betti": 1, "torsion": [] }));
    let h = ok_json(&["topo", "homology", "--complex", &circle, "--unreduced"]);
    assert_eq!(h["homology"][0]["betti"], json!(1));

    let square = json!({
        "vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]],
        "cells": [[0, 1, 2, 3]],
    })
    .to_string();
    let h = ok_json(&["topo", "homology", "--complex", &square]);
    assert_eq!(h["triangulated"], json!(true));
    assert_eq!(h["acyclic"], json!(true));

    let out = logfan(&["topo", "cross-section", "--fan", &quadrant, "--height", "1,-1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_all_is_reproducible() {
    let a = logfan(&["verify", "all", "--quick", "--seed", "7"]);
    let b = logfan(&["verify", "all", "--quick", "--seed", "7"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let v = wire::parse(&String::from_utf8(a.stdout).unwrap()).unwrap();
    assert_eq!(v["passed"], json!(true));
    assert_eq!(v["seed"], json!("7"));
}
