//! JSON wire format.
//!
//! Integers are written as decimal strings and read from either strings or
//! JSON integers; rationals are `"num/den"` strings. Output objects have
//! sorted keys. Input objects with a repeated key are rejected.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserialize, Deserializer, MapAccess, SeqAccess, Visitor};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::error::Error;
use crate::fan::{Cone, Fan, FanMorphism};
use crate::monoid::{Ambient, AmbientMap, Elem, FsMonoid, MonoidHom};
use crate::topo::{Homology, HomologyProfile, PolyComplex};
use crate::zlin::{parse_rat, rat_to_string, Int, IntMatrix, Rat};

#[derive(Debug, Error)]
pub enum WireError {
    /// Text that is not JSON; the message carries line and column.
    #[error("malformed JSON: {0}")]
    Syntax(String),
    /// JSON of the wrong shape, located by a path like `$.cones[2].rays`.
    #[error("{path}: {msg}")]
    Format { path: String, msg: String },
    #[error("{0}")]
    Name(String),
    /// Well-formed input rejected by the library.
    #[error(transparent)]
    Domain(#[from] Error),
}

pub type WireResult<T> = std::result::Result<T, WireError>;

fn format_err<T>(path: &str, msg: impl Into<String>) -> WireResult<T> {
    Err(WireError::Format {
        path: path.to_string(),
        msg: msg.into(),
    })
}

struct Strict(Value);

impl<'de> Deserialize<'de> for Strict {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(StrictVisitor)
    }
}

struct StrictVisitor;

impl<'de> Visitor<'de> for StrictVisitor {
    type Value = Strict;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a JSON value")
    }

    fn visit_bool<E>(self, v: bool) -> std::result::Result<Strict, E> {
        Ok(Strict(Value::Bool(v)))
    }

    fn visit_i64<E>(self, v: i64) -> std::result::Result<Strict, E> {
        Ok(Strict(Value::from(v)))
    }

    fn visit_u64<E>(self, v: u64) -> std::result::Result<Strict, E> {
        Ok(Strict(Value::from(v)))
    }

    fn visit_f64<E>(self, v: f64) -> std::result::Result<Strict, E> {
        Ok(Strict(Value::from(v)))
    }

    fn visit_str<E>(self, v: &str) -> std::result::Result<Strict, E> {
        Ok(Strict(Value::String(v.to_string())))
    }

    fn visit_unit<E>(self) -> std::result::Result<Strict, E> {
        Ok(Strict(Value::Null))
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Strict, A::Error> {
        let mut out = Vec::new();
        while let Some(Strict(v)) = seq.next_element()? {
            out.push(v);
        }
        Ok(Strict(Value::Array(out)))
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Strict, A::Error> {
        let mut out = Map::new();
        while let Some(k) = map.next_key::<String>()? {
            if out.contains_key(&k) {
                return Err(de::Error::custom(format!("duplicate key `{k}`")));
            }
            let Strict(v) = map.next_value()?;
            out.insert(k, v);
        }
        Ok(Strict(Value::Object(out)))
    }
}

/// Parses JSON text, rejecting repeated keys.
pub fn parse(text: &str) -> WireResult<Value> {
    serde_json::from_str::<Strict>(text)
        .map(|s| s.0)
        .map_err(|e| WireError::Syntax(e.to_string()))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> WireResult<&'a Value> {
    match v {
        Value::Object(m) => match m.get(key) {
            Some(x) => Ok(x),
            None => format_err(path, format!("missing field `{key}`")),
        },
        _ => format_err(path, "expected an object"),
    }
}

fn opt_field<'a>(v: &'a Value, key: &str) -> Option<&'a Value> {
    v.as_object().and_then(|m| m.get(key))
}

fn array<'a>(v: &'a Value, path: &str) -> WireResult<&'a [Value]> {
    match v {
        Value::Array(a) => Ok(a),
        _ => format_err(path, "expected an array"),
    }
}

fn usize_from(v: &Value, path: &str) -> WireResult<usize> {
    int_from_json(v, path)?
        .to_usize()
        .map_or_else(|| format_err(path, "expected a nonnegative integer"), Ok)
}

pub fn int_to_json(x: &Int) -> Value {
    Value::String(x.to_string())
}

pub fn int_from_json(v: &Value, path: &str) -> WireResult<Int> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Int::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Int::from(u))
            } else {
                format_err(path, "expected an integer (write large integers as strings)")
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<Int>()
            .map_or_else(|_| format_err(path, format!("`{s}` is not an integer")), Ok),
        _ => format_err(path, "expected an integer"),
    }
}

pub fn ints_to_json(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

pub fn ints_from_json(v: &Value, path: &str) -> WireResult<Vec<Int>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| int_from_json(x, &format!("{path}[{i}]")))
        .collect()
}

fn rat_from_json(v: &Value, path: &str) -> WireResult<Rat> {
    match v {
        Value::String(s) => parse_rat(s).map_or_else(|| format_err(path, format!("`{s}` is not a rational")), Ok),
        _ => int_from_json(v, path).map(Rat::from_integer),
    }
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| ints_to_json(r)).collect())
}

/// A matrix given by rows; `cols` fixes the width when there are no rows.
pub fn matrix_from_json(v: &Value, cols: usize, path: &str) -> WireResult<IntMatrix> {
    let rows = vec_list_from_json(v, path)?;
    for (i, r) in rows.iter().enumerate() {
        if r.len() != cols {
            return format_err(
                &format!("{path}[{i}]"),
                format!("expected {cols} entries, got {}", r.len()),
            );
        }
    }
    Ok(IntMatrix::from_rows(cols, rows))
}

fn vec_list_from_json(v: &Value, path: &str) -> WireResult<Vec<Vec<Int>>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, r)| ints_from_json(r, &format!("{path}[{i}]")))
        .collect()
}

fn vec_list_to_json(vs: &[Vec<Int>]) -> Value {
    Value::Array(vs.iter().map(|v| ints_to_json(v)).collect())
}

pub fn elem_to_json(e: &Elem) -> Value {
    json!({ "free": ints_to_json(&e.free), "tor": ints_to_json(&e.tor) })
}

/// An element; `tor` may be omitted for torsion-free ambients.
pub fn elem_from_json(v: &Value, path: &str) -> WireResult<Elem> {
    let free = ints_from_json(field(v, "free", path)?, &format!("{path}.free"))?;
    let tor = match opt_field(v, "tor") {
        Some(t) => ints_from_json(t, &format!("{path}.tor"))?,
        None => vec![],
    };
    Ok(Elem::new(free, tor))
}

/// Fills in omitted torsion parts and checks the element against `amb`.
fn fit_elem(amb: &Ambient, mut e: Elem, path: &str) -> WireResult<Elem> {
    if e.tor.is_empty() {
        e.tor = vec![Int::zero(); amb.tor_len()];
    }
    if let Err(err) = amb.check(&e) {
        return format_err(path, err.to_string());
    }
    Ok(amb.normalize(e))
}

pub fn monoid_to_json(p: &FsMonoid) -> Value {
    json!({
        "free_dim": p.free_dim(),
        "torsion": ints_to_json(&p.ambient().torsion),
        "generators": Value::Array(p.gens().iter().map(elem_to_json).collect()),
    })
}

pub fn monoid_from_json(v: &Value, path: &str) -> WireResult<FsMonoid> {
    let free_dim = usize_from(field(v, "free_dim", path)?, &format!("{path}.free_dim"))?;
    let torsion = match opt_field(v, "torsion") {
        Some(t) => ints_from_json(t, &format!("{path}.torsion"))?,
        None => vec![],
    };
    let amb = Ambient::new(free_dim, torsion)?;
    let gpath = format!("{path}.generators");
    let gens = array(field(v, "generators", path)?, &gpath)?
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let p = format!("{gpath}[{i}]");
            fit_elem(&amb, elem_from_json(g, &p)?, &p)
        })
        .collect::<WireResult<Vec<Elem>>>()?;
    Ok(FsMonoid::new(amb, gens)?)
}

/// Homs carry generator images, plus the ambient matrices when the map
/// extends to the ambient groups.
pub fn hom_to_json(h: &MonoidHom) -> Value {
    let mut m = Map::new();
    m.insert("source".into(), monoid_to_json(h.source()));
    m.insert("target".into(), monoid_to_json(h.target()));
    m.insert(
        "images".into(),
        Value::Array(h.images().iter().map(elem_to_json).collect()),
    );
    if let Some(a) = h.ambient_map() {
        m.insert("matrix".into(), matrix_to_json(&a.free));
        m.insert("torsion_matrix".into(), matrix_to_json(&a.tor));
    }
    Value::Object(m)
}

/// A hom from `matrix` (with optional `torsion_matrix`) or from `images`.
/// `source` and `target` are monoid objects or workspace names.
pub fn hom_from_json(v: &Value, ws: &Workspace, path: &str) -> WireResult<MonoidHom> {
    let source = ws.monoid_ref(field(v, "source", path)?, &format!("{path}.source"))?;
    let target = ws.monoid_ref(field(v, "target", path)?, &format!("{path}.target"))?;
    if let Some(mv) = opt_field(v, "matrix") {
        let (sa, ta) = (source.ambient().clone(), target.ambient().clone());
        let free = matrix_from_json(mv, sa.free_dim, &format!("{path}.matrix"))?;
        if free.rows() != ta.free_dim {
            return format_err(
                &format!("{path}.matrix"),
                format!("expected {} rows, got {}", ta.free_dim, free.rows()),
            );
        }
        let tor = match opt_field(v, "torsion_matrix") {
            Some(t) => matrix_from_json(t, sa.flat_len(), &format!("{path}.torsion_matrix"))?,
            None => IntMatrix::zeros(ta.tor_len(), sa.flat_len()),
        };
        let map = AmbientMap::new(sa, ta, free, tor)?;
        return Ok(MonoidHom::from_ambient(source, target, map)?);
    }
    let ipath = format!("{path}.images");
    let images = array(field(v, "images", path)?, &ipath)?
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let p = format!("{ipath}[{i}]");
            fit_elem(target.ambient(), elem_from_json(g, &p)?, &p)
        })
        .collect::<WireResult<Vec<Elem>>>()?;
    Ok(MonoidHom::new(source, target, images)?.with_extension())
}

/// `θ: N -> p` from a hom object, a hom name, or the element `θ(1)`.
pub fn theta_from_json(v: &Value, p: &FsMonoid, ws: &Workspace, path: &str) -> WireResult<MonoidHom> {
    if v.is_string() || opt_field(v, "source").is_some() {
        return ws.hom_ref(v, path);
    }
    let x = fit_elem(p.ambient(), elem_from_json(v, path)?, path)?;
    Ok(MonoidHom::new(FsMonoid::natural(1), p.clone(), vec![x])?.with_extension())
}

/// Maximal cones only; the faces are implied.
pub fn fan_to_json(f: &Fan) -> Value {
    let cones: Vec<Value> = f
        .maximal()
        .iter()
        .filter(|&&i| !f.cones()[i].is_empty())
        .map(|&i| {
            let rays: Vec<Vec<Int>> = f.cones()[i].iter().map(|&r| f.rays()[r].clone()).collect();
            json!({ "rays": vec_list_to_json(&rays) })
        })
        .collect();
    json!({ "rank": f.rank(), "cones": cones })
}

pub fn fan_from_json(v: &Value, path: &str) -> WireResult<Fan> {
    let rank = usize_from(field(v, "rank", path)?, &format!("{path}.rank"))?;
    let cpath = format!("{path}.cones");
    let mut cones = Vec::new();
    for (i, c) in array(field(v, "cones", path)?, &cpath)?.iter().enumerate() {
        let p = format!("{cpath}[{i}]");
        let rays = vec_list_from_json(field(c, "rays", &p)?, &format!("{p}.rays"))?;
        if let Some(j) = rays.iter().position(|r| r.len() != rank) {
            return format_err(&format!("{p}.rays[{j}]"), format!("expected {rank} entries"));
        }
        cones.push(Cone::new(rank, &rays));
    }
    Ok(Fan::from_cones(rank, &cones)?)
}

pub fn morphism_to_json(m: &FanMorphism) -> Value {
    json!({
        "source": fan_to_json(m.source()),
        "target": fan_to_json(m.target()),
        "matrix": matrix_to_json(m.matrix()),
    })
}

pub fn morphism_from_json(v: &Value, ws: &Workspace, path: &str) -> WireResult<FanMorphism> {
    let source = ws.fan_ref(field(v, "source", path)?, &format!("{path}.source"))?;
    let target = ws.fan_ref(field(v, "target", path)?, &format!("{path}.target"))?;
    let mpath = format!("{path}.matrix");
    let matrix = matrix_from_json(field(v, "matrix", path)?, source.rank(), &mpath)?;
    if matrix.rows() != target.rank() {
        return format_err(
            &mpath,
            format!("expected {} rows, got {}", target.rank(), matrix.rows()),
        );
    }
    match FanMorphism::check(&source, &target, &matrix)? {
        Some(m) => Ok(m),
        None => Err(Error::InvalidFan("the map does not carry cones into cones".into()).into()),
    }
}

pub fn complex_to_json(c: &PolyComplex) -> Value {
    let vertices: Vec<Value> = c
        .vertices()
        .iter()
        .map(|v| Value::Array(v.iter().map(|x| Value::String(rat_to_string(x))).collect()))
        .collect();
    let cells: Vec<Value> = c.cells().iter().map(|s| json!(s)).collect();
    json!({ "vertices": vertices, "cells": cells })
}

pub fn complex_from_json(v: &Value, path: &str) -> WireResult<PolyComplex> {
    let vpath = format!("{path}.vertices");
    let vertices = array(field(v, "vertices", path)?, &vpath)?
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let pp = format!("{vpath}[{i}]");
            array(p, &pp)?
                .iter()
                .enumerate()
                .map(|(j, x)| rat_from_json(x, &format!("{pp}[{j}]")))
                .collect::<WireResult<Vec<Rat>>>()
        })
        .collect::<WireResult<Vec<Vec<Rat>>>>()?;
    let cpath = format!("{path}.cells");
    let cells = array(field(v, "cells", path)?, &cpath)?
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let cp = format!("{cpath}[{i}]");
            array(c, &cp)?
                .iter()
                .enumerate()
                .map(|(j, x)| usize_from(x, &format!("{cp}[{j}]")))
                .collect::<WireResult<Vec<usize>>>()
        })
        .collect::<WireResult<Vec<Vec<usize>>>>()?;
    Ok(PolyComplex::new(vertices, cells)?)
}

fn profile_to_json(p: &HomologyProfile) -> Value {
    Value::Array(
        p.groups
            .iter()
            .map(|g| json!({ "degree": g.degree, "betti": g.betti, "torsion": ints_to_json(&g.torsion) }))
            .collect(),
    )
}

/// `{"homology": [...], "reduced": bool, "acyclic": bool}`, or the string
/// `"empty"` in both slots for the empty complex.
pub fn homology_to_json(h: &Homology, reduced: bool) -> Value {
    match h {
        Homology::Empty => json!({ "homology": "empty", "reduced": reduced, "acyclic": "empty" }),
        Homology::Profile(p) => json!({
            "homology": profile_to_json(p),
            "reduced": p.reduced,
            "acyclic": p.is_acyclic(),
        }),
    }
}

/// Named objects. Names are unique across all kinds; homs refer to
/// monoids and morphisms to fans, either inline or by name.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    monoids: BTreeMap<String, FsMonoid>,
    homs: BTreeMap<String, MonoidHom>,
    fans: BTreeMap<String, Fan>,
    morphisms: BTreeMap<String, FanMorphism>,
}

impl Workspace {
    pub fn new() -> Workspace {
        Workspace::default()
    }

    /// Loads `{"monoids": {..}, "homs": {..}, "fans": {..}, "morphisms": {..}}`;
    /// every section is optional.
    pub fn load(v: &Value) -> WireResult<Workspace> {
        let Value::Object(top) = v else {
            return format_err("$", "expected an object");
        };
        if let Some(k) = top
            .keys()
            .find(|k| !["monoids", "homs", "fans", "morphisms"].contains(&k.as_str()))
        {
            return format_err("$", format!("unknown section `{k}`"));
        }
        let mut ws = Workspace::new();
        let section = |key: &str| -> WireResult<Vec<(String, Value)>> {
            match top.get(key) {
                None => Ok(vec![]),
                Some(Value::Object(m)) => Ok(m.iter().map(|(k, v)| (k.clone(), v.clone())).collect()),
                Some(_) => format_err(&format!("$.{key}"), "expected an object of named entries"),
            }
        };
        for (name, v) in section("monoids")? {
            let m = monoid_from_json(&v, &format!("$.monoids.{name}"))?;
            ws.claim(&name)?;
            ws.monoids.insert(name, m);
        }
        for (name, v) in section("fans")? {
            let f = fan_from_json(&v, &format!("$.fans.{name}"))?;
            ws.claim(&name)?;
            ws.fans.insert(name, f);
        }
        for (name, v) in section("homs")? {
            let h = hom_from_json(&v, &ws, &format!("$.homs.{name}"))?;
            ws.claim(&name)?;
            ws.homs.insert(name, h);
        }
        for (name, v) in section("morphisms")? {
            let m = morphism_from_json(&v, &ws, &format!("$.morphisms.{name}"))?;
            ws.claim(&name)?;
            ws.morphisms.insert(name, m);
        }
        Ok(ws)
    }

    fn claim(&self, name: &str) -> WireResult<()> {
        if self.contains(name) {
            return Err(WireError::Name(format!("duplicate name `{name}`")));
        }
        Ok(())
    }

    pub fn contains(&self, name: &str) -> bool {
        self.monoids.contains_key(name)
            || self.homs.contains_key(name)
            || self.fans.contains_key(name)
            || self.morphisms.contains_key(name)
    }

    pub fn insert_monoid(&mut self, name: &str, p: FsMonoid) -> WireResult<()> {
        self.claim(name)?;
        self.monoids.insert(name.to_string(), p);
        Ok(())
    }

    pub fn insert_fan(&mut self, name: &str, f: Fan) -> WireResult<()> {
        self.claim(name)?;
        self.fans.insert(name.to_string(), f);
        Ok(())
    }

    pub fn monoid(&self, name: &str) -> Option<&FsMonoid> {
        self.monoids.get(name)
    }

    pub fn hom(&self, name: &str) -> Option<&MonoidHom> {
        self.homs.get(name)
    }

    pub fn fan(&self, name: &str) -> Option<&Fan> {
        self.fans.get(name)
    }

    pub fn morphism(&self, name: &str) -> Option<&FanMorphism> {
        self.morphisms.get(name)
    }

    pub fn names(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self
            .monoids
            .keys()
            .chain(self.homs.keys())
            .chain(self.fans.keys())
            .chain(self.morphisms.keys())
            .map(String::as_str)
            .collect();
        out.sort_unstable();
        out
    }

    /// A monoid given inline or by name.
    pub fn monoid_ref(&self, v: &Value, path: &str) -> WireResult<FsMonoid> {
        match v {
            Value::String(name) => self
                .monoids
                .get(name)
                .cloned()
                .ok_or_else(|| WireError::Name(format!("{path}: no monoid named `{name}`"))),
            _ => monoid_from_json(v, path),
        }
    }

    /// A fan given inline or by name.
    pub fn fan_ref(&self, v: &Value, path: &str) -> WireResult<Fan> {
        match v {
            Value::String(name) => self
                .fans
                .get(name)
                .cloned()
                .ok_or_else(|| WireError::Name(format!("{path}: no fan named `{name}`"))),
            _ => fan_from_json(v, path),
        }
    }

    /// A hom given inline or by name.
    pub fn hom_ref(&self, v: &Value, path: &str) -> WireResult<MonoidHom> {
        match v {
            Value::String(name) => self
                .homs
                .get(name)
                .cloned()
                .ok_or_else(|| WireError::Name(format!("{path}: no hom named `{name}`"))),
            _ => hom_from_json(v, self, path),
        }
    }

    /// A fan morphism given inline or by name.
    pub fn morphism_ref(&self, v: &Value, path: &str) -> WireResult<FanMorphism> {
        match v {
            Value::String(name) => self
                .morphisms
                .get(name)
                .cloned()
                .ok_or_else(|| WireError::Name(format!("{path}: no morphism named `{name}`"))),
            _ => morphism_from_json(v, self, path),
        }
    }

    pub fn to_json(&self) -> Value {
        let named =
            |pairs: Vec<(&String, Value)>| Value::Object(pairs.into_iter().map(|(k, v)| (k.clone(), v)).collect());
        json!({
            "monoids": named(self.monoids.iter().map(|(k, v)| (k, monoid_to_json(v))).collect()),
            "homs": named(self.homs.iter().map(|(k, v)| (k, hom_to_json(v))).collect()),
            "fans": named(self.fans.iter().map(|(k, v)| (k, fan_to_json(v))).collect()),
            "morphisms": named(self.morphisms.iter().map(|(k, v)| (k, morphism_to_json(v))).collect()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_accept_numbers_and_strings() {
        let v = parse(r#"[1, "-2", "123456789012345678901234567890"]"#).unwrap();
        let xs = ints_from_json(&v, "$").unwrap();
        assert_eq!(xs[1], Int::from(-2));
        assert_eq!(xs[2].to_string(), "123456789012345678901234567890");
        assert!(matches!(
            ints_from_json(&parse("[1.5]").unwrap(), "$"),
            Err(WireError::Format { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let e = parse("{\n  \"a\": [1,\n}").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        let e = parse(r#"{"a": 1, "a": 2}"#).unwrap_err();
        assert!(e.to_string().contains("duplicate key"), "{e}");
    }

    #[test]
    fn monoid_round_trip() {
        let text = r#"{"free_dim": 1, "torsion": [2],
            "generators": [{"free": [1], "tor": [1]}, {"free": [0], "tor": [3]}]}"#;
        let p = monoid_from_json(&parse(text).unwrap(), "$").unwrap();
        assert_eq!(p.gens()[1], Elem::from_i64(&[0], &[1]));
        let again = monoid_from_json(&monoid_to_json(&p), "$").unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn hom_by_matrix_and_names() {
        let ws = Workspace::load(
            &parse(
                r#"{"monoids": {"n": {"free_dim": 1, "generators": [{"free": [1]}]},
                            "n2": {"free_dim": 2, "generators": [{"free": [1, 0]}, {"free": [0, 1]}]}},
                "homs": {"diag": {"source": "n", "target": "n2", "matrix": [[1], [1]]}}}"#,
            )
            .unwrap(),
        )
        .unwrap();
        let h = ws.hom("diag").unwrap();
        assert!(h.is_vertical());
        let back = hom_from_json(&hom_to_json(h), &ws, "$").unwrap();
        assert_eq!(back.images(), h.images());
    }

    #[test]
    fn workspace_names_are_checked() {
        let dup = r#"{"monoids": {"a": {"free_dim": 0, "generators": []}},
                      "fans": {"a": {"rank": 1, "cones": []}}}"#;
        assert!(matches!(Workspace::load(&parse(dup).unwrap()), Err(WireError::Name(_))));
        let dangling = r#"{"homs": {"h": {"source": "x", "target": "x", "images": []}}}"#;
        assert!(matches!(
            Workspace::load(&parse(dangling).unwrap()),
            Err(WireError::Name(_))
        ));
    }

    #[test]
    fn fan_and_complex_round_trip() {
        let f = fan_from_json(
            &parse(r#"{"rank": 2, "cones": [{"rays": [[1, 0], [1, 1]]}, {"rays": [[1, 1], [0, 1]]}]}"#).unwrap(),
            "$",
        )
        .unwrap();
        assert_eq!(f.len(), 6);
        assert_eq!(fan_from_json(&fan_to_json(&f), "$").unwrap(), f);
        let c = complex_from_json(
            &parse(r#"{"vertices": [["1/2", "1/2"], [1, "0"]], "cells": [[0], [1], [1, 0]]}"#).unwrap(),
            "$",
        )
        .unwrap();
        assert_eq!(complex_from_json(&complex_to_json(&c), "$").unwrap(), c);
    }
}
