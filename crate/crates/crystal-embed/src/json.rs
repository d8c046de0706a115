//! JSON encodings of tableaux, model elements and crystal graphs.
//!
//! Letters are signed integers (`k`, `−k` for `k̄`, `0`). Tableau rows are
//! listed top to bottom, each left to right; rotated shapes are right
//! aligned.

use serde_json::{json, Value};
use thiserror::Error;

use crate::crystal::{Cartan, CartanType};
use crate::kn::{KnModel, KnTableau};
use crate::lusztig::{FoldedDatum, LusztigModel};
use crate::spinor::{SpinorModel, SpinorTuple, TwoCol};
use crate::tableaux::{ints, is_partition, Column, Letter, RotTableau, Tableau, Variant};
use crate::verma::{VermaElem, VermaModel};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("missing or malformed field `{0}`")]
    Field(&'static str),
    #[error("unknown model `{0}`")]
    Model(String),
    #[error("letter {0} is outside the alphabet for n = {1}")]
    Letter(i32, usize),
    #[error("invalid element: {0}")]
    Invalid(String),
}

type Result<T> = std::result::Result<T, JsonError>;

fn field<'a>(v: &'a Value, name: &'static str) -> Result<&'a Value> {
    v.get(name).ok_or(JsonError::Field(name))
}

fn as_usize(v: &Value, name: &'static str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or(JsonError::Field(name))
}

fn usize_list(v: &Value, name: &'static str) -> Result<Vec<usize>> {
    v.as_array().ok_or(JsonError::Field(name))?.iter().map(|x| as_usize(x, name)).collect()
}

fn letter_list(v: &Value, name: &'static str, n: usize) -> Result<Column> {
    v.as_array()
        .ok_or(JsonError::Field(name))?
        .iter()
        .map(|x| {
            let k = x.as_i64().ok_or(JsonError::Field(name))? as i32;
            if k.unsigned_abs() as usize > n {
                return Err(JsonError::Letter(k, n));
            }
            Ok(Letter(k))
        })
        .collect()
}

fn rows_of(v: &Value, name: &'static str, n: usize) -> Result<Vec<Column>> {
    v.as_array().ok_or(JsonError::Field(name))?.iter().map(|r| letter_list(r, name, n)).collect()
}

fn rows_json(rows: &[Vec<Letter>]) -> Value {
    json!(rows.iter().map(|r| ints(r)).collect::<Vec<_>>())
}

fn cartan_of(v: &Value) -> Result<Cartan> {
    let ty: CartanType = field(v, "type")?.as_str().and_then(|s| s.parse().ok()).ok_or(JsonError::Field("type"))?;
    let n = as_usize(field(v, "n")?, "n")?;
    if n == 0 {
        return Err(JsonError::Field("n"));
    }
    Ok(Cartan::new(ty, n))
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::J => "J",
        Variant::Jx => "Jx",
        Variant::Pos => "Pos",
        Variant::Neg => "Neg",
    }
}

/// A tableau record. `rows` are top to bottom, left to right.
pub fn tableau_json(n: usize, variant: Variant, shape: &[usize], rotated: bool, rows: &[Vec<Letter>]) -> Value {
    json!({
        "alphabet": {"n": n, "variant": variant_name(variant)},
        "shape": shape,
        "rotated": rotated,
        "rows": rows_json(rows),
    })
}

fn pad(mu: &[usize], n: usize) -> Vec<usize> {
    let mut out = mu.to_vec();
    out.resize(n.max(mu.len()), 0);
    out
}

/// `lambda` with trailing zeros removed, checked against the model.
fn shape_field(v: &Value, cartan: Cartan, spin: bool) -> Result<Vec<usize>> {
    let mut mu = usize_list(field(v, "lambda")?, "lambda")?;
    while mu.last() == Some(&0) {
        mu.pop();
    }
    if !is_partition(&mu) || mu.len() > cartan.n {
        return Err(JsonError::Invalid(format!("lambda {mu:?} is not a partition with at most n parts")));
    }
    if spin && cartan.ty != CartanType::B {
        return Err(JsonError::Invalid("spin shapes exist only in type B".into()));
    }
    Ok(mu)
}

/// An element of one of the four models together with the model itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Kn(KnModel, KnTableau),
    Spinor(SpinorModel, SpinorTuple),
    Verma(VermaModel, VermaElem),
    Lusztig(LusztigModel, FoldedDatum),
}

impl Element {
    pub fn model_name(&self) -> &'static str {
        match self {
            Element::Kn(..) => "kn",
            Element::Spinor(..) => "spinor",
            Element::Verma(..) => "verma",
            Element::Lusztig(..) => "lusztig",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Element::Kn(m, t) => kn_json(m, t),
            Element::Spinor(m, t) => spinor_json(m, t),
            Element::Verma(m, v) => verma_json(m, v),
            Element::Lusztig(m, d) => lusztig_json(m, d),
        }
    }

    pub fn from_json(v: &Value) -> Result<Element> {
        match field(v, "model")?.as_str() {
            Some("kn") => kn_from_json(v).map(|(m, t)| Element::Kn(m, t)),
            Some("spinor") => spinor_from_json(v).map(|(m, t)| Element::Spinor(m, t)),
            Some("verma") => verma_from_json(v).map(|(m, t)| Element::Verma(m, t)),
            Some("lusztig") => lusztig_from_json(v).map(|(m, t)| Element::Lusztig(m, t)),
            Some(other) => Err(JsonError::Model(other.to_string())),
            None => Err(JsonError::Field("model")),
        }
    }
}

pub fn kn_json(m: &KnModel, t: &KnTableau) -> Value {
    let n = m.cartan.n;
    let body = RotTableau { cols: t.cols.clone() };
    json!({
        "model": "kn",
        "type": m.cartan.ty.to_string(),
        "n": n,
        "lambda": pad(&m.mu, n),
        "spin": m.spin,
        "body": tableau_json(n, Variant::J, &body.shape(), true, &body.rows()),
        "spin_column": t.spin.as_ref().map(|c| ints(c)),
    })
}

pub fn kn_from_json(v: &Value) -> Result<(KnModel, KnTableau)> {
    let cartan = cartan_of(v)?;
    let n = cartan.n;
    let spin = field(v, "spin")?.as_bool().ok_or(JsonError::Field("spin"))?;
    let mu = shape_field(v, cartan, spin)?;
    let rows = rows_of(field(field(v, "body")?, "rows")?, "body.rows", n)?;
    let cols = rot_from_rows(&rows).cols;
    let spin_column = match field(v, "spin_column")? {
        Value::Null => None,
        c => Some(letter_list(c, "spin_column", n)?),
    };
    let model = KnModel::new(cartan, &mu, spin);
    let t = KnTableau { cols, spin: spin_column };
    model.validate(&t).map_err(|e| JsonError::Invalid(e.to_string()))?;
    Ok((model, t))
}

fn rot_from_rows(rows: &[Vec<Letter>]) -> RotTableau {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut cols: Vec<Column> = vec![Vec::new(); width];
    for r in rows {
        for (k, &x) in r.iter().rev().enumerate() {
            cols[k].push(x);
        }
    }
    RotTableau { cols }
}

pub fn spinor_json(m: &SpinorModel, t: &SpinorTuple) -> Value {
    let n = m.cartan.n;
    let columns: Vec<Value> = t
        .cols
        .iter()
        .map(|c| json!({"a": c.a, "b": c.b(), "c": c.c(), "L": ints(&c.left), "R": ints(&c.right)}))
        .collect();
    json!({
        "model": "spinor",
        "type": m.cartan.ty.to_string(),
        "n": n,
        "lambda": pad(&m.mu(), n),
        "spin": m.spin,
        "columns": columns,
        "spin_column": t.spin.as_ref().map(|c| ints(c)),
    })
}

pub fn spinor_from_json(v: &Value) -> Result<(SpinorModel, SpinorTuple)> {
    let cartan = cartan_of(v)?;
    let n = cartan.n;
    let spin_column = match field(v, "spin_column")? {
        Value::Null => None,
        c => Some(letter_list(c, "spin_column", n)?),
    };
    let spin = v.get("spin").and_then(Value::as_bool).unwrap_or(spin_column.is_some());
    let mu = shape_field(v, cartan, spin)?;
    let cols = field(v, "columns")?
        .as_array()
        .ok_or(JsonError::Field("columns"))?
        .iter()
        .map(|c| {
            let a = as_usize(field(c, "a")?, "a")?;
            let left = letter_list(field(c, "L")?, "L", n)?;
            let right = letter_list(field(c, "R")?, "R", n)?;
            TwoCol::new(a, left, right).map_err(|e| JsonError::Invalid(e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let model = SpinorModel::new(cartan, &mu, spin);
    let t = SpinorTuple { cols, spin: spin_column };
    model.validate(&t).map_err(|e| JsonError::Invalid(e.to_string()))?;
    Ok((model, t))
}

pub fn verma_json(m: &VermaModel, v: &VermaElem) -> Value {
    let n = m.cartan.n;
    json!({
        "model": "verma",
        "type": m.cartan.ty.to_string(),
        "n": n,
        "nu": m.nu,
        "V2": tableau_json(n, Variant::Neg, &v.tail.shape(), false, &v.tail.rows),
        "V1": {"tau": v.body.shape(), "rows": rows_json(&v.body.rows())},
    })
}

pub fn verma_from_json(v: &Value) -> Result<(VermaModel, VermaElem)> {
    let cartan = cartan_of(v)?;
    let n = cartan.n;
    let nu = usize_list(field(v, "nu")?, "nu")?;
    let tail = Tableau { rows: rows_of(field(field(v, "V2")?, "rows")?, "V2.rows", n)? };
    let body = rot_from_rows(&rows_of(field(field(v, "V1")?, "rows")?, "V1.rows", n)?);
    let model = VermaModel { cartan, nu };
    let e = VermaElem { tail, body };
    model.validate(&e).map_err(|e| JsonError::Invalid(e.to_string()))?;
    Ok((model, e))
}

pub fn lusztig_json(m: &LusztigModel, d: &FoldedDatum) -> Value {
    json!({
        "model": "lusztig",
        "type": m.cartan.ty.to_string(),
        "n": m.cartan.n,
        "dplus": d.dplus_entries().iter().map(|&(i, j, x)| json!([i, j, x])).collect::<Vec<_>>(),
        "dminus": d.dminus_entries().iter().map(|&(i, j, x)| json!([i, j, x])).collect::<Vec<_>>(),
    })
}

pub fn lusztig_from_json(v: &Value) -> Result<(LusztigModel, FoldedDatum)> {
    let cartan = cartan_of(v)?;
    let n = cartan.n;
    let mut d = FoldedDatum::zero(n);
    for (name, plus) in [("dplus", true), ("dminus", false)] {
        for e in field(v, name)?.as_array().ok_or(JsonError::Field(name))? {
            let t = usize_list(e, name)?;
            let [i, j, x] = t[..] else { return Err(JsonError::Field(name)) };
            let ok = i >= 1 && j <= n && if plus { i <= j } else { i < j };
            if !ok {
                return Err(JsonError::Invalid(format!("{name} index ({i},{j}) out of range")));
            }
            if plus {
                d.set_dplus(i, j, x as u32);
            } else {
                d.set_dminus(i, j, x as u32);
            }
        }
    }
    Ok((LusztigModel::new(cartan), d))
}
