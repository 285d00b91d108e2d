//! JSON input and output of polytopes.
//!
//! The format is `{"name": "square", "vertices": [[0, 0], [1, "1/2"], ["0.25", 1]]}`.
//! Coordinates may be JSON integers, `"p/q"` strings or decimal strings; all
//! are converted exactly.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, RatVec, Rational};
use crate::polytope::Polytope;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<Vec<Value>>,
}

fn coordinate(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("coordinate must be a number or string, got {other}"))),
    }
}

pub fn from_json_value(doc: PolytopeJson) -> Result<Polytope> {
    let pts: Vec<RatVec> =
        doc.vertices.iter().map(|row| row.iter().map(coordinate).collect()).collect::<Result<_>>()?;
    let p = Polytope::from_vertices(&pts)?;
    Ok(match doc.name {
        Some(n) => p.with_name(n),
        None => p,
    })
}

pub fn from_json_str(s: &str) -> Result<Polytope> {
    from_json_value(serde_json::from_str(s)?)
}

pub fn read_file(path: impl AsRef<Path>) -> Result<Polytope> {
    from_json_str(&std::fs::read_to_string(path)?)
}

/// Integers stay JSON numbers when they fit in an `i64`; everything else becomes a `"p/q"` string.
pub fn to_json_value(p: &Polytope) -> PolytopeJson {
    let cell = |q: &Rational| {
        let s = format_rational(q);
        match s.parse::<i64>() {
            Ok(i) => Value::from(i),
            Err(_) => Value::String(s),
        }
    };
    PolytopeJson {
        name: p.name().map(String::from),
        vertices: p.vertices().iter().map(|v| v.iter().map(cell).collect()).collect(),
    }
}

pub fn to_json_string(p: &Polytope) -> String {
    serde_json::to_string(&to_json_value(p)).expect("polytope json is serialisable")
}
