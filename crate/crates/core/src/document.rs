//! The JSON polytope input format.
//!
//! ```json
//! {"dim": 2, "vertices": [["0","0"], ["3","0"], ["0","3"]]}
//! {"dim": 2, "inequalities": [[["-1","0"], "0"], [["0","-1"], "0"], [["1","1"], "3"]]}
//! ```
//!
//! Each inequality `[normal, offset]` means `normal·x <= offset`. Numbers
//! are strings holding a decimal integer or `p/q`; bare JSON integers are
//! accepted on input as well.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{clear_denominators, format_rat, parse_rat, Rat, RatVec};
use crate::polytope::Polytope;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Vertices(Vec<RatVec>),
    Inequalities(Vec<(RatVec, Rat)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeDocument {
    pub dim: usize,
    pub body: Body,
}

fn field_err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("{path}: {msg}"))
}

fn parse_number(v: &Value, path: &str) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s).map_err(|_| field_err(path, format!("invalid rational '{s}'"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rat(&n.to_string()),
        _ => Err(field_err(path, "expected an integer or a \"p/q\" string")),
    }
}

fn parse_vector(v: &Value, dim: usize, path: &str) -> Result<RatVec> {
    let items = v.as_array().ok_or_else(|| field_err(path, "expected an array"))?;
    if items.len() != dim {
        return Err(field_err(path, format!("expected {dim} coordinates, found {}", items.len())));
    }
    items.iter().enumerate().map(|(i, x)| parse_number(x, &format!("{path}[{i}]"))).collect()
}

fn vec_json(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_rat(x))).collect())
}

impl PolytopeDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| {
            Error::InvalidInput(format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column()))
        })?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| field_err("document", "expected a JSON object"))?;
        let dim = match obj.get("dim") {
            Some(Value::Number(n)) => n.as_u64().map(|d| d as usize),
            Some(Value::String(s)) => s.trim().parse::<usize>().ok(),
            _ => None,
        }
        .filter(|&d| d > 0)
        .ok_or_else(|| field_err("dim", "expected a positive integer"))?;
        if let Some(k) = obj.keys().find(|k| !matches!(k.as_str(), "dim" | "vertices" | "inequalities")) {
            return Err(field_err(k, "unknown field"));
        }
        let body = match (obj.get("vertices"), obj.get("inequalities")) {
            (Some(v), None) => {
                let rows = v.as_array().ok_or_else(|| field_err("vertices", "expected an array"))?;
                if rows.is_empty() {
                    return Err(field_err("vertices", "empty vertex list"));
                }
                Body::Vertices(
                    rows.iter()
                        .enumerate()
                        .map(|(i, r)| parse_vector(r, dim, &format!("vertices[{i}]")))
                        .collect::<Result<_>>()?,
                )
            }
            (None, Some(v)) => {
                let rows = v.as_array().ok_or_else(|| field_err("inequalities", "expected an array"))?;
                if rows.is_empty() {
                    return Err(field_err("inequalities", "empty inequality list"));
                }
                Body::Inequalities(
                    rows.iter()
                        .enumerate()
                        .map(|(i, r)| {
                            let path = format!("inequalities[{i}]");
                            match r.as_array().map(Vec::as_slice) {
                                Some([normal, offset]) => Ok((
                                    parse_vector(normal, dim, &format!("{path}[0]"))?,
                                    parse_number(offset, &format!("{path}[1]"))?,
                                )),
                                _ => Err(field_err(&path, "expected [normal, offset]")),
                            }
                        })
                        .collect::<Result<_>>()?,
                )
            }
            (Some(_), Some(_)) => return Err(field_err("document", "give either vertices or inequalities, not both")),
            (None, None) => return Err(field_err("document", "missing vertices or inequalities")),
        };
        Ok(Self { dim, body })
    }

    /// Canonical JSON: numbers as lowest-terms strings, input order kept.
    pub fn to_value(&self) -> Value {
        match &self.body {
            Body::Vertices(vs) => json!({
                "dim": self.dim,
                "vertices": vs.iter().map(|v| vec_json(v)).collect::<Vec<_>>(),
            }),
            Body::Inequalities(hs) => json!({
                "dim": self.dim,
                "inequalities": hs.iter().map(|(a, b)| json!([vec_json(a), format_rat(b)])).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn to_polytope(&self) -> Result<Polytope> {
        match &self.body {
            Body::Vertices(vs) => Polytope::from_vertices(vs),
            Body::Inequalities(hs) => {
                let ints = hs
                    .iter()
                    .map(|(a, b)| {
                        // Positive rescaling to an integer normal.
                        let scaled = clear_denominators(a);
                        let factor = a
                            .iter()
                            .zip(&scaled)
                            .find(|(x, _)| !x.is_zero())
                            .map(|(x, s)| Rat::from_integer(s.clone()) / x);
                        match factor {
                            Some(f) => (scaled, b * f),
                            None => (scaled, b.clone()),
                        }
                    })
                    .collect::<Vec<_>>();
                Polytope::from_halfspaces(&ints)
            }
        }
    }

    pub fn from_polytope(p: &Polytope) -> Self {
        Self { dim: p.dim(), body: Body::Vertices(p.vertices().to_vec()) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_vec};

    #[test]
    fn parses_vertices_and_inequalities() {
        let d = PolytopeDocument::parse(r#"{"dim":2,"vertices":[["0","0"],["3","0"],["0",3]]}"#).unwrap();
        assert_eq!(d.to_polytope().unwrap().vertices().len(), 3);
        let d = PolytopeDocument::parse(
            r#"{"dim":2,"inequalities":[[["-1","0"],"0"],[["0","-1"],"0"],[["1/2","1/2"],"1/2"]]}"#,
        )
        .unwrap();
        let p = d.to_polytope().unwrap();
        assert_eq!(p.vertices(), &[rat_vec(&[0, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 0])]);
    }

    #[test]
    fn canonical_output() {
        let d = PolytopeDocument::parse(r#"{"dim":1,"vertices":[["2/4"],[3]]}"#).unwrap();
        assert_eq!(d.to_value().to_string(), r#"{"dim":1,"vertices":[["1/2"],["3"]]}"#);
        assert_eq!(d.body, Body::Vertices(vec![vec![rat(1, 2)], rat_vec(&[3])]));
    }

    #[test]
    fn errors_carry_context() {
        let cases = [
            (r#"{"dim":2,"vertices":[["0","0"],["x","0"]]}"#, "vertices[1][0]"),
            (r#"{"dim":2,"vertices":[["0","0"],["1"]]}"#, "vertices[1]"),
            (r#"{"dim":0,"vertices":[]}"#, "dim"),
            (r#"{"dim":2}"#, "missing"),
            (r#"{"dim":2,"inequalities":[[["1","0"]]]}"#, "inequalities[0]"),
            (r#"{"dim":2,"vertices":[["0","0"]],"extra":1}"#, "extra"),
            ("{\"dim\":2,\n \"vertices\": [", "line 2"),
        ];
        for (text, needle) in cases {
            match PolytopeDocument::parse(text) {
                Err(Error::InvalidInput(msg)) => assert!(msg.contains(needle), "{msg} lacks {needle}"),
                other => panic!("expected parse error for {text}, got {other:?}"),
            }
        }
    }
}
