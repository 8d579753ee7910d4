//! The JSON manifold document.
//!
//! ```json
//! {"name": "W1",
//!  "vertices": [{"id": "x", "kind": "major", "genus": 0, "orientable": true, "cones": [[5, 1]]},
//!               {"id": "y", "kind": "minor"}],
//!  "edges": [{"id": "e", "from": "x", "to": "y", "matrix": [[1, 1], [2, 1]]}]}
//! ```

use std::collections::BTreeSet;
use std::str::FromStr;

use gm_core::model::{validate, ConePoint, GluingMatrix, GraphManifold, SeifertPiece, Violation};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Deserialize;
use serde_json::{json, Number, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("PARSE: {0}")]
    Parse(String),
    #[error("SCHEMA: {0}")]
    Schema(String),
    #[error("INVALID: {}", describe(.0))]
    Invalid(Vec<Violation>),
}

impl InputError {
    pub fn class(&self) -> &'static str {
        match self {
            InputError::Parse(_) => "PARSE",
            InputError::Schema(_) => "SCHEMA",
            InputError::Invalid(_) => "INVALID",
        }
    }
}

fn describe(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| format!("{} at {}: {}", v.code, v.location, v.message))
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: String,
    vertices: Vec<RawVertex>,
    edges: Vec<RawEdge>,
}

#[derive(Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Kind {
    Major,
    Minor,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVertex {
    id: String,
    kind: Kind,
    genus: Option<Number>,
    orientable: Option<bool>,
    cones: Option<Vec<[Number; 2]>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    id: String,
    from: String,
    to: String,
    matrix: [[Number; 2]; 2],
}

fn integer(n: &Number, what: &str) -> Result<BigInt, InputError> {
    BigInt::from_str(n.as_str()).map_err(|_| InputError::Schema(format!("{what}: expected an integer, found {n}")))
}

/// Decodes a document without running structural validation.
pub fn decode_manifold(text: &str) -> Result<GraphManifold, InputError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| {
        if e.is_data() {
            InputError::Schema(e.to_string())
        } else {
            InputError::Parse(e.to_string())
        }
    })?;

    let mut m = GraphManifold::new(raw.name);
    for v in raw.vertices {
        let at = format!("vertex {:?}", v.id);
        let piece = match v.kind {
            Kind::Minor => {
                if v.genus.is_some() || v.orientable.is_some() || v.cones.is_some() {
                    return Err(InputError::Schema(format!("{at}: minor vertices take no genus, orientable or cones")));
                }
                SeifertPiece::Minor
            }
            Kind::Major => {
                let (Some(genus), Some(orientable), Some(cones)) = (v.genus, v.orientable, v.cones) else {
                    return Err(InputError::Schema(format!("{at}: major vertices need genus, orientable and cones")));
                };
                let genus = integer(&genus, &at)?
                    .to_u32()
                    .ok_or_else(|| InputError::Schema(format!("{at}: genus out of range")))?;
                let cones = cones
                    .iter()
                    .map(|[p, q]| Ok(ConePoint { p: integer(p, &at)?, q: integer(q, &at)? }))
                    .collect::<Result<Vec<_>, InputError>>()?;
                SeifertPiece::major(genus, orientable, cones)
            }
        };
        if m.vertices.insert(v.id.clone(), piece).is_some() {
            return Err(InputError::Schema(format!("duplicate vertex id {:?}", v.id)));
        }
    }

    let mut seen = BTreeSet::new();
    for e in raw.edges {
        let at = format!("edge {:?}", e.id);
        if !seen.insert(e.id.clone()) {
            return Err(InputError::Schema(format!("duplicate edge id {:?}", e.id)));
        }
        for end in [&e.from, &e.to] {
            if !m.vertices.contains_key(end) {
                return Err(InputError::Schema(format!("{at}: unknown vertex {end:?}")));
            }
        }
        let [[a, b], [c, d]] = &e.matrix;
        let matrix = GluingMatrix::new(integer(a, &at)?, integer(b, &at)?, integer(c, &at)?, integer(d, &at)?);
        m = m.with_edge(&e.id, &e.from, &e.to, matrix);
    }
    Ok(m)
}

/// Decodes a document and requires it to pass structural validation.
pub fn parse_manifold(text: &str) -> Result<GraphManifold, InputError> {
    let m = decode_manifold(text)?;
    let report = validate(&m);
    if report.ok {
        Ok(m)
    } else {
        Err(InputError::Invalid(report.violations))
    }
}

pub(crate) fn big(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub fn manifold_to_value(m: &GraphManifold) -> Value {
    let vertices: Vec<Value> = m
        .vertices
        .iter()
        .map(|(id, piece)| match piece {
            SeifertPiece::Minor => json!({"id": id, "kind": "minor"}),
            SeifertPiece::Major(base) => json!({
                "id": id,
                "kind": "major",
                "genus": base.genus,
                "orientable": base.orientable,
                "cones": base.cones.iter().map(|c| json!([big(&c.p), big(&c.q)])).collect::<Vec<_>>(),
            }),
        })
        .collect();
    let edges: Vec<Value> = m
        .edges
        .iter()
        .map(|e| {
            let g = &e.matrix;
            json!({
                "id": e.id,
                "from": e.from,
                "to": e.to,
                "matrix": [[big(&g.alpha), big(&g.beta)], [big(&g.gamma), big(&g.delta)]],
            })
        })
        .collect();
    json!({"name": m.name, "vertices": vertices, "edges": edges})
}

/// Canonical document text: sorted keys, vertices by id, edges in stored order.
pub fn print_manifold(m: &GraphManifold) -> String {
    serde_json::to_string_pretty(&manifold_to_value(m)).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use gm_core::fixtures;
    use gm_core::model::RuleCode;

    #[test]
    fn fixtures_round_trip() {
        for m in fixtures::all() {
            let text = print_manifold(&m);
            let back = parse_manifold(&text).unwrap();
            assert_eq!(back, m);
            assert_eq!(print_manifold(&back), text);
        }
    }

    #[test]
    fn error_classes() {
        let base = r#"{"name":"t","vertices":[{"id":"x","kind":"major","genus":0,"orientable":true,"cones":[[2,1],[3,1]]}],"edges":[EDGES]}"#;
        let loop_edge = |id: &str, m: &str| format!(r#"{{"id":"{id}","from":"x","to":"x","matrix":{m}}}"#);

        let dup = base.replace("EDGES", &format!("{},{}", loop_edge("e", "[[1,1],[2,1]]"), loop_edge("e", "[[1,1],[2,1]]")));
        assert_eq!(decode_manifold(&dup).unwrap_err().class(), "SCHEMA");

        let bad = base.replace("EDGES", &loop_edge("e", "[[2,1],[0,2]]"));
        match parse_manifold(&bad) {
            Err(InputError::Invalid(v)) => assert!(v.iter().any(|x| x.code == RuleCode::GammaZero)),
            other => panic!("unexpected {other:?}"),
        }

        assert_eq!(parse_manifold("{\"name\":").unwrap_err().class(), "PARSE");
        let extra = base.replace("EDGES", "").replace("\"name\"", "\"colour\":1,\"name\"");
        assert_eq!(parse_manifold(&extra).unwrap_err().class(), "SCHEMA");
        let frac = base.replace("EDGES", &loop_edge("e", "[[1.5,1],[2,1]]"));
        assert_eq!(parse_manifold(&frac).unwrap_err().class(), "SCHEMA");
    }

    #[test]
    fn large_entries_survive() {
        let mut m = fixtures::w1();
        let k: BigInt = "100000000000000000000000".parse().unwrap();
        m.edges[0].matrix = m.edges[0].matrix.twist_from_side(&k);
        let back = decode_manifold(&print_manifold(&m)).unwrap();
        assert_eq!(back, m);
    }
}
