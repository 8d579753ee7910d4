//! Canonical JSON reports and their flat text rendering.

use gm_core::census::{BudgetExceeded, CensusVector};
use gm_core::decider::{HomeoWitness, IsoCandidate, ProfiniteWitness, Verdict};
use gm_core::genus::GenusResult;
use gm_core::invariants::{bipartition, is_residually_p, orbifold_euler_char, total_slope};
use gm_core::model::{GraphManifold, ValidationReport};
use serde_json::{json, Map, Value};

use crate::document::{big, manifold_to_value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

pub fn validation_report(r: &ValidationReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| json!({"code": v.code.as_str(), "location": v.location.to_string(), "message": v.message}))
        .collect();
    json!({"ok": r.ok, "violations": violations})
}

pub fn info_report(m: &GraphManifold, prime: Option<u64>) -> Value {
    let mut vertices = Map::new();
    for (id, piece) in &m.vertices {
        let degree = m.degree(id);
        let mut entry = json!({
            "kind": if piece.is_minor() { "minor" } else { "major" },
            "degree": degree,
            "total_slope": total_slope(m, id).to_string(),
            "euler_characteristic": orbifold_euler_char(piece, degree).ok().map(|x| x.to_string()),
        });
        if let Some(p) = prime {
            entry["residually_p"] = json!(is_residually_p(piece, p));
        }
        vertices.insert(id.clone(), entry);
    }
    let mut report = json!({
        "name": m.name,
        "vertices": vertices,
        "bipartition": bipartition(m).map(|b| json!({"red": b.red, "blue": b.blue})),
        "modulus": big(&m.modulus()),
    });
    if let Some(p) = prime {
        report["prime"] = json!(p);
    }
    report
}

fn iso_fields(iso: &IsoCandidate, out: &mut Map<String, Value>) {
    out.insert("vertex_map".into(), json!(iso.vertex_map));
    let edges: Map<String, Value> = iso
        .edge_map
        .iter()
        .map(|(e, img)| (e.clone(), json!({"edge": img.edge, "reversed": img.reversed})))
        .collect();
    out.insert("edge_map".into(), Value::Object(edges));
}

pub fn homeo_witness(w: &HomeoWitness) -> Value {
    let mut out = Map::new();
    iso_fields(&w.iso, &mut out);
    out.insert("mirrored".into(), json!(w.mirrored));
    out.insert("flips".into(), json!(w.flips));
    out.insert("edge_signs".into(), json!(w.edge_signs));
    out.insert("cone_matchings".into(), json!(w.cone_matchings));
    let twists: Map<String, Value> =
        w.twists.iter().map(|((e, side), r)| (format!("{e}@{}", side.as_str()), big(r))).collect();
    out.insert("twists".into(), Value::Object(twists));
    Value::Object(out)
}

pub fn profinite_witness(w: &ProfiniteWitness) -> Value {
    let mut out = Map::new();
    iso_fields(&w.iso, &mut out);
    out.insert("flips".into(), json!(w.flips));
    out.insert("edge_signs".into(), json!(w.edge_signs));
    out.insert("cone_matchings".into(), json!(w.cone_matchings));
    out.insert("kappa".into(), json!(format!("{} mod {}", w.kappa, w.modulus)));
    out.insert(
        "orientation".into(),
        json!({"scaled_class": w.orientation.scaled_class, "image_is_red": w.orientation.image_is_red}),
    );
    Value::Object(out)
}

pub fn homeo_report(a: &GraphManifold, b: &GraphManifold, w: Option<&HomeoWitness>) -> Value {
    json!({
        "mode": "homeo",
        "first": a.name,
        "second": b.name,
        "verdict": if w.is_some() { "homeomorphic" } else { "distinct" },
        "witness": w.map(homeo_witness),
    })
}

pub fn verdict_report(a: &GraphManifold, b: &GraphManifold, v: &Verdict) -> Value {
    let witness = match v {
        Verdict::Homeomorphic(w) => homeo_witness(w),
        Verdict::Equivalent(w) => profinite_witness(w),
        Verdict::Distinct => Value::Null,
    };
    json!({"mode": "profinite", "first": a.name, "second": b.name, "verdict": v.label(), "witness": witness})
}

pub fn genus_report(m: &GraphManifold, g: &GenusResult) -> Value {
    let reps: Vec<Value> = g
        .representatives
        .iter()
        .zip(&g.kappas)
        .map(|(r, k)| {
            let kappa = match g.modulus {
                Some(n) => format!("{k} mod {n}"),
                None => k.to_string(),
            };
            json!({"kappa": kappa, "document": manifold_to_value(r)})
        })
        .collect();
    json!({
        "name": m.name,
        "rigid": g.rigid,
        "reason": g.reason.as_str(),
        "modulus": g.modulus,
        "representatives": reps,
    })
}

fn count_value(c: &Result<u64, BudgetExceeded>) -> Value {
    match c {
        Ok(n) => json!({"count": n}),
        Err(e) => json!({"error": e.to_string()}),
    }
}

pub fn census_report(m: &GraphManifold, census: &CensusVector, subgroups: &[(usize, Result<u64, BudgetExceeded>)]) -> Value {
    let groups: Vec<Value> = census
        .entries
        .iter()
        .map(|e| {
            let mut v = count_value(&e.count);
            v["group"] = json!(e.group);
            v
        })
        .collect();
    let subgroups: Vec<Value> = subgroups
        .iter()
        .map(|(n, c)| {
            let mut v = count_value(c);
            v["index"] = json!(n);
            v
        })
        .collect();
    json!({"name": m.name, "homs": groups, "subgroups": subgroups})
}

/// Renders a report. Text output has one `path = value` line per scalar.
pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("serializable"),
        Format::Text => {
            let mut lines = Vec::new();
            flatten("", v, &mut lines);
            lines.join("\n")
        }
    }
}

fn flatten(path: &str, v: &Value, out: &mut Vec<String>) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push(format!("{path} = {s}")),
        other => out.push(format!("{path} = {other}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gm_core::decider::check_profinite_iso;
    use gm_core::fixtures;
    use gm_core::genus::profinite_genus;

    #[test]
    fn kappa_line() {
        let (a, b) = (fixtures::w1(), fixtures::n2());
        let v = check_profinite_iso(&a, &b).unwrap();
        let text = render(&verdict_report(&a, &b, &v), Format::Json);
        assert!(text.contains("\"kappa\": \"2 mod 5\""));
        assert!(text.contains("\"verdict\": \"equivalent\""));
    }

    #[test]
    fn zero_slope_is_canonical() {
        let text = render(&info_report(&fixtures::w1(), Some(5)), Format::Json);
        assert!(text.contains("\"total_slope\": \"0/1\""));
    }

    #[test]
    fn genus_embeds_documents() {
        let m = fixtures::w1();
        let v = genus_report(&m, &profinite_genus(&m).unwrap());
        let reps = v["representatives"].as_array().unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0]["document"], manifold_to_value(&m));
        assert_eq!(reps[1]["kappa"], "2 mod 5");
    }

    #[test]
    fn text_rendering() {
        let v = json!({"b": [1, {"c": "x"}], "a": null, "d": []});
        assert_eq!(render(&v, Format::Text), "a = null\nb[0] = 1\nb[1].c = x\nd = []");
    }
}
