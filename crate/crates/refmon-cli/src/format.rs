//! Presentation interchange: text, JSON and GAP.

use refmon_core::presentation::{GenKind, Generator, Presentation, RelFamily, Relation};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
struct JsonGenerator {
    name: String,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    value: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonRelation {
    family: String,
    lhs: Vec<usize>,
    rhs: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonPresentation {
    family: String,
    params: serde_json::Map<String, serde_json::Value>,
    generators: Vec<JsonGenerator>,
    relations: Vec<JsonRelation>,
}

pub fn to_json(p: &Presentation) -> String {
    let doc = JsonPresentation {
        family: p.family.clone(),
        params: p.params.iter().map(|(k, v)| (k.clone(), (*v).into())).collect(),
        generators: p
            .generators
            .iter()
            .map(|g| JsonGenerator { name: g.name.clone(), kind: g.kind.as_str().into(), value: g.value.clone() })
            .collect(),
        relations: p
            .relations
            .iter()
            .map(|r| JsonRelation { family: r.family.as_str().into(), lhs: r.lhs.clone(), rhs: r.rhs.clone() })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("presentation serializes") + "\n"
}

pub fn from_json(s: &str) -> Result<Presentation, String> {
    let doc: JsonPresentation = serde_json::from_str(s).map_err(|e| e.to_string())?;
    let params = doc
        .params
        .into_iter()
        .map(|(k, v)| v.as_i64().map(|v| (k.clone(), v)).ok_or(format!("parameter {k} is not an integer")))
        .collect::<Result<_, _>>()?;
    let mut p = Presentation::new(doc.family, params);
    for g in doc.generators {
        let kind = GenKind::parse(&g.kind).map_err(|e| e.to_string())?;
        p.generators.push(Generator { name: g.name, kind, value: g.value });
    }
    for r in doc.relations {
        let family = RelFamily::parse(&r.family).map_err(|e| e.to_string())?;
        p.relations.push(Relation::new(family, r.lhs, r.rhs));
    }
    p.check_indices().map_err(|e| e.to_string())?;
    Ok(p)
}

/// A free-monoid quotient in GAP syntax.
pub fn to_gap(p: &Presentation) -> String {
    let names: Vec<String> = p.generators.iter().map(|g| format!("\"{}\"", g.name)).collect();
    let word = |w: &[usize]| {
        if w.is_empty() {
            "One(F)".to_string()
        } else {
            w.iter().map(|&i| p.generators[i].name.as_str()).collect::<Vec<_>>().join("*")
        }
    };
    let mut out = String::new();
    let params: Vec<String> = p.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    out += &format!("# {} {}\n", p.family, params.join(" "));
    out += &format!("F := FreeMonoid({});;\n", names.join(", "));
    out += "AssignGeneratorVariables(F);;\n";
    out += "rels := [\n";
    let rels: Vec<String> =
        p.relations.iter().map(|r| format!("  [{}, {}]  # {}", word(&r.lhs), word(&r.rhs), r.family.as_str())).collect();
    // a trailing comment would swallow the separator, so put commas first
    for (i, r) in rels.iter().enumerate() {
        out += if i == 0 { "  " } else { ", " };
        out += r.trim_start();
        out += "\n";
    }
    out += "];;\n";
    out += "M := F / rels;;\n";
    out
}
