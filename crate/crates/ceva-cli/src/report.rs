//! Structured output: one JSON object per invocation, with text and CSV
//! projections of the same data.

use ceva::{ExtReal, SimilarityRelation, TriangleClass};
use serde_json::{json, Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Extended reals serialize as a plain number or the string `"inf"`.
pub fn ext_value(e: ExtReal) -> Value {
    match e {
        ExtReal::Finite(v) => json!(v),
        ExtReal::Infinity => json!("inf"),
    }
}

pub fn class_name(c: TriangleClass) -> &'static str {
    match c {
        TriangleClass::Equilateral => "equilateral",
        TriangleClass::Wide => "wide",
        TriangleClass::Narrow => "narrow",
        TriangleClass::Increasing => "increasing",
        TriangleClass::Decreasing => "decreasing",
    }
}

pub fn similarity_value(rel: SimilarityRelation) -> Value {
    let (name, ratio) = match rel {
        SimilarityRelation::NotSimilar => ("none", None),
        SimilarityRelation::Direct(l) => ("direct", Some(l)),
        SimilarityRelation::Reverse(l) => ("reverse", Some(l)),
        SimilarityRelation::Both(l) => ("both", Some(l)),
    };
    json!({ "relation": name, "ratio": ratio })
}

/// The envelope shared by every command: input, results, config, version.
pub fn envelope(input: Value, results: Value, tolerance: f64, seed: u64, format: &str) -> Value {
    json!({
        "input": input,
        "results": results,
        "config": { "tolerance": tolerance, "seed": seed, "format": format },
        "version": VERSION,
    })
}

/// Flat key/value rendering of the JSON envelope for `--format text`.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    render_text_into(&mut out, "", value);
    out
}

fn render_text_into(out: &mut String, prefix: &str, value: &Value) {
    match value {
        Value::Object(map) => render_map(out, prefix, map),
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                let key = join(prefix, &i.to_string());
                render_text_into(out, &key, item);
            }
        }
        leaf => {
            out.push_str(prefix);
            out.push_str("  ");
            out.push_str(&leaf_str(leaf));
            out.push('\n');
        }
    }
}

fn render_map(out: &mut String, prefix: &str, map: &Map<String, Value>) {
    for (k, v) in map {
        render_text_into(out, &join(prefix, k), v);
    }
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_owned()
    } else {
        format!("{prefix}.{key}")
    }
}

fn leaf_str(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
