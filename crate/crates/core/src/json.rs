//! Text interchange: Grothendieck vectors as JSON lines, one term per line,
//! and socle layers as a single JSON document.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groth::{BasisKind, GrothVec};
use crate::partition::Partition;
use crate::scalar::{parse_coeff, Scalar};
use crate::socle::SemisimpleDecomp;
use crate::weight::BarLabel;

#[derive(Serialize, Deserialize)]
struct TermLine {
    m: usize,
    n: usize,
    basis: String,
    a: Vec<i64>,
    b: Vec<i64>,
    coeff: String,
}

/// Parse a vector from JSON lines. Blank lines are skipped; every line must
/// agree on `m`, `n` and the basis.
pub fn parse_groth_lines<C: Scalar>(text: &str) -> Result<GrothVec<C>> {
    let mut shape: Option<(usize, usize, BasisKind)> = None;
    let mut terms = Vec::new();
    for (no, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let t: TermLine =
            serde_json::from_str(line).map_err(|e| Error::Parse(format!("line {}: {e}", no + 1)))?;
        let kind = BasisKind::parse(&t.basis)?;
        match shape {
            None => shape = Some((t.m, t.n, kind)),
            Some((m, n, k)) => {
                if k != kind {
                    return Err(Error::BasisMismatch { expected: k.name(), found: kind.name() });
                }
                if (m, n) != (t.m, t.n) {
                    return Err(Error::ShapeMismatch { m, n, found_m: t.m, found_n: t.n });
                }
            }
        }
        let c = parse_coeff(&t.coeff)
            .ok_or_else(|| Error::Parse(format!("line {}: bad coefficient {:?}", no + 1, t.coeff)))?;
        terms.push((BarLabel::new(t.a, t.b), c));
    }
    let (m, n, kind) = shape.ok_or_else(|| Error::Parse("no terms in vector file".into()))?;
    GrothVec::from_terms(m, n, kind, terms)
}

/// One JSON line per nonzero term, in label order.
pub fn groth_to_lines<C: Scalar>(v: &GrothVec<C>) -> String {
    let mut out = String::new();
    for (l, c) in v.terms() {
        let t = TermLine {
            m: v.m(),
            n: v.n(),
            basis: v.kind().name().to_string(),
            a: l.a.clone(),
            b: l.b.clone(),
            coeff: c.to_string(),
        };
        out.push_str(&serde_json::to_string(&t).expect("plain data serializes"));
        out.push('\n');
    }
    out
}

/// A count as a JSON number when it fits in `u64`, otherwise as a string.
pub fn count_json(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn summands_json(d: &SemisimpleDecomp) -> Value {
    Value::Array(
        d.iter()
            .map(|(l, m, c)| json!({"lambda": l.parts(), "mu": m.parts(), "mult": count_json(c)}))
            .collect(),
    )
}

/// `{"lambda":[..],"mu":[..],"blocks":r,"layers":[{"k":0,"summands":[..]},..]}`
pub fn socle_json(lambda: &Partition, mu: &Partition, blocks: usize, layers: &[SemisimpleDecomp]) -> Value {
    let layers: Vec<Value> = layers
        .iter()
        .enumerate()
        .map(|(k, d)| json!({"k": k, "summands": summands_json(d)}))
        .collect();
    json!({"lambda": lambda.parts(), "mu": mu.parts(), "blocks": blocks, "layers": layers})
}

/// Layers without a distinguished top, as produced for the categories of
/// tensor modules.
pub fn layers_json(m: usize, n: usize, layers: &[SemisimpleDecomp]) -> Value {
    let layers: Vec<Value> = layers
        .iter()
        .enumerate()
        .map(|(k, d)| json!({"k": k, "summands": summands_json(d)}))
        .collect();
    json!({"m": m, "n": n, "layers": layers})
}

/// Multiplicities with their total, e.g. for Jordan–Hölder data.
pub fn decomp_json(d: &SemisimpleDecomp) -> Value {
    json!({"summands": summands_json(d), "total": count_json(&d.total())})
}
