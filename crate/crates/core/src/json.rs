//! JSON wire formats for the CLI and any other front end.
//!
//! All integers are emitted as plain JSON numbers with arbitrary precision
//! (no floats, no strings); parsing rejects fractional or exponential
//! forms. Documents:
//!
//! * vector: `{"kind": "f"|"h"|"g", "d": int?, "entries": [int, …]}`
//! * Betti table: `{"n": int, "entries": [{"i", "j", "value"}, …]}` sorted by `(i, j)`
//! * complex: `{"n": int, "facets": [[int, …], …]}` with 1-based vertices
//! * monomial ideal: `{"n": int, "gens": [[e_1, …, e_n], …]}`
//! * bound report: `{"d", "g", "per_degree", "cumulative", "total", "vanishing_range"}`

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::oracle::{MonomialIdeal, SimplicialComplex};
use crate::simplices::{bound_report, EmptySimplexBoundReport};
use crate::vectors::{FVector, GVector, HVector};

fn invalid(reason: impl Into<String>) -> Error {
    Error::InvalidDocument {
        reason: reason.into(),
    }
}

/// Arbitrary-precision integer to JSON number.
pub fn bigint_to_number(value: &BigInt) -> Number {
    serde_json::from_str(&value.to_string()).expect("an integer literal is a valid JSON number")
}

fn bigint_value(value: &BigInt) -> Value {
    Value::Number(bigint_to_number(value))
}

fn parse_bigint(value: &Value) -> Result<BigInt> {
    let Value::Number(n) = value else {
        return Err(invalid(format!("expected an integer, found {value}")));
    };
    let text = n.to_string();
    if text.contains(['.', 'e', 'E']) {
        return Err(invalid(format!("expected an integer, found {text}")));
    }
    text.parse::<BigInt>()
        .map_err(|_| invalid(format!("expected an integer, found {text}")))
}

fn parse_u32(value: &Value, what: &str) -> Result<u32> {
    value
        .as_u64()
        .and_then(|v| u32::try_from(v).ok())
        .ok_or_else(|| invalid(format!("{what} must be a small non-negative integer, found {value}")))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| invalid(format!("missing key \"{key}\"")))
}

fn as_object<'a>(value: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    value
        .as_object()
        .ok_or_else(|| invalid(format!("{what} must be a JSON object")))
}

fn as_array<'a>(value: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    value
        .as_array()
        .ok_or_else(|| invalid(format!("{what} must be a JSON array")))
}

fn parse_entries(value: &Value, what: &str) -> Result<Vec<BigInt>> {
    as_array(value, what)?.iter().map(parse_bigint).collect()
}

fn entries_value(entries: &[BigInt]) -> Value {
    Value::Array(entries.iter().map(bigint_value).collect())
}

/// A parsed vector document: face counts, Hilbert coefficients, or a
/// g-vector with an optional attached polytope dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VectorDocument {
    F(FVector),
    H(HVector),
    G(GVector, Option<u32>),
}

pub fn f_vector_to_json(f: &FVector) -> Value {
    json!({"kind": "f", "d": f.d(), "entries": entries_value(f.entries())})
}

pub fn h_vector_to_json(h: &HVector) -> Value {
    json!({"kind": "h", "d": h.d(), "entries": entries_value(h.entries())})
}

pub fn g_vector_to_json(g: &GVector, d: Option<u32>) -> Value {
    match d {
        Some(d) => json!({"kind": "g", "d": d, "entries": entries_value(g.entries())}),
        None => json!({"kind": "g", "entries": entries_value(g.entries())}),
    }
}

pub fn vector_to_json(doc: &VectorDocument) -> Value {
    match doc {
        VectorDocument::F(f) => f_vector_to_json(f),
        VectorDocument::H(h) => h_vector_to_json(h),
        VectorDocument::G(g, d) => g_vector_to_json(g, *d),
    }
}

pub fn vector_from_json(value: &Value) -> Result<VectorDocument> {
    let obj = as_object(value, "a vector document")?;
    let kind = get(obj, "kind")?
        .as_str()
        .ok_or_else(|| invalid("\"kind\" must be \"f\", \"h\", or \"g\""))?;
    let entries = parse_entries(get(obj, "entries")?, "\"entries\"")?;
    let d = match obj.get("d") {
        Some(v) => Some(parse_u32(v, "\"d\"")?),
        None => None,
    };
    match kind {
        "f" => {
            let d = d.unwrap_or_else(|| entries.len().saturating_sub(1) as u32);
            Ok(VectorDocument::F(FVector::new(d, entries)?))
        }
        "h" => {
            if let Some(d) = d {
                if d as usize + 1 != entries.len() {
                    return Err(invalid(format!(
                        "an h-vector of degree {d} must have {} entries, found {}",
                        d + 1,
                        entries.len()
                    )));
                }
            }
            Ok(VectorDocument::H(HVector::new(entries)?))
        }
        "g" => Ok(VectorDocument::G(GVector::new(entries)?, d)),
        other => Err(invalid(format!(
            "\"kind\" must be \"f\", \"h\", or \"g\", found \"{other}\""
        ))),
    }
}

pub fn betti_table_to_json(table: &BettiTable) -> Value {
    let entries: Vec<Value> = table
        .iter()
        .map(|(i, j, value)| json!({"i": i, "j": j, "value": bigint_value(value)}))
        .collect();
    json!({"n": table.n(), "entries": entries})
}

pub fn betti_table_from_json(value: &Value) -> Result<BettiTable> {
    let obj = as_object(value, "a Betti table document")?;
    let n = parse_u32(get(obj, "n")?, "\"n\"")?;
    let mut table = BettiTable::new(n);
    for entry in as_array(get(obj, "entries")?, "\"entries\"")? {
        let entry = as_object(entry, "a Betti table entry")?;
        let i = parse_u32(get(entry, "i")?, "\"i\"")?;
        let j = parse_u32(get(entry, "j")?, "\"j\"")?;
        let v = parse_bigint(get(entry, "value")?)?;
        table.add(i, j, v);
    }
    Ok(table)
}

pub fn complex_to_json(complex: &SimplicialComplex) -> Value {
    json!({"n": complex.n(), "facets": complex.facets()})
}

pub fn complex_from_json(value: &Value) -> Result<SimplicialComplex> {
    let obj = as_object(value, "a complex document")?;
    let n = parse_u32(get(obj, "n")?, "\"n\"")?;
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for facet in as_array(get(obj, "facets")?, "\"facets\"")? {
        let vertices = as_array(facet, "a facet")?
            .iter()
            .map(|v| parse_u32(v, "a vertex"))
            .collect::<Result<Vec<u32>>>()?;
        facets.push(vertices);
    }
    SimplicialComplex::new(n, facets)
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> Value {
    json!({"n": ideal.n(), "gens": ideal.generators()})
}

pub fn ideal_from_json(value: &Value) -> Result<MonomialIdeal> {
    let obj = as_object(value, "an ideal document")?;
    let n = parse_u32(get(obj, "n")?, "\"n\"")?;
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for gen in as_array(get(obj, "gens")?, "\"gens\"")? {
        let exponents = as_array(gen, "an exponent vector")?
            .iter()
            .map(|v| parse_u32(v, "an exponent"))
            .collect::<Result<Vec<u32>>>()?;
        gens.push(exponents);
    }
    MonomialIdeal::new(n, gens)
}

fn degree_map_value(map: &std::collections::BTreeMap<u32, BigInt>) -> Value {
    let mut obj = Map::new();
    for (k, v) in map {
        obj.insert(k.to_string(), bigint_value(v));
    }
    Value::Object(obj)
}

pub fn report_to_json(report: &EmptySimplexBoundReport) -> Value {
    json!({
        "d": report.d(),
        "g": entries_value(report.g().entries()),
        "per_degree": degree_map_value(report.per_degree()),
        "cumulative": degree_map_value(report.cumulative()),
        "total": bigint_value(report.total()),
        "vanishing_range": report.vanishing_range().map(|(lo, hi)| vec![lo, hi]),
    })
}

/// Re-derive the report from its `d` and `g` fields and insist every
/// stored value matches the recomputation; the document format carries no
/// information beyond `(g, d)`, so this is both a parse and an audit.
pub fn report_from_json(value: &Value) -> Result<EmptySimplexBoundReport> {
    let obj = as_object(value, "a bound report document")?;
    let d = parse_u32(get(obj, "d")?, "\"d\"")?;
    let g = GVector::new(parse_entries(get(obj, "g")?, "\"g\"")?)?;
    let report = bound_report(&g, d)?;
    let roundtrip = report_to_json(&report);
    if &roundtrip != value {
        return Err(invalid(
            "bound report fields do not match the values recomputed from \"g\" and \"d\"",
        ));
    }
    Ok(report)
}
