//! JSON encodings of polynomials and Betti tables. Integers that can grow
//! without bound are written as decimal strings.

use hgpoly_core::betti::BettiTable;
use hgpoly_core::{BiPoly, Hypergraph, UniPoly};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// `[[i, j, "coeff"], ...]` in ascending `(i, j)` order.
pub fn bipoly_to_json(p: &BiPoly) -> Value {
    Value::Array(p.terms().map(|(i, j, c)| json!([i, j, c.to_string()])).collect())
}

pub fn bipoly_from_json(v: &Value) -> Result<BiPoly> {
    let bad = |msg: &str| Error::parse("polynomial JSON", msg);
    let terms = v.as_array().ok_or_else(|| bad("expected an array of [i, j, \"coeff\"] triples"))?;
    let mut p = BiPoly::zero();
    for t in terms {
        let [i, j, c] = t.as_array().map(Vec::as_slice).unwrap_or_default() else {
            return Err(bad("each term must have exactly three entries"));
        };
        let i = i.as_u64().ok_or_else(|| bad("x-exponent must be a nonnegative integer"))?;
        let j = j.as_u64().ok_or_else(|| bad("y-exponent must be a nonnegative integer"))?;
        let c: BigInt = c
            .as_str()
            .ok_or_else(|| bad("coefficient must be a decimal string"))?
            .parse()
            .map_err(|_| bad("coefficient is not a decimal integer"))?;
        p.add_term(i as usize, j as usize, c);
    }
    Ok(p)
}

pub fn bigints_to_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

/// Coefficients in ascending degree, as decimal strings.
pub fn unipoly_to_json(p: &UniPoly) -> Value {
    bigints_to_json(p.coeffs())
}

/// `{"multigraded": [[i, [labels], b], ...], "graded": [[i, j, b], ...]}`,
/// with `B` written through the vertex labels of `h`.
pub fn betti_to_json(table: &BettiTable, labels: &[String]) -> Value {
    let multigraded: Vec<Value> = table
        .multigraded
        .iter()
        .map(|(&(i, b), &v)| json!([i, b.iter().map(|x| labels[x].as_str()).collect::<Vec<_>>(), v]))
        .collect();
    let graded: Vec<Value> = table.graded.iter().map(|(&(i, j), &v)| json!([i, j, v])).collect();
    json!({ "multigraded": multigraded, "graded": graded })
}

pub fn betti_from_json(v: &Value, h: &Hypergraph) -> Result<BettiTable> {
    let bad = |msg: &str| Error::parse("Betti JSON", msg);
    let rows = v.get("multigraded").and_then(Value::as_array).ok_or_else(|| bad("missing \"multigraded\" array"))?;
    let mut entries = Vec::new();
    for row in rows {
        let [i, b, val] = row.as_array().map(Vec::as_slice).unwrap_or_default() else {
            return Err(bad("each multigraded entry must be [i, [labels], b]"));
        };
        let labels: Vec<&str> = b
            .as_array()
            .ok_or_else(|| bad("vertex set must be an array of labels"))?
            .iter()
            .map(|l| l.as_str().ok_or_else(|| bad("vertex labels must be strings")))
            .collect::<Result<_>>()?;
        let i = i.as_u64().ok_or_else(|| bad("homological degree must be a nonnegative integer"))?;
        let val = val.as_u64().ok_or_else(|| bad("Betti number must be a nonnegative integer"))?;
        entries.push(((i as usize, h.vertex_set_of(&labels)?), val));
    }
    Ok(BettiTable::from_multigraded(h.n(), entries))
}
