//! JSON file formats and the inline r-matrix shorthand.
//!
//! All emitters go through `serde_json::Value`, whose maps are ordered, so
//! output is byte-identical for equal inputs. Rationals are always strings.

use serde::Deserialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::{Algebra, Vector};
use crate::bialgebra::Cobracket;
use crate::error::{Error, Result};
use crate::lie::LieStructure;
use crate::poisson::PolyTensor;
use crate::residual::ResidualReport;
use crate::scalar::{emit_rational, parse_rational, Scalar};
use crate::yang_baxter::RMatrix;

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn rational(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => parse_rational(s),
        other => Err(Error::Format(format!("rational must be a string literal like \"1/2\", got {other}"))),
    }
}

fn index(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|i| i as usize)
        .ok_or_else(|| Error::Format(format!("index must be a non-negative integer, got {v}")))
}

/// Splits `[i, j, ..., "p/q"]` rows into indices and value.
fn rows(v: &[Vec<Value>], indices: Option<usize>, what: &str) -> Result<Vec<(Vec<usize>, Scalar)>> {
    v.iter()
        .map(|row| {
            let (last, head) = row
                .split_last()
                .ok_or_else(|| Error::Format(format!("empty row in {what}")))?;
            if let Some(k) = indices {
                if head.len() != k {
                    return Err(Error::Format(format!(
                        "{what} rows need {k} indices and a value, got {} entries",
                        row.len()
                    )));
                }
            }
            Ok((head.iter().map(index).collect::<Result<_>>()?, rational(last)?))
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    structure: Vec<Vec<Value>>,
    #[serde(default)]
    unit: Option<Vec<Value>>,
}

pub fn algebra_from_json(text: &str) -> Result<Algebra> {
    let f: AlgebraFile = serde_json::from_str(text)?;
    let entries = rows(&f.structure, Some(3), "structure")?
        .into_iter()
        .map(|(ix, v)| (ix[0], ix[1], ix[2], v));
    let unit = f
        .unit
        .map(|u| u.iter().map(rational).collect::<Result<Vec<_>>>().map(Vector))
        .transpose()?;
    Algebra::new(f.name, f.dim, entries, unit, f.basis)
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    let structure: Vec<Value> = alg
        .structure()
        .map(|(i, j, k, v)| json!([i, j, k, emit_rational(v)]))
        .collect();
    let unit = alg
        .unit()
        .map(|u| Value::Array(u.0.iter().map(|v| Value::String(emit_rational(v))).collect()))
        .unwrap_or(Value::Null);
    json!({
        "name": alg.name(),
        "dim": alg.dim(),
        "basis": (0..alg.dim()).map(|i| alg.label(i)).collect::<Vec<_>>(),
        "structure": structure,
        "unit": unit,
    })
}

/// A Lie structure written in the algebra format, `structure` holding
/// `l_{ij}^k` and no unit.
pub fn lie_to_json(name: &str, lie: &LieStructure) -> Value {
    let structure: Vec<Value> = lie
        .constants()
        .map(|(i, j, k, v)| json!([i, j, k, emit_rational(v)]))
        .collect();
    json!({
        "name": name,
        "dim": lie.dim(),
        "basis": (0..lie.dim()).map(|i| format!("x{}", i + 1)).collect::<Vec<_>>(),
        "structure": structure,
        "unit": Value::Null,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketFile {
    degree: usize,
    dim: usize,
    c: Vec<Vec<Value>>,
}

/// Loads and canonicalizes a bracket file.
pub fn bracket_from_json(text: &str) -> Result<PolyTensor> {
    let f: BracketFile = serde_json::from_str(text)?;
    let raw = rows(&f.c, Some(f.degree + 2), "c")?
        .into_iter()
        .map(|(ix, v)| (ix[0], ix[1], ix[2..].to_vec(), v));
    PolyTensor::canonicalize(f.dim, f.degree, raw)
}

pub fn bracket_to_json(pt: &PolyTensor) -> Value {
    let c: Vec<Value> = pt
        .coefficient_list()
        .into_iter()
        .map(|(i, j, lower, v)| {
            let mut row: Vec<Value> = vec![i.into(), j.into()];
            row.extend(lower.into_iter().map(Value::from));
            row.push(Value::String(emit_rational(&v)));
            Value::Array(row)
        })
        .collect();
    json!({ "degree": pt.degree(), "dim": pt.dim(), "c": c })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RFile {
    dim: usize,
    r: Vec<Vec<Value>>,
}

/// Loads an r-matrix, completing antisymmetrically. A pair listed in both
/// orientations must agree.
pub fn r_from_json(text: &str) -> Result<RMatrix> {
    let f: RFile = serde_json::from_str(text)?;
    if f.dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let entries = rows(&f.r, Some(2), "r")?.into_iter().map(|(ix, v)| (ix[0], ix[1], v));
    RMatrix::from_upper(f.dim, entries)
}

pub fn r_to_json(r: &RMatrix) -> Value {
    let rows: Vec<Value> = r
        .upper_entries()
        .into_iter()
        .map(|(i, j, v)| json!([i, j, emit_rational(&v)]))
        .collect();
    json!({ "dim": r.dim(), "r": rows })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CobracketFile {
    dim: usize,
    delta: Vec<Vec<Value>>,
}

pub fn cobracket_from_json(text: &str) -> Result<Cobracket> {
    let f: CobracketFile = serde_json::from_str(text)?;
    let entries = rows(&f.delta, Some(3), "delta")?
        .into_iter()
        .map(|(ix, v)| (ix[0], ix[1], ix[2], v));
    Cobracket::from_entries(f.dim, entries)
}

pub fn cobracket_to_json(cb: &Cobracket) -> Value {
    let rows: Vec<Value> = cb
        .entries()
        .into_iter()
        .map(|(k, i, j, v)| json!([k, i, j, emit_rational(&v)]))
        .collect();
    json!({ "dim": cb.dim(), "delta": rows })
}

/// Residual entries as `{"index": [...], "value": "p/q"}`, at most `limit`.
pub fn residual_to_json(report: &ResidualReport, limit: usize) -> Value {
    let entries: Vec<Value> = report
        .entries
        .iter()
        .take(limit)
        .map(|e| json!({ "index": e.index, "value": emit_rational(&e.value) }))
        .collect();
    json!({
        "checked": report.checked,
        "nonzero": report.entries.len(),
        "entries": entries,
        "truncated": report.entries.len() > limit,
    })
}

/// Parses `"2*i^j + 1/2*j^k - i^k"`: a signed sum of optional rational
/// coefficients times wedges of basis labels.
pub fn parse_r_inline(alg: &Algebra, text: &str) -> Result<RMatrix> {
    let n = alg.dim();
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Format("empty r-matrix expression".into()));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && !current.is_empty() {
            terms.push((negative, std::mem::take(&mut current)));
            negative = ch == '-';
        } else if (ch == '+' || ch == '-') && current.is_empty() {
            if ch == '-' {
                negative = !negative;
            }
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(Error::Format(format!("dangling sign in {text:?}")));
    }
    terms.push((negative, current));
    let mut r = RMatrix::zero(n);
    for (neg, term) in terms {
        let (coef, wedge) = match term.rsplit_once('*') {
            Some((c, w)) => (parse_rational(c)?, w),
            None => (crate::scalar::one(), term.as_str()),
        };
        let (a, b) = wedge
            .split_once('^')
            .ok_or_else(|| Error::Format(format!("expected label^label in {term:?}")))?;
        let lookup = |l: &str| {
            alg.label_index(l)
                .ok_or_else(|| Error::Format(format!("unknown basis label {l:?} for {}", alg.name())))
        };
        let (i, j) = (lookup(a)?, lookup(b)?);
        let coef = if neg { -coef } else { coef };
        r = r.add(&RMatrix::wedge(n, i, j).scale(&coef));
    }
    Ok(r)
}
