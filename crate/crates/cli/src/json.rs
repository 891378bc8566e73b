//! Conversions between core values and JSON. Rationals are strings, modes are
//! numbers when integral and `"m/2"` strings otherwise.

use std::collections::BTreeMap;

use seor_core::cohomology::Cocycle;
use seor_core::linalg::Matrix;
use seor_core::pbw::{Element, ExponentTriple};
use seor_core::rep::FiniteModule;
use seor_core::{CheckReport, Gen, Mode, Parity, Rational, SuperVector};
use serde_json::{json, Value};

use crate::InputError;

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn mode(m: Mode) -> Value {
    match m.as_integer() {
        Some(n) => json!(n),
        None => Value::String(m.to_string()),
    }
}

pub fn gen_name(g: Gen) -> Value {
    Value::String(g.to_string())
}

pub fn super_vector(v: &SuperVector) -> Value {
    Value::Array(v.iter().map(|(g, c)| json!({"gen": g.family.name(), "mode": mode(g.mode), "coeff": rational(c)})).collect())
}

pub fn element(e: &Element) -> Value {
    Value::Array(
        e.iter()
            .map(|(m, c)| json!({"word": m.word.iter().map(|g| g.to_string()).collect::<Vec<_>>(), "base": m.base, "coeff": rational(c)}))
            .collect(),
    )
}

pub fn triple(t: &ExponentTriple) -> Value {
    let v = |x: &seor_core::pbw::ExponentVector| x.support().map(|(s, e)| json!([s, e])).collect::<Vec<_>>();
    json!({"i": v(&t.i), "j": v(&t.j), "k": v(&t.k)})
}

pub fn report(r: &CheckReport) -> Value {
    json!({
        "check": r.check,
        "passed": r.passed(),
        "cases": r.cases,
        "failed": r.failed,
        "skipped": r.skipped,
        "notes": r.notes,
        "witnesses": r.witnesses.iter().map(|w| json!({"inputs": w.inputs, "expected": w.expected, "found": w.found})).collect::<Vec<_>>(),
    })
}

pub fn cocycle(c: &Cocycle) -> Value {
    Value::Array(c.entries().map(|((x, y), v)| json!({"x": gen_name(*x), "y": gen_name(*y), "value": rational(v)})).collect())
}

pub fn parse_rational(s: &str) -> Result<Rational, InputError> {
    s.trim().parse::<Rational>().map_err(|_| InputError(format!("invalid rational `{s}`")))
}

pub fn parse_gen(s: &str) -> Result<Gen, InputError> {
    s.trim().parse::<Gen>().map_err(|e| InputError(e.to_string()))
}

/// `"L:2"`, `"1/2*L:1 + -3*W:0"`.
pub fn parse_super_vector(s: &str) -> Result<SuperVector, InputError> {
    let mut v = SuperVector::zero();
    for term in s.split('+').map(str::trim).filter(|t| !t.is_empty()) {
        let (c, g) = match term.split_once('*') {
            Some((c, g)) => (parse_rational(c)?, parse_gen(g)?),
            None => (Rational::from_integer(1.into()), parse_gen(term)?),
        };
        v.add_term(c, g);
    }
    Ok(v)
}

/// Comma- or space-separated generators.
pub fn parse_word(s: &str) -> Result<Vec<Gen>, InputError> {
    s.split([',', ' ']).filter(|t| !t.trim().is_empty()).map(parse_gen).collect()
}

fn entry(v: &Value, path: &str) -> Result<Rational, InputError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| InputError(format!("{path}: {}", e.0))),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().expect("i64").into())),
        _ => Err(InputError(format!("{path}: expected a rational string"))),
    }
}

/// `{dim, parities, c1, c2, actions: {"L:0": [[...], ...]}}`.
pub fn parse_module(text: &str) -> Result<FiniteModule, InputError> {
    let root: Value = serde_json::from_str(text).map_err(|e| InputError(format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = root.as_object().ok_or_else(|| InputError("$: expected an object".into()))?;
    for key in obj.keys() {
        if !["dim", "parities", "c1", "c2", "actions"].contains(&key.as_str()) {
            return Err(InputError(format!("$.{key}: unknown field")));
        }
    }
    let dim = obj.get("dim").and_then(Value::as_u64).ok_or_else(|| InputError("$.dim: expected a non-negative integer".into()))? as usize;
    let parities = match obj.get("parities") {
        None => vec![Parity::Even; dim],
        Some(Value::Array(ps)) => ps
            .iter()
            .enumerate()
            .map(|(i, p)| {
                p.as_str().and_then(|s| s.parse::<Parity>().ok()).ok_or_else(|| InputError(format!("$.parities[{i}]: expected \"even\" or \"odd\"")))
            })
            .collect::<Result<_, _>>()?,
        Some(_) => return Err(InputError("$.parities: expected an array".into())),
    };
    if parities.len() != dim {
        return Err(InputError(format!("$.parities: {} entries for dim {dim}", parities.len())));
    }
    let c1 = obj.get("c1").map_or(Ok(Rational::from_integer(0.into())), |v| entry(v, "$.c1"))?;
    let c2 = obj.get("c2").map_or(Ok(Rational::from_integer(0.into())), |v| entry(v, "$.c2"))?;
    let mut actions = BTreeMap::new();
    if let Some(a) = obj.get("actions") {
        let a = a.as_object().ok_or_else(|| InputError("$.actions: expected an object".into()))?;
        for (name, rows) in a {
            let path = format!("$.actions[\"{name}\"]");
            let g = parse_gen(name).map_err(|e| InputError(format!("{path}: {}", e.0)))?;
            let rows = rows.as_array().ok_or_else(|| InputError(format!("{path}: expected an array of rows")))?;
            let mut parsed = Vec::with_capacity(rows.len());
            for (i, row) in rows.iter().enumerate() {
                let row = row.as_array().ok_or_else(|| InputError(format!("{path}[{i}]: expected an array")))?;
                parsed.push(row.iter().enumerate().map(|(j, x)| entry(x, &format!("{path}[{i}][{j}]"))).collect::<Result<Vec<_>, _>>()?);
            }
            if parsed.len() != dim || parsed.iter().any(|r| r.len() != dim) {
                return Err(InputError(format!("{path}: expected a {dim}x{dim} matrix")));
            }
            let m = if dim == 0 { Matrix::zeros(0, 0) } else { Matrix::from_rows(parsed).ok_or_else(|| InputError(format!("{path}: ragged rows")))? };
            actions.insert(g, m);
        }
    }
    Ok(FiniteModule { dim, parities, c1, c2, actions })
}

/// One `key: value` line per field of an object; anything else as compact JSON.
pub fn text(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes() {
        assert_eq!(mode(Mode(4)), json!(2));
        assert_eq!(mode(Mode(-1)), json!("-1/2"));
    }

    #[test]
    fn super_vector_round_trip() {
        let v = parse_super_vector("1/2*L:1 + -3*W:0 + G:-1/2").unwrap();
        assert_eq!(v.iter().count(), 3);
        let out = super_vector(&v);
        assert!(out.as_array().unwrap().iter().any(|t| t["gen"] == "G" && t["mode"] == "-1/2" && t["coeff"] == "1"));
        assert!(parse_super_vector("x*L:1").is_err());
    }

    #[test]
    fn words() {
        assert_eq!(parse_word("L:-1, W:-1").unwrap(), parse_word("L:-1 W:-1").unwrap());
        assert!(parse_word("L:-1,Q:0").is_err());
    }

    #[test]
    fn module_schema() {
        let m = parse_module(r#"{"dim":2,"parities":["even","odd"],"c1":"1/3","actions":{"L:0":[["1","0"],["0",2]]}}"#).unwrap();
        assert_eq!(m.dim, 2);
        assert_eq!(m.parities[1], Parity::Odd);
        assert!(parse_module(r#"{"dim":2,"actions":{"L:0":[["1"]]}}"#).unwrap_err().0.contains("2x2"));
        assert!(parse_module(r#"{"dim":1,"c1":1.5}"#).unwrap_err().0.contains("$.c1"));
        assert!(parse_module("[").unwrap_err().0.contains("line 1"));
    }

    #[test]
    fn text_lines() {
        assert_eq!(text(&json!({"b": 1, "a": "x"})), "a: x\nb: 1");
    }
}
