//! JSON wire format for series.
//!
//! ```text
//! {"variable": "q", "unit": 2, "terms": [[-2, "1"], [2, "196884"]], "order": 8}
//! ```
//!
//! Exponents (and `order`) are in units of `q`, so every exponent is even.
//! Integer coefficients are decimal strings; polynomial coefficients are
//! `{"poly": ["c0", "c1", ...]}`, degree ascending.

use serde_json::{json, Value};

use super::{Coefficient, IntPoly, LaurentSeries, QInt};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed series JSON: {0}")]
pub struct JsonError(pub String);

fn bad(msg: impl Into<String>) -> JsonError {
    JsonError(msg.into())
}

/// Coefficient domains with a JSON representation.
pub trait JsonCoefficient: Coefficient {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self, JsonError>;
}

pub fn int_to_json(c: &QInt) -> Value {
    Value::String(c.to_str_radix(10))
}

pub fn int_from_json(v: &Value) -> Result<QInt, JsonError> {
    let s = v.as_str().ok_or_else(|| bad("integer coefficient must be a decimal string"))?;
    s.parse::<QInt>().map_err(|_| bad(format!("not a decimal integer: {s:?}")))
}

impl JsonCoefficient for QInt {
    fn to_json(&self) -> Value {
        int_to_json(self)
    }

    fn from_json(v: &Value) -> Result<Self, JsonError> {
        int_from_json(v)
    }
}

impl JsonCoefficient for IntPoly {
    fn to_json(&self) -> Value {
        json!({ "poly": self.coeffs().iter().map(int_to_json).collect::<Vec<_>>() })
    }

    fn from_json(v: &Value) -> Result<Self, JsonError> {
        let arr = v
            .get("poly")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("polynomial coefficient must be {\"poly\": [...]}"))?;
        let coeffs = arr.iter().map(int_from_json).collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

/// Internal exponent `n` is `q^{2n}`.
pub fn to_q_exponent(n: i64) -> i64 {
    2 * n
}

/// A q exponent to internal; odd exponents have no internal counterpart.
pub fn from_q_exponent(p: i64) -> Option<i64> {
    (p % 2 == 0).then_some(p / 2)
}

pub fn series_to_json<C: JsonCoefficient>(s: &LaurentSeries<C>) -> Value {
    let terms: Vec<Value> = s.terms().map(|(e, c)| json!([to_q_exponent(e), c.to_json()])).collect();
    json!({
        "variable": "q",
        "unit": 2,
        "terms": terms,
        "order": to_q_exponent(s.order()),
    })
}

pub fn series_from_json<C: JsonCoefficient>(v: &Value) -> Result<LaurentSeries<C>, JsonError> {
    if v.get("variable").and_then(Value::as_str) != Some("q") {
        return Err(bad("expected \"variable\": \"q\""));
    }
    if v.get("unit").and_then(Value::as_i64) != Some(2) {
        return Err(bad("expected \"unit\": 2"));
    }
    let even = |p: i64, what: &str| from_q_exponent(p).ok_or_else(|| bad(format!("{what} {p} is odd")));
    let order = v.get("order").and_then(Value::as_i64).ok_or_else(|| bad("missing integer \"order\""))?;
    let order = even(order, "order")?;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing \"terms\" array"))?;
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        let pair =
            t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("each term must be [exponent, coefficient]"))?;
        let p = pair[0].as_i64().ok_or_else(|| bad("term exponent must be an integer"))?;
        let e = even(p, "exponent")?;
        if e > order {
            return Err(bad(format!("term at exponent {p} lies beyond order")));
        }
        parsed.push((e, C::from_json(&pair[1])?));
    }
    Ok(LaurentSeries::from_terms(parsed, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{IntSeries, PolySeries};

    #[test]
    fn integer_series_layout() {
        let s = IntSeries::from_terms([(-1, QInt::from(1)), (1, QInt::from(196884))], 4);
        let v = series_to_json(&s);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"variable":"q","unit":2,"terms":[[-2,"1"],[2,"196884"]],"order":8}"#
        );
        assert_eq!(series_from_json::<QInt>(&v).unwrap(), s);
    }

    #[test]
    fn poly_series_layout() {
        let s = PolySeries::from_terms([(0, IntPoly::from_i64s(&[393192, -48, -1]))], 0);
        let v = series_to_json(&s);
        assert_eq!(v["terms"][0][1], json!({"poly": ["393192", "-48", "-1"]}));
        assert_eq!(series_from_json::<IntPoly>(&v).unwrap(), s);
    }

    #[test]
    fn rejects_odd_exponents() {
        let v = json!({"variable": "q", "unit": 2, "terms": [[3, "1"]], "order": 8});
        assert!(series_from_json::<QInt>(&v).is_err());
        let v = json!({"variable": "q", "unit": 2, "terms": [], "order": 7});
        assert!(series_from_json::<QInt>(&v).is_err());
    }

    #[test]
    fn rejects_numeric_coefficients() {
        let v = json!({"variable": "q", "unit": 2, "terms": [[2, 5]], "order": 8});
        assert!(series_from_json::<QInt>(&v).is_err());
    }
}
