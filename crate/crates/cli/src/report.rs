//! JSON rendering helpers. All scalars are exact fraction strings; no
//! value is ever rendered as a float.

use serde_json::{json, Value};

use recsubres::{Degree, Poly, RatMatrix, Rational};

use crate::poly_text::print_poly;

pub fn rational_value(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn degree_value(d: Degree) -> Value {
    match d.finite() {
        Some(n) => json!(n),
        None => Value::Null,
    }
}

pub fn poly_value(p: &Poly) -> Value {
    let coeffs_desc: Vec<Value> = match p.degree().finite() {
        None => Vec::new(),
        Some(d) => (0..=d).rev().map(|i| rational_value(&p.coeff(i))).collect(),
    };
    json!({
        "degree": degree_value(p.degree()),
        "expr": print_poly(p),
        "coefficients_desc": coeffs_desc,
    })
}

pub fn matrix_value(m: &RatMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| Value::Array(m.row(r).iter().map(rational_value).collect()))
        .collect();
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": rows,
    })
}

pub fn emit(value: &Value, compact: bool) {
    let text = if compact {
        value.to_string()
    } else {
        serde_json::to_string_pretty(value).expect("valid JSON value")
    };
    println!("{text}");
}
