//! Canonical text and JSON output, plus the JSON readers for
//! multivectors and coefficient matrices.
//!
//! Text conventions (stable, golden-tested):
//! - multivectors print via the kernel's `Display` (terms ascending by
//!   basis mask, unit magnitudes elided, scalar terms as bare numbers);
//! - tensors print one `left (x) right` blade pair per term with the
//!   magnitude in front and the unit blade written `Id`, joined by
//!   ` + ` / ` - ` under the same leading-sign rule multivectors use;
//! - bare scalars print as plain numbers.
//!
//! JSON shapes:
//! - multivector: `{"dim": n, "terms": [{"blade": [1,2], "coeff": "p/q"}]}`
//! - tensor:      `{"dim": n, "pairs": [{"left": [terms], "right": [terms]}]}`
//!   (each pair's coefficient is carried on the right factor)
//! - scalar:      `{"dim": n, "scalar": "p/q"}`

use gfc_core::*;
use serde_json::{json, Value as Json};

use crate::eval::Value;

pub fn render_text<S: Scalar>(v: &Value<S>) -> String {
    match v {
        Value::Mv(m) => m.to_string(),
        Value::Num(c) => c.to_string(),
        Value::Tensor(t) => tensor_text(t),
    }
}

fn leg_label(dim: Dim, b: Blade) -> String {
    if b.is_unit() {
        "Id".to_string()
    } else {
        b.label(dim)
    }
}

pub fn tensor_text<S: Scalar>(t: &Tensor2<S>) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let dim = t.dim();
    let mut out = String::new();
    let mut first = true;
    for (a, b, c) in t.terms() {
        let pair = format!("{} (x) {}", leg_label(dim, a), leg_label(dim, b));
        let mag = c.abs();
        let body = if mag.is_one() {
            pair
        } else {
            format!("{mag} {pair}")
        };
        if first {
            if c.is_negative() {
                if body.starts_with(|ch: char| ch.is_ascii_digit()) {
                    out.push('-');
                } else {
                    out.push_str("- ");
                }
            }
            out.push_str(&body);
            first = false;
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&body);
        }
    }
    out
}

fn blade_json(b: Blade) -> Json {
    Json::Array(b.indices().map(|i| json!(i)).collect())
}

fn terms_json<S: Scalar>(m: &Multivector<S>) -> Json {
    Json::Array(
        m.terms()
            .map(|(b, c)| json!({"blade": blade_json(b), "coeff": c.to_string()}))
            .collect(),
    )
}

pub fn render_json<S: Scalar>(v: &Value<S>, dim: Dim) -> Json {
    match v {
        Value::Mv(m) => json!({"dim": m.dim().get(), "terms": terms_json(m)}),
        Value::Num(c) => json!({"dim": dim.get(), "scalar": c.to_string()}),
        Value::Tensor(t) => {
            let pairs: Vec<Json> = t
                .pairs()
                .iter()
                .map(|(l, r)| json!({"left": terms_json(l), "right": terms_json(r)}))
                .collect();
            json!({"dim": t.dim().get(), "pairs": pairs})
        }
    }
}

pub fn multivector_from_json<S: Scalar>(v: &Json) -> Result<Multivector<S>, String> {
    let obj = v.as_object().ok_or("expected a JSON object")?;
    let dim_raw = obj
        .get("dim")
        .and_then(Json::as_u64)
        .ok_or("missing integer field `dim`")?;
    let dim = Dim::new(dim_raw as usize).map_err(|e| e.to_string())?;
    let terms = obj
        .get("terms")
        .and_then(Json::as_array)
        .ok_or("missing array field `terms`")?;
    let mut m = Multivector::zero(dim);
    for t in terms {
        let t = t.as_object().ok_or("each term must be an object")?;
        let idx: Vec<usize> = t
            .get("blade")
            .and_then(Json::as_array)
            .ok_or("term missing array field `blade`")?
            .iter()
            .map(|i| i.as_u64().map(|i| i as usize).ok_or("blade indices must be integers"))
            .collect::<Result<_, _>>()?;
        let blade = Blade::from_indices(dim, &idx).map_err(|e| e.to_string())?;
        let coeff = scalar_from_json::<S>(t.get("coeff").ok_or("term missing field `coeff`")?)?;
        m.add_term(blade, coeff);
    }
    Ok(m)
}

fn scalar_from_json<S: Scalar>(v: &Json) -> Result<S, String> {
    match v {
        Json::String(s) => S::parse(s).ok_or_else(|| format!("bad scalar `{s}`")),
        Json::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(S::from_int(i))
            } else {
                // Non-integer numbers only parse for inexact scalars.
                S::parse(&n.to_string()).ok_or_else(|| {
                    format!("scalar `{n}` needs exact form; write it as a string \"p/q\"")
                })
            }
        }
        other => Err(format!("bad scalar {other}")),
    }
}

/// Read an n-by-n coefficient matrix from JSON text: an array of `dim`
/// rows of `dim` entries, each a string ("p/q") or a number.
pub fn matrix_from_json<S: Scalar>(text: &str, dim: Dim) -> Result<Vec<Vec<S>>, String> {
    let v: Json = serde_json::from_str(text).map_err(|e| format!("bad JSON: {e}"))?;
    let rows = v.as_array().ok_or("matrix must be a JSON array of rows")?;
    let n = dim.get() as usize;
    if rows.len() != n {
        return Err(format!("matrix has {} rows, need {n}", rows.len()));
    }
    let mut out = Vec::with_capacity(n);
    for row in rows {
        let row = row.as_array().ok_or("each matrix row must be an array")?;
        if row.len() != n {
            return Err(format!("matrix row has {} entries, need {n}", row.len()));
        }
        out.push(
            row.iter()
                .map(scalar_from_json::<S>)
                .collect::<Result<Vec<S>, _>>()?,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = Rational;

    fn q(n: i64) -> R {
        <R as Scalar>::from_int(n)
    }

    fn d(n: usize) -> Dim {
        Dim::new(n).unwrap()
    }

    #[test]
    fn tensor_text_pins() {
        let dim = d(3);
        // Δ(e12) = 1⊗e12 + e1⊗e2 − e2⊗e1 + e12⊗1
        let t = coproduct(&Multivector::<R>::basis_blade(dim, Blade(0b011)));
        assert_eq!(
            tensor_text(&t),
            "Id (x) e12 + e1 (x) e2 - e2 (x) e1 + e12 (x) Id"
        );
        let mut neg = Tensor2::zero(dim);
        neg.add_term(Blade(0b001), Blade(0b010), <R as Scalar>::ratio(-3, 4));
        assert_eq!(tensor_text(&neg), "-3/4 e1 (x) e2");
        let mut neg1 = Tensor2::zero(dim);
        neg1.add_term(Blade(0b001), Blade(0b010), q(-1));
        assert_eq!(tensor_text(&neg1), "- e1 (x) e2");
        assert_eq!(tensor_text(&Tensor2::<R>::zero(dim)), "0");
    }

    #[test]
    fn json_shapes() {
        let dim = d(3);
        let m = Multivector::basis_blade(dim, Blade(0b011))
            .scale(&<R as Scalar>::ratio(-3, 4));
        let j = render_json(&Value::Mv(m), dim);
        assert_eq!(
            j,
            serde_json::json!({"dim": 3, "terms": [{"blade": [1,2], "coeff": "-3/4"}]})
        );
        let mut t = Tensor2::zero(dim);
        t.add_term(Blade(0b001), Blade::UNIT, q(2));
        let j = render_json(&Value::Tensor(t), dim);
        assert_eq!(
            j,
            serde_json::json!({"dim": 3, "pairs": [
                {"left": [{"blade": [1], "coeff": "1"}],
                 "right": [{"blade": [], "coeff": "2"}]}
            ]})
        );
    }

    #[test]
    fn multivector_json_roundtrip() {
        let dim = d(4);
        let mut m = Multivector::zero(dim);
        m.add_term(Blade(0b1010), <R as Scalar>::ratio(5, 3));
        m.add_term(Blade::UNIT, q(-2));
        let j = render_json(&Value::Mv(m.clone()), dim);
        let back: Multivector<R> = multivector_from_json(&j).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn matrix_reader_accepts_strings_and_integers() {
        let dim = d(2);
        let rows: Vec<Vec<R>> =
            matrix_from_json(r#"[[1, "1/2"], ["-3", 0]]"#, dim).unwrap();
        assert_eq!(rows[0][1], <R as Scalar>::ratio(1, 2));
        assert_eq!(rows[1][0], q(-3));
        assert!(matrix_from_json::<R>("[[1]]", dim).is_err());
        assert!(matrix_from_json::<R>(r#"[[1, 0.5], [0, 0]]"#, dim).is_err());
        let f: Vec<Vec<f64>> =
            matrix_from_json(r#"[[1, 0.5], [0, 0]]"#, dim).unwrap();
        assert_eq!(f[0][1], 0.5);
    }
}
