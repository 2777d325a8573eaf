//! Operator serialization.
//!
//! JSON: `{"order": r, "coeffs": [[[re_num, re_den, im_num, im_den], ...], ...]}`,
//! outer list by ascending `Dx` power, inner by ascending `x` power.
//! Integers that fit in an `i64` are JSON numbers, larger ones decimal
//! strings.
//!
//! Text: `(c_r)*Dx^r + ... + (c_1)*Dx + (c_0)`, zero coefficients omitted,
//! each `c_k` in the algebra text grammar.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::algebra::text::render_rational_function;
use crate::algebra::{parse_rational_function, GaussianRational, Polynomial, Rational};

use super::{DiffOperator, WeylError};

/// Longest accepted decimal string for one integer.
const MAX_DIGITS: usize = 4096;

pub(crate) fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => Value::String(n.to_string()),
    }
}

pub(crate) fn value_int(v: &Value) -> Result<BigInt, WeylError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| WeylError::Format(format!("not an integer: {n}"))),
        Value::String(s) => {
            let body = s.strip_prefix('-').unwrap_or(s);
            if s.len() > MAX_DIGITS || body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(WeylError::Format(format!("not an integer string: {s:?}")));
            }
            s.parse::<BigInt>()
                .map_err(|e| WeylError::Format(e.to_string()))
        }
        other => Err(WeylError::Format(format!("expected integer, got {other}"))),
    }
}

fn scalar_value(c: &GaussianRational) -> Value {
    Value::Array(vec![
        int_value(c.re.numer()),
        int_value(c.re.denom()),
        int_value(c.im.numer()),
        int_value(c.im.denom()),
    ])
}

fn value_scalar(v: &Value) -> Result<GaussianRational, WeylError> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 4)
        .ok_or_else(|| WeylError::Format("scalar must be [re_num, re_den, im_num, im_den]".into()))?;
    let ints = arr.iter().map(value_int).collect::<Result<Vec<_>, _>>()?;
    if ints[1].is_zero() || ints[3].is_zero() {
        return Err(WeylError::Format("zero denominator".into()));
    }
    Ok(GaussianRational::new(
        Rational::new(ints[0].clone(), ints[1].clone()),
        Rational::new(ints[2].clone(), ints[3].clone()),
    ))
}

/// JSON value of an operator with polynomial coefficients.
pub fn operator_to_value(op: &DiffOperator) -> Result<Value, WeylError> {
    let mut coeffs = Vec::with_capacity(op.order() + 1);
    for (k, c) in op.coeffs().iter().enumerate() {
        if !c.is_polynomial() {
            return Err(WeylError::Format(format!(
                "coefficient {k} is not a polynomial"
            )));
        }
        coeffs.push(Value::Array(c.num().coeffs().iter().map(scalar_value).collect()));
    }
    Ok(json!({ "order": op.order(), "coeffs": coeffs }))
}

pub fn operator_from_value(v: &Value) -> Result<DiffOperator, WeylError> {
    let obj = v
        .as_object()
        .ok_or_else(|| WeylError::Format("expected an object".into()))?;
    let order = obj
        .get("order")
        .and_then(Value::as_u64)
        .ok_or_else(|| WeylError::Format("missing or invalid \"order\"".into()))?;
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| WeylError::Format("missing or invalid \"coeffs\"".into()))?;
    if coeffs.len() as u64 != order + 1 {
        return Err(WeylError::Format(format!(
            "order {order} but {} coefficients",
            coeffs.len()
        )));
    }
    let polys = coeffs
        .iter()
        .map(|c| {
            let terms = c
                .as_array()
                .ok_or_else(|| WeylError::Format("coefficient must be a list".into()))?;
            Ok(Polynomial::new(
                terms.iter().map(value_scalar).collect::<Result<_, WeylError>>()?,
            ))
        })
        .collect::<Result<Vec<_>, WeylError>>()?;
    let op = DiffOperator::from_polys(polys)?;
    if op.order() as u64 != order {
        return Err(WeylError::Format("top coefficient is zero".into()));
    }
    Ok(op)
}

pub fn operator_to_json(op: &DiffOperator) -> Result<String, WeylError> {
    Ok(operator_to_value(op)?.to_string())
}

pub fn operator_from_json(s: &str) -> Result<DiffOperator, WeylError> {
    let v: Value = serde_json::from_str(s).map_err(|e| WeylError::Format(e.to_string()))?;
    operator_from_value(&v)
}

pub fn operator_to_text(op: &DiffOperator) -> String {
    let parts: Vec<String> = op
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| {
            let c = render_rational_function(c, "x");
            match k {
                0 => format!("({c})"),
                1 => format!("({c})*Dx"),
                _ => format!("({c})*Dx^{k}"),
            }
        })
        .collect();
    parts.join(" + ")
}

/// Parse the text form. Terms may come in any order; repeated powers add.
pub fn operator_from_text(s: &str) -> Result<DiffOperator, WeylError> {
    let b = s.as_bytes();
    let mut pos = 0;
    let mut coeffs: Vec<crate::algebra::RationalFunction> = Vec::new();
    let err = |pos: usize, msg: &str| WeylError::Format(format!("at byte {pos}: {msg}"));
    let skip_ws = |pos: &mut usize| {
        while *pos < b.len() && b[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    loop {
        skip_ws(&mut pos);
        if pos >= b.len() || b[pos] != b'(' {
            return Err(err(pos, "expected '('"));
        }
        let start = pos + 1;
        let mut depth = 0usize;
        let mut end = None;
        for (i, &ch) in b.iter().enumerate().skip(pos) {
            match ch {
                b'(' => depth += 1,
                b')' => {
                    depth -= 1;
                    if depth == 0 {
                        end = Some(i);
                        break;
                    }
                }
                _ => {}
            }
        }
        let end = end.ok_or_else(|| err(pos, "unbalanced parentheses"))?;
        let c = parse_rational_function(&s[start..end])?;
        pos = end + 1;
        skip_ws(&mut pos);
        let mut k = 0usize;
        if s[pos..].starts_with("*Dx") {
            pos += 3;
            k = 1;
            if s[pos..].starts_with('^') {
                pos += 1;
                let digits = b[pos..].iter().take_while(|c| c.is_ascii_digit()).count();
                if digits == 0 || digits > 4 {
                    return Err(err(pos, "expected a small exponent"));
                }
                k = s[pos..pos + digits].parse().unwrap();
                pos += digits;
            }
        }
        if coeffs.len() <= k {
            coeffs.resize(k + 1, crate::algebra::RationalFunction::zero());
        }
        coeffs[k] = &coeffs[k] + &c;
        skip_ws(&mut pos);
        if pos == b.len() {
            break;
        }
        if b[pos] != b'+' {
            return Err(err(pos, "expected '+'"));
        }
        pos += 1;
    }
    DiffOperator::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RationalFunction;

    fn rf(s: &str) -> RationalFunction {
        parse_rational_function(s).unwrap()
    }

    fn example() -> DiffOperator {
        DiffOperator::new(vec![
            rf("9 + 6*x^2 + 9*x^4"),
            rf("-30*x^3 - 9*x"),
            rf("-10*x^4 - 3*x^2"),
            rf("6*x^3"),
            rf("x^4"),
        ])
        .unwrap()
    }

    #[test]
    fn json_round_trip() {
        let op = example();
        let s = operator_to_json(&op).unwrap();
        assert!(s.starts_with("{\"order\":4,\"coeffs\":[[[9,1,0,1],[0,1,0,1],[6,1,0,1]"));
        assert_eq!(operator_from_json(&s).unwrap(), op);
    }

    #[test]
    fn json_big_integers_are_strings() {
        let big = GaussianRational::real(Rational::from_integer(BigInt::from(10u8).pow(30)));
        let op = DiffOperator::from_polys(vec![Polynomial::constant(big)]).unwrap();
        let s = operator_to_json(&op).unwrap();
        assert!(s.contains("\"1000000000000000000000000000000\""));
        assert_eq!(operator_from_json(&s).unwrap(), op);
    }

    #[test]
    fn json_rejects_malformed() {
        for bad in [
            "[]",
            "{\"order\":0}",
            "{\"order\":1,\"coeffs\":[[[1,1,0,1]]]}",
            "{\"order\":0,\"coeffs\":[[[1,0,0,1]]]}",
            "{\"order\":0,\"coeffs\":[[]]}",
            "{\"order\":0,\"coeffs\":[[[1,1,0]]]}",
            "{\"order\":0,\"coeffs\":[[[\"1x\",1,0,1]]]}",
            "{\"order\":0,\"coeffs\":[[[1.5,1,0,1]]]}",
        ] {
            assert!(operator_from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn text_round_trip() {
        let op = example();
        let t = operator_to_text(&op);
        assert_eq!(
            t,
            "(x^4)*Dx^4 + (6*x^3)*Dx^3 + (-3*x^2 - 10*x^4)*Dx^2 + (-9*x - 30*x^3)*Dx + (9 + 6*x^2 + 9*x^4)"
        );
        assert_eq!(operator_from_text(&t).unwrap(), op);
        let r = DiffOperator::new(vec![rf("1/(x + 1)"), rf("-i*x^-2")]).unwrap();
        assert_eq!(operator_from_text(&operator_to_text(&r)).unwrap(), r);
    }

    #[test]
    fn text_rejects_malformed() {
        for bad in ["", "x*Dx", "(x)*Dx^", "(x) (1)", "((x)", "(0)"] {
            assert!(operator_from_text(bad).is_err(), "{bad}");
        }
    }
}
