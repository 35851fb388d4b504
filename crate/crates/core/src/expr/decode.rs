use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::JsonElement;
use crate::pbw::{AlgebraElement, PbwMonomial};
use crate::shriek::{ShriekElement, ShriekWord, MAX_N};
use crate::{AlgebraKind, Rational};

/// Largest `n` accepted from JSON; keeps exponent vectors bounded.
pub const MAX_JSON_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("unknown algebra {0:?}")]
    UnknownAlgebra(String),
    #[error("n = {0} is out of range")]
    BadSize(usize),
    #[error("term {term}: bad coefficient {text:?}")]
    BadCoefficient { term: usize, text: String },
    #[error("term {term}: exponent vectors must have length n")]
    BadLength { term: usize },
    #[error("term {term}: monomial not legal in {kind}")]
    IllegalMonomial { term: usize, kind: AlgebraKind },
    #[error("term {term}: repeated monomial")]
    Repeated { term: usize },
}

/// A decoded element: PBW algebras and shriek algebras have different
/// carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Pbw(AlgebraElement),
    Shriek(ShriekElement, AlgebraKind),
}

/// Parses the JSON element format.
pub fn decode_json(text: &str) -> Result<Decoded, DecodeError> {
    let e: JsonElement = serde_json::from_str(text).map_err(|e| DecodeError::Json(e.to_string()))?;
    decode(&e)
}

/// Validates a [`JsonElement`]. Coefficients must be written `p/q` with
/// `q > 0` and zero coefficients are rejected, so every accepted value
/// renders back to the same JSON up to term order.
pub fn decode(e: &JsonElement) -> Result<Decoded, DecodeError> {
    let kind: AlgebraKind = e
        .algebra
        .parse()
        .map_err(|_| DecodeError::UnknownAlgebra(e.algebra.clone()))?;
    let n = e.n;
    let max = if kind.is_shriek() { MAX_N } else { MAX_JSON_N };
    if n == 0 || n > max {
        return Err(DecodeError::BadSize(n));
    }
    if kind.is_shriek() {
        let mut out = ShriekElement::zero(n);
        for (i, t) in e.terms.iter().enumerate() {
            let c = coefficient(i, &t.coeff)?;
            if t.x.len() != n || t.d.len() != n {
                return Err(DecodeError::BadLength { term: i });
            }
            let bits = |v: &[u32]| -> Option<u32> {
                v.iter().enumerate().try_fold(0u32, |acc, (j, &b)| match b {
                    0 => Some(acc),
                    1 => Some(acc | 1 << j),
                    _ => None,
                })
            };
            let illegal = DecodeError::IllegalMonomial { term: i, kind };
            let (Some(x), Some(d)) = (bits(&t.x), bits(&t.d)) else {
                return Err(illegal);
            };
            let z = match t.z {
                0 => false,
                1 if kind == AlgebraKind::BShriek => true,
                _ => return Err(illegal),
            };
            let w = ShriekWord { x, d, z };
            if !out.coeff(w).is_zero() {
                return Err(DecodeError::Repeated { term: i });
            }
            out = out
                .add(&ShriekElement::term(n, w, c))
                .expect("same n");
        }
        Ok(Decoded::Shriek(out, kind))
    } else {
        let mut terms = Vec::with_capacity(e.terms.len());
        let mut seen = std::collections::BTreeSet::new();
        for (i, t) in e.terms.iter().enumerate() {
            let c = coefficient(i, &t.coeff)?;
            if t.x.len() != n || t.d.len() != n {
                return Err(DecodeError::BadLength { term: i });
            }
            let m = PbwMonomial {
                z: t.z,
                x: t.x.clone(),
                d: t.d.clone(),
            };
            let degree: u64 = t.x.iter().chain(&t.d).map(|&e| u64::from(e)).sum::<u64>() + u64::from(t.z);
            if !m.is_legal(kind) || degree > u64::from(u32::MAX) {
                return Err(DecodeError::IllegalMonomial { term: i, kind });
            }
            if !seen.insert(m.clone()) {
                return Err(DecodeError::Repeated { term: i });
            }
            terms.push((m, c));
        }
        let e = AlgebraElement::from_terms(kind, n, terms)
            .map_err(|_| DecodeError::IllegalMonomial { term: 0, kind })?;
        Ok(Decoded::Pbw(e))
    }
}

fn coefficient(term: usize, text: &str) -> Result<Rational, DecodeError> {
    let bad = || DecodeError::BadCoefficient {
        term,
        text: text.chars().take(64).collect(),
    };
    let (p, q) = text.split_once('/').ok_or_else(bad)?;
    let digits = |s: &str| !s.is_empty() && s.len() <= 4096 && s.bytes().all(|b| b.is_ascii_digit());
    let p_digits = p.strip_prefix('-').unwrap_or(p);
    if !digits(p_digits) || !digits(q) {
        return Err(bad());
    }
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() || p.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, Render};
    use crate::pbw::normal_form;
    use crate::shriek::reduce_word;
    use crate::Generator::*;

    #[test]
    fn decodes_rendered_elements() {
        let e = normal_form(&parse("d1*x1^2 - 1/3*z", 1, AlgebraKind::B).unwrap(), AlgebraKind::B, 1).unwrap();
        let json = e.render(crate::expr::Format::Json);
        assert_eq!(decode_json(&json), Ok(Decoded::Pbw(e)));

        let s = reduce_word(&[Z, Z, Z], 1).unwrap();
        let json = s.render(crate::expr::Format::Json);
        assert_eq!(decode_json(&json), Ok(Decoded::Shriek(s, AlgebraKind::BShriek)));
    }

    #[test]
    fn rejects_bad_input() {
        let bad = |s: &str| decode_json(s).unwrap_err();
        assert!(matches!(bad("{"), DecodeError::Json(_)));
        assert!(matches!(
            bad(r#"{"algebra":"Q","n":1,"terms":[]}"#),
            DecodeError::UnknownAlgebra(_)
        ));
        assert!(matches!(
            bad(r#"{"algebra":"B","n":0,"terms":[]}"#),
            DecodeError::BadSize(0)
        ));
        assert!(matches!(
            bad(r#"{"algebra":"A","n":1,"terms":[{"coeff":"1/1","z":1,"x":[0],"d":[0]}]}"#),
            DecodeError::IllegalMonomial { .. }
        ));
        assert!(matches!(
            bad(r#"{"algebra":"B","n":1,"terms":[{"coeff":"1/0","z":1,"x":[0],"d":[0]}]}"#),
            DecodeError::BadCoefficient { .. }
        ));
        assert!(matches!(
            bad(r#"{"algebra":"B","n":1,"terms":[{"coeff":"+1/2","z":1,"x":[0],"d":[0]}]}"#),
            DecodeError::BadCoefficient { .. }
        ));
        assert!(matches!(
            bad(r#"{"algebra":"B","n":2,"terms":[{"coeff":"1/1","z":1,"x":[0],"d":[0]}]}"#),
            DecodeError::BadLength { .. }
        ));
        assert!(matches!(
            bad(r#"{"algebra":"C!","n":1,"terms":[{"coeff":"1/1","z":1,"x":[0],"d":[0]}]}"#),
            DecodeError::IllegalMonomial { .. }
        ));
        assert!(matches!(
            bad(r#"{"algebra":"B!","n":1,"terms":[{"coeff":"1/1","z":0,"x":[2],"d":[0]}]}"#),
            DecodeError::IllegalMonomial { .. }
        ));
        assert!(matches!(
            bad(r#"{"algebra":"B","n":1,"terms":[{"coeff":"1/1","z":0,"x":[0],"d":[0]},{"coeff":"2/1","z":0,"x":[0],"d":[0]}]}"#),
            DecodeError::Repeated { term: 1 }
        ));
    }
}
