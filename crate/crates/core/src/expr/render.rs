use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::pbw::AlgebraElement;
use crate::shriek::ShriekElement;
use crate::{AlgebraKind, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// One term of the JSON element format. For shriek elements `x` and `d`
/// are 0/1 masks and `z` is 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub z: u32,
    pub x: Vec<u32>,
    pub d: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonElement {
    pub algebra: String,
    pub n: usize,
    pub terms: Vec<JsonTerm>,
}

/// Canonical elements that can be printed.
pub trait Render {
    fn to_json(&self) -> JsonElement;

    fn to_text(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => serde_json::to_string(&self.to_json()).expect("plain data serializes"),
        }
    }
}

pub fn render<R: Render + ?Sized>(e: &R, format: Format) -> String {
    e.render(format)
}

fn coeff_json(c: &Rational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Joins `(coefficient, monomial text)` pairs as `a - 3/2*b + c`.
/// An empty monomial text stands for the unit.
fn join_terms<'a>(terms: impl Iterator<Item = (&'a Rational, String)>) -> String {
    let mut out = String::new();
    for (i, (c, mono)) in terms.enumerate() {
        let abs = c.abs();
        match (i, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Render for AlgebraElement {
    fn to_json(&self) -> JsonElement {
        let mut terms: Vec<_> = self.terms().iter().collect();
        terms.sort_by(|a, b| a.0.display_cmp(b.0));
        JsonElement {
            algebra: self.kind().label().to_string(),
            n: self.n(),
            terms: terms
                .into_iter()
                .map(|(m, c)| JsonTerm {
                    coeff: coeff_json(c),
                    z: m.z,
                    x: m.x.clone(),
                    d: m.d.clone(),
                })
                .collect(),
        }
    }

    fn to_text(&self) -> String {
        let mut terms: Vec<_> = self.terms().iter().collect();
        terms.sort_by(|a, b| a.0.display_cmp(b.0));
        join_terms(terms.into_iter().map(|(m, c)| {
            let text = if m.graded_degree() == 0 {
                String::new()
            } else {
                m.to_string()
            };
            (c, text)
        }))
    }
}

/// A shriek element tagged with the algebra it is shown as (`B!` or `C!`).
pub struct Tagged<'a> {
    pub element: &'a ShriekElement,
    pub kind: AlgebraKind,
}

impl Render for Tagged<'_> {
    fn to_json(&self) -> JsonElement {
        let e = self.element;
        let n = e.n();
        let mut terms: Vec<_> = e.terms().iter().collect();
        terms.sort_by(|a, b| a.0.display_cmp(*b.0, n));
        JsonElement {
            algebra: self.kind.label().to_string(),
            n,
            terms: terms
                .into_iter()
                .map(|(w, c)| JsonTerm {
                    coeff: coeff_json(c),
                    z: u32::from(w.z),
                    x: w.x_mask(n),
                    d: w.d_mask(n),
                })
                .collect(),
        }
    }

    fn to_text(&self) -> String {
        let e = self.element;
        let n = e.n();
        let mut terms: Vec<_> = e.terms().iter().collect();
        terms.sort_by(|a, b| a.0.display_cmp(*b.0, n));
        join_terms(terms.into_iter().map(|(w, c)| {
            let text = if w.degree() == 0 { String::new() } else { w.display(n) };
            (c, text)
        }))
    }
}

impl Render for ShriekElement {
    fn to_json(&self) -> JsonElement {
        Tagged {
            element: self,
            kind: AlgebraKind::BShriek,
        }
        .to_json()
    }

    fn to_text(&self) -> String {
        Tagged {
            element: self,
            kind: AlgebraKind::BShriek,
        }
        .to_text()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use crate::pbw::normal_form;
    use crate::shriek::reduce_word;
    use crate::Generator::*;

    fn b(text: &str, n: usize) -> AlgebraElement {
        normal_form(&parse(text, n, AlgebraKind::B).unwrap(), AlgebraKind::B, n).unwrap()
    }

    #[test]
    fn text_rendering() {
        assert_eq!(b("z^2 + x1*d1", 1).render(Format::Text), "x1*d1 + z^2");
        assert_eq!(b("0", 1).render(Format::Text), "0");
        assert_eq!(b("d1 + z + x1", 1).render(Format::Text), "x1 + d1 + z");
        assert_eq!(b("-3/2*z*x2 + 1", 2).render(Format::Text), "1 - 3/2*z*x2");
        assert_eq!(b("-1 - x1", 1).render(Format::Text), "-1 - x1");
        assert_eq!(b("d1*x1^3", 1).render(Format::Text), "x1^3*d1 + 3*z^2*x1^2");
    }

    #[test]
    fn json_rendering() {
        assert_eq!(
            b("x1*d1 + z^2", 1).render(Format::Json),
            r#"{"algebra":"B","n":1,"terms":[{"coeff":"1/1","z":0,"x":[1],"d":[1]},{"coeff":"1/1","z":2,"x":[0],"d":[0]}]}"#
        );
        assert_eq!(
            b("0", 2).render(Format::Json),
            r#"{"algebra":"B","n":2,"terms":[]}"#
        );
    }

    #[test]
    fn shriek_rendering() {
        let e = reduce_word(&[Z, Z], 1).unwrap();
        assert_eq!(e.render(Format::Text), "-x1*d1");
        assert_eq!(
            e.render(Format::Json),
            r#"{"algebra":"B!","n":1,"terms":[{"coeff":"-1/1","z":0,"x":[1],"d":[1]}]}"#
        );
        let top = reduce_word(&[Z, X(1), D(1)], 1).unwrap();
        assert_eq!(top.render(Format::Text), "x1*d1*z");
    }
}
