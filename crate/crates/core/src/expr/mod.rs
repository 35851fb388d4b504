//! Surface syntax: parsing expressions into free-algebra words and rendering
//! canonical elements back to text or JSON.

mod decode;
mod parse;
mod render;

pub use decode::{decode, decode_json, Decoded, DecodeError, MAX_JSON_N};
pub use parse::{parse, ParseError, MAX_DEPTH, MAX_TERMS, MAX_WORD_LEN};
pub use render::{render, Format, JsonElement, JsonTerm, Render, Tagged};

use std::fmt;

use num_traits::{One, Zero};

use crate::{Generator, Rational};

/// One summand `coeff · g1 g2 ... gk` of a [`FreeExpression`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeTerm {
    pub coeff: Rational,
    pub word: Vec<Generator>,
}

/// A sum of words in the free algebra. Nothing is normalized: words may
/// repeat generators and zero coefficients are kept.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeExpression {
    pub terms: Vec<FreeTerm>,
}

impl FreeExpression {
    pub fn zero() -> Self {
        FreeExpression { terms: Vec::new() }
    }

    pub fn scalar(c: Rational) -> Self {
        FreeExpression {
            terms: vec![FreeTerm {
                coeff: c,
                word: Vec::new(),
            }],
        }
    }

    pub fn word(word: Vec<Generator>) -> Self {
        FreeExpression {
            terms: vec![FreeTerm {
                coeff: Rational::one(),
                word,
            }],
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.iter().map(|t| t.word.len()).max().unwrap_or(0)
    }

    /// Concatenation product, distributed over both sums.
    pub fn concat(&self, other: &FreeExpression) -> FreeExpression {
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut word = a.word.clone();
                word.extend_from_slice(&b.word);
                terms.push(FreeTerm {
                    coeff: &a.coeff * &b.coeff,
                    word,
                });
            }
        }
        FreeExpression { terms }
    }

    pub fn negate(mut self) -> FreeExpression {
        for t in &mut self.terms {
            t.coeff = -t.coeff.clone();
        }
        self
    }

    pub fn extend(&mut self, other: FreeExpression) {
        self.terms.extend(other.terms);
    }
}

impl fmt::Display for FreeExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff < Rational::zero();
            let abs = if negative { -t.coeff.clone() } else { t.coeff.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let word: Vec<String> = t.word.iter().map(|g| g.to_string()).collect();
            if t.word.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&word.join("*"))?;
            } else {
                write!(f, "{abs}*{}", word.join("*"))?;
            }
        }
        Ok(())
    }
}
