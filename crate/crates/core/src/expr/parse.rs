//! Recursive-descent parser for the expression grammar
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)* | '-' term
//! factor   := atom ('^' NAT)?
//! atom     := VAR | RATIONAL | '(' expr ')'
//! VAR      := [xXdD][0-9]+ | [zZ]
//! RATIONAL := NAT ('/' NAT)?
//! ```
//!
//! Multiplication must be explicit. Unary minus binds looser than `*`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::FreeExpression;
use crate::{AlgebraKind, Generator, Rational};

/// Largest number of terms a parsed expression may expand to.
pub const MAX_TERMS: usize = 1 << 16;
/// Longest word a parsed expression may contain.
pub const MAX_WORD_LEN: usize = 4096;
/// Deepest parenthesis / unary-minus nesting accepted.
pub const MAX_DEPTH: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<&'static str>,
        found: String,
    },
    #[error("variable index {index} at {position} is out of range 1..={n}")]
    IndexOutOfRange {
        position: usize,
        index: usize,
        n: usize,
    },
    #[error("generator z at {position} is not available in algebra {kind}")]
    IllegalGenerator { position: usize, kind: AlgebraKind },
    #[error("zero denominator at {position}")]
    ZeroDenominator { position: usize },
    #[error("expression too large at {position}: {what}")]
    TooLarge { position: usize, what: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var(Generator),
    Nat(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Var(g) => format!("variable {g}"),
            Token::Nat(v) => format!("number {v}"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::End => "end of input".into(),
        }
    }
}

struct Lexed {
    token: Token,
    position: usize,
}

fn lex(text: &str, n: usize, kind: AlgebraKind) -> Result<Vec<Lexed>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let token = match c {
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                out.push(Lexed {
                    token: Token::Nat(digits.parse().expect("ascii digits")),
                    position: start,
                });
                continue;
            }
            b'x' | b'X' | b'd' | b'D' => {
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits_start == i {
                    return Err(ParseError::Syntax {
                        position: i,
                        expected: vec!["variable index"],
                        found: describe_char(text, i),
                    });
                }
                let index = text[digits_start..i].parse::<usize>().unwrap_or(usize::MAX);
                if index == 0 || index > n {
                    return Err(ParseError::IndexOutOfRange {
                        position: start,
                        index,
                        n,
                    });
                }
                let g = if c.eq_ignore_ascii_case(&b'x') {
                    Generator::X(index)
                } else {
                    Generator::D(index)
                };
                out.push(Lexed {
                    token: Token::Var(g),
                    position: start,
                });
                continue;
            }
            b'z' | b'Z' => {
                if !kind.allows_z() {
                    return Err(ParseError::IllegalGenerator {
                        position: start,
                        kind,
                    });
                }
                Token::Var(Generator::Z)
            }
            _ => {
                return Err(ParseError::Syntax {
                    position: start,
                    expected: vec!["variable", "number", "'('", "operator"],
                    found: describe_char(text, start),
                })
            }
        };
        out.push(Lexed {
            token,
            position: start,
        });
        i += 1;
    }
    out.push(Lexed {
        token: Token::End,
        position: text.len(),
    });
    Ok(out)
}

fn describe_char(text: &str, at: usize) -> String {
    match text.get(at..).and_then(|s| s.chars().next()) {
        Some(c) => format!("{c:?}"),
        None => "end of input".into(),
    }
}

struct Parser {
    tokens: Vec<Lexed>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].token
    }

    fn position(&self) -> usize {
        self.tokens[self.pos].position
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].token.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError::Syntax {
            position: self.position(),
            expected,
            found: self.peek().describe(),
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::TooLarge {
                position: self.position(),
                what: "nesting too deep",
            });
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<FreeExpression, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    let t = self.term()?;
                    self.append(&mut acc, t)?;
                }
                Token::Minus => {
                    self.bump();
                    let t = self.term()?.negate();
                    self.append(&mut acc, t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn append(&self, acc: &mut FreeExpression, more: FreeExpression) -> Result<(), ParseError> {
        if acc.len() + more.len() > MAX_TERMS {
            return Err(ParseError::TooLarge {
                position: self.position(),
                what: "too many terms",
            });
        }
        acc.extend(more);
        Ok(())
    }

    fn term(&mut self) -> Result<FreeExpression, ParseError> {
        if *self.peek() == Token::Minus {
            self.bump();
            self.enter()?;
            let inner = self.term()?;
            self.depth -= 1;
            return Ok(inner.negate());
        }
        let mut acc = self.factor()?;
        while *self.peek() == Token::Star {
            self.bump();
            let rhs = self.factor()?;
            acc = self.product(&acc, &rhs)?;
        }
        Ok(acc)
    }

    fn product(&self, a: &FreeExpression, b: &FreeExpression) -> Result<FreeExpression, ParseError> {
        if a.len().saturating_mul(b.len()) > MAX_TERMS {
            return Err(ParseError::TooLarge {
                position: self.position(),
                what: "too many terms",
            });
        }
        if a.max_word_len() + b.max_word_len() > MAX_WORD_LEN {
            return Err(ParseError::TooLarge {
                position: self.position(),
                what: "word too long",
            });
        }
        Ok(a.concat(b))
    }

    fn factor(&mut self) -> Result<FreeExpression, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.bump();
        let exp_pos = self.position();
        let Token::Nat(e) = self.peek().clone() else {
            return Err(self.error(vec!["exponent"]));
        };
        self.bump();
        let e = u32::try_from(&e)
            .ok()
            .filter(|&e| e as usize <= MAX_WORD_LEN)
            .ok_or(ParseError::TooLarge {
                position: exp_pos,
                what: "exponent too large",
            })?;
        let mut acc = FreeExpression::scalar(Rational::one());
        for _ in 0..e {
            acc = self.product(&acc, &base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<FreeExpression, ParseError> {
        match self.peek().clone() {
            Token::Var(g) => {
                self.bump();
                Ok(FreeExpression::word(vec![g]))
            }
            Token::Nat(p) => {
                self.bump();
                if *self.peek() != Token::Slash {
                    return Ok(FreeExpression::scalar(Rational::from_integer(p)));
                }
                self.bump();
                let q_pos = self.position();
                let Token::Nat(q) = self.peek().clone() else {
                    return Err(self.error(vec!["denominator"]));
                };
                self.bump();
                if q.is_zero() {
                    return Err(ParseError::ZeroDenominator { position: q_pos });
                }
                Ok(FreeExpression::scalar(Rational::new(p, q)))
            }
            Token::LParen => {
                self.bump();
                self.enter()?;
                let inner = self.expr()?;
                self.depth -= 1;
                if *self.peek() != Token::RParen {
                    return Err(self.error(vec!["')'", "operator"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(vec!["variable", "number", "'('"])),
        }
    }
}

/// Parses `text` into a sum of words over the generators of the `n`-th
/// algebra of the given kind.
///
/// Only rational coefficients are normalized; words are transcribed as
/// written, with products of sums distributed.
pub fn parse(text: &str, n: usize, kind: AlgebraKind) -> Result<FreeExpression, ParseError> {
    let tokens = lex(text, n, kind)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        depth: 0,
    };
    let e = parser.expr()?;
    if *parser.peek() != Token::End {
        return Err(parser.error(vec!["'+'", "'-'", "'*'", "end of input"]));
    }
    Ok(e)
}
