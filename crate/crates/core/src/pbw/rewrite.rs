//! Rewriting free words onto the PBW basis.
//!
//! Rules, applied to an adjacent pair `a b` whose keys are out of order
//! (`Z < X_1 < .. < X_n < δ_1 < .. < δ_n`):
//!
//! * `δ_i X_i → X_i δ_i + Z²` in `B`, `X_i δ_i + 1` in `A`,
//! * any other out-of-order pair is swapped.
//!
//! Each step either removes an inversion or shortens the word, so the
//! process terminates. Confluence is not assumed; the tests reduce with
//! randomized rule choices and compare.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_pbw_kind, AlgebraElement, PbwMonomial};
use crate::expr::FreeExpression;
use crate::{AlgebraError, AlgebraKind, Generator, Rational, Result};

/// Which redex to contract next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// A uniformly random redex, from a stream seeded with the value.
    Seeded(u64),
}

fn key(g: Generator, n: usize) -> usize {
    match g {
        Generator::Z => 0,
        Generator::X(i) => i,
        Generator::D(i) => n + i,
    }
}

fn validate(word: &[Generator], kind: AlgebraKind, n: usize) -> Result<()> {
    for &g in word {
        match g.index() {
            Some(i) if i == 0 || i > n => return Err(AlgebraError::IndexOutOfRange { index: i, n }),
            None if !kind.allows_z() => return Err(AlgebraError::IllegalGenerator { kind }),
            _ => {}
        }
    }
    Ok(())
}

fn to_monomial(word: &[Generator], n: usize) -> PbwMonomial {
    let mut m = PbwMonomial::one(n);
    for &g in word {
        match g {
            Generator::Z => m.z += 1,
            Generator::X(i) => m.x[i - 1] += 1,
            Generator::D(i) => m.d[i - 1] += 1,
        }
    }
    m
}

/// Normal form using leftmost reduction.
pub fn normal_form(expr: &FreeExpression, kind: AlgebraKind, n: usize) -> Result<AlgebraElement> {
    normal_form_with(expr, kind, n, Strategy::Leftmost)
}

pub fn normal_form_word(word: &[Generator], kind: AlgebraKind, n: usize) -> Result<AlgebraElement> {
    normal_form(&FreeExpression::word(word.to_vec()), kind, n)
}

pub fn normal_form_with(
    expr: &FreeExpression,
    kind: AlgebraKind,
    n: usize,
    strategy: Strategy,
) -> Result<AlgebraElement> {
    check_pbw_kind(kind, "normal_form")?;
    let mut rng = match strategy {
        Strategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };

    let mut pending: BTreeMap<Vec<Generator>, Rational> = BTreeMap::new();
    for t in &expr.terms {
        validate(&t.word, kind, n)?;
        accumulate(&mut pending, t.word.clone(), t.coeff.clone());
    }

    let mut out = AlgebraElement::zero(kind, n);
    let mut redexes = Vec::new();
    while let Some((word, coeff)) = pending.pop_first() {
        redexes.clear();
        redexes.extend(
            word.windows(2)
                .enumerate()
                .filter(|(_, w)| key(w[0], n) > key(w[1], n))
                .map(|(i, _)| i),
        );
        let Some(&first) = redexes.first() else {
            out.add_term(to_monomial(&word, n), coeff);
            continue;
        };
        let at = match (strategy, rng.as_mut()) {
            (Strategy::Rightmost, _) => *redexes.last().unwrap(),
            (Strategy::Seeded(_), Some(rng)) => redexes[rng.random_range(0..redexes.len())],
            _ => first,
        };

        let (a, b) = (word[at], word[at + 1]);
        let mut swapped = word.clone();
        swapped.swap(at, at + 1);
        accumulate(&mut pending, swapped, coeff.clone());

        if let (Generator::D(i), Generator::X(j)) = (a, b) {
            if i == j && kind != AlgebraKind::C {
                let mut contracted = word[..at].to_vec();
                if kind == AlgebraKind::B {
                    contracted.extend([Generator::Z, Generator::Z]);
                }
                contracted.extend_from_slice(&word[at + 2..]);
                accumulate(&mut pending, contracted, coeff);
            }
        }
    }
    Ok(out)
}

fn accumulate(map: &mut BTreeMap<Vec<Generator>, Rational>, word: Vec<Generator>, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(word) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}
