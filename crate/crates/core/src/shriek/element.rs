use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::word::{shriek_basis, ShriekWord};
use crate::expr::FreeExpression;
use crate::pbw::Strategy;
use crate::{AlgebraError, Generator, Rational, Result};

/// A linear combination of basis words of `B_n^!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShriekElement {
    n: usize,
    terms: BTreeMap<ShriekWord, Rational>,
}

impl ShriekElement {
    pub fn zero(n: usize) -> Self {
        ShriekElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::word(n, ShriekWord::ONE)
    }

    pub fn word(n: usize, w: ShriekWord) -> Self {
        Self::term(n, w, Rational::one())
    }

    pub fn term(n: usize, w: ShriekWord, c: Rational) -> Self {
        let mut e = Self::zero(n);
        e.add_term(w, c);
        e
    }

    pub fn generator(n: usize, g: Generator) -> Result<Self> {
        check_index(g, n)?;
        Ok(Self::word(n, ShriekWord::generator(g)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<ShriekWord, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: ShriekWord) -> Rational {
        self.terms.get(&w).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, w: ShriekWord, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    fn check_same(&self, other: &ShriekElement) -> Result<()> {
        if self.n != other.n {
            return Err(AlgebraError::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ShriekElement) -> Result<ShriekElement> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&w, c) in &other.terms {
            out.add_term(w, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ShriekElement) -> Result<ShriekElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> ShriekElement {
        let mut out = Self::zero(self.n);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(&w, v)| (w, v * c)).collect();
        }
        out
    }

    pub fn multiply(&self, other: &ShriekElement) -> Result<ShriekElement> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n);
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                let c = ca * cb;
                for (w, v) in word_product(self.n, a, b).iter() {
                    out.add_term(*w, &c * v);
                }
            }
        }
        Ok(out)
    }

    /// The terms of degree exactly `d`.
    pub fn component(&self, d: usize) -> ShriekElement {
        let mut out = Self::zero(self.n);
        out.terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.degree() == d)
            .map(|(&w, c)| (w, c.clone()))
            .collect();
        out
    }

    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|w| w.degree() == d)
    }

    pub(crate) fn filter(&self, keep: impl Fn(ShriekWord) -> bool) -> ShriekElement {
        let mut out = Self::zero(self.n);
        out.terms = self
            .terms
            .iter()
            .filter(|(w, _)| keep(**w))
            .map(|(&w, c)| (w, c.clone()))
            .collect();
        out
    }
}

fn check_index(g: Generator, n: usize) -> Result<()> {
    match g.index() {
        Some(i) if i == 0 || i > n => Err(AlgebraError::IndexOutOfRange { index: i, n }),
        _ => Ok(()),
    }
}

/// Reduces a sum of words to the square-free basis.
pub fn reduce_expression(expr: &FreeExpression, n: usize) -> Result<ShriekElement> {
    let mut out = ShriekElement::zero(n);
    for t in &expr.terms {
        out = out.add(&reduce_word(&t.word, n)?.scale(&t.coeff))?;
    }
    Ok(out)
}

/// Reduces a word in the generators to the square-free basis.
pub fn reduce_word(word: &[Generator], n: usize) -> Result<ShriekElement> {
    reduce_word_with(word, n, Strategy::Leftmost)
}

/// Rewriting on adjacent pairs `a b`:
///
/// * `x_i x_i → 0`, `d_i d_i → 0`,
/// * `z z → −Σ x_i d_i`,
/// * `a b → −b a` when `b` precedes `a` in the order `x < d < z`.
///
/// The number of `z`s never grows and drops by two at each `z z` step;
/// between those steps every swap removes an inversion.
pub fn reduce_word_with(word: &[Generator], n: usize, strategy: Strategy) -> Result<ShriekElement> {
    for &g in word {
        check_index(g, n)?;
    }
    let mut rng = match strategy {
        Strategy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut pending: BTreeMap<Vec<Generator>, Rational> = BTreeMap::new();
    pending.insert(word.to_vec(), Rational::one());
    let mut out = ShriekElement::zero(n);
    let mut redexes = Vec::new();

    while let Some((w, coeff)) = pending.pop_first() {
        redexes.clear();
        redexes.extend(
            w.windows(2)
                .enumerate()
                .filter(|(_, p)| p[0].position(n) >= p[1].position(n))
                .map(|(i, _)| i),
        );
        let Some(&first) = redexes.first() else {
            out.add_term(to_word(&w), coeff);
            continue;
        };
        let at = match (strategy, rng.as_mut()) {
            (Strategy::Rightmost, _) => *redexes.last().unwrap(),
            (Strategy::Seeded(_), Some(rng)) => redexes[rng.random_range(0..redexes.len())],
            _ => first,
        };
        let (a, b) = (w[at], w[at + 1]);
        if a == b {
            if a == Generator::Z {
                for i in 1..=n {
                    let mut next = w[..at].to_vec();
                    next.extend([Generator::X(i), Generator::D(i)]);
                    next.extend_from_slice(&w[at + 2..]);
                    accumulate(&mut pending, next, -coeff.clone());
                }
            }
            // x_i x_i and d_i d_i vanish
        } else {
            let mut next = w.clone();
            next.swap(at, at + 1);
            accumulate(&mut pending, next, -coeff);
        }
    }
    Ok(out)
}

fn to_word(letters: &[Generator]) -> ShriekWord {
    let mut w = ShriekWord::ONE;
    for &g in letters {
        let g = ShriekWord::generator(g);
        w.x |= g.x;
        w.d |= g.d;
        w.z |= g.z;
    }
    w
}

fn accumulate(map: &mut BTreeMap<Vec<Generator>, Rational>, word: Vec<Generator>, c: Rational) {
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

/// Structure constants of `B_n^!` on basis words.
struct ProductTable {
    index: HashMap<ShriekWord, usize>,
    products: Vec<Vec<Vec<(ShriekWord, Rational)>>>,
}

impl ProductTable {
    fn build(n: usize) -> Self {
        let basis = shriek_basis(n);
        let index = basis.iter().enumerate().map(|(i, &w)| (w, i)).collect();
        let products = basis
            .iter()
            .map(|&a| basis.iter().map(|&b| direct_product(n, a, b)).collect())
            .collect();
        ProductTable { index, products }
    }
}

/// Tables are built for `n` up to this bound; larger `n` reduces directly.
const TABLE_MAX_N: usize = 4;

static TABLES: [OnceLock<ProductTable>; TABLE_MAX_N + 1] = [const { OnceLock::new() }; TABLE_MAX_N + 1];

fn direct_product(n: usize, a: ShriekWord, b: ShriekWord) -> Vec<(ShriekWord, Rational)> {
    let mut letters = a.letters(n);
    letters.extend(b.letters(n));
    let e = reduce_word(&letters, n).expect("basis letters are in range");
    e.terms.into_iter().collect()
}

fn word_product(n: usize, a: ShriekWord, b: ShriekWord) -> std::borrow::Cow<'static, [(ShriekWord, Rational)]> {
    if n <= TABLE_MAX_N {
        let table = TABLES[n].get_or_init(|| ProductTable::build(n));
        let (i, j) = (table.index[&a], table.index[&b]);
        std::borrow::Cow::Borrowed(&table.products[i][j])
    } else {
        std::borrow::Cow::Owned(direct_product(n, a, b))
    }
}
