//! Seeded random elements for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::pbw::{AlgebraElement, PbwMonomial};
use crate::shriek::{shriek_basis, ShriekElement};
use crate::{AlgebraKind, Generator, Rational};

pub type SampleRng = ChaCha8Rng;

/// A stream determined by `(seed, suite, check)`.
pub fn stream(seed: u64, suite: &str, check: &str) -> SampleRng {
    // FNV-1a over the labels, folded into the seed
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in suite.bytes().chain([0]).chain(check.bytes()) {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

pub fn coefficient(rng: &mut SampleRng) -> Rational {
    loop {
        let p: i64 = rng.random_range(-5..=5);
        if p != 0 {
            let q: i64 = rng.random_range(1..=3);
            return Rational::new(p.into(), q.into());
        }
    }
}

/// A monomial with `∂ ≤ max_partial` and, where legal, `Z`-exponent ≤ `max_z`.
pub fn monomial(rng: &mut SampleRng, kind: AlgebraKind, n: usize, max_partial: u32, max_z: u32) -> PbwMonomial {
    let target = rng.random_range(0..=max_partial);
    let mut m = PbwMonomial::one(n);
    for _ in 0..target {
        let i = rng.random_range(0..n);
        if rng.random_bool(0.5) {
            m.x[i] += 1;
        } else {
            m.d[i] += 1;
        }
    }
    if kind.allows_z() {
        m.z = rng.random_range(0..=max_z);
    }
    m
}

/// A nonzero element with between 1 and `max_terms` terms.
pub fn element(
    rng: &mut SampleRng,
    kind: AlgebraKind,
    n: usize,
    max_partial: u32,
    max_terms: usize,
) -> AlgebraElement {
    loop {
        let count = rng.random_range(1..=max_terms);
        let terms: Vec<_> = (0..count)
            .map(|_| (monomial(rng, kind, n, max_partial, 2), coefficient(rng)))
            .collect();
        let e = AlgebraElement::from_terms(kind, n, terms).expect("legal monomials");
        if !e.is_zero() {
            return e;
        }
    }
}

/// A nonzero homogeneous element of `B_n` of the given degree.
pub fn homogeneous(rng: &mut SampleRng, n: usize, degree: u32, max_terms: usize) -> AlgebraElement {
    loop {
        let count = rng.random_range(1..=max_terms);
        let terms: Vec<_> = (0..count)
            .map(|_| {
                let partial = rng.random_range(0..=degree);
                let mut m = monomial(rng, AlgebraKind::A, n, partial, 0);
                m.z = degree - m.partial_degree();
                (m, coefficient(rng))
            })
            .collect();
        let e = AlgebraElement::from_terms(AlgebraKind::B, n, terms).expect("legal monomials");
        if !e.is_zero() {
            return e;
        }
    }
}

pub fn word(rng: &mut SampleRng, n: usize, len: usize, allow_z: bool) -> Vec<Generator> {
    let choices = if allow_z { 2 * n + 1 } else { 2 * n };
    let gens = Generator::all(n);
    (0..len).map(|_| gens[rng.random_range(0..choices)]).collect()
}

pub fn shriek_element(rng: &mut SampleRng, n: usize, max_terms: usize) -> ShriekElement {
    let basis = shriek_basis(n);
    let mut e = ShriekElement::zero(n);
    for _ in 0..rng.random_range(1..=max_terms) {
        let w = basis[rng.random_range(0..basis.len())];
        e.add_term(w, coefficient(rng));
    }
    e
}

/// A random basis word of `B_n^!` as an element.
pub fn shriek_word(rng: &mut SampleRng, n: usize) -> ShriekElement {
    let basis = shriek_basis(n);
    ShriekElement::word(n, basis[rng.random_range(0..basis.len())])
}
