//! End-to-end acceptance run: one PASS/FAIL line per criterion.
//!
//! Expected values come from oracles written here, independently of the
//! library: a Leibniz-formula product for `B_n`/`A_n`, a bubble-sort
//! rewriting of `B_n^!` words, binomial counts and subset enumeration.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use weylkit::dual::{orthogonal_complement, pairing, relations_of, spans_equal, TensorVector};
use weylkit::localization::{
    dehomogenize, homogenize, kernel_witness, mu, theta, z_minus_one, LocalizedElement,
};
use weylkit::pbw::{
    basis_of_degree, centralizer_in_degree, normal_form_with, normal_form_word, AlgebraElement,
    PbwMonomial, Strategy,
};
use weylkit::shriek::{
    bilinear_form, decompose, degree_dimensions, gram_matrix, nakayama, reduce_word_with,
    shriek_basis, ShriekElement, ShriekWord,
};
use weylkit::verify::{golden_dir, golden_path, sample, GoldenNakayama};
use weylkit::expr::FreeExpression;
use weylkit::{AlgebraKind, Generator, Rational};

type Outcome = Result<(), String>;

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn lib<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

// ---------------------------------------------------------------- B_n oracle

type Terms = BTreeMap<PbwMonomial, Rational>;

fn push(t: &mut Terms, m: PbwMonomial, c: Rational) {
    let e = t.entry(m).or_insert_with(Rational::zero);
    *e += c;
}

fn clean(mut t: Terms) -> Terms {
    t.retain(|_, c| !c.is_zero());
    t
}

/// `δ^q X^r = Σ_k C(q,k)·r(r−1)..(r−k+1)·Z^{2k} X^{r−k} δ^{q−k}`, one
/// variable at a time; `Z` is dropped for `A_n`.
fn oracle_product(kind: AlgebraKind, a: &Terms, b: &Terms) -> Terms {
    let homogeneous = kind == AlgebraKind::B;
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let n = ma.x.len();
            let mut partial = vec![(
                PbwMonomial {
                    z: ma.z + mb.z,
                    x: ma.x.clone(),
                    d: vec![0; n],
                },
                BigInt::one(),
            )];
            for i in 0..n {
                let (q, r) = (ma.d[i], mb.x[i]);
                let mut next = Vec::new();
                for (m, c) in &partial {
                    let mut falling = BigInt::one();
                    for k in 0..=q.min(r) {
                        if k > 0 {
                            falling *= BigInt::from(r - k + 1);
                        }
                        let mut t = m.clone();
                        t.x[i] += r - k;
                        t.d[i] = q - k + mb.d[i];
                        if homogeneous {
                            t.z += 2 * k;
                        }
                        next.push((t, c * BigInt::from(binomial(q as u64, k as u64)) * &falling));
                    }
                }
                partial = next;
            }
            for (m, c) in partial {
                push(&mut out, m, ca * cb * Rational::from_integer(c));
            }
        }
    }
    clean(out)
}

fn oracle_partial(t: &Terms) -> u32 {
    t.keys().map(|m| m.x.iter().chain(&m.d).sum::<u32>()).max().unwrap_or(0)
}

fn oracle_drop_z(t: &Terms) -> Terms {
    let mut out = Terms::new();
    for (m, c) in t {
        let mut m = m.clone();
        m.z = 0;
        push(&mut out, m, c.clone());
    }
    clean(out)
}

// -------------------------------------------------------------- B_n^! oracle

type Words = BTreeMap<Vec<usize>, Rational>;

/// Letters are `x_i ↦ i−1`, `d_i ↦ n+i−1`, `z ↦ 2n`.
fn letter(g: Generator, n: usize) -> usize {
    match g {
        Generator::X(i) => i - 1,
        Generator::D(i) => n + i - 1,
        Generator::Z => 2 * n,
    }
}

fn word_letters(w: ShriekWord, n: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..n).filter(|i| w.x >> i & 1 == 1).collect();
    out.extend((0..n).filter(|i| w.d >> i & 1 == 1).map(|i| n + i));
    if w.z {
        out.push(2 * n);
    }
    out
}

fn letters_word(l: &[usize], n: usize) -> ShriekWord {
    let mut w = ShriekWord::ONE;
    for &c in l {
        if c < n {
            w.x |= 1 << c;
        } else if c < 2 * n {
            w.d |= 1 << (c - n);
        } else {
            w.z = true;
        }
    }
    w
}

/// Sorts a word into strictly increasing letters: distinct neighbours
/// anticommute, `x_i² = d_i² = 0`, `z² = −Σ x_i d_i`.
fn oracle_reduce(n: usize, word: Vec<usize>, c: Rational, out: &mut Words) {
    let mut stack = vec![(word, c)];
    while let Some((mut w, c)) = stack.pop() {
        match (0..w.len().saturating_sub(1)).find(|&i| w[i] >= w[i + 1]) {
            None => {
                let e = out.entry(w).or_insert_with(Rational::zero);
                *e += c;
            }
            Some(i) if w[i] > w[i + 1] => {
                w.swap(i, i + 1);
                stack.push((w, -c));
            }
            Some(i) if w[i] == 2 * n => {
                for j in 0..n {
                    let mut v = w[..i].to_vec();
                    v.extend([j, n + j]);
                    v.extend_from_slice(&w[i + 2..]);
                    stack.push((v, -c.clone()));
                }
            }
            Some(_) => {}
        }
    }
}

fn oracle_shriek_product(a: &ShriekElement, b: &ShriekElement) -> BTreeMap<ShriekWord, Rational> {
    let n = a.n();
    let mut out = Words::new();
    for (&u, cu) in a.terms() {
        for (&v, cv) in b.terms() {
            let mut w = word_letters(u, n);
            w.extend(word_letters(v, n));
            oracle_reduce(n, w, cu * cv, &mut out);
        }
    }
    out.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(l, c)| (letters_word(&l, n), c))
        .collect()
}

fn oracle_beta(a: &ShriekElement, b: &ShriekElement) -> Rational {
    oracle_shriek_product(a, b)
        .get(&ShriekWord::top(a.n()))
        .cloned()
        .unwrap_or_else(Rational::zero)
}

// ---------------------------------------------------------------- criteria

fn c1_pbw_identity() -> Outcome {
    for (kind, z) in [(AlgebraKind::B, 2), (AlgebraKind::A, 0)] {
        for a in 1..=20u32 {
            let mut expected = Terms::new();
            push(&mut expected, PbwMonomial { z: 0, x: vec![a], d: vec![1] }, int(1));
            push(&mut expected, PbwMonomial { z, x: vec![a - 1], d: vec![0] }, int(a as i64));
            let mut word = vec![Generator::D(1)];
            word.extend(std::iter::repeat_n(Generator::X(1), a as usize));
            let rewritten = lib(normal_form_word(&word, kind, 1))?;
            let d = lib(AlgebraElement::generator(kind, 1, Generator::D(1)))?;
            let x = lib(AlgebraElement::generator(kind, 1, Generator::X(1)))?;
            let product = lib(d.multiply(&x.pow(a)))?;
            ensure(rewritten.terms() == &expected && product.terms() == &expected, || {
                format!("{kind}: δ1·X1^{a} gave {rewritten:?}")
            })?;
        }
    }
    Ok(())
}

fn compositions(parts: usize, total: u32) -> u64 {
    if parts == 1 {
        return 1;
    }
    (0..=total).map(|first| compositions(parts - 1, total - first)).sum()
}

fn c2_basis_count() -> Outcome {
    for n in 1..=3usize {
        for d in 0..=8u32 {
            let basis = basis_of_degree(AlgebraKind::B, n, d);
            let formula = binomial(d as u64 + 2 * n as u64, 2 * n as u64);
            let counted = compositions(2 * n + 1, d);
            let mut distinct = basis.clone();
            distinct.sort();
            distinct.dedup();
            let graded = basis.iter().all(|m| m.z + m.x.iter().chain(&m.d).sum::<u32>() == d);
            ensure(
                basis.len() as u64 == formula && formula == counted && distinct.len() == basis.len() && graded,
                || format!("n={n} d={d}: {} vs C={formula}, enumerated {counted}", basis.len()),
            )?;
        }
    }
    Ok(())
}

fn c3_partial_laws() -> Outcome {
    for n in 1..=2usize {
        let mut rng = sample::stream(1, "acceptance", &format!("partial-laws-{n}"));
        for _ in 0..10_000 {
            let a = sample::element(&mut rng, AlgebraKind::B, n, 3, 3);
            let b = sample::element(&mut rng, AlgebraKind::B, n, 3, 3);
            let ab = lib(a.multiply(&b))?;
            let ba = lib(b.multiply(&a))?;
            let expected = oracle_product(AlgebraKind::B, a.terms(), b.terms());
            let (pa, pb) = (oracle_partial(a.terms()), oracle_partial(b.terms()));
            ensure(ab.terms() == &expected, || format!("product mismatch for {a:?} · {b:?}"))?;
            ensure(oracle_partial(ab.terms()) == pa + pb, || format!("∂(ab) ≠ ∂a+∂b for {a:?}, {b:?}"))?;
            ensure(lib(ab.partial_degree())? == pa + pb, || "library ∂ disagrees".into())?;
            let c = lib(ab.sub(&ba))?;
            ensure(c.is_zero() || oracle_partial(c.terms()) < pa + pb, || {
                format!("∂([a,b]) too large for {a:?}, {b:?}")
            })?;
        }
    }
    Ok(())
}

fn c4_center() -> Outcome {
    for n in 1..=2usize {
        for d in 0..=5u32 {
            let basis = centralizer_in_degree(n, d);
            ensure(basis.len() == 1, || format!("n={n} d={d}: dimension {}", basis.len()))?;
            let zd = PbwMonomial::z_power(n, d);
            let only = basis[0].terms().len() == 1 && !basis[0].coeff(&zd).is_zero();
            ensure(only, || format!("n={n} d={d}: spanned by {:?}", basis[0]))?;
            let mut z = Terms::new();
            push(&mut z, zd, int(1));
            for g in Generator::all(n) {
                let mut t = Terms::new();
                push(&mut t, PbwMonomial::generator(n, g), int(1));
                let commutes = oracle_product(AlgebraKind::B, &z, &t) == oracle_product(AlgebraKind::B, &t, &z);
                ensure(commutes, || format!("Z^{d} does not commute with {g}"))?;
            }
        }
    }
    Ok(())
}

fn oracle_pairing(r: &TensorVector, s: &TensorVector) -> Rational {
    r.entries().map(|(&(a, b), c)| c * s.get(b, a)).sum()
}

fn c5_dual_relations() -> Outcome {
    use Generator::{D, X, Z};
    for n in 1..=3usize {
        let gens = Generator::all(n);
        let mut r = Vec::new();
        let mut perp = Vec::new();
        for (p, &a) in gens.iter().enumerate() {
            for &b in &gens[p + 1..] {
                let mut c = TensorVector::from_terms([(b, a, 1), (a, b, -1)]);
                if let (X(i), D(j)) = (a, b) {
                    if i == j {
                        c.add(Z, Z, int(-1));
                    }
                }
                r.push(c);
                perp.push(TensorVector::from_terms([(a, b, 1), (b, a, 1)]));
            }
        }
        for i in 1..=n {
            perp.push(TensorVector::from_terms([(X(i), X(i), 1)]));
            perp.push(TensorVector::from_terms([(D(i), D(i), 1)]));
        }
        let mut sum = TensorVector::from_terms([(Z, Z, 1)]);
        for i in 1..=n {
            sum.add(X(i), D(i), int(1));
        }
        perp.push(sum);

        let relations = lib(relations_of(AlgebraKind::B, n))?;
        let complement = lib(orthogonal_complement(&relations))?;
        let want = 2 * n * n + 3 * n + 1;
        ensure(complement.basis.len() == want && perp.len() == want, || {
            format!("n={n}: dim R^⊥ = {}, expected {want}", complement.basis.len())
        })?;
        ensure(spans_equal(n, relations.relations(), &r), || format!("n={n}: R differs"))?;
        for a in relations.relations() {
            for b in &complement.basis {
                ensure(oracle_pairing(a, b).is_zero() && pairing(a, b).is_zero(), || {
                    format!("n={n}: nonzero pairing")
                })?;
            }
        }
        for a in &r {
            for b in &perp {
                ensure(oracle_pairing(a, b).is_zero(), || format!("n={n}: presentation not orthogonal"))?;
            }
        }
        ensure(spans_equal(n, &complement.basis, &perp), || format!("n={n}: presentation does not span R^⊥"))?;
    }
    Ok(())
}

fn c6_shriek_dims() -> Outcome {
    for n in 1..=3usize {
        let m = 2 * n as u64;
        let formula: Vec<usize> = (0..=m + 1)
            .map(|j| (binomial(m, j) + if j > 0 { binomial(m, j - 1) } else { 0 }) as usize)
            .collect();
        let mut subsets = vec![0usize; 2 * n + 2];
        for s in 0u32..1 << (2 * n + 1) {
            subsets[s.count_ones() as usize] += 1;
        }
        let mut basis = vec![0usize; 2 * n + 2];
        for w in shriek_basis(n) {
            basis[w.degree()] += 1;
        }
        let dims = degree_dimensions(n);
        let total: usize = dims.iter().sum();
        ensure(dims == formula && subsets == formula && basis == formula && total == 1 << (2 * n + 1), || {
            format!("n={n}: dims {dims:?}, expected {formula:?}")
        })?;
    }
    Ok(())
}

fn basis_elements(n: usize) -> Vec<ShriekElement> {
    shriek_basis(n).into_iter().map(|w| ShriekElement::word(n, w)).collect()
}

fn c7_associativity_confluence() -> Outcome {
    let basis = basis_elements(1);
    ensure(basis.len() == 8, || "B_1^! basis is not 8-dimensional".into())?;
    for a in &basis {
        for b in &basis {
            let ab = lib(a.multiply(b))?;
            ensure(ab.terms() == &oracle_shriek_product(a, b), || format!("{a:?}·{b:?} disagrees with oracle"))?;
            for c in &basis {
                let left = lib(ab.multiply(c))?;
                let right = lib(a.multiply(&lib(b.multiply(c))?))?;
                ensure(left == right, || format!("({a:?}{b:?}){c:?}"))?;
            }
        }
    }
    let mut rng = sample::stream(1, "acceptance", "associativity");
    for _ in 0..10_000 {
        let a = sample::shriek_element(&mut rng, 2, 3);
        let b = sample::shriek_element(&mut rng, 2, 3);
        let c = sample::shriek_element(&mut rng, 2, 3);
        let left = lib(lib(a.multiply(&b))?.multiply(&c))?;
        let right = lib(a.multiply(&lib(b.multiply(&c))?))?;
        ensure(left == right, || format!("n=2: ({a:?}·{b:?})·{c:?}"))?;
    }

    let mut rng = sample::stream(1, "acceptance", "confluence");
    for i in 0..1_000u64 {
        let n = 1 + (i % 2) as usize;
        let len = rng.random_range(0..=7);
        let word = sample::word(&mut rng, n, len, true);
        let expr = FreeExpression::word(word.clone());
        let reference = lib(normal_form_with(&expr, AlgebraKind::B, n, Strategy::Leftmost))?;
        let mut oracle = Terms::from([(PbwMonomial::one(n), int(1))]);
        for &g in &word {
            oracle = oracle_product(AlgebraKind::B, &oracle, &Terms::from([(PbwMonomial::generator(n, g), int(1))]));
        }
        ensure(reference.terms() == &oracle, || format!("B_{n}: {word:?} disagrees with oracle"))?;
        for s in [Strategy::Rightmost, Strategy::Seeded(i), Strategy::Seeded(i ^ 0xff)] {
            ensure(lib(normal_form_with(&expr, AlgebraKind::B, n, s))? == reference, || {
                format!("B_{n}: {word:?} under {s:?}")
            })?;
        }

        let mut expected = Words::new();
        oracle_reduce(n, word.iter().map(|&g| letter(g, n)).collect(), int(1), &mut expected);
        let expected: BTreeMap<ShriekWord, Rational> = expected
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (letters_word(&l, n), c))
            .collect();
        for s in [Strategy::Leftmost, Strategy::Rightmost, Strategy::Seeded(i)] {
            let got = lib(reduce_word_with(&word, n, s))?;
            ensure(got.terms() == &expected, || format!("B_{n}^!: {word:?} under {s:?}"))?;
        }
    }
    Ok(())
}

fn c8_frobenius() -> Outcome {
    for n in 1..=2usize {
        let words = shriek_basis(n);
        let top = 2 * n + 1;
        for j in 0..=top {
            let g = gram_matrix(n, j);
            let rows: Vec<_> = words.iter().filter(|w| w.degree() == j).collect();
            let cols: Vec<_> = words.iter().filter(|w| w.degree() == top - j).collect();
            ensure(g.rows() == rows.len() && g.cols() == cols.len(), || format!("n={n} j={j}: shape"))?;
            for (r, &&u) in rows.iter().enumerate() {
                for (c, &&v) in cols.iter().enumerate() {
                    let beta = oracle_beta(&ShriekElement::word(n, u), &ShriekElement::word(n, v));
                    ensure(g[(r, c)] == beta, || format!("n={n} j={j}: entry ({r},{c})"))?;
                }
            }
            ensure(g.rank() == g.rows() && !g.determinant().is_zero(), || format!("n={n} j={j}: singular"))?;
        }
    }
    let basis = basis_elements(1);
    for a in &basis {
        for b in &basis {
            let ab = lib(a.multiply(b))?;
            for c in &basis {
                let left = lib(bilinear_form(&ab, c))?;
                let right = lib(bilinear_form(a, &lib(b.multiply(c))?))?;
                ensure(left == right, || format!("β(ab,c) ≠ β(a,bc) for {a:?}, {b:?}, {c:?}"))?;
            }
        }
    }
    Ok(())
}

fn c9_nakayama() -> Outcome {
    for n in 1..=2usize {
        let sigma = lib(nakayama(n))?;
        let basis = basis_elements(n);
        let images: Vec<ShriekElement> = basis.iter().map(|b| sigma.apply(b)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        for (y, sy) in basis.iter().zip(&images) {
            let degree = shriek_basis(n).into_iter().find(|&w| ShriekElement::word(n, w) == *y).map(|w| w.degree());
            ensure(sy.terms().keys().all(|w| Some(w.degree()) == degree), || format!("n={n}: σ({y:?}) not graded"))?;
            for x in &basis {
                ensure(oracle_beta(sy, x) == oracle_beta(x, y), || format!("n={n}: β(σ({y:?}),{x:?})"))?;
            }
        }
        if n == 1 {
            for (a, sa) in basis.iter().zip(&images) {
                for (b, sb) in basis.iter().zip(&images) {
                    let lhs = lib(sigma.apply(&lib(a.multiply(b))?))?;
                    ensure(lhs == lib(sa.multiply(sb))?, || format!("σ not multiplicative on {a:?}, {b:?}"))?;
                }
            }
        } else {
            let mut rng = sample::stream(1, "acceptance", "nakayama");
            for _ in 0..10_000 {
                let a = sample::shriek_element(&mut rng, n, 3);
                let b = sample::shriek_element(&mut rng, n, 3);
                let lhs = lib(sigma.apply(&lib(a.multiply(&b))?))?;
                let rhs = lib(lib(sigma.apply(&a))?.multiply(&lib(sigma.apply(&b))?))?;
                ensure(lhs == rhs, || format!("n=2: σ not multiplicative on {a:?}, {b:?}"))?;
            }
        }

        // k from the form alone: β(σ(z), v) = k β(z, v) = β(v, z)
        let z = lib(ShriekElement::generator(n, Generator::Z))?;
        let v = ShriekElement::word(n, ShriekWord { z: false, ..ShriekWord::top(n) });
        let k = oracle_beta(&v, &z) / oracle_beta(&z, &v);
        ensure(!k.is_zero() && sigma.z_scalar() == Some(k.clone()), || {
            format!("n={n}: σ(z) = {:?}, expected {k}·z", sigma.image(Generator::Z))
        })?;
        for g in Generator::all(n).into_iter().filter(|g| *g != Generator::Z) {
            ensure(sigma.image(g).terms().keys().all(|w| !w.z), || format!("n={n}: σ({g}) has a z-component"))?;
        }

        let path = golden_path(&golden_dir(), n);
        let golden = GoldenNakayama::load(&path)?.ok_or_else(|| format!("missing {}", path.display()))?;
        ensure(golden == lib(GoldenNakayama::compute(n))?, || format!("n={n}: golden mismatch"))?;
        ensure(golden.k.as_deref() == Some(format!("{}/{}", k.numer(), k.denom()).as_str()), || {
            format!("n={n}: golden k {:?}", golden.k)
        })?;
    }
    Ok(())
}

fn c10_decomposition() -> Outcome {
    for n in 1..=2usize {
        let words = shriek_basis(n);
        let free: Vec<_> = words.iter().filter(|w| !w.z).collect();
        let with_z = words.len() - free.len();
        ensure(free.len() == 1 << (2 * n) && with_z == 1 << (2 * n), || format!("n={n}: part dimensions"))?;
        let mut rng = sample::stream(1, "acceptance", &format!("decomposition-{n}"));
        let randoms: Vec<_> = (0..200).map(|_| sample::shriek_element(&mut rng, n, 6)).collect();
        for e in basis_elements(n).iter().chain(&randoms) {
            let (c, zc) = decompose(e);
            ensure(lib(c.add(&zc))? == *e, || format!("n={n}: parts of {e:?} do not sum back"))?;
            ensure(c.terms().keys().all(|w| !w.z) && zc.terms().keys().all(|w| w.z), || format!("n={n}: split of {e:?}"))?;
            ensure(decompose(&c) == (c.clone(), ShriekElement::zero(n)), || "first projection not idempotent".into())?;
            ensure(decompose(&zc) == (ShriekElement::zero(n), zc.clone()), || "second projection not idempotent".into())?;
        }
        let z = lib(ShriekElement::generator(n, Generator::Z))?;
        for &&u in &free {
            let a = ShriekElement::word(n, u);
            for &v in &words {
                let ab = oracle_shriek_product(&a, &ShriekElement::word(n, v));
                // C^! is closed, and multiplying by it keeps z·C^! inside itself
                ensure(ab.keys().all(|w| w.z == v.z), || format!("n={n}: {u:?}·{v:?} leaves its part"))?;
            }
            // z·C^! is a free module: z·u is ± the word u with z appended
            let zu = lib(z.multiply(&a))?;
            let target = ShriekWord { z: true, ..u };
            let c = zu.coeff(target);
            ensure(zu.terms().len() == 1 && (c == int(1) || c == int(-1)), || format!("n={n}: z·{u:?} = {zu:?}"))?;
        }
    }
    Ok(())
}

fn c11_dehomogenization() -> Outcome {
    for n in 1..=2usize {
        let mut rng = sample::stream(1, "acceptance", &format!("dehomogenize-{n}"));
        for _ in 0..5_000 {
            let a = sample::element(&mut rng, AlgebraKind::B, n, 3, 3);
            let b = sample::element(&mut rng, AlgebraKind::B, n, 3, 3);
            let (da, db) = (oracle_drop_z(a.terms()), oracle_drop_z(b.terms()));
            let image = lib(dehomogenize(&lib(a.multiply(&b))?))?;
            ensure(image.terms() == &oracle_product(AlgebraKind::A, &da, &db), || {
                format!("n={n}: π(ab) ≠ π(a)π(b) for {a:?}, {b:?}")
            })?;
            let sum = lib(dehomogenize(&lib(a.add(&b))?))?;
            let mut expected = da.clone();
            for (m, c) in &db {
                push(&mut expected, m.clone(), c.clone());
            }
            ensure(sum.terms() == &clean(expected), || format!("n={n}: π not additive"))?;
            ensure(lib(dehomogenize(&AlgebraElement::one(AlgebraKind::B, n)))? == AlgebraElement::one(AlgebraKind::A, n), || {
                "π(1) ≠ 1".into()
            })?;
        }
        let zm1 = z_minus_one(n);
        for _ in 0..500 {
            let w = sample::element(&mut rng, AlgebraKind::B, n, 3, 4);
            let b = lib(zm1.multiply(&w))?;
            ensure(oracle_drop_z(b.terms()).is_empty(), || format!("n={n}: (Z−1)w not in kernel"))?;
            let v = lib(kernel_witness(&b))?.ok_or_else(|| format!("n={n}: no witness for {b:?}"))?;
            ensure(lib(zm1.multiply(&v))? == b, || format!("n={n}: (Z−1)·witness ≠ b for {b:?}"))?;
        }
    }
    Ok(())
}

fn c12_theta_mu() -> Outcome {
    for n in 1..=2usize {
        let mut rng = sample::stream(1, "acceptance", &format!("theta-{n}"));
        for _ in 0..500 {
            let a = sample::element(&mut rng, AlgebraKind::A, n, 6, 4);
            let (b, k) = lib(homogenize(&a))?;
            ensure(b.terms().keys().all(|m| m.z + m.x.iter().chain(&m.d).sum::<u32>() == k), || {
                format!("homogenize({a:?}) is not homogeneous of degree {k}")
            })?;
            ensure(oracle_drop_z(b.terms()) == *a.terms(), || format!("homogenize({a:?}) is not a lift"))?;
            let fraction = lib(LocalizedElement::make(b, k))?;
            ensure(lib(theta(&fraction))? == a, || format!("θ does not invert homogenize on {a:?}"))?;
        }
        for _ in 0..500 {
            let d = rng.random_range(0..=3);
            let e = lib(LocalizedElement::make(sample::homogeneous(&mut rng, n, d, 4), d))?;
            let d = rng.random_range(0..=3);
            let f = lib(LocalizedElement::make(sample::homogeneous(&mut rng, n, d, 4), d))?;
            let (te, tf) = (lib(theta(&e))?, lib(theta(&f))?);
            let lhs = lib(theta(&lib(e.loc_multiply(&f))?))?;
            ensure(lhs.terms() == &oracle_product(AlgebraKind::A, te.terms(), tf.terms()), || {
                format!("θ not multiplicative on {e:?}, {f:?}")
            })?;
        }
        for _ in 0..500 {
            let a = sample::element(&mut rng, AlgebraKind::A, n, 3, 3);
            let b = sample::element(&mut rng, AlgebraKind::A, n, 3, 3);
            let (s, t) = (rng.random_range(-3..=3i64), rng.random_range(-3..=3i64));
            let ab = AlgebraElement::from_terms(AlgebraKind::A, n, oracle_product(AlgebraKind::A, a.terms(), b.terms()))
                .map_err(|e| e.to_string())?;
            let lhs = lib(lib(mu(&a, s))?.loc_multiply(&lib(mu(&b, t))?))?;
            let rhs = lib(mu(&ab, s + t))?;
            ensure(lib(lhs.loc_equals(&rhs))? && lib(lib(mu(&a, s))?.degree())? == s, || {
                format!("μ({a:?},{s})·μ({b:?},{t}) ≠ μ(ab,{})", s + t)
            })?;
        }
    }
    Ok(())
}

fn main() {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let criteria: [Criterion; 12] = [
        ("PBW identity δ1·X1^a", 1, c1_pbw_identity),
        ("graded dimensions of B_n", 1, c2_basis_count),
        ("∂ additivity and commutator drop", 30, c3_partial_laws),
        ("degree-d centralizer spanned by Z^d", 60, c4_center),
        ("dual relations R^⊥", 5, c5_dual_relations),
        ("B_n^! graded dimensions", 5, c6_shriek_dims),
        ("associativity and confluence", 60, c7_associativity_confluence),
        ("Frobenius form nondegenerate and invariant", 30, c8_frobenius),
        ("Nakayama automorphism", 60, c9_nakayama),
        ("B_n^! = C_n^! ⊕ zC_n^!", 5, c10_decomposition),
        ("dehomogenization Z ↦ 1", 30, c11_dehomogenization),
        ("θ and μ", 60, c12_theta_mu),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(*budget), || {
                format!("took {:.2} s, limit {budget} s", elapsed.as_secs_f64())
            })
        });
        let secs = elapsed.as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({secs:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
