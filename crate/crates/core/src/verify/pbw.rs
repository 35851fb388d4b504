use super::{ensure, sample, Context, Failure, Runner};
use crate::expr::{FreeExpression, Render};
use crate::pbw::{
    basis_of_degree, centralizer_in_degree, normal_form_word, normal_form_with, AlgebraElement, PbwMonomial,
    Strategy,
};
use crate::{rational, AlgebraKind, Generator};

use rand::Rng;

const KINDS: [AlgebraKind; 3] = [AlgebraKind::B, AlgebraKind::A, AlgebraKind::C];

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `X_1^a δ_1 + a·c·X_1^{a−1}` with `c = Z²` in `B_n` and `c = 1` in `A_n`.
fn weyl_identity_rhs(kind: AlgebraKind, n: usize, a: u32) -> AlgebraElement {
    let mut lead = PbwMonomial::one(n);
    lead.x[0] = a;
    lead.d[0] = 1;
    let mut tail = PbwMonomial::one(n);
    tail.x[0] = a - 1;
    tail.z = if kind == AlgebraKind::B { 2 } else { 0 };
    AlgebraElement::from_terms(kind, n, [(lead, rational(1)), (tail, rational(i64::from(a)))]).expect("legal")
}

fn show(e: &AlgebraElement) -> String {
    e.render(crate::expr::Format::Text)
}

pub(crate) fn laws(ctx: &Context, r: &mut Runner) {
    let n = ctx.n;

    r.check("pbw.weyl-identity", "δ_1X_1^a = X_1^aδ_1 + aZ^2X_1^{a-1}", || {
        for kind in [AlgebraKind::B, AlgebraKind::A] {
            let d1 = AlgebraElement::generator(kind, n, Generator::D(1))?;
            let x1 = AlgebraElement::generator(kind, n, Generator::X(1))?;
            for a in 1..=20u32 {
                let expected = weyl_identity_rhs(kind, n, a);
                let mut word = vec![Generator::D(1)];
                word.extend(std::iter::repeat_n(Generator::X(1), a as usize));
                let rewritten = normal_form_word(&word, kind, n)?;
                let product = d1.multiply(&x1.pow(a))?;
                ensure(rewritten == expected && product == expected, || {
                    format!("{kind} a={a}: rewriting {} / product {}", show(&rewritten), show(&product))
                })?;
            }
        }
        Ok(())
    });

    r.check("pbw.basis-count", "Poincaré–Birkhoff–Witt basis Z^iX^Pδ^Q", || {
        for d in 0..=8u32 {
            let slots = 2 * n as u64;
            for (kind, expected) in [
                (AlgebraKind::B, binomial(u64::from(d) + slots, slots)),
                (AlgebraKind::C, binomial(u64::from(d) + slots, slots)),
                (AlgebraKind::A, binomial(u64::from(d) + slots - 1, slots - 1)),
            ] {
                let basis = basis_of_degree(kind, n, d);
                let distinct: std::collections::BTreeSet<_> = basis.iter().collect();
                ensure(
                    basis.len() as u64 == expected
                        && distinct.len() == basis.len()
                        && basis.iter().all(|m| m.graded_degree() == d && m.is_legal(kind)),
                    || format!("{kind} degree {d}: {} monomials, expected {expected}", basis.len()),
                )?;
            }
        }
        Ok(())
    });

    r.check("pbw.confluence", "quadratic Gröbner basis: reduction order is irrelevant", || {
        let mut rng = ctx.rng("pbw.confluence");
        for _ in 0..ctx.budget {
            let kind = KINDS[rng.random_range(0..KINDS.len())];
            let len = rng.random_range(0..=6);
            let word = sample::word(&mut rng, n, len, kind.allows_z());
            let expr = FreeExpression::word(word.clone());
            let seed = rng.random();
            let left = normal_form_with(&expr, kind, n, Strategy::Leftmost)?;
            let right = normal_form_with(&expr, kind, n, Strategy::Rightmost)?;
            let random = normal_form_with(&expr, kind, n, Strategy::Seeded(seed))?;
            let mut product = AlgebraElement::one(kind, n);
            for &g in &word {
                product = product.multiply(&AlgebraElement::generator(kind, n, g)?)?;
            }
            ensure(left == right && left == random && left == product, || {
                format!(
                    "{kind} word {expr}: leftmost {}, rightmost {}, seeded {}, product {}",
                    show(&left),
                    show(&right),
                    show(&random),
                    show(&product)
                )
            })?;
        }
        Ok(())
    });

    r.check("pbw.associativity", "B_n is an associative algebra", || {
        let mut rng = ctx.rng("pbw.associativity");
        for _ in 0..ctx.budget {
            let kind = KINDS[rng.random_range(0..KINDS.len())];
            let a = sample::element(&mut rng, kind, n, 3, 4);
            let b = sample::element(&mut rng, kind, n, 3, 4);
            let c = sample::element(&mut rng, kind, n, 3, 4);
            let left = a.multiply(&b)?.multiply(&c)?;
            let right = a.multiply(&b.multiply(&c)?)?;
            ensure(left == right, || format!("({})({})({})", show(&a), show(&b), show(&c)))?;
        }
        Ok(())
    });

    r.check("pbw.unit-bilinearity", "B_n is a K-algebra", || {
        let mut rng = ctx.rng("pbw.unit-bilinearity");
        for _ in 0..ctx.budget {
            let kind = KINDS[rng.random_range(0..KINDS.len())];
            let a = sample::element(&mut rng, kind, n, 3, 4);
            let b = sample::element(&mut rng, kind, n, 3, 4);
            let c = sample::element(&mut rng, kind, n, 3, 4);
            let s = sample::coefficient(&mut rng);
            let one = AlgebraElement::one(kind, n);
            let unit = a.multiply(&one)? == a && one.multiply(&a)? == a;
            let left = a.add(&b)?.multiply(&c)? == a.multiply(&c)?.add(&b.multiply(&c)?)?;
            let right = c.multiply(&a.add(&b)?)? == c.multiply(&a)?.add(&c.multiply(&b)?)?;
            let scalar = a.scale(&s).multiply(&b)? == a.multiply(&b)?.scale(&s);
            ensure(unit && left && right && scalar, || {
                format!("a = {}, b = {}, c = {}, s = {s}", show(&a), show(&b), show(&c))
            })?;
        }
        Ok(())
    });

    r.check("pbw.partial-additivity", "∂(ab)=∂(a)+∂(b)", || {
        let mut rng = ctx.rng("pbw.partial-additivity");
        for _ in 0..ctx.budget {
            let kind = KINDS[rng.random_range(0..KINDS.len())];
            let a = sample::element(&mut rng, kind, n, 3, 4);
            let b = sample::element(&mut rng, kind, n, 3, 4);
            let ab = a.multiply(&b)?;
            ensure(!ab.is_zero(), || format!("zero product of {} and {}", show(&a), show(&b)))?;
            ensure(ab.partial_degree()? == a.partial_degree()? + b.partial_degree()?, || {
                format!("a = {}, b = {}", show(&a), show(&b))
            })?;
        }
        Ok(())
    });

    r.check("pbw.partial-max", "∂(a+b)≤max{∂(a),∂(b)}", || {
        let mut rng = ctx.rng("pbw.partial-max");
        for _ in 0..ctx.budget {
            let kind = KINDS[rng.random_range(0..KINDS.len())];
            let a = sample::element(&mut rng, kind, n, 3, 4);
            let b = sample::element(&mut rng, kind, n, 3, 4);
            let sum = a.add(&b)?;
            if sum.is_zero() {
                continue;
            }
            ensure(sum.partial_degree()? <= a.partial_degree()?.max(b.partial_degree()?), || {
                format!("a = {}, b = {}", show(&a), show(&b))
            })?;
        }
        Ok(())
    });

    r.check("pbw.commutator-drop", "[a,b] lies in F_{p+t-1}", || {
        let mut rng = ctx.rng("pbw.commutator-drop");
        for _ in 0..ctx.budget {
            let a = sample::element(&mut rng, AlgebraKind::B, n, 3, 4);
            let b = sample::element(&mut rng, AlgebraKind::B, n, 3, 4);
            let c = a.commutator(&b)?;
            if c.is_zero() {
                continue;
            }
            let bound = a.partial_degree()? + b.partial_degree()?;
            ensure(bound >= 1 && c.partial_degree()? < bound, || {
                format!("[{}, {}] = {}", show(&a), show(&b), show(&c))
            })?;
        }
        Ok(())
    });

    r.check("pbw.domain", "B_n is an integral domain", || {
        let mut rng = ctx.rng("pbw.domain");
        for _ in 0..ctx.budget {
            let kind = [AlgebraKind::B, AlgebraKind::A][rng.random_range(0..2)];
            let a = sample::element(&mut rng, kind, n, 3, 4);
            let b = sample::element(&mut rng, kind, n, 3, 4);
            ensure(!a.multiply(&b)?.is_zero(), || format!("{} · {} = 0", show(&a), show(&b)))?;
        }
        Ok(())
    });

    r.check("pbw.graded-additivity", "B_n is graded with all generators in degree 1", || {
        let mut rng = ctx.rng("pbw.graded-additivity");
        for _ in 0..ctx.budget {
            let (da, db) = (rng.random_range(0..=3), rng.random_range(0..=3));
            let a = sample::homogeneous(&mut rng, n, da, 4);
            let b = sample::homogeneous(&mut rng, n, db, 4);
            let ab = a.multiply(&b)?;
            ensure(ab.is_homogeneous() && ab.graded_degree()? == da + db, || {
                format!("a = {}, b = {}", show(&a), show(&b))
            })?;
        }
        Ok(())
    });
}

pub(crate) fn center_max_degree(n: usize) -> u32 {
    if n <= 2 {
        5
    } else {
        3
    }
}

pub(crate) fn center(ctx: &Context, r: &mut Runner) {
    let n = ctx.n;
    let top = center_max_degree(n);
    let mut dims = Vec::new();
    r.check("center.z-polynomials", "the center of B_n is isomorphic to K[Z]", || {
        for d in 0..=top {
            let basis = centralizer_in_degree(n, d);
            dims.push(basis.len());
            let z = AlgebraElement::z_power(AlgebraKind::B, n, d);
            let proportional = |b: &AlgebraElement| {
                b.len() == 1 && b.terms().keys().next() == z.terms().keys().next()
            };
            if basis.len() != 1 || !proportional(&basis[0]) {
                let shown: Vec<String> = basis.iter().map(show).collect();
                return Err(Failure(format!("degree {d}: centralizer basis [{}]", shown.join(", "))));
            }
            for g in Generator::all(n) {
                let g = AlgebraElement::generator(AlgebraKind::B, n, g)?;
                ensure(z.commutator(&g)?.is_zero(), || format!("Z^{d} does not commute with {}", show(&g)))?;
            }
        }
        Ok(())
    });
    r.detail("maxDegree", top);
    r.detail("centralizerDimensions", dims);
}
