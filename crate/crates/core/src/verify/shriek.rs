use num_traits::Zero;
use rand::Rng;

use super::golden::{golden_path, GoldenNakayama};
use super::pbw::binomial;
use super::{ensure, sample, Context, Failure, Runner, SuiteConfig};
use crate::expr::{Format, Render};
use crate::linalg::Matrix;
use crate::pbw::Strategy;
use crate::shriek::{
    bilinear_form, decompose, defining_identity_failure, degree_dimensions, gram_matrix, nakayama as nakayama_map, reduce_word,
    reduce_word_with, shriek_basis, ShriekElement, ShriekWord,
};
use crate::{Generator, Rational};

fn show(e: &ShriekElement) -> String {
    e.render(Format::Text)
}

fn words(n: usize) -> Vec<ShriekElement> {
    shriek_basis(n).into_iter().map(|w| ShriekElement::word(n, w)).collect()
}

/// Coordinates of the degree-`j` component of each element over the
/// degree-`j` basis, one row per element.
fn coordinates(n: usize, j: usize, elements: &[ShriekElement]) -> Matrix {
    let basis: Vec<ShriekWord> = shriek_basis(n).into_iter().filter(|w| w.degree() == j).collect();
    let rows = elements
        .iter()
        .map(|e| basis.iter().map(|&w| e.coeff(w)).collect())
        .collect();
    Matrix::from_rows(rows, basis.len())
}

pub(crate) fn dims(ctx: &Context, r: &mut Runner) {
    let n = ctx.n;
    let dims = degree_dimensions(n);
    r.detail("dims", &dims);

    r.check("shriek.dims", "dim(B_n^!)_j = C(2n,j)+C(2n,j-1)", || {
        let top = 2 * n + 1;
        ensure(dims.len() == top + 1, || format!("{} degrees", dims.len()))?;
        for (j, &d) in dims.iter().enumerate() {
            let (m, j64) = (2 * n as u64, j as u64);
            let expected = binomial(m, j64) + if j == 0 { 0 } else { binomial(m, j64 - 1) };
            ensure(d as u64 == expected, || format!("degree {j}: {d} ≠ {expected}"))?;
        }
        Ok(())
    });

    r.check("shriek.palindrome", "dim(B_n^!)_j = dim(B_n^!)_{2n+1-j}", || {
        let top = 2 * n + 1;
        for j in 0..=top {
            ensure(dims[j] == dims[top - j], || format!("degree {j} vs {}", top - j))?;
        }
        Ok(())
    });

    r.check("shriek.square-free-basis", "B_n^! is spanned by square-free words", || {
        let basis = shriek_basis(n);
        ensure(basis.len() == 1 << (2 * n + 1), || format!("{} words", basis.len()))?;
        for &w in &basis {
            let e = reduce_word(&w.letters(n), n)?;
            ensure(e == ShriekElement::word(n, w), || format!("{} reduces to {}", w.display(n), show(&e)))?;
        }
        Ok(())
    });
}

pub(crate) fn frobenius(ctx: &Context, r: &mut Runner) {
    let n = ctx.n;
    let basis = words(n);
    let top = 2 * n + 1;

    r.check("shriek.associativity", "B_n^! is an associative algebra", || {
        if n == 1 {
            for a in &basis {
                for b in &basis {
                    let ab = a.multiply(b)?;
                    for c in &basis {
                        ensure(ab.multiply(c)? == a.multiply(&b.multiply(c)?)?, || {
                            format!("({})({})({})", show(a), show(b), show(c))
                        })?;
                    }
                }
            }
        }
        let mut rng = ctx.rng("shriek.associativity");
        for _ in 0..ctx.budget {
            let a = sample::shriek_element(&mut rng, n, 4);
            let b = sample::shriek_element(&mut rng, n, 4);
            let c = sample::shriek_element(&mut rng, n, 4);
            ensure(a.multiply(&b)?.multiply(&c)? == a.multiply(&b.multiply(&c)?)?, || {
                format!("({})({})({})", show(&a), show(&b), show(&c))
            })?;
        }
        Ok(())
    });

    r.check("shriek.confluence", "B_n^! has a quadratic Gröbner basis", || {
        let mut rng = ctx.rng("shriek.confluence");
        for _ in 0..ctx.budget {
            let len = rng.random_range(0..=6);
            let word = sample::word(&mut rng, n, len, true);
            let seed = rng.random();
            let left = reduce_word_with(&word, n, Strategy::Leftmost)?;
            let right = reduce_word_with(&word, n, Strategy::Rightmost)?;
            let random = reduce_word_with(&word, n, Strategy::Seeded(seed))?;
            let mut product = ShriekElement::one(n);
            for &g in &word {
                product = product.multiply(&ShriekElement::generator(n, g)?)?;
            }
            ensure(left == right && left == random && left == product, || {
                let w: Vec<String> = word.iter().map(|g| g.to_string()).collect();
                format!("{}: {} / {} / {} / {}", w.join("*"), show(&left), show(&right), show(&random), show(&product))
            })?;
        }
        Ok(())
    });

    let mut determinants = Vec::new();
    r.check("frobenius.nondegenerate", "β is a non degenerated bilinear form", || {
        for j in 0..=top {
            let g = gram_matrix(n, j);
            ensure(g.rows() == g.cols(), || format!("degree {j}: {}×{}", g.rows(), g.cols()))?;
            let det = g.determinant();
            determinants.push(format!("{}/{}", det.numer(), det.denom()));
            ensure(!det.is_zero(), || format!("gram_matrix({n}, {j}) is singular"))?;
        }
        Ok(())
    });
    r.detail("gramDeterminants", determinants);

    r.check("frobenius.invariance", "β(ab,c)=β(a,bc)", || {
        let triple = |a: &ShriekElement, b: &ShriekElement, c: &ShriekElement| -> Result<(), Failure> {
            ensure(bilinear_form(&a.multiply(b)?, c)? == bilinear_form(a, &b.multiply(c)?)?, || {
                format!("a = {}, b = {}, c = {}", show(a), show(b), show(c))
            })
        };
        if n == 1 {
            for a in &basis {
                for b in &basis {
                    for c in &basis {
                        triple(a, b, c)?;
                    }
                }
            }
        }
        let mut rng = ctx.rng("frobenius.invariance");
        for _ in 0..ctx.budget {
            let a = sample::shriek_element(&mut rng, n, 4);
            let b = sample::shriek_element(&mut rng, n, 4);
            let c = sample::shriek_element(&mut rng, n, 4);
            triple(&a, &b, &c)?;
        }
        Ok(())
    });
}

pub(crate) fn nakayama(ctx: &Context, r: &mut Runner, config: &SuiteConfig) {
    let n = ctx.n;
    let m = match nakayama_map(n) {
        Ok(m) => m,
        Err(e) => {
            r.check("nakayama.solve", "β is a non degenerated bilinear form", || Err(e.into()));
            return;
        }
    };
    let images: Vec<(String, String)> = m
        .images()
        .iter()
        .map(|(g, e)| (g.to_string(), show(e)))
        .collect();
    r.detail("images", images.iter().map(|(g, e)| format!("σ({g}) = {e}")).collect::<Vec<_>>());
    let k = m.z_scalar();
    r.detail("k", k.as_ref().map(|k| k.to_string()));
    let basis = words(n);

    r.check("nakayama.defining-identity", "β(σ(y),x)=β(x,y)", || {
        match defining_identity_failure(&m)? {
            None => Ok(()),
            Some((y, x)) => Err(Failure(format!("y = {}, x = {}", y.display(n), x.display(n)))),
        }
    });

    r.check(
        "nakayama.automorphism",
        "σ: A→A is an isomorphism of K-algebras",
        || {
            if n == 1 {
                for u in &basis {
                    for v in &basis {
                        ensure(m.apply(&u.multiply(v)?)? == m.apply(u)?.multiply(&m.apply(v)?)?, || {
                            format!("u = {}, v = {}", show(u), show(v))
                        })?;
                    }
                }
            }
            let mut rng = ctx.rng("nakayama.automorphism");
            for _ in 0..ctx.budget {
                let u = sample::shriek_element(&mut rng, n, 4);
                let v = sample::shriek_element(&mut rng, n, 4);
                ensure(m.apply(&u.multiply(&v)?)? == m.apply(&u)?.multiply(&m.apply(&v)?)?, || {
                    format!("u = {}, v = {}", show(&u), show(&v))
                })?;
            }
            Ok(())
        },
    );

    r.check("nakayama.graded", "σ is an isomorphism of graded K-algebras", || {
        for j in 0..=2 * n + 1 {
            let degree: Vec<&ShriekElement> = basis
                .iter()
                .filter(|e| e.terms().keys().next().is_some_and(|w| w.degree() == j))
                .collect();
            let mut images = Vec::with_capacity(degree.len());
            for e in &degree {
                let image = m.apply(e)?;
                ensure(image.is_homogeneous_of(j), || format!("σ({}) = {}", show(e), show(&image)))?;
                images.push(image);
            }
            let rank = coordinates(n, j, &images).rank();
            ensure(rank == degree.len(), || format!("σ has rank {rank} in degree {j}"))?;
        }
        Ok(())
    });

    r.check("nakayama.z-scalar", "σ(Z)=kZ with k a non zero element of K", || {
        let k = k.clone().ok_or_else(|| Failure(format!("σ(z) = {}", show(m.image(Generator::Z)))))?;
        let z = ShriekElement::generator(n, Generator::Z)?;
        let zz = z.multiply(&z)?;
        let expected = zz.scale(&(&k * &k));
        let image = m.apply(&zz)?;
        ensure(image == expected, || format!("σ(z²) = {} but k² z² = {}", show(&image), show(&expected)))?;
        let top = ShriekElement::word(n, ShriekWord::top(n));
        let image = m.apply(&top)?;
        ensure(image.terms().len() == 1 && !image.coeff(ShriekWord::top(n)).is_zero(), || {
            format!("σ(top) = {}", show(&image))
        })
    });

    r.check("nakayama.restricts", "σ restricts to an automorphism of C_n^!", || {
        for (g, image) in m.images() {
            if *g == Generator::Z {
                continue;
            }
            ensure(image.terms().keys().all(|w| !w.z), || format!("σ({g}) = {}", show(image)))?;
        }
        Ok(())
    });

    r.check(
        "nakayama.golden",
        "the Nakayama scalar and Gram determinants are fixed",
        || {
            let current = GoldenNakayama::compute(n)?;
            let path = golden_path(&config.golden_dir, n);
            if config.bless {
                return current.save(&path).map_err(Failure);
            }
            match GoldenNakayama::load(&path).map_err(Failure)? {
                None => Err(Failure(format!("no golden file at {}; run with --bless", path.display()))),
                Some(stored) => ensure(stored == current, || {
                    format!(
                        "{} differs: stored k = {:?}, computed k = {:?}",
                        path.display(),
                        stored.k,
                        current.k
                    )
                }),
            }
        },
    );
}

pub(crate) fn decomposition(ctx: &Context, r: &mut Runner) {
    let n = ctx.n;
    let basis = words(n);
    let half = 1usize << (2 * n);

    r.check("decomposition.direct-sum", "B_n^! = C_n^! ⊕ ZC_n^!", || {
        let mut rng = ctx.rng("decomposition.direct-sum");
        let mut samples = basis.clone();
        samples.extend((0..ctx.budget).map(|_| sample::shriek_element(&mut rng, n, 6)));
        for e in &samples {
            let (c, z) = decompose(e);
            let zero = ShriekElement::zero(n);
            ensure(
                c.add(&z)? == *e
                    && decompose(&c) == (c.clone(), zero.clone())
                    && decompose(&z) == (zero, z.clone())
                    && c.terms().keys().all(|w| !w.z)
                    && z.terms().keys().all(|w| w.z),
                || format!("e = {}", show(e)),
            )?;
        }
        Ok(())
    });

    r.check("decomposition.subalgebra", "C_n^! is a subalgebra of B_n^!", || {
        let c_words: Vec<&ShriekElement> = basis.iter().filter(|e| decompose(e).1.is_zero()).collect();
        for a in &c_words {
            for b in &c_words {
                let ab = a.multiply(b)?;
                ensure(decompose(&ab).1.is_zero(), || format!("{} · {} = {}", show(a), show(b), show(&ab)))?;
            }
        }
        Ok(())
    });

    r.check("decomposition.rank-two", "B_n^! is a free C_n^!-module of rank two", || {
        let (c_words, z_words): (Vec<ShriekElement>, Vec<ShriekElement>) =
            basis.iter().cloned().partition(|e| decompose(e).1.is_zero());
        ensure(c_words.len() == half && z_words.len() == half, || {
            format!("{} z-free and {} z words", c_words.len(), z_words.len())
        })?;
        // z·C_n^! fills the z part: the images are independent and lie in it
        let z = ShriekElement::generator(n, Generator::Z)?;
        let images: Vec<ShriekElement> = c_words
            .iter()
            .map(|c| z.multiply(c))
            .collect::<crate::Result<_>>()?;
        for (c, image) in c_words.iter().zip(&images) {
            ensure(decompose(image).0.is_zero(), || format!("z·{} = {}", show(c), show(image)))?;
        }
        let z_basis: Vec<ShriekWord> = shriek_basis(n).into_iter().filter(|w| w.z).collect();
        let rows = images
            .iter()
            .map(|e| z_basis.iter().map(|&w| e.coeff(w)).collect::<Vec<Rational>>())
            .collect();
        let rank = Matrix::from_rows(rows, z_basis.len()).rank();
        ensure(rank == half, || format!("z·C_n^! has dimension {rank}"))?;
        // left multiplication by C_n^! keeps Z·C_n^! inside itself
        for c in &c_words {
            for w in &z_words {
                let p = c.multiply(w)?;
                ensure(decompose(&p).0.is_zero(), || format!("{} · {} = {}", show(c), show(w), show(&p)))?;
            }
        }
        Ok(())
    });
}
