use rand::Rng;

use super::{ensure, sample, Context, Runner};
use crate::expr::{Format, Render};
use crate::localization::{
    dehomogenize, homogenize, kernel_witness, mu, theta, theta_inverse, z_minus_one, LocalizedElement,
};
use crate::pbw::AlgebraElement;
use crate::AlgebraKind;

fn show(e: &AlgebraElement) -> String {
    e.render(Format::Text)
}

fn show_loc(e: &LocalizedElement) -> String {
    format!("({}) / z^{}", show(e.numerator()), e.z_power())
}

/// A homogeneous fraction `b / Z^k` with `deg b ≤ 3`, `k ≤ 3`.
fn fraction(rng: &mut sample::SampleRng, n: usize) -> LocalizedElement {
    let d = rng.random_range(0..=3);
    let b = sample::homogeneous(rng, n, d, 4);
    LocalizedElement::make(b, rng.random_range(0..=3)).expect("kind B")
}

/// `e` written with an extra `Z^s` in numerator and denominator, then
/// canonicalized again.
fn rerepresent(e: &LocalizedElement, s: u32) -> LocalizedElement {
    LocalizedElement::make(e.numerator().times_z_power(s), e.z_power() + s).expect("kind B")
}

pub(crate) fn suite(ctx: &Context, r: &mut Runner) {
    let n = ctx.n;

    r.check(
        "localization.fraction-laws",
        "(B_n)_Z = B_n ⊗_{K[Z]} K[Z,Z^{-1}] with homogeneous elements b/Z^k",
        || {
            let mut rng = ctx.rng("localization.fraction-laws");
            for _ in 0..ctx.budget {
                let a = fraction(&mut rng, n);
                let b = fraction(&mut rng, n);
                let s = rng.random_range(1..=3);
                let a2 = rerepresent(&a, s);
                let b2 = rerepresent(&b, s + 1);
                let same = a.loc_equals(&a)? && a.loc_equals(&a2)? && a2.loc_equals(&a)?;
                let sum = a.loc_add(&b)?.loc_equals(&a2.loc_add(&b2)?)?;
                let product = a.loc_multiply(&b)?.loc_equals(&a2.loc_multiply(&b2)?)?;
                let commutes = a.loc_add(&b)?.loc_equals(&b.loc_add(&a)?)?;
                let cancels = a.loc_add(&a.loc_neg())?.is_zero();
                // equality by cross-multiplication agrees with canonical forms
                let canonical = a.loc_equals(&b)? == (a == b);
                ensure(same && sum && product && commutes && cancels && canonical, || {
                    format!("a = {}, b = {}", show_loc(&a), show_loc(&b))
                })?;
            }
            Ok(())
        },
    );

    r.check(
        "localization.degree-additivity",
        "(B_n)_Z is graded with deg(b/Z^k) = deg b - k",
        || {
            let mut rng = ctx.rng("localization.degree-additivity");
            for _ in 0..ctx.budget {
                let a = fraction(&mut rng, n);
                let b = fraction(&mut rng, n);
                let ab = a.loc_multiply(&b)?;
                ensure(ab.degree()? == a.degree()? + b.degree()?, || {
                    format!("a = {}, b = {}", show_loc(&a), show_loc(&b))
                })?;
            }
            Ok(())
        },
    );

    r.check(
        "localization.torsion-free",
        "Z-torsion t_Z: B_n has no nonzero element killed by a power of Z",
        || {
            let mut rng = ctx.rng("localization.torsion-free");
            for _ in 0..ctx.budget {
                let b = sample::element(&mut rng, AlgebraKind::B, n, 3, 4);
                let j = rng.random_range(1..=4);
                let zb = AlgebraElement::z_power(AlgebraKind::B, n, j).multiply(&b)?;
                ensure(!zb.is_zero() && zb.z_divides(), || format!("Z^{j} · {}", show(&b)))?;
                let mut back = zb;
                for _ in 0..j {
                    back = back.divide_by_z()?;
                }
                ensure(back == b, || format!("Z^{j} · {} does not divide back", show(&b)))?;
            }
            Ok(())
        },
    );

    r.check(
        "localization.dehomogenize",
        "the Weyl algebra A_n is isomorphic to B_n/(z-1)B_n",
        || {
            let mut rng = ctx.rng("localization.dehomogenize");
            for _ in 0..ctx.budget {
                let a = sample::element(&mut rng, AlgebraKind::B, n, 3, 4);
                let b = sample::element(&mut rng, AlgebraKind::B, n, 3, 4);
                let (da, db) = (dehomogenize(&a)?, dehomogenize(&b)?);
                let product = dehomogenize(&a.multiply(&b)?)? == da.multiply(&db)?;
                let sum = dehomogenize(&a.add(&b)?)? == da.add(&db)?;
                let onto = dehomogenize(&homogenize(&da)?.0)? == da;
                ensure(product && sum && onto, || format!("a = {}, b = {}", show(&a), show(&b)))?;
            }
            Ok(())
        },
    );

    r.check("localization.kernel", "Ker πφ = (Z-1)B_n", || {
        let mut rng = ctx.rng("localization.kernel");
        let zm1 = z_minus_one(n);
        for _ in 0..ctx.budget {
            let w = sample::element(&mut rng, AlgebraKind::B, n, 3, 4);
            let b = zm1.multiply(&w)?;
            let witness = kernel_witness(&b)?;
            ensure(dehomogenize(&b)?.is_zero(), || format!("(Z-1)·{} survives", show(&w)))?;
            match witness {
                Some(v) => ensure(zm1.multiply(&v)? == b && v == w, || {
                    format!("b = {}, witness {}", show(&b), show(&v))
                })?,
                None => ensure(false, || format!("no witness for {}", show(&b)))?,
            }
            // the other direction: a nonzero image has no witness
            let c = sample::element(&mut rng, AlgebraKind::B, n, 3, 4);
            let in_kernel = dehomogenize(&c)?.is_zero();
            ensure(kernel_witness(&c)?.is_some() == in_kernel, || format!("c = {}", show(&c)))?;
        }
        Ok(())
    });

    r.check(
        "localization.quotient",
        "B_n/(Z-1)B_n ≅ (B_n)_Z/(Z-1)(B_n)_Z ≅ A_n",
        || {
            let mut rng = ctx.rng("localization.quotient");
            let zm1 = LocalizedElement::from_element(z_minus_one(n))?;
            for _ in 0..ctx.budget {
                let e = fraction(&mut rng, n);
                let f = fraction(&mut rng, n);
                // b/Z^k ↦ b|_{Z=1} is independent of the representative,
                // multiplicative, and kills (Z-1)(B_n)_Z
                let image = |x: &LocalizedElement| dehomogenize(x.numerator());
                let stable = image(&rerepresent(&e, 2))? == image(&e)?;
                let product = image(&e.loc_multiply(&f)?)? == image(&e)?.multiply(&image(&f)?)?;
                let killed = image(&zm1.loc_multiply(&e)?)?.is_zero();
                ensure(stable && product && killed, || {
                    format!("e = {}, f = {}", show_loc(&e), show_loc(&f))
                })?;
            }
            Ok(())
        },
    );

    r.check(
        "localization.theta",
        "θ: ((B_n)_Z)_0 → (B_n)_Z/(Z-1)(B_n)_Z is an isomorphism",
        || {
            let mut rng = ctx.rng("localization.theta");
            for _ in 0..ctx.budget {
                let a = sample::element(&mut rng, AlgebraKind::A, n, 6, 4);
                let lifted = theta_inverse(&a)?;
                ensure(lifted.degree()? == 0 && theta(&lifted)? == a, || format!("a = {}", show(&a)))?;

                let d = rng.random_range(0..=3);
                let e = LocalizedElement::make(sample::homogeneous(&mut rng, n, d, 4), d)?;
                let d = rng.random_range(0..=3);
                let f = LocalizedElement::make(sample::homogeneous(&mut rng, n, d, 4), d)?;
                let back = theta_inverse(&theta(&e)?)?;
                let multiplicative = theta(&e.loc_multiply(&f)?)? == theta(&e)?.multiply(&theta(&f)?)?;
                let additive = theta(&e.loc_add(&f)?)? == theta(&e)?.add(&theta(&f)?)?;
                ensure(back.loc_equals(&e)? && multiplicative && additive, || {
                    format!("e = {}, f = {}", show_loc(&e), show_loc(&f))
                })?;
            }
            Ok(())
        },
    );

    r.check(
        "localization.mu",
        "graded rings isomorphism A_n ⊗_K K[Z,Z^{-1}] → B_n ⊗_{K[Z]} K[Z,Z^{-1}]",
        || {
            let mut rng = ctx.rng("localization.mu");
            for _ in 0..ctx.budget {
                let a = sample::element(&mut rng, AlgebraKind::A, n, 3, 4);
                let b = sample::element(&mut rng, AlgebraKind::A, n, 3, 4);
                let (s, t) = (rng.random_range(-3..=3), rng.random_range(-3..=3));
                let product = mu(&a, s)?.loc_multiply(&mu(&b, t)?)?.loc_equals(&mu(&a.multiply(&b)?, s + t)?)?;
                let degree = mu(&a, s)?.degree()? == s;
                let unit = mu(&a, 0)? == theta_inverse(&a)?;
                let sum = a.add(&b)?;
                let additive = sum.is_zero() || mu(&sum, s)?.loc_equals(&mu(&a, s)?.loc_add(&mu(&b, s)?)?)?;
                ensure(product && degree && unit && additive, || {
                    format!("a = {}, s = {s}, b = {}, t = {t}", show(&a), show(&b))
                })?;
            }
            Ok(())
        },
    );
}
