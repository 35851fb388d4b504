use rand::Rng;

use super::{ensure, sample, Context, Failure, Runner};
use crate::expr::{decode_json, parse, Decoded, Format, Render};
use crate::localization::{dehomogenize, homogenize};
use crate::pbw::normal_form;
use crate::shriek::reduce_expression;
use crate::AlgebraKind;

const KINDS: [AlgebraKind; 3] = [AlgebraKind::B, AlgebraKind::A, AlgebraKind::C];

pub(crate) fn suite(ctx: &Context, r: &mut Runner) {
    let n = ctx.n;

    r.check("roundtrip.render-parse", "every element has a unique PBW normal form", || {
        let mut rng = ctx.rng("roundtrip.render-parse");
        for _ in 0..ctx.budget {
            let kind = KINDS[rng.random_range(0..KINDS.len())];
            let e = sample::element(&mut rng, kind, n, 4, 5);
            let text = e.render(Format::Text);
            let back = normal_form(&parse(&text, n, kind).map_err(|err| Failure(format!("{text}: {err}")))?, kind, n)?;
            let json = e.render(Format::Json);
            let decoded = decode_json(&json).map_err(|err| Failure(format!("{json}: {err}")))?;
            ensure(back == e && decoded == Decoded::Pbw(e.clone()), || format!("{kind}: {text}"))?;

            let s = sample::shriek_element(&mut rng, n, 5);
            let text = s.render(Format::Text);
            let expr = parse(&text, n, AlgebraKind::BShriek).map_err(|err| Failure(format!("{text}: {err}")))?;
            let back = reduce_expression(&expr, n)?;
            let decoded = decode_json(&s.render(Format::Json)).map_err(|err| Failure(err.to_string()))?;
            ensure(back == s && decoded == Decoded::Shriek(s.clone(), AlgebraKind::BShriek), || {
                format!("B!: {text}")
            })?;
        }
        Ok(())
    });

    r.check("roundtrip.render-injective", "distinct normal forms are distinct elements", || {
        let mut rng = ctx.rng("roundtrip.render-injective");
        for _ in 0..ctx.budget {
            let kind = KINDS[rng.random_range(0..KINDS.len())];
            let e = sample::element(&mut rng, kind, n, 2, 2);
            let f = sample::element(&mut rng, kind, n, 2, 2);
            for format in [Format::Text, Format::Json] {
                ensure((e == f) == (e.render(format) == f.render(format)), || {
                    format!("{} vs {}", e.render(Format::Text), f.render(Format::Text))
                })?;
            }
        }
        Ok(())
    });

    r.check(
        "roundtrip.homogenize",
        "homogenization Z^{n_m-n_i}b_i is a section of Z ↦ 1",
        || {
            let mut rng = ctx.rng("roundtrip.homogenize");
            for _ in 0..ctx.budget {
                let a = sample::element(&mut rng, AlgebraKind::A, n, 6, 4);
                let (b, k) = homogenize(&a)?;
                ensure(
                    dehomogenize(&b)? == a && b.is_homogeneous() && b.graded_degree()? == k,
                    || format!("a = {}", a.render(Format::Text)),
                )?;

                let d = rng.random_range(0..=4);
                let b = sample::homogeneous(&mut rng, n, d, 4);
                let (h, _) = homogenize(&dehomogenize(&b)?)?;
                let low = b.terms().keys().map(|m| m.z).min().unwrap_or(0);
                let full = low == 0;
                ensure(h.times_z_power(low) == b && (h == b) == full, || {
                    format!("b = {}", b.render(Format::Text))
                })?;
            }
            Ok(())
        },
    );
}
