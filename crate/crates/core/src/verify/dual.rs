use num_traits::Zero;

use super::{ensure, Context, Runner};
use crate::dual::{
    dual_presentation, orthogonal_complement, pairing, presentation_of, relations_of, spans_equal,
};
use crate::AlgebraKind;

pub(crate) fn orthogonality(ctx: &Context, r: &mut Runner) {
    let n = ctx.n;
    let gens = 2 * n + 1;
    r.detail("relationCount", 2 * n * n + n);
    r.detail("dualRelationCount", 2 * n * n + 3 * n + 1);

    r.check(
        "dual.relation-count",
        "relations [X_i,δ_j]=∂_ijZ², [X_i,X_j], [δ_i,δ_j], [X_i,Z], [δ_i,Z]",
        || {
            let p = relations_of(AlgebraKind::B, n)?;
            ensure(p.relations().len() == 2 * n * n + n, || {
                format!("{} relations", p.relations().len())
            })
        },
    );

    r.check(
        "dual.orthogonality",
        "relations orthogonal with respect to the canonical bilinear form",
        || {
            let p = relations_of(AlgebraKind::B, n)?;
            let perp = orthogonal_complement(&p)?;
            ensure(
                perp.basis.len() == 2 * n * n + 3 * n + 1
                    && p.relations().len() + perp.basis.len() == gens * gens,
                || format!("dim R^⊥ = {}", perp.basis.len()),
            )?;
            for rel in p.relations() {
                for s in &perp.basis {
                    ensure(pairing(rel, s).is_zero(), || format!("⟨{rel}, {s}⟩ ≠ 0"))?;
                }
            }
            Ok(())
        },
    );

    r.check(
        "dual.shriek-presentation",
        "B_n^! relations X_i², δ_j², anticommutators, ΣX_iδ_i+Z²",
        || {
            let perp = orthogonal_complement(&relations_of(AlgebraKind::B, n)?)?;
            let shown = dual_presentation(AlgebraKind::B, n)?;
            ensure(spans_equal(n, shown.relations(), &perp.basis), || {
                "presentation does not span R^⊥".to_string()
            })
        },
    );

    r.check("dual.involution", "(B_n^!)^! = B_n", || {
        let p = relations_of(AlgebraKind::B, n)?;
        let perp = orthogonal_complement(&p)?;
        let back = orthogonal_complement(&presentation_of(AlgebraKind::B, &perp)?)?;
        ensure(spans_equal(n, &back.basis, p.relations()), || {
            "R^⊥⊥ differs from R".to_string()
        })
    });

    r.check("dual.exterior", "C_n^! is an exterior algebra", || {
        let perp = orthogonal_complement(&relations_of(AlgebraKind::C, n)?)?;
        let shown = dual_presentation(AlgebraKind::C, n)?;
        ensure(
            perp.basis.len() == gens * (gens + 1) / 2 && spans_equal(n, shown.relations(), &perp.basis),
            || format!("dim = {}", perp.basis.len()),
        )
    });
}
