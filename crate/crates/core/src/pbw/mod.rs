//! Arithmetic in `B_n`, `A_n` and `C_n` on the PBW basis `Z^i X^P δ^Q`.
//!
//! Two independent routes compute products: [`AlgebraElement::multiply`]
//! uses the closed Leibniz formula for `δ^q X^r`, and [`normal_form`]
//! reduces free words with the rewriting system. The tests check one
//! against the other.

mod center;
mod element;
mod monomial;
mod rewrite;

pub use center::centralizer_in_degree;
pub use element::AlgebraElement;
pub use monomial::{basis_of_degree, PbwMonomial};
pub use rewrite::{normal_form, normal_form_with, normal_form_word, Strategy};

use crate::{AlgebraError, AlgebraKind, Result};

pub(crate) fn check_pbw_kind(kind: AlgebraKind, op: &'static str) -> Result<()> {
    match kind {
        AlgebraKind::A | AlgebraKind::B | AlgebraKind::C => Ok(()),
        _ => Err(AlgebraError::UnsupportedKind { kind, op }),
    }
}
