//! The finite-dimensional algebra `B_n^!` and its `z`-free subalgebra
//! `C_n^!`.
//!
//! `B_n^!` is generated by `x_i, d_i, z` with `x_i² = d_i² = 0`, all
//! distinct generators anticommuting, and `z² = −Σ x_i d_i`. Its basis is
//! the square-free words `x^A d^B z^ε` read in the order
//! `x_1 < .. < x_n < d_1 < .. < d_n < z`; there are `2^{2n+1}` of them.

mod element;
mod frobenius;
mod nakayama;
mod word;

pub use element::{reduce_expression, reduce_word, reduce_word_with, ShriekElement};
pub use frobenius::{bilinear_form, decompose, frobenius_functional, gram_matrix};
pub use nakayama::{apply_automorphism, nakayama, NakayamaMap};
pub(crate) use nakayama::defining_identity_failure;
pub use word::{degree_dimensions, shriek_basis, ShriekWord};

/// Largest `n` for which masks fit comfortably and tables stay small.
pub const MAX_N: usize = 8;
