use num_traits::Zero;

use super::{shriek_basis, ShriekElement, ShriekWord};
use crate::linalg::Matrix;
use crate::{Rational, Result};

/// Splits `e` into its `z`-free part (in `C_n^!`) and its `z` part (in
/// `z·C_n^!`).
pub fn decompose(e: &ShriekElement) -> (ShriekElement, ShriekElement) {
    (e.filter(|w| !w.z), e.filter(|w| w.z))
}

/// Coefficient of the top word `x_1..x_n d_1..d_n z`.
pub fn frobenius_functional(e: &ShriekElement) -> Rational {
    e.coeff(ShriekWord::top(e.n()))
}

/// `β(a, b)`: the functional applied to `ab`.
pub fn bilinear_form(a: &ShriekElement, b: &ShriekElement) -> Result<Rational> {
    Ok(frobenius_functional(&a.multiply(b)?))
}

/// `[β(u, v)]` for `u` running over the degree-`j` basis and `v` over the
/// degree-`(2n+1−j)` basis, both in basis order.
pub fn gram_matrix(n: usize, j: usize) -> Matrix {
    let top = 2 * n + 1;
    assert!(j <= top, "degree {j} exceeds {top}");
    let basis = shriek_basis(n);
    let rows: Vec<ShriekWord> = basis.iter().copied().filter(|w| w.degree() == j).collect();
    let cols: Vec<ShriekWord> = basis.iter().copied().filter(|w| w.degree() == top - j).collect();
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (r, &u) in rows.iter().enumerate() {
        let u = ShriekElement::word(n, u);
        for (c, &v) in cols.iter().enumerate() {
            let beta = bilinear_form(&u, &ShriekElement::word(n, v)).expect("same n");
            if !beta.is_zero() {
                m[(r, c)] = beta;
            }
        }
    }
    m
}
