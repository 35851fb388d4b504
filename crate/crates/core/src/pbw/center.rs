use std::collections::HashMap;

use num_traits::Zero;

use super::{basis_of_degree, AlgebraElement, PbwMonomial};
use crate::linalg::Matrix;
use crate::{AlgebraKind, Generator, Rational};

/// Basis of the homogeneous degree-`d` elements of `B_n` that commute with
/// every generator, found by solving the linear system
/// `[b, g] = 0` over the degree-`d` PBW basis.
pub fn centralizer_in_degree(n: usize, d: u32) -> Vec<AlgebraElement> {
    let kind = AlgebraKind::B;
    let basis = basis_of_degree(kind, n, d);
    let target: HashMap<PbwMonomial, usize> = basis_of_degree(kind, n, d + 1)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let gens = Generator::all(n);

    // one block of rows per generator, one column per basis monomial
    let mut system = Matrix::zeros(gens.len() * target.len(), basis.len());
    for (col, m) in basis.iter().enumerate() {
        let b = AlgebraElement::monomial(kind, m.clone(), Rational::from_integer(1.into()));
        for (block, &g) in gens.iter().enumerate() {
            let g = AlgebraElement::generator(kind, n, g).expect("valid generator");
            let c = b.commutator(&g).expect("same algebra");
            for (mono, v) in c.terms() {
                system[(block * target.len() + target[mono], col)] = v.clone();
            }
        }
    }

    system
        .nullspace()
        .into_iter()
        .map(|v| {
            let terms = basis
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c));
            AlgebraElement::from_terms(kind, n, terms).expect("legal monomials")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn center_in_low_degrees_is_z_power() {
        for (n, d) in [(1, 3), (1, 4), (2, 0), (2, 2)] {
            let c = centralizer_in_degree(n, d);
            assert_eq!(c.len(), 1, "n={n} d={d}");
            assert_eq!(c[0], AlgebraElement::z_power(AlgebraKind::B, n, d));
        }
    }
}
