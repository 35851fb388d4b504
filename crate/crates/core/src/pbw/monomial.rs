use std::cmp::Ordering;
use std::fmt;

use crate::{AlgebraKind, Generator};

/// The basis element `Z^z X_1^{x_1}..X_n^{x_n} δ_1^{d_1}..δ_n^{d_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwMonomial {
    pub z: u32,
    pub x: Vec<u32>,
    pub d: Vec<u32>,
}

impl PbwMonomial {
    pub fn one(n: usize) -> Self {
        PbwMonomial {
            z: 0,
            x: vec![0; n],
            d: vec![0; n],
        }
    }

    pub fn generator(n: usize, g: Generator) -> Self {
        let mut m = PbwMonomial::one(n);
        match g {
            Generator::X(i) => m.x[i - 1] = 1,
            Generator::D(i) => m.d[i - 1] = 1,
            Generator::Z => m.z = 1,
        }
        m
    }

    pub fn z_power(n: usize, k: u32) -> Self {
        PbwMonomial {
            z: k,
            ..PbwMonomial::one(n)
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// `∂`: total `X, δ` degree. `Z` does not count.
    pub fn partial_degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.d.iter().sum::<u32>()
    }

    pub fn graded_degree(&self) -> u32 {
        self.z + self.partial_degree()
    }

    pub fn is_legal(&self, kind: AlgebraKind) -> bool {
        kind != AlgebraKind::A || self.z == 0
    }

    /// The canonical word `Z..Z X_1..X_n δ_1..δ_n`.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = vec![Generator::Z; self.z as usize];
        for (i, &e) in self.x.iter().enumerate() {
            w.extend(std::iter::repeat_n(Generator::X(i + 1), e as usize));
        }
        for (i, &e) in self.d.iter().enumerate() {
            w.extend(std::iter::repeat_n(Generator::D(i + 1), e as usize));
        }
        w
    }

    /// Commutative product (exponent addition).
    pub fn mul_commutative(&self, other: &PbwMonomial) -> PbwMonomial {
        PbwMonomial {
            z: self.z + other.z,
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            d: self.d.iter().zip(&other.d).map(|(a, b)| a + b).collect(),
        }
    }

    /// Order used for display: degree, then `z` ascending, then `x` and
    /// `d` exponent vectors lexicographically with larger exponents first.
    pub fn display_cmp(&self, other: &PbwMonomial) -> Ordering {
        self.graded_degree()
            .cmp(&other.graded_degree())
            .then(self.z.cmp(&other.z))
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| other.d.cmp(&self.d))
    }

    /// Order used for basis listings: degree, then the canonical words
    /// compared letter by letter with `Z < X_1 < .. < X_n < δ_1 < .. < δ_n`.
    pub fn word_cmp(&self, other: &PbwMonomial) -> Ordering {
        let key = |m: &PbwMonomial| -> Vec<usize> {
            let n = m.n();
            m.word()
                .into_iter()
                .map(|g| match g {
                    Generator::Z => 0,
                    Generator::X(i) => i,
                    Generator::D(i) => n + i,
                })
                .collect()
        };
        self.graded_degree()
            .cmp(&other.graded_degree())
            .then_with(|| key(self).cmp(&key(other)))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |name: String, e: u32| match e {
            0 => {}
            1 => parts.push(name),
            _ => parts.push(format!("{name}^{e}")),
        };
        push("z".into(), self.z);
        for (i, &e) in self.x.iter().enumerate() {
            push(format!("x{}", i + 1), e);
        }
        for (i, &e) in self.d.iter().enumerate() {
            push(format!("d{}", i + 1), e);
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Every PBW monomial of graded degree `d`, in canonical word order.
///
/// For `A` the grading is by `∂` (there is no `Z`); for `B` and `C` all
/// `2n+1` generators have degree one.
pub fn basis_of_degree(kind: AlgebraKind, n: usize, d: u32) -> Vec<PbwMonomial> {
    let slots = if kind == AlgebraKind::A { 2 * n } else { 2 * n + 1 };
    let mut out = Vec::new();
    let mut exps = vec![0u32; slots];
    compositions(d, 0, &mut exps, &mut |e| {
        let (z, rest) = if kind == AlgebraKind::A {
            (0, e)
        } else {
            (e[0], &e[1..])
        };
        out.push(PbwMonomial {
            z,
            x: rest[..n].to_vec(),
            d: rest[n..].to_vec(),
        });
    });
    out.sort_by(|a, b| a.word_cmp(b));
    out
}

fn compositions(remaining: u32, slot: usize, exps: &mut [u32], f: &mut impl FnMut(&[u32])) {
    if slot + 1 == exps.len() {
        exps[slot] = remaining;
        f(exps);
        return;
    }
    for e in (0..=remaining).rev() {
        exps[slot] = e;
        compositions(remaining - e, slot + 1, exps, f);
    }
    exps[slot] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: every exponent tuple with entries in 0..=d, filtered by sum.
    fn brute_force_count(slots: usize, d: u32) -> usize {
        let mut count = 0;
        let mut tuple = vec![0u32; slots];
        loop {
            if tuple.iter().sum::<u32>() == d {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == slots {
                    return count;
                }
                tuple[i] += 1;
                if tuple[i] <= d {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn degree_one_basis_of_b1() {
        let b = basis_of_degree(AlgebraKind::B, 1, 1);
        let words: Vec<_> = b.iter().map(|m| m.to_string()).collect();
        assert_eq!(words, ["z", "x1", "d1"]);
        let b0 = basis_of_degree(AlgebraKind::B, 1, 0);
        assert_eq!(b0, vec![PbwMonomial::one(1)]);
    }

    #[test]
    fn counts_match_enumeration() {
        // frozen from brute_force_count: (n, d) -> count
        assert_eq!(brute_force_count(5, 2), 15);
        assert_eq!(basis_of_degree(AlgebraKind::B, 2, 2).len(), 15);
        for n in 1..=2 {
            for d in 0..=4 {
                assert_eq!(
                    basis_of_degree(AlgebraKind::B, n, d).len(),
                    brute_force_count(2 * n + 1, d)
                );
                assert_eq!(
                    basis_of_degree(AlgebraKind::A, n, d).len(),
                    brute_force_count(2 * n, d)
                );
            }
        }
    }

    #[test]
    fn degrees() {
        let m = PbwMonomial {
            z: 5,
            x: vec![2, 0],
            d: vec![1, 1],
        };
        assert_eq!(m.partial_degree(), 4);
        assert_eq!(m.graded_degree(), 9);
        assert_eq!(m.to_string(), "z^5*x1^2*d1*d2");
        assert_eq!(m.word().len(), 9);
    }
}
