use std::cmp::Ordering;
use std::fmt;

use crate::Generator;

/// A square-free basis word `x^A d^B z^ε` of `B_n^!`. Bit `i-1` of `x`
/// (resp. `d`) set means `x_i` (resp. `d_i`) occurs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShriekWord {
    pub x: u32,
    pub d: u32,
    pub z: bool,
}

impl ShriekWord {
    pub const ONE: ShriekWord = ShriekWord {
        x: 0,
        d: 0,
        z: false,
    };

    /// `x_1 .. x_n d_1 .. d_n z`, spanning the top degree `2n+1`.
    pub fn top(n: usize) -> Self {
        let full = (1u32 << n) - 1;
        ShriekWord {
            x: full,
            d: full,
            z: true,
        }
    }

    pub fn generator(g: Generator) -> Self {
        match g {
            Generator::X(i) => ShriekWord {
                x: 1 << (i - 1),
                ..Self::ONE
            },
            Generator::D(i) => ShriekWord {
                d: 1 << (i - 1),
                ..Self::ONE
            },
            Generator::Z => ShriekWord { z: true, ..Self::ONE },
        }
    }

    pub fn degree(self) -> usize {
        (self.x.count_ones() + self.d.count_ones()) as usize + usize::from(self.z)
    }

    /// The canonical reading of the word as generators.
    pub fn letters(self, n: usize) -> Vec<Generator> {
        let mut w: Vec<Generator> = (1..=n)
            .filter(|i| self.x & (1 << (i - 1)) != 0)
            .map(Generator::X)
            .collect();
        w.extend(
            (1..=n)
                .filter(|i| self.d & (1 << (i - 1)) != 0)
                .map(Generator::D),
        );
        if self.z {
            w.push(Generator::Z);
        }
        w
    }

    /// Bit masks of the generators, used as the `x`/`d` JSON 0/1 vectors.
    pub fn x_mask(self, n: usize) -> Vec<u32> {
        (0..n).map(|i| (self.x >> i) & 1).collect()
    }

    pub fn d_mask(self, n: usize) -> Vec<u32> {
        (0..n).map(|i| (self.d >> i) & 1).collect()
    }

    /// Basis order: degree, then canonical letters compared in the order
    /// `x_1 < .. < x_n < d_1 < .. < d_n < z`.
    pub fn basis_cmp(self, other: ShriekWord, n: usize) -> Ordering {
        let key = |w: ShriekWord| -> Vec<usize> {
            w.letters(n).into_iter().map(|g| g.position(n)).collect()
        };
        self.degree()
            .cmp(&other.degree())
            .then_with(|| key(self).cmp(&key(other)))
    }

    /// Display order: degree, `z` last, then larger masks (in exponent
    /// vector terms) first.
    pub fn display_cmp(self, other: ShriekWord, n: usize) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.z.cmp(&other.z))
            .then_with(|| other.x_mask(n).cmp(&self.x_mask(n)))
            .then_with(|| other.d_mask(n).cmp(&self.d_mask(n)))
    }

    pub fn display(self, n: usize) -> String {
        let letters = self.letters(n);
        if letters.is_empty() {
            return "1".into();
        }
        letters
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for ShriekWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = (32 - (self.x | self.d).leading_zeros()) as usize;
        f.write_str(&self.display(n))
    }
}

/// All `2^{2n+1}` basis words sorted by degree and canonical word order.
pub fn shriek_basis(n: usize) -> Vec<ShriekWord> {
    let size = 1u32 << n;
    let mut words = Vec::with_capacity(2 * (size as usize).pow(2));
    for x in 0..size {
        for d in 0..size {
            for z in [false, true] {
                words.push(ShriekWord { x, d, z });
            }
        }
    }
    words.sort_by(|a, b| a.basis_cmp(*b, n));
    words
}

/// Number of basis words in each degree `0..=2n+1`.
pub fn degree_dimensions(n: usize) -> Vec<usize> {
    let mut dims = vec![0; 2 * n + 2];
    for w in shriek_basis(n) {
        dims[w.degree()] += 1;
    }
    dims
}
