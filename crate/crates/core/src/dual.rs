//! Quadratic presentations and their Koszul duals.
//!
//! A quadratic relation is a vector in `V ⊗ V`, stored sparsely over
//! ordered generator pairs. The dual relation space is the orthogonal
//! complement under the pairing between `V ⊗ V` and `V* ⊗ V*`.
//!
//! The pairing identifies `(V ⊗ V)*` with `V* ⊗ V*` in reversed order,
//! `⟨u ⊗ v, v* ⊗ u*⟩ = 1` ([`Pairing::Transposed`]). With the relation
//! `δ_i X_i − X_i δ_i = Z²` this is the convention under which the dual of
//! `B_n` has the relation `Σ x_i d_i + z²`. The untransposed pairing
//! ([`Pairing::Direct`]) yields `z² − Σ x_i d_i` instead, the presentation
//! of the opposite algebra; it is kept for comparison.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{same_span, Matrix};
use crate::{rational, AlgebraError, AlgebraKind, Generator, Rational, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pairing {
    /// `⟨u ⊗ v, v* ⊗ u*⟩ = 1`.
    #[default]
    Transposed,
    /// `⟨u ⊗ v, u* ⊗ v*⟩ = 1`.
    Direct,
}

/// A sparse element `Σ c_{uv} u ⊗ v` of `V ⊗ V`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorVector {
    entries: BTreeMap<(Generator, Generator), Rational>,
}

impl TensorVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Generator, Generator, i64)>) -> Self {
        let mut v = Self::new();
        for (a, b, c) in terms {
            v.add(a, b, rational(c));
        }
        v
    }

    pub fn add(&mut self, a: Generator, b: Generator, c: Rational) {
        let e = self.entries.entry((a, b)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.entries.remove(&(a, b));
        }
    }

    pub fn get(&self, a: Generator, b: Generator) -> Rational {
        self.entries.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Generator, Generator), &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transposed(&self) -> TensorVector {
        TensorVector {
            entries: self
                .entries
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// Coordinates in the basis `g_i ⊗ g_j` of [`Generator::all`], row-major.
    pub fn to_dense(&self, n: usize) -> Vec<Rational> {
        let m = 2 * n + 1;
        let mut v = vec![Rational::zero(); m * m];
        for (&(a, b), c) in &self.entries {
            v[a.position(n) * m + b.position(n)] = c.clone();
        }
        v
    }

    pub fn from_dense(n: usize, v: &[Rational]) -> TensorVector {
        let gens = Generator::all(n);
        let m = gens.len();
        let mut t = TensorVector::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                t.add(gens[i / m], gens[i % m], c.clone());
            }
        }
        t
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(a, b), c)) in self.entries.iter().enumerate() {
            let neg = *c < Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{a}*{b}")?;
        }
        Ok(())
    }
}

/// Generators plus a linearly independent list of quadratic relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation {
    kind: AlgebraKind,
    n: usize,
    generators: Vec<Generator>,
    relations: Vec<TensorVector>,
}

impl QuadraticPresentation {
    /// Checks that every relation is nonzero and that the list is
    /// independent.
    pub fn new(kind: AlgebraKind, n: usize, relations: Vec<TensorVector>) -> Result<Self> {
        let dim = (2 * n + 1).pow(2);
        let rows: Vec<_> = relations.iter().map(|r| r.to_dense(n)).collect();
        let rank = Matrix::from_rows(rows, dim).rank();
        if rank != relations.len() || relations.iter().any(TensorVector::is_zero) {
            return Err(AlgebraError::RankDeficientInput {
                rank,
                count: relations.len(),
            });
        }
        Ok(QuadraticPresentation {
            kind,
            n,
            generators: Generator::all(n),
            relations,
        })
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[TensorVector] {
        &self.relations
    }

    pub fn dense_relations(&self) -> Vec<Vec<Rational>> {
        self.relations.iter().map(|r| r.to_dense(self.n)).collect()
    }

    /// Dimension of `V ⊗ V`.
    pub fn tensor_dim(&self) -> usize {
        self.generators.len().pow(2)
    }
}

/// Basis of the orthogonal complement of a relation space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualRelationBasis {
    pub n: usize,
    pub basis: Vec<TensorVector>,
}

impl DualRelationBasis {
    pub fn dense(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(|r| r.to_dense(self.n)).collect()
    }
}

fn commutator(a: Generator, b: Generator) -> TensorVector {
    TensorVector::from_terms([(a, b, 1), (b, a, -1)])
}

fn anticommutator(a: Generator, b: Generator) -> TensorVector {
    TensorVector::from_terms([(a, b, 1), (b, a, 1)])
}

fn dual_kind(kind: AlgebraKind) -> AlgebraKind {
    match kind {
        AlgebraKind::B => AlgebraKind::BShriek,
        AlgebraKind::C => AlgebraKind::CShriek,
        AlgebraKind::BShriek => AlgebraKind::B,
        AlgebraKind::CShriek => AlgebraKind::C,
        AlgebraKind::A => AlgebraKind::A,
    }
}

/// The defining relations of `B_n` or `C_n`.
///
/// For `B_n`: `[X_i, X_j]`, `[δ_i, δ_j]` (`i < j`), `δ_j X_i − X_i δ_j`
/// for all `i, j` with `− Z ⊗ Z` added when `i = j`, then `[X_i, Z]` and
/// `[δ_i, Z]`. For `C_n`: every commutator of two distinct generators.
pub fn relations_of(kind: AlgebraKind, n: usize) -> Result<QuadraticPresentation> {
    use Generator::{D, X, Z};
    let mut rels = Vec::new();
    match kind {
        AlgebraKind::B => {
            for i in 1..=n {
                for j in i + 1..=n {
                    rels.push(commutator(X(i), X(j)));
                }
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    rels.push(commutator(D(i), D(j)));
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    let mut r = commutator(D(j), X(i));
                    if i == j {
                        r.add(Z, Z, -Rational::one());
                    }
                    rels.push(r);
                }
            }
            for i in 1..=n {
                rels.push(commutator(X(i), Z));
            }
            for i in 1..=n {
                rels.push(commutator(D(i), Z));
            }
        }
        AlgebraKind::C => {
            let gens = Generator::all(n);
            for (p, &a) in gens.iter().enumerate() {
                for &b in &gens[p + 1..] {
                    rels.push(commutator(a, b));
                }
            }
        }
        _ => return Err(AlgebraError::UnsupportedKind { kind, op: "relations_of" }),
    }
    QuadraticPresentation::new(kind, n, rels)
}

pub fn pairing(r: &TensorVector, s: &TensorVector) -> Rational {
    pairing_with(r, s, Pairing::Transposed)
}

pub fn pairing_with(r: &TensorVector, s: &TensorVector, convention: Pairing) -> Rational {
    r.entries()
        .map(|(&(a, b), c)| {
            let partner = match convention {
                Pairing::Transposed => s.get(b, a),
                Pairing::Direct => s.get(a, b),
            };
            c * partner
        })
        .sum()
}

pub fn orthogonal_complement(p: &QuadraticPresentation) -> Result<DualRelationBasis> {
    orthogonal_complement_with(p, Pairing::Transposed)
}

/// Exact kernel of the pairing matrix.
pub fn orthogonal_complement_with(
    p: &QuadraticPresentation,
    convention: Pairing,
) -> Result<DualRelationBasis> {
    let n = p.n();
    let rows = p.dense_relations();
    let matrix = Matrix::from_rows(rows, p.tensor_dim());
    let rank = matrix.rank();
    if rank != p.relations().len() {
        return Err(AlgebraError::RankDeficientInput {
            rank,
            count: p.relations().len(),
        });
    }
    // Direct pairing is the dot product of coordinates, so the kernel is the
    // complement; the transposed pairing needs the kernel transposed back.
    let basis = matrix
        .nullspace()
        .into_iter()
        .map(|v| {
            let t = TensorVector::from_dense(n, &v);
            match convention {
                Pairing::Direct => t,
                Pairing::Transposed => t.transposed(),
            }
        })
        .collect();
    Ok(DualRelationBasis { n, basis })
}

/// The readable presentation of the quadratic dual.
///
/// For `B_n`: `x_i²`, `d_i²`, the anticommutators `(x_i, x_j)`, `(d_i, d_j)`
/// for `i < j`, `(x_i, d_j)` for all `i, j`, `(x_i, z)`, `(d_i, z)`, and
/// `Σ x_i d_i + z²`. For `C_n`: the exterior algebra relations on all
/// `2n+1` generators.
pub fn dual_presentation(kind: AlgebraKind, n: usize) -> Result<QuadraticPresentation> {
    use Generator::{D, X, Z};
    let mut rels = Vec::new();
    match kind {
        AlgebraKind::B => {
            for i in 1..=n {
                rels.push(TensorVector::from_terms([(X(i), X(i), 1)]));
            }
            for i in 1..=n {
                rels.push(TensorVector::from_terms([(D(i), D(i), 1)]));
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    rels.push(anticommutator(X(i), X(j)));
                }
            }
            for i in 1..=n {
                for j in i + 1..=n {
                    rels.push(anticommutator(D(i), D(j)));
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    rels.push(anticommutator(X(i), D(j)));
                }
            }
            for i in 1..=n {
                rels.push(anticommutator(X(i), Z));
            }
            for i in 1..=n {
                rels.push(anticommutator(D(i), Z));
            }
            let mut last = TensorVector::from_terms([(Z, Z, 1)]);
            for i in 1..=n {
                last.add(X(i), D(i), Rational::one());
            }
            rels.push(last);
        }
        AlgebraKind::C => {
            let gens = Generator::all(n);
            for &g in &gens {
                rels.push(TensorVector::from_terms([(g, g, 1)]));
            }
            for (p, &a) in gens.iter().enumerate() {
                for &b in &gens[p + 1..] {
                    rels.push(anticommutator(a, b));
                }
            }
        }
        _ => return Err(AlgebraError::UnsupportedKind { kind, op: "dual_presentation" }),
    }
    QuadraticPresentation::new(dual_kind(kind), n, rels)
}

/// Presentation whose relations are a dual basis, for taking the dual again.
pub fn presentation_of(kind: AlgebraKind, basis: &DualRelationBasis) -> Result<QuadraticPresentation> {
    QuadraticPresentation::new(dual_kind(kind), basis.n, basis.basis.clone())
}

/// True when the two relation lists span the same subspace of `V ⊗ V`.
pub fn spans_equal(n: usize, a: &[TensorVector], b: &[TensorVector]) -> bool {
    let dense = |v: &[TensorVector]| v.iter().map(|t| t.to_dense(n)).collect::<Vec<_>>();
    same_span(&dense(a), &dense(b), (2 * n + 1).pow(2))
}
