use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{check_pbw_kind, PbwMonomial};
use crate::{AlgebraError, AlgebraKind, Generator, Rational, Result};

/// A canonical element of `B_n`, `A_n` or `C_n`: a finite sum of PBW
/// monomials with nonzero rational coefficients.
///
/// Equality is coefficientwise, which is equality in the algebra because
/// the PBW normal form is unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    kind: AlgebraKind,
    n: usize,
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl AlgebraElement {
    pub fn zero(kind: AlgebraKind, n: usize) -> Self {
        debug_assert!(check_pbw_kind(kind, "element").is_ok());
        AlgebraElement {
            kind,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(kind: AlgebraKind, n: usize) -> Self {
        Self::monomial(kind, PbwMonomial::one(n), Rational::one())
    }

    pub fn scalar(kind: AlgebraKind, n: usize, c: Rational) -> Self {
        Self::monomial(kind, PbwMonomial::one(n), c)
    }

    pub fn monomial(kind: AlgebraKind, m: PbwMonomial, c: Rational) -> Self {
        let mut e = Self::zero(kind, m.n());
        e.add_term(m, c);
        e
    }

    pub fn generator(kind: AlgebraKind, n: usize, g: Generator) -> Result<Self> {
        check_pbw_kind(kind, "generator")?;
        if let Some(i) = g.index() {
            if i == 0 || i > n {
                return Err(AlgebraError::IndexOutOfRange { index: i, n });
            }
        } else if !kind.allows_z() {
            return Err(AlgebraError::IllegalGenerator { kind });
        }
        Ok(Self::monomial(kind, PbwMonomial::generator(n, g), Rational::one()))
    }

    /// `Z^k` in `B_n` or `C_n`.
    pub fn z_power(kind: AlgebraKind, n: usize, k: u32) -> Self {
        debug_assert!(kind.allows_z() || k == 0);
        Self::monomial(kind, PbwMonomial::z_power(n, k), Rational::one())
    }

    /// Builds an element from arbitrary (monomial, coefficient) pairs,
    /// merging repeats and dropping zeros.
    pub fn from_terms(
        kind: AlgebraKind,
        n: usize,
        terms: impl IntoIterator<Item = (PbwMonomial, Rational)>,
    ) -> Result<Self> {
        check_pbw_kind(kind, "element")?;
        let mut e = Self::zero(kind, n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(AlgebraError::SizeMismatch { left: n, right: m.n() });
            }
            if !m.is_legal(kind) {
                return Err(AlgebraError::IllegalGenerator { kind });
            }
            e.add_term(m, c);
        }
        Ok(e)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<PbwMonomial, Rational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &AlgebraElement) -> Result<()> {
        if self.kind != other.kind || self.n != other.n {
            return Err(AlgebraError::KindMismatch {
                left: self.kind,
                left_n: self.n,
                right: other.kind,
                right_n: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        let mut out = Self::zero(self.kind, self.n);
        if c.is_zero() {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v * c))
            .collect();
        out
    }

    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_same(other)?;
        let mut out = Self::zero(self.kind, self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                monomial_product(self.kind, ma, mb, |m, k| {
                    out.add_term(m, &c * Rational::from_integer(k));
                });
            }
        }
        Ok(out)
    }

    /// `ab − ba`.
    pub fn commutator(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    pub fn pow(&self, e: u32) -> AlgebraElement {
        let mut acc = Self::one(self.kind, self.n);
        for _ in 0..e {
            acc = acc.multiply(self).expect("same algebra");
        }
        acc
    }

    /// `∂(a)`: the largest `|P| + |Q|` over the support.
    pub fn partial_degree(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(PbwMonomial::partial_degree)
            .max()
            .ok_or(AlgebraError::ZeroElement)
    }

    /// Largest graded degree in the support.
    pub fn graded_degree(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(PbwMonomial::graded_degree)
            .max()
            .ok_or(AlgebraError::ZeroElement)
    }

    /// True for zero and for elements whose terms all share one degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(PbwMonomial::graded_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn graded_component(&self, d: u32) -> AlgebraElement {
        let mut out = Self::zero(self.kind, self.n);
        out.terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.graded_degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        out
    }

    /// True when every monomial carries at least one `Z`. Zero counts as
    /// divisible.
    pub fn z_divides(&self) -> bool {
        self.kind != AlgebraKind::A && self.terms.keys().all(|m| m.z >= 1)
    }

    pub fn divide_by_z(&self) -> Result<AlgebraElement> {
        if !self.z_divides() {
            return Err(AlgebraError::NotDivisible);
        }
        let mut out = Self::zero(self.kind, self.n);
        out.terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.z -= 1;
                (m, c.clone())
            })
            .collect();
        Ok(out)
    }

    /// Multiplies by the central element `Z^k`.
    pub fn times_z_power(&self, k: u32) -> AlgebraElement {
        debug_assert!(self.kind.allows_z() || k == 0);
        let mut out = Self::zero(self.kind, self.n);
        out.terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = m.clone();
                m.z += k;
                (m, c.clone())
            })
            .collect();
        out
    }
}

/// Expands `Z^a X^P δ^Q · Z^b X^R δ^S` on the PBW basis and reports each
/// resulting monomial with an integer coefficient.
///
/// Only `δ^Q X^R` needs reordering. Per index,
/// `δ^q X^r = Σ_k k!·C(q,k)·C(r,k) X^{r−k} δ^{q−k} c^k`
/// where `c = δX − Xδ` is `Z²` in `B`, `1` in `A`, and `0` in `C`.
fn monomial_product(
    kind: AlgebraKind,
    a: &PbwMonomial,
    b: &PbwMonomial,
    mut emit: impl FnMut(PbwMonomial, BigInt),
) {
    let n = a.n();
    if kind == AlgebraKind::C {
        emit(a.mul_commutative(b), BigInt::one());
        return;
    }
    let limits: Vec<u32> = (0..n).map(|i| a.d[i].min(b.x[i])).collect();
    let mut ks = vec![0u32; n];
    loop {
        let mut coeff = BigInt::one();
        let mut m = a.mul_commutative(b);
        let mut contracted = 0;
        for (i, &k) in ks.iter().enumerate() {
            if k > 0 {
                coeff *= falling(a.d[i], k) * binomial(b.x[i], k);
                m.x[i] -= k;
                m.d[i] -= k;
                contracted += k;
            }
        }
        if kind == AlgebraKind::B {
            m.z += 2 * contracted;
        }
        emit(m, coeff);

        // odometer over 0..=limits[i]
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if ks[i] < limits[i] {
                ks[i] += 1;
                break;
            }
            ks[i] = 0;
            i += 1;
        }
    }
}

/// `q (q−1) ... (q−k+1)`, which equals `k!·C(q,k)`.
fn falling(q: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(q - j))
}

fn binomial(r: u32, k: u32) -> BigInt {
    falling(r, k) / falling(k, k)
}
