//! The graded localization `(B_n)_Z` and its relation to the Weyl algebra.
//!
//! `Z` is central and `B_n` is a domain, so every element of `(B_n)_Z` is a
//! single fraction `b / Z^k`, and two fractions are equal exactly when they
//! agree after cross-multiplying by powers of `Z`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::expr::{JsonElement, Render};
use crate::pbw::{AlgebraElement, PbwMonomial};
use crate::{AlgebraError, AlgebraKind, Rational, Result};

/// A fraction `numerator / Z^z_power` with `numerator` in `B_n`.
///
/// Canonical form: the numerator is not divisible by `Z` unless the power
/// is already zero, and zero is stored as `0 / Z^0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalizedElement {
    numerator: AlgebraElement,
    z_power: u32,
}

#[derive(Serialize)]
pub struct JsonLocalized {
    pub num: JsonElement,
    pub zpow: u32,
}

impl LocalizedElement {
    /// Builds `b / Z^k` and cancels common powers of `Z`.
    pub fn make(b: AlgebraElement, k: u32) -> Result<Self> {
        if b.kind() != AlgebraKind::B {
            return Err(AlgebraError::UnsupportedKind {
                kind: b.kind(),
                op: "localization",
            });
        }
        if b.is_zero() {
            return Ok(LocalizedElement { numerator: b, z_power: 0 });
        }
        let mut b = b;
        let mut k = k;
        while k > 0 && b.z_divides() {
            b = b.divide_by_z()?;
            k -= 1;
        }
        Ok(LocalizedElement { numerator: b, z_power: k })
    }

    pub fn from_element(b: AlgebraElement) -> Result<Self> {
        Self::make(b, 0)
    }

    pub fn numerator(&self) -> &AlgebraElement {
        &self.numerator
    }

    pub fn z_power(&self) -> u32 {
        self.z_power
    }

    pub fn n(&self) -> usize {
        self.numerator.n()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn check_same(&self, other: &LocalizedElement) -> Result<()> {
        if self.n() != other.n() {
            return Err(AlgebraError::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// `a / Z^j = b / Z^k` iff `Z^k a = Z^j b`.
    pub fn loc_equals(&self, other: &LocalizedElement) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.numerator.times_z_power(other.z_power) == other.numerator.times_z_power(self.z_power))
    }

    pub fn loc_add(&self, other: &LocalizedElement) -> Result<LocalizedElement> {
        self.check_same(other)?;
        let k = self.z_power.max(other.z_power);
        let a = self.numerator.times_z_power(k - self.z_power);
        let b = other.numerator.times_z_power(k - other.z_power);
        Self::make(a.add(&b)?, k)
    }

    pub fn loc_neg(&self) -> LocalizedElement {
        LocalizedElement {
            numerator: self.numerator.neg(),
            z_power: self.z_power,
        }
    }

    /// Product over the common denominator; `Z` is central so the
    /// denominators simply add.
    pub fn loc_multiply(&self, other: &LocalizedElement) -> Result<LocalizedElement> {
        self.check_same(other)?;
        Self::make(
            self.numerator.multiply(&other.numerator)?,
            self.z_power + other.z_power,
        )
    }

    /// Degree of a homogeneous fraction, `deg(numerator) − z_power`.
    pub fn degree(&self) -> Result<i64> {
        if !self.numerator.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous);
        }
        Ok(i64::from(self.numerator.graded_degree()?) - i64::from(self.z_power))
    }

    pub fn to_json(&self) -> JsonLocalized {
        JsonLocalized {
            num: self.numerator.to_json(),
            zpow: self.z_power,
        }
    }
}

/// `B_n → A_n`, `Z ↦ 1`. PBW monomials go to PBW monomials, so only
/// coefficients need merging.
pub fn dehomogenize(b: &AlgebraElement) -> Result<AlgebraElement> {
    if b.kind() != AlgebraKind::B {
        return Err(AlgebraError::UnsupportedKind {
            kind: b.kind(),
            op: "dehomogenize",
        });
    }
    AlgebraElement::from_terms(
        AlgebraKind::A,
        b.n(),
        b.terms().iter().map(|(m, c)| {
            let mut m = m.clone();
            m.z = 0;
            (m, c.clone())
        }),
    )
}

/// If `b` lies in the kernel of [`dehomogenize`], returns `w` with
/// `(Z − 1)·w = b`.
///
/// Grouping `b` by its `X, δ` part gives `Σ_i c_i Z^i` with `Σ_i c_i = 0`;
/// since `Z^i = (Z − 1)(Z^{i−1} + .. + 1) + 1` the witness is
/// `Σ_i c_i (Z^{i−1} + .. + 1)`.
pub fn kernel_witness(b: &AlgebraElement) -> Result<Option<AlgebraElement>> {
    if !dehomogenize(b)?.is_zero() {
        return Ok(None);
    }
    let mut terms: BTreeMap<PbwMonomial, Rational> = BTreeMap::new();
    for (m, c) in b.terms() {
        for j in 0..m.z {
            let mut t = m.clone();
            t.z = j;
            *terms.entry(t).or_insert_with(Rational::zero) += c;
        }
    }
    AlgebraElement::from_terms(AlgebraKind::B, b.n(), terms).map(Some)
}

/// `Z − 1` in `B_n`.
pub fn z_minus_one(n: usize) -> AlgebraElement {
    AlgebraElement::z_power(AlgebraKind::B, n, 1)
        .sub(&AlgebraElement::one(AlgebraKind::B, n))
        .expect("same algebra")
}

/// Pads each term `X^P δ^Q` of `a` to `Z^{k−|P|−|Q|} X^P δ^Q` with `k` the
/// largest `∂` in `a`. Returns the homogeneous lift and `k`.
pub fn homogenize(a: &AlgebraElement) -> Result<(AlgebraElement, u32)> {
    if a.kind() != AlgebraKind::A {
        return Err(AlgebraError::UnsupportedKind {
            kind: a.kind(),
            op: "homogenize",
        });
    }
    if a.is_zero() {
        return Ok((AlgebraElement::zero(AlgebraKind::B, a.n()), 0));
    }
    let k = a.partial_degree()?;
    let b = AlgebraElement::from_terms(
        AlgebraKind::B,
        a.n(),
        a.terms().iter().map(|(m, c)| {
            let mut m = m.clone();
            m.z = k - m.partial_degree();
            (m, c.clone())
        }),
    )?;
    Ok((b, k))
}

/// `θ: ((B_n)_Z)_0 → A_n`, `b / Z^k ↦ b|_{Z=1}`.
pub fn theta(e: &LocalizedElement) -> Result<AlgebraElement> {
    if !e.is_zero() {
        let degree = e.degree()?;
        if degree != 0 {
            return Err(AlgebraError::NotDegreeZero { degree });
        }
    }
    dehomogenize(e.numerator())
}

/// Inverse of [`theta`]: `a ↦ homogenize(a) / Z^k`.
pub fn theta_inverse(a: &AlgebraElement) -> Result<LocalizedElement> {
    let (b, k) = homogenize(a)?;
    LocalizedElement::make(b, k)
}

/// `μ(a ⊗ Z^t)`: the degree-`t` fraction `homogenize(a)·Z^t / Z^k`.
pub fn mu(a: &AlgebraElement, t: i64) -> Result<LocalizedElement> {
    let (b, k) = homogenize(a)?;
    let overflow = || AlgebraError::DegreeOverflow { degree: t };
    let up = u32::try_from(t.max(0)).map_err(|_| overflow())?;
    let down = u32::try_from(t.min(0).unsigned_abs()).map_err(|_| overflow())?;
    LocalizedElement::make(b.times_z_power(up), k.checked_add(down).ok_or_else(overflow)?)
}

/// One, as a fraction.
pub fn loc_one(n: usize) -> LocalizedElement {
    LocalizedElement {
        numerator: AlgebraElement::one(AlgebraKind::B, n),
        z_power: 0,
    }
}
