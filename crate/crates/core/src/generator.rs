use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// A degree-one generator: `X_i`, `δ_i` (written `d_i`) or `Z`.
///
/// Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X(usize),
    D(usize),
    Z,
}

impl Generator {
    pub fn index(self) -> Option<usize> {
        match self {
            Generator::X(i) | Generator::D(i) => Some(i),
            Generator::Z => None,
        }
    }

    /// All `2n+1` generators in the order `x1..xn, d1..dn, z`.
    pub fn all(n: usize) -> Vec<Generator> {
        (1..=n)
            .map(Generator::X)
            .chain((1..=n).map(Generator::D))
            .chain(std::iter::once(Generator::Z))
            .collect()
    }

    /// Position in [`Generator::all`].
    pub fn position(self, n: usize) -> usize {
        match self {
            Generator::X(i) => i - 1,
            Generator::D(i) => n + i - 1,
            Generator::Z => 2 * n,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::X(i) => write!(f, "x{i}"),
            Generator::D(i) => write!(f, "d{i}"),
            Generator::Z => f.write_str("z"),
        }
    }
}

/// Which algebra an expression or element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgebraKind {
    /// Weyl algebra, `δ_i X_i − X_i δ_i = 1`.
    A,
    /// Homogenized Weyl algebra, `δ_i X_i − X_i δ_i = Z²`, `Z` central.
    B,
    /// Commutative polynomials in `X, δ, Z`.
    C,
    /// Quadratic dual of `B`.
    #[serde(rename = "B!")]
    BShriek,
    /// Quadratic dual of `C`, realised as the `z`-free subalgebra of `B^!`.
    #[serde(rename = "C!")]
    CShriek,
}

impl AlgebraKind {
    pub fn label(self) -> &'static str {
        match self {
            AlgebraKind::A => "A",
            AlgebraKind::B => "B",
            AlgebraKind::C => "C",
            AlgebraKind::BShriek => "B!",
            AlgebraKind::CShriek => "C!",
        }
    }

    pub fn allows_z(self) -> bool {
        self != AlgebraKind::A
    }

    pub fn is_shriek(self) -> bool {
        matches!(self, AlgebraKind::BShriek | AlgebraKind::CShriek)
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algebra {0:?} (expected one of A, B, C, B!, C!)")]
pub struct UnknownKind(pub String);

impl FromStr for AlgebraKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(AlgebraKind::A),
            "B" => Ok(AlgebraKind::B),
            "C" => Ok(AlgebraKind::C),
            "B!" => Ok(AlgebraKind::BShriek),
            "C!" => Ok(AlgebraKind::CShriek),
            _ => Err(UnknownKind(s.to_string())),
        }
    }
}
