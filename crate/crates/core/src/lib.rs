//! Exact computer algebra for the Weyl algebra `A_n`, its homogenization
//! `B_n`, the polynomial algebra `C_n`, and the quadratic duals `B_n^!`
//! and `C_n^!`.
//!
//! All coefficients are arbitrary-precision rationals. The crate is split
//! along the lines of the mathematics:
//!
//! * [`expr`] parses and renders expressions,
//! * [`pbw`] does arithmetic on the PBW basis `Z^i X^P δ^Q`,
//! * [`dual`] computes quadratic duals by orthogonal complement,
//! * [`shriek`] is the finite-dimensional algebra `B_n^!` with its
//!   Frobenius form and Nakayama automorphism,
//! * [`localization`] is the graded localization `(B_n)_Z`,
//! * [`verify`] binds the mathematical claims to runnable checks.

pub mod cli;
pub mod dual;
pub mod error;
pub mod expr;
pub mod generator;
pub mod linalg;
pub mod localization;
pub mod pbw;
pub mod shriek;
pub mod verify;

pub use error::{AlgebraError, Result};
pub use generator::{AlgebraKind, Generator};

/// Exact coefficient field (characteristic zero).
pub type Rational = num_rational::BigRational;

pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
