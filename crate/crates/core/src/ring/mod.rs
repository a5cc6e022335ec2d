//! Exact commutative coefficient rings.
//!
//! Two rings are provided: arbitrary-precision [`Rational`] numbers and
//! [`LaurentHalf`], Laurent polynomials in one variable `v` whose exponents
//! may be half-integers. Everything downstream is generic over [`Ring`];
//! the dynamically tagged [`Scalar`] exists for file and command-line input,
//! where the ring is only known at run time.

mod laurent;
mod parse;
mod rational;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use laurent::LaurentHalf;
pub use parse::ParseError;
pub use rational::Rational;

/// Run-time name of a coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "rational")]
    Rational,
    #[serde(rename = "laurent_half")]
    LaurentHalf,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Rational => f.write_str("rational"),
            RingTag::LaurentHalf => f.write_str("laurent_half"),
        }
    }
}

impl FromStr for RingTag {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" => Ok(RingTag::Rational),
            "laurent_half" => Ok(RingTag::LaurentHalf),
            other => Err(RingError::UnknownTag(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("ring mismatch: {left} vs {right}")]
    Mismatch { left: RingTag, right: RingTag },
    #[error("unknown ring tag `{0}`")]
    UnknownTag(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// An exact commutative ring with canonical representatives, so that `==`
/// is mathematical equality.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const TAG: RingTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Inverse of a unit, `None` when `self` is not invertible in the ring.
    /// For [`LaurentHalf`] the units are exactly the monomials `c·v^{e/2}`.
    fn unit_inverse(&self) -> Option<Self>;

    /// Parse the canonical text grammar of this ring.
    fn parse(text: &str) -> Result<Self, ParseError>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self^n` for any integer `n`; negative powers require a unit.
    fn pow(&self, n: i64) -> Option<Self> {
        let base = if n < 0 {
            self.unit_inverse()?
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }
}

/// A coefficient carrying its ring at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    Laurent(LaurentHalf),
}

impl Scalar {
    pub fn parse(text: &str, tag: RingTag) -> Result<Self, ParseError> {
        Ok(match tag {
            RingTag::Rational => Scalar::Rational(Rational::parse(text)?),
            RingTag::LaurentHalf => Scalar::Laurent(LaurentHalf::parse(text)?),
        })
    }

    pub fn tag(&self) -> RingTag {
        match self {
            Scalar::Rational(_) => RingTag::Rational,
            Scalar::Laurent(_) => RingTag::LaurentHalf,
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, RingError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a.add(b))),
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Ok(Scalar::Laurent(a.add(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, RingError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a.mul(b))),
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Ok(Scalar::Laurent(a.mul(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    fn mismatch(&self, other: &Scalar) -> RingError {
        RingError::Mismatch {
            left: self.tag(),
            right: other.tag(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => r.fmt(f),
            Scalar::Laurent(p) => p.fmt(f),
        }
    }
}
