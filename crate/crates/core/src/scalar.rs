//! Scalars: the max-plus semifield over exact rationals and the two-element
//! Boolean semifield it projects onto.
//!
//! Addition is `max`, multiplication is ordinary rational addition.  The
//! additive identity ("bottom", printed `-inf`) is absorbing for
//! multiplication and neutral for addition; every other element is an exact
//! rational and is invertible.  No floating point exists anywhere in this
//! crate.

use num::{BigInt, BigRational, Zero};
use std::fmt;
use std::str::FromStr;

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(i: i64) -> Rat {
    Rat::from_integer(BigInt::from(i))
}

/// Shorthand for the rational p/q.  Panics if q = 0.
pub fn ratq(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("bottom (-inf) has no multiplicative inverse")]
    InvertBottom,
    #[error("invalid rational literal {0:?}: expected \"p\", \"p/q\" or \"-inf\"")]
    BadLiteral(String),
}

/// Parse an exact rational from its canonical string form "p" or "p/q".
pub fn rat_parse(s: &str) -> Result<Rat, ScalarError> {
    let bad = || ScalarError::BadLiteral(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

/// An element of the max-plus semifield: bottom (-inf) or a finite rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TropScalar {
    /// The additive identity 0_T = -inf.
    Bottom,
    /// A finite, multiplicatively invertible element.
    Finite(Rat),
}

impl PartialOrd for TropScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropScalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use TropScalar::*;
        match (self, other) {
            (Bottom, Bottom) => std::cmp::Ordering::Equal,
            (Bottom, Finite(_)) => std::cmp::Ordering::Less,
            (Finite(_), Bottom) => std::cmp::Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl TropScalar {
    /// The additive identity (absorbing for multiplication).
    pub fn zero() -> Self {
        TropScalar::Bottom
    }

    /// The multiplicative identity (the rational 0).
    pub fn one() -> Self {
        TropScalar::Finite(Rat::zero())
    }

    pub fn from_int(i: i64) -> Self {
        TropScalar::Finite(rat(i))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, TropScalar::Bottom)
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            TropScalar::Bottom => None,
            TropScalar::Finite(r) => Some(r),
        }
    }

    /// Tropical addition: max, with bottom as the least element.
    pub fn trop_add(&self, other: &Self) -> Self {
        std::cmp::max(self, other).clone()
    }

    /// Tropical multiplication: rational sum, bottom absorbing.
    pub fn trop_mul(&self, other: &Self) -> Self {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::Bottom,
        }
    }

    /// Tropical inverse: rational negation; bottom is not invertible.
    pub fn trop_inv(&self) -> Result<Self, ScalarError> {
        match self {
            TropScalar::Bottom => Err(ScalarError::InvertBottom),
            TropScalar::Finite(a) => Ok(TropScalar::Finite(-a)),
        }
    }

    /// The semiring quotient onto {0, 1}: nonzero elements go to 1.
    pub fn bool_project(&self) -> BoolScalar {
        match self {
            TropScalar::Bottom => BoolScalar::Zero,
            TropScalar::Finite(_) => BoolScalar::One,
        }
    }

    /// Parse "p", "p/q" or "-inf".
    pub fn parse(s: &str) -> Result<Self, ScalarError> {
        if s.trim() == "-inf" {
            Ok(TropScalar::Bottom)
        } else {
            Ok(TropScalar::Finite(rat_parse(s)?))
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::Bottom => write!(f, "-inf"),
            TropScalar::Finite(r) => write!(f, "{}", r),
        }
    }
}

impl From<Rat> for TropScalar {
    fn from(r: Rat) -> Self {
        TropScalar::Finite(r)
    }
}

/// An element of the Boolean semifield {0, 1} with idempotent addition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoolScalar {
    Zero,
    One,
}

impl BoolScalar {
    /// Idempotent addition (logical or): 1 + 1 = 1.
    pub fn add(self, other: Self) -> Self {
        std::cmp::max(self, other)
    }

    /// Multiplication (logical and).
    pub fn mul(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }
}
