//! Counts in ℕ ∪ {∞}.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// A multiplicity: an arbitrary-precision natural number or infinity.
///
/// Arithmetic follows the usual conventions for counting: `∞ + x = ∞`,
/// `0 · ∞ = 0` and `x · ∞ = ∞` for `x > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    Finite(BigUint),
    Infinite,
}

pub use Multiplicity::Infinite as INF;

impl Multiplicity {
    pub fn zero() -> Self {
        Multiplicity::Finite(BigUint::zero())
    }

    pub fn one() -> Self {
        Multiplicity::Finite(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Multiplicity::Finite(n) if n.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Multiplicity::Infinite)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            Multiplicity::Finite(n) => Some(n),
            Multiplicity::Infinite => None,
        }
    }

    /// `2^k`, handy for the exponential fixtures.
    pub fn pow2(k: u32) -> Self {
        Multiplicity::Finite(BigUint::one() << k)
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Class used by strong equivalence: 0, 1, or "two or more".
    pub fn ambiguity_class(&self) -> u8 {
        match self {
            Multiplicity::Finite(n) if n.is_zero() => 0,
            Multiplicity::Finite(n) if n.is_one() => 1,
            _ => 2,
        }
    }
}

impl Default for Multiplicity {
    fn default() -> Self {
        Multiplicity::zero()
    }
}

impl From<u64> for Multiplicity {
    fn from(n: u64) -> Self {
        Multiplicity::Finite(BigUint::from(n))
    }
}

impl From<u32> for Multiplicity {
    fn from(n: u32) -> Self {
        Multiplicity::Finite(BigUint::from(n))
    }
}

impl From<usize> for Multiplicity {
    fn from(n: usize) -> Self {
        Multiplicity::Finite(BigUint::from(n))
    }
}

impl From<i32> for Multiplicity {
    fn from(n: i32) -> Self {
        assert!(n >= 0, "negative multiplicity");
        Multiplicity::Finite(BigUint::from(n as u32))
    }
}

impl From<BigUint> for Multiplicity {
    fn from(n: BigUint) -> Self {
        Multiplicity::Finite(n)
    }
}

impl PartialOrd for Multiplicity {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Multiplicity {
    fn cmp(&self, other: &Self) -> Ordering {
        use Multiplicity::*;
        match (self, other) {
            (Infinite, Infinite) => Ordering::Equal,
            (Infinite, _) => Ordering::Greater,
            (_, Infinite) => Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for Multiplicity {
    type Output = Multiplicity;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => Multiplicity::Finite(a + b),
            _ => Multiplicity::Infinite,
        }
    }
}

impl<'a> Add<&'a Multiplicity> for &'a Multiplicity {
    type Output = Multiplicity;
    fn add(self, rhs: &Multiplicity) -> Multiplicity {
        match (self, rhs) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => Multiplicity::Finite(a + b),
            _ => Multiplicity::Infinite,
        }
    }
}

impl AddAssign for Multiplicity {
    fn add_assign(&mut self, rhs: Self) {
        match (&mut *self, rhs) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => *a += b,
            _ => *self = Multiplicity::Infinite,
        }
    }
}

impl AddAssign<&Multiplicity> for Multiplicity {
    fn add_assign(&mut self, rhs: &Multiplicity) {
        match (&mut *self, rhs) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => *a += b,
            _ => *self = Multiplicity::Infinite,
        }
    }
}

impl Mul for Multiplicity {
    type Output = Multiplicity;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Multiplicity> for &'a Multiplicity {
    type Output = Multiplicity;
    fn mul(self, rhs: &Multiplicity) -> Multiplicity {
        use Multiplicity::*;
        if self.is_zero() || rhs.is_zero() {
            return Multiplicity::zero();
        }
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a * b),
            _ => Infinite,
        }
    }
}

impl Sum for Multiplicity {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Multiplicity::zero();
        for m in iter {
            acc += m;
        }
        acc
    }
}

impl Product for Multiplicity {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Multiplicity::one();
        for m in iter {
            acc = &acc * &m;
        }
        acc
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(n) => write!(f, "{n}"),
            Multiplicity::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed multiplicity `{0}`")]
pub struct ParseMultiplicityError(pub String);

impl FromStr for Multiplicity {
    type Err = ParseMultiplicityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Multiplicity::Infinite);
        }
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseMultiplicityError(s.to_string()));
        }
        s.parse::<BigUint>()
            .map(Multiplicity::Finite)
            .map_err(|_| ParseMultiplicityError(s.to_string()))
    }
}
