//! Exact rational lower bounds of the form `min(n₁/d₁, n₂/d₂, ..)`.
//!
//! A term with a non-positive numerator is met by every non-negative count.
//! A term with a positive numerator and a non-positive denominator does not
//! constrain the minimum. No floating point is involved anywhere.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    /// Met by any non-negative integer.
    Trivial,
    Finite(Ratio<i64>),
    Infinite,
}

impl Bound {
    pub fn term(numerator: i64, denominator: i64) -> Bound {
        if numerator <= 0 {
            Bound::Trivial
        } else if denominator <= 0 {
            Bound::Infinite
        } else {
            Bound::Finite(Ratio::new(numerator, denominator))
        }
    }

    pub fn min(self, other: Bound) -> Bound {
        match (self, other) {
            (Bound::Trivial, _) | (_, Bound::Trivial) => Bound::Trivial,
            (Bound::Infinite, b) | (b, Bound::Infinite) => b,
            (Bound::Finite(a), Bound::Finite(b)) => Bound::Finite(a.min(b)),
        }
    }

    /// Whether the non-negative integer `value` is at least this bound.
    pub fn is_met_by(self, value: u64) -> bool {
        match self {
            Bound::Trivial => true,
            Bound::Finite(r) => {
                // value >= n/d  <=>  value*d >= n, with d > 0
                (value as i128) * (*r.denom() as i128) >= *r.numer() as i128
            }
            Bound::Infinite => false,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Trivial => write!(f, "trivial"),
            Bound::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Bound::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_rules() {
        assert_eq!(Bound::term(0, 5), Bound::Trivial);
        assert_eq!(Bound::term(-2, -1), Bound::Trivial);
        assert_eq!(Bound::term(3, 0), Bound::Infinite);
        assert_eq!(Bound::term(21, 15).to_string(), "7/5");
    }

    #[test]
    fn min_and_comparison() {
        let a = Bound::term(4, 3);
        let b = Bound::term(21, 15);
        assert_eq!(a.min(b), a);
        assert_eq!(a.min(Bound::Infinite), a);
        assert_eq!(Bound::Infinite.min(Bound::Trivial), Bound::Trivial);
        assert!(!a.is_met_by(1));
        assert!(a.is_met_by(2));
        assert!(Bound::term(6, 3).is_met_by(2));
        assert!(!Bound::Infinite.is_met_by(u64::MAX));
        assert!(Bound::Trivial.is_met_by(0));
    }
}
