//! Exact half-integer values, stored as doubled integers.
//!
//! Hyperbolicity and Gromov products are half-integers on graphs. Storing
//! them doubled keeps every comparison and every sharpness test exact; no
//! floating point is used anywhere in the crate.

use std::fmt;

/// A half-integer `doubled / 2`, compared and hashed exactly.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct HalfInteger {
    doubled: i64,
}

impl HalfInteger {
    pub const ZERO: HalfInteger = HalfInteger { doubled: 0 };

    /// Builds the half-integer `doubled / 2`.
    pub fn from_doubled(doubled: i64) -> Self {
        HalfInteger { doubled }
    }

    /// Builds the integer value `n`.
    pub fn from_integer(n: i64) -> Self {
        HalfInteger { doubled: 2 * n }
    }

    /// Twice the represented value; always exact.
    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// Largest integer not above the value.
    pub fn floor(self) -> i64 {
        self.doubled.div_euclid(2)
    }

    /// Smallest integer not below the value.
    pub fn ceil(self) -> i64 {
        (self.doubled + 1).div_euclid(2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            // exact: every half-integer has a finite decimal form
            write!(f, "{}", self.doubled as f64 / 2.0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_and_ceil() {
        let h = HalfInteger::from_doubled(5); // 2.5
        assert_eq!(h.floor(), 2);
        assert_eq!(h.ceil(), 3);
        assert!(!h.is_integer());

        let k = HalfInteger::from_integer(3);
        assert_eq!(k.floor(), 3);
        assert_eq!(k.ceil(), 3);
        assert!(k.is_integer());
    }

    #[test]
    fn ordering_is_exact() {
        assert!(HalfInteger::from_doubled(1) < HalfInteger::from_integer(1));
        assert_eq!(HalfInteger::from_doubled(4), HalfInteger::from_integer(2));
    }

    #[test]
    fn display() {
        assert_eq!(HalfInteger::from_doubled(5).to_string(), "2.5");
        assert_eq!(HalfInteger::from_integer(2).to_string(), "2");
        assert_eq!(HalfInteger::from_doubled(1).to_string(), "0.5");
    }
}
