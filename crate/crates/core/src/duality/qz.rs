use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// An element of `Q/Z`, kept as `num/den` with `0 ≤ num < den` and
/// `gcd(num, den) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "(u64, u64)", try_from = "(u64, u64)")]
pub struct QZ {
    num: u64,
    den: u64,
}

impl QZ {
    pub const ZERO: QZ = QZ { num: 0, den: 1 };

    /// `num/den` reduced into canonical form. Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "denominator must be positive");
        let num = num % den;
        let g = num.gcd(&den);
        QZ {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    /// `k·self`.
    pub fn times(self, k: u64) -> Self {
        QZ::new(
            ((self.num as u128 * k as u128) % self.den as u128) as u64,
            self.den,
        )
    }

    /// The least `v` (as a representative in `[0, 1)`) with `k·v = self`.
    pub fn least_divisor_solution(self, k: u64) -> Self {
        assert!(k > 0, "cannot divide by zero");
        QZ::new(self.num, self.den * k)
    }

    /// Numerator over the given common denominator, which must be a
    /// multiple of `self.denominator()`.
    pub fn over(self, den: u64) -> u64 {
        debug_assert_eq!(den % self.den, 0);
        self.num * (den / self.den)
    }
}

impl Default for QZ {
    fn default() -> Self {
        QZ::ZERO
    }
}

impl Add for QZ {
    type Output = QZ;
    fn add(self, rhs: QZ) -> QZ {
        let den = self.den.lcm(&rhs.den);
        QZ::new(self.over(den) + rhs.over(den), den)
    }
}

impl Neg for QZ {
    type Output = QZ;
    fn neg(self) -> QZ {
        QZ::new(self.den - self.num, self.den)
    }
}

impl Sub for QZ {
    type Output = QZ;
    fn sub(self, rhs: QZ) -> QZ {
        self + (-rhs)
    }
}

impl std::iter::Sum for QZ {
    fn sum<I: Iterator<Item = QZ>>(iter: I) -> QZ {
        iter.fold(QZ::ZERO, Add::add)
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl From<QZ> for (u64, u64) {
    fn from(q: QZ) -> Self {
        (q.num, q.den)
    }
}

impl TryFrom<(u64, u64)> for QZ {
    type Error = Error;
    fn try_from((num, den): (u64, u64)) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        Ok(QZ::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(QZ::new(6, 4), QZ::new(1, 2));
        assert_eq!(QZ::new(4, 4), QZ::ZERO);
        assert_eq!(QZ::new(1, 2) + QZ::new(1, 2), QZ::ZERO);
        assert_eq!(QZ::new(1, 2) + QZ::new(1, 3), QZ::new(5, 6));
        assert_eq!(-QZ::new(1, 3), QZ::new(2, 3));
        assert_eq!(QZ::new(3, 4).times(2), QZ::new(1, 2));
    }

    #[test]
    fn division_solutions() {
        let v = QZ::new(1, 2).least_divisor_solution(2);
        assert_eq!(v, QZ::new(1, 4));
        assert_eq!(v.times(2), QZ::new(1, 2));
        assert_eq!(QZ::ZERO.least_divisor_solution(3), QZ::ZERO);
    }

    #[test]
    fn serde_pair() {
        let json = serde_json::to_string(&QZ::new(2, 6)).unwrap();
        assert_eq!(json, "[1,3]");
        assert!(serde_json::from_str::<QZ>("[1,0]").is_err());
        assert_eq!(serde_json::from_str::<QZ>("[5,3]").unwrap(), QZ::new(2, 3));
    }
}
