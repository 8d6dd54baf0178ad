//! Parity bookkeeping. Every sign coming from moving odd objects past each other
//! is produced here.

use num_traits::One;

use crate::exact::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn times(self, other: Parity) -> Parity {
        if self.is_odd() != other.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// `(−1)^{|a||b|}`
pub fn koszul(a: Parity, b: Parity) -> Rational {
    if a.is_odd() && b.is_odd() {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Sign picked up by moving an odd object past `passed` odd objects.
pub fn reorder_sign(passed: usize) -> Rational {
    if passed % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    }
}
