use std::fmt;
use std::ops::{Mul, Neg};

/// One of `+`, `-`, `0`.
///
/// The partial order puts `0` below both `+` and `-`, which stay
/// incomparable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn from_i32(v: i32) -> Sign {
        match v.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    /// `self ≤ other` in the sign order: `0 < +`, `0 < -`.
    pub fn leq(self, other: Sign) -> bool {
        self == Sign::Zero || self == other
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Zero => "0",
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Plus,
            _ => Sign::Minus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_arithmetic() {
        assert!(Sign::Zero.leq(Sign::Plus));
        assert!(Sign::Zero.leq(Sign::Minus));
        assert!(!Sign::Plus.leq(Sign::Minus));
        assert!(Sign::Plus.leq(Sign::Plus));
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Minus * Sign::Zero, Sign::Zero);
    }
}
