use crate::sign::Sign;
use std::fmt;

/// Iterator over the set bits of a mask, lowest first.
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    struct Bits(u64);
    impl Iterator for Bits {
        type Item = usize;
        fn next(&mut self) -> Option<usize> {
            if self.0 == 0 {
                None
            } else {
                let i = self.0.trailing_zeros() as usize;
                self.0 &= self.0 - 1;
                Some(i)
            }
        }
    }
    Bits(mask)
}

/// A signed subset `X = (X⁺, X⁻)` of a ground set, stored as two disjoint
/// bitmasks over dense element indices.
///
/// This is the universal currency of the engine: circuits, cocircuits,
/// covectors and tile signed vectors are all `SignedSet`s.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedSet {
    pub plus: u64,
    pub minus: u64,
}

impl SignedSet {
    pub const EMPTY: SignedSet = SignedSet { plus: 0, minus: 0 };

    /// Builds a signed set; panics if the parts overlap.
    pub fn new(plus: u64, minus: u64) -> SignedSet {
        assert_eq!(plus & minus, 0, "signed set parts must be disjoint");
        SignedSet { plus, minus }
    }

    pub fn support(&self) -> u64 {
        self.plus | self.minus
    }

    pub fn is_empty(&self) -> bool {
        self.support() == 0
    }

    pub fn neg(&self) -> SignedSet {
        SignedSet {
            plus: self.minus,
            minus: self.plus,
        }
    }

    pub fn sign_of(&self, e: usize) -> Sign {
        let bit = 1u64 << e;
        if self.plus & bit != 0 {
            Sign::Plus
        } else if self.minus & bit != 0 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    /// `self ≤ other` elementwise in the sign order.
    pub fn leq(&self, other: &SignedSet) -> bool {
        self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }

    /// Conformal composition `self ∘ other`.
    pub fn compose(&self, other: &SignedSet) -> SignedSet {
        let free = !self.support();
        SignedSet {
            plus: self.plus | (other.plus & free),
            minus: self.minus | (other.minus & free),
        }
    }

    /// Restriction to the elements of `mask` (keeps original indices).
    pub fn restrict(&self, mask: u64) -> SignedSet {
        SignedSet {
            plus: self.plus & mask,
            minus: self.minus & mask,
        }
    }

    /// Signs flipped on the elements of `mask`.
    pub fn reoriented(&self, mask: u64) -> SignedSet {
        SignedSet {
            plus: (self.plus & !mask) | (self.minus & mask),
            minus: (self.minus & !mask) | (self.plus & mask),
        }
    }

    /// Orthogonality of sign vectors: the products `X_e·Y_e` either vanish
    /// everywhere or attain both signs.
    pub fn orthogonal(&self, other: &SignedSet) -> bool {
        let agree = (self.plus & other.plus) | (self.minus & other.minus);
        let disagree = (self.plus & other.minus) | (self.minus & other.plus);
        (agree == 0 && disagree == 0) || (agree != 0 && disagree != 0)
    }

    /// Canonical representative of the pair `{X, -X}`: the one whose plus
    /// part contains the smallest support index.
    pub fn canonical(&self) -> SignedSet {
        if self.is_empty() {
            return *self;
        }
        let low = self.support().trailing_zeros();
        if self.plus & (1 << low) != 0 {
            *self
        } else {
            self.neg()
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Re-indexes through `old_of_new`: new index `i` takes the sign of old
    /// index `old_of_new[i]`. Indices outside the slice are dropped.
    pub fn remapped(&self, old_of_new: &[usize]) -> SignedSet {
        let mut plus = 0u64;
        let mut minus = 0u64;
        for (new, &old) in old_of_new.iter().enumerate() {
            let bit = 1u64 << old;
            if self.plus & bit != 0 {
                plus |= 1 << new;
            } else if self.minus & bit != 0 {
                minus |= 1 << new;
            }
        }
        SignedSet { plus, minus }
    }
}

impl fmt::Debug for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({{{}}},{{{}}})",
            bits(self.plus)
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(","),
            bits(self.minus)
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Compact set mask builder for tests and examples: `mask(&[0,2])`.
pub fn mask(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | (1 << i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_picks_plus_on_lowest() {
        let x = SignedSet::new(mask(&[2]), mask(&[0, 3]));
        let c = x.canonical();
        assert_eq!(c.plus, mask(&[0, 3]));
        assert_eq!(c.minus, mask(&[2]));
        assert_eq!(c, c.canonical());
        assert_eq!(x.neg().canonical(), c);
    }

    #[test]
    fn orthogonality_two_clauses() {
        // Disjoint supports.
        let x = SignedSet::new(mask(&[0]), 0);
        let y = SignedSet::new(0, mask(&[1]));
        assert!(x.orthogonal(&y));
        // Products attain both signs.
        let x = SignedSet::new(mask(&[0]), mask(&[1]));
        let y = SignedSet::new(mask(&[0, 1]), 0);
        assert!(x.orthogonal(&y));
        // Products only negative: not orthogonal.
        let y = SignedSet::new(mask(&[1]), mask(&[0]));
        assert!(!x.orthogonal(&y));
        // Products only positive: not orthogonal.
        assert!(!x.orthogonal(&x));
    }

    #[test]
    fn composition_keeps_left_signs() {
        let x = SignedSet::new(mask(&[0]), mask(&[1]));
        let y = SignedSet::new(mask(&[1, 2]), mask(&[0]));
        let c = x.compose(&y);
        assert_eq!(c, SignedSet::new(mask(&[0, 2]), mask(&[1])));
    }
}
