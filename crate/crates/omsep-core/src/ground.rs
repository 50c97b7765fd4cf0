use crate::error::{OmError, Result};
use std::collections::HashMap;

/// Ordered ground set of an oriented matroid.
///
/// Element labels are opaque strings; everything internal works with dense
/// indices `0..n` packed into `u64` bitmasks, so `n ≤ 63`. The index order
/// is the canonical order used by cyclic constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<GroundSet> {
        if labels.len() > 63 {
            return Err(OmError::TooManyElements(labels.len()));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(OmError::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    /// Ground set `1..=n` with numeric labels.
    pub fn numeric(n: usize) -> GroundSet {
        GroundSet::new((1..=n).map(|i| i.to_string()).collect()).expect("small numeric ground set")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Bitmask with every element set.
    pub fn full_mask(&self) -> u64 {
        if self.labels.is_empty() {
            0
        } else {
            (1u64 << self.labels.len()) - 1
        }
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| OmError::UnknownLabel(label.to_string()))
    }

    pub fn mask_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<u64> {
        let mut m = 0u64;
        for l in labels {
            m |= 1 << self.index_of(l.as_ref())?;
        }
        Ok(m)
    }

    pub fn labels_of_mask(&self, mask: u64) -> Vec<String> {
        crate::signed_set::bits(mask)
            .map(|i| self.labels[i].clone())
            .collect()
    }

    /// Ground set restricted to the elements of `mask`, preserving order.
    pub fn restricted(&self, mask: u64) -> GroundSet {
        let labels = crate::signed_set::bits(mask)
            .map(|i| self.labels[i].clone())
            .collect();
        GroundSet::new(labels).expect("restriction of a valid ground set")
    }

    /// Ground set with labels permuted: new position `i` holds `labels[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> GroundSet {
        let labels = perm.iter().map(|&p| self.labels[p].clone()).collect();
        GroundSet::new(labels).expect("permutation of a valid ground set")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_and_lookup() {
        let g = GroundSet::numeric(5);
        assert_eq!(g.len(), 5);
        assert_eq!(g.index_of("3").unwrap(), 2);
        assert_eq!(g.full_mask(), 0b11111);
        assert!(g.index_of("7").is_err());
    }

    #[test]
    fn rejects_duplicates_and_oversize() {
        assert!(GroundSet::new(vec!["a".into(), "a".into()]).is_err());
        let many: Vec<String> = (0..64).map(|i| i.to_string()).collect();
        assert!(matches!(
            GroundSet::new(many),
            Err(OmError::TooManyElements(64))
        ));
    }
}
