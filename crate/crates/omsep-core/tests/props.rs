//! Property tests: structural invariants over randomized small inputs.

use omsep_core::construct::*;
use omsep_core::ratmat::{rat, Rat};
use omsep_core::separation::*;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, q)| rat(p, q))
}

fn configuration(n: usize, dim: usize) -> impl Strategy<Value = VectorConfiguration> {
    proptest::collection::vec(
        proptest::collection::vec(small_rational(), dim),
        n,
    )
    .prop_map(move |columns| VectorConfiguration::new(dim, columns))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Vector matroids always satisfy the circuit axioms, and duality is
    /// an involution with orthogonal circuit/cocircuit pairs.
    #[test]
    fn vector_matroids_validate(config in configuration(5, 3)) {
        let m = from_vectors(&config).unwrap();
        prop_assert!(m.validate().passed());
        let d = m.dual();
        prop_assert_eq!(d.rank(), m.corank());
        let dd = d.dual();
        prop_assert_eq!(dd.circuits(), m.circuits());
        for c in m.circuits() {
            for cc in d.circuits() {
                prop_assert!(c.orthogonal(cc));
            }
        }
    }

    /// Scaling a column by a positive rational leaves circuits unchanged;
    /// negating a column is reorientation on that element.
    #[test]
    fn column_scaling(config in configuration(5, 2), scale in 1i64..5, col in 0usize..5) {
        let m = from_vectors(&config).unwrap();
        let mut scaled = config.clone();
        for v in scaled.columns[col].iter_mut() {
            *v = &*v * rat(scale, 1);
        }
        let ms = from_vectors(&scaled).unwrap();
        prop_assert_eq!(ms.circuits(), m.circuits());
        let mut negated = config.clone();
        for v in negated.columns[col].iter_mut() {
            *v = -v.clone();
        }
        let mn = from_vectors(&negated).unwrap();
        let mr = m.reorient(1 << col);
        prop_assert_eq!(mn.circuits(), mr.circuits());
    }

    /// Reorientation is an involution and preserves independence.
    #[test]
    fn reorientation_involution(config in configuration(5, 3), mask in 0u64..32) {
        let m = from_vectors(&config).unwrap();
        let twice = m.reorient(mask).reorient(mask);
        prop_assert_eq!(twice.circuits(), m.circuits());
        prop_assert_eq!(m.reorient(mask).rank(), m.rank());
        for s in 0..32u64 {
            prop_assert_eq!(m.is_independent(s), m.reorient(mask).is_independent(s));
        }
    }

    /// The collection size identity holds for arbitrary collections.
    #[test]
    fn collection_size_identity(sets in proptest::collection::btree_set(0u64..64, 0..20), e in 0usize..6) {
        let s = Collection::new(sets.into_iter().collect());
        prop_assert_eq!(s.len(), s.delete(e).len() + s.contract(e).len());
    }

    /// Padding is injective with constant image size, and preserves
    /// pairwise separation between strongly separated sets.
    #[test]
    fn padding(sets in proptest::collection::btree_set(0u64..32, 1..8)) {
        let n = 5;
        let images: Vec<u64> = sets.iter().map(|&s| pad(s, n)).collect();
        for (i, &a) in images.iter().enumerate() {
            prop_assert_eq!(a.count_ones() as usize, n);
            for &b in images.iter().skip(i + 1) {
                prop_assert_ne!(a, b);
            }
        }
        let c52 = alternating(n, 2);
        let c103 = alternating(2 * n, 3);
        let members: Vec<u64> = sets.into_iter().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in members.iter().skip(i) {
                if pair_separated(&c52, a, b) {
                    prop_assert!(pair_separated(&c103, pad(a, n), pad(b, n)));
                }
            }
        }
    }

    /// Subcollections of separated collections are separated, and σ of a
    /// subcollection sits below σ of the whole.
    #[test]
    fn sigma_monotone(step in 1usize..4, idx in 0usize..8) {
        let m = alternating(4, 2);
        let sigmas = omsep_core::tilings::enumerate_colocalizations(&m, 100).unwrap();
        let sigma = &sigmas[idx % sigmas.len()];
        let full = collection_of(&m, sigma).unwrap();
        let sub = Collection::new(full.sets.iter().step_by(step).copied().collect());
        prop_assert!(is_collection_separated(&m, &sub));
        let ss = sigma_of(&m, &sub).unwrap();
        prop_assert!(ss.leq(sigma));
    }
}
