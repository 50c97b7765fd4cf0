//! The oriented-matroid data model: validation, queries, minors, duality,
//! Tutte counting, isomorphism.
//!
//! A matroid is stored as its ground set plus a canonicalized list of
//! circuits, one representative per `{X, -X}` pair. Every other quantity
//! (rank, independence, cocircuits, the dual, Tutte evaluations) is derived
//! from that list.

mod axioms;
mod duality;
mod iso;
mod tutte;

pub use axioms::{validate_axioms, AxiomCheck, ValidationReport};
pub use iso::IsoWitness;

use crate::error::{OmError, Result};
use crate::ground::GroundSet;
use crate::sign::Sign;
use crate::signed_set::{bits, SignedSet};
use num_bigint::BigInt;

#[derive(Clone, Debug)]
pub struct OrientedMatroid {
    ground: GroundSet,
    /// Canonical representatives, one per ± pair, sorted by `(support, plus)`.
    circuits: Vec<SignedSet>,
    rank: usize,
    loops: u64,
    coloops: u64,
}

impl PartialEq for OrientedMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.circuits == other.circuits
    }
}
impl Eq for OrientedMatroid {}

fn canonicalize(circuits: &[SignedSet]) -> Vec<SignedSet> {
    let mut reps: Vec<SignedSet> = circuits.iter().map(|c| c.canonical()).collect();
    reps.sort_by_key(|c| (c.support(), c.plus));
    reps.dedup();
    reps
}

impl OrientedMatroid {
    /// Builds a matroid and validates the circuit axioms.
    ///
    /// `circuits` may list any mix of representatives and negations; the
    /// list is closed under negation and canonicalized.
    pub fn new(ground: GroundSet, circuits: Vec<SignedSet>) -> Result<OrientedMatroid> {
        let m = Self::new_unchecked(ground, circuits);
        let report = m.validate();
        if !report.passed() {
            return Err(OmError::AxiomViolation(report.first_failure()));
        }
        Ok(m)
    }

    /// Builds a matroid without axiom validation. Callers that enumerate
    /// candidate sign structures use this and validate explicitly.
    pub fn new_unchecked(ground: GroundSet, circuits: Vec<SignedSet>) -> OrientedMatroid {
        let full = ground.full_mask();
        let reps = canonicalize(&circuits);
        debug_assert!(reps.iter().all(|c| c.support() & !full == 0));
        let mut m = OrientedMatroid {
            ground,
            circuits: reps,
            rank: 0,
            loops: 0,
            coloops: 0,
        };
        m.rank = m.compute_rank(full);
        m.loops = m
            .circuits
            .iter()
            .filter(|c| c.support().count_ones() == 1)
            .fold(0, |acc, c| acc | c.support());
        let in_some_circuit = m.circuits.iter().fold(0u64, |acc, c| acc | c.support());
        m.coloops = full & !in_some_circuit;
        m
    }

    pub fn validate(&self) -> ValidationReport {
        validate_axioms(&self.circuits)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn n_elements(&self) -> usize {
        self.ground.len()
    }

    /// Canonical circuit representatives (one per ± pair).
    pub fn circuits(&self) -> &[SignedSet] {
        &self.circuits
    }

    /// All signed circuits, both signs.
    pub fn signed_circuits(&self) -> impl Iterator<Item = SignedSet> + '_ {
        self.circuits
            .iter()
            .flat_map(|c| [*c, c.neg()].into_iter())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.n_elements() - self.rank
    }

    pub fn is_independent(&self, set: u64) -> bool {
        self.circuits.iter().all(|c| c.support() & !set != 0)
    }

    fn compute_rank(&self, within: u64) -> usize {
        // Greedy extension is exact for matroid independence.
        let mut indep = 0u64;
        for e in bits(within) {
            let cand = indep | (1 << e);
            if self.is_independent(cand) {
                indep = cand;
            }
        }
        indep.count_ones() as usize
    }

    /// Rank of a subset of the ground set.
    pub fn rank_of(&self, set: u64) -> usize {
        self.compute_rank(set)
    }

    /// Corank of the restriction to `set`.
    pub fn corank_of(&self, set: u64) -> usize {
        set.count_ones() as usize - self.rank_of(set)
    }

    pub fn bases(&self) -> Vec<u64> {
        let r = self.rank;
        let mut out = Vec::new();
        let mut subset_iter = SubsetsOfSize::new(self.n_elements(), r);
        while let Some(s) = subset_iter.next() {
            if self.is_independent(s) {
                out.push(s);
            }
        }
        out
    }

    pub fn independent_sets(&self) -> Vec<u64> {
        let n = self.n_elements();
        let mut out = Vec::new();
        for s in 0..(1u64 << n) {
            if self.is_independent(s) {
                out.push(s);
            }
        }
        out
    }

    pub fn loops(&self) -> u64 {
        self.loops
    }

    pub fn coloops(&self) -> u64 {
        self.coloops
    }

    /// Partition of non-loop elements into parallel classes: `e` and `f`
    /// are merged when `({e},{f})` or `({e,f},∅)` is a circuit.
    pub fn parallel_classes(&self) -> Vec<u64> {
        let n = self.n_elements();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        for c in &self.circuits {
            if c.support().count_ones() == 2 {
                let mut it = bits(c.support());
                let a = it.next().unwrap();
                let b = it.next().unwrap();
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let mut classes: std::collections::BTreeMap<usize, u64> = Default::default();
        for e in 0..n {
            if self.loops & (1 << e) != 0 {
                continue;
            }
            let r = find(&mut parent, e);
            *classes.entry(r).or_insert(0) |= 1 << e;
        }
        classes.into_values().collect()
    }

    pub fn is_simple(&self) -> bool {
        self.loops == 0 && self.circuits.iter().all(|c| c.support().count_ones() > 2)
    }

    pub fn is_uniform(&self) -> bool {
        let r = self.rank;
        self.circuits
            .iter()
            .all(|c| c.support().count_ones() as usize == r + 1)
            && self.circuits.len() == binomial(self.n_elements(), r + 1)
    }

    /// Whether every circuit has equally many plus and minus elements.
    pub fn is_balanced(&self) -> bool {
        self.circuits
            .iter()
            .all(|c| c.plus.count_ones() == c.minus.count_ones())
    }

    /// Deletes element `e`; circuits are those avoiding `e`, reindexed.
    pub fn delete(&self, e: usize) -> Result<OrientedMatroid> {
        if self.coloops & (1 << e) != 0 {
            return Err(OmError::CoLoopDeletion(self.ground.label(e).to_string()));
        }
        Ok(self.delete_unchecked(e))
    }

    fn survivors(&self, e: usize) -> Vec<usize> {
        (0..self.n_elements()).filter(|&i| i != e).collect()
    }

    fn delete_unchecked(&self, e: usize) -> OrientedMatroid {
        let keep = self.survivors(e);
        let circuits = self
            .circuits
            .iter()
            .filter(|c| c.support() & (1 << e) == 0)
            .map(|c| c.remapped(&keep))
            .collect();
        OrientedMatroid::new_unchecked(
            self.ground.restricted(self.ground.full_mask() & !(1u64 << e)),
            circuits,
        )
    }

    /// Contracts element `e`; circuits are the minimal restrictions.
    pub fn contract(&self, e: usize) -> Result<OrientedMatroid> {
        if self.loops & (1 << e) != 0 {
            return Err(OmError::LoopContraction(self.ground.label(e).to_string()));
        }
        let keep = self.survivors(e);
        let restricted: Vec<SignedSet> = self
            .signed_circuits()
            .map(|c| c.restrict(!(1u64 << e)))
            .filter(|c| !c.is_empty())
            .collect();
        let minimal: Vec<SignedSet> = restricted
            .iter()
            .filter(|c| {
                !restricted
                    .iter()
                    .any(|d| d.leq(c) && d != *c && d.neg() != **c)
            })
            .map(|c| c.remapped(&keep))
            .collect();
        Ok(OrientedMatroid::new_unchecked(
            self.ground.restricted(self.ground.full_mask() & !(1u64 << e)),
            minimal,
        ))
    }

    /// Restriction `M|_A`: deletes everything outside `mask`.
    pub fn restrict_to(&self, mask: u64) -> OrientedMatroid {
        let keep: Vec<usize> = bits(mask).collect();
        let circuits = self
            .circuits
            .iter()
            .filter(|c| c.support() & !mask == 0)
            .map(|c| c.remapped(&keep))
            .collect();
        OrientedMatroid::new_unchecked(self.ground.restricted(mask), circuits)
    }

    /// Reorientation on the elements of `mask`.
    pub fn reorient(&self, mask: u64) -> OrientedMatroid {
        let circuits = self.circuits.iter().map(|c| c.reoriented(mask)).collect();
        OrientedMatroid::new_unchecked(self.ground.clone(), circuits)
    }

    /// Relabeling: new position `i` holds old element `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> OrientedMatroid {
        let circuits = self.circuits.iter().map(|c| c.remapped(perm)).collect();
        OrientedMatroid::new_unchecked(self.ground.permuted(perm), circuits)
    }

    /// Cocircuits: minimal nonzero sign vectors orthogonal to every circuit.
    pub fn cocircuits(&self) -> Vec<SignedSet> {
        duality::cocircuits(self)
    }

    /// The dual matroid; `circuits(dual) = cocircuits(self)`.
    pub fn dual(&self) -> OrientedMatroid {
        OrientedMatroid::new_unchecked(self.ground.clone(), self.cocircuits())
    }

    /// All covectors (sign vectors orthogonal to every circuit). Exponential
    /// scan, intended for small ground sets in tests and lifting checks.
    pub fn covectors(&self) -> Vec<SignedSet> {
        duality::covectors(self)
    }

    /// Topes: maximal covectors.
    pub fn topes(&self) -> Vec<SignedSet> {
        duality::topes(self)
    }

    /// Tutte polynomial evaluation of the underlying matroid.
    pub fn tutte_eval(&self, x: i64, y: i64) -> BigInt {
        tutte::tutte_eval(self, x, y)
    }

    /// Number of independent sets, `T(2,1)`.
    pub fn count_independent(&self) -> BigInt {
        self.tutte_eval(2, 1)
    }

    /// Isomorphism up to relabeling and reorientation; returns a witness
    /// `(perm, reorientation mask)` with `self.relabel(perm).reorient(mask) == other`.
    pub fn is_isomorphic(&self, other: &OrientedMatroid) -> Option<IsoWitness> {
        iso::find_isomorphism(self, other)
    }

    /// Rank-preserving weak map predicate: every circuit of `self` has a
    /// circuit of `other` below it.
    pub fn weak_map_leq(&self, other: &OrientedMatroid) -> bool {
        iso::weak_map_leq(self, other)
    }

    /// Sign of element `e` in the unique circuit pair with support `supp`.
    pub fn circuit_with_support(&self, supp: u64) -> Option<&SignedSet> {
        self.circuits.iter().find(|c| c.support() == supp)
    }

    /// Whether `set` orients circuit `c`: returns the induced sign, if any.
    pub fn orientation_of(&self, c: &SignedSet, set: u64) -> Sign {
        if c.plus & !set == 0 && c.minus & set == 0 {
            Sign::Plus
        } else if c.minus & !set == 0 && c.plus & set == 0 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Iterator over all `k`-subsets of `0..n` as bitmasks, ascending.
pub struct SubsetsOfSize {
    next: Option<u64>,
    limit: u64,
}

impl SubsetsOfSize {
    pub fn new(n: usize, k: usize) -> SubsetsOfSize {
        if k > n {
            return SubsetsOfSize {
                next: None,
                limit: 0,
            };
        }
        let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
        SubsetsOfSize {
            next: Some(first),
            limit: if n == 0 { 1 } else { 1u64 << n },
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        // Gosper's hack for the next mask with the same popcount.
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signed_set::mask;

    fn free_matroid(n: usize) -> OrientedMatroid {
        OrientedMatroid::new(GroundSet::numeric(n), vec![]).unwrap()
    }

    #[test]
    fn free_matroid_rank() {
        let m = free_matroid(4);
        assert_eq!(m.rank(), 4);
        assert_eq!(m.coloops(), 0b1111);
        assert_eq!(m.loops(), 0);
        assert!(m.is_independent(0b1111));
    }

    #[test]
    fn loop_and_parallel_detection() {
        let g = GroundSet::numeric(3);
        let m = OrientedMatroid::new(
            g,
            vec![
                SignedSet::new(mask(&[0]), 0),
                SignedSet::new(mask(&[1]), mask(&[2])),
            ],
        )
        .unwrap();
        assert_eq!(m.loops(), mask(&[0]));
        assert_eq!(m.parallel_classes(), vec![mask(&[1, 2])]);
        assert!(!m.is_simple());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn delete_contract_guards() {
        let m = free_matroid(2);
        assert!(matches!(m.delete(0), Err(OmError::CoLoopDeletion(_))));
        let g = GroundSet::numeric(1);
        let m = OrientedMatroid::new(g, vec![SignedSet::new(1, 0)]).unwrap();
        assert!(matches!(m.contract(0), Err(OmError::LoopContraction(_))));
    }

    #[test]
    fn subsets_of_size_enumerates() {
        let mut it = SubsetsOfSize::new(4, 2);
        let mut got = Vec::new();
        while let Some(s) = it.next() {
            got.push(s);
        }
        assert_eq!(got.len(), 6);
        assert_eq!(got[0], 0b0011);
        assert_eq!(*got.last().unwrap(), 0b1100);
    }
}
