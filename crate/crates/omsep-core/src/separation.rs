//! Separation predicates, circuit sign maps, corank-2 cycle structure,
//! colocalizations, one-element liftings, and the collection `S(σ)`.

use crate::error::{OmError, Result};
use crate::matroid::OrientedMatroid;
use crate::sign::Sign;
use crate::signed_set::SignedSet;

/// A deduplicated set of subsets of the ground set, as sorted bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Collection {
    pub sets: Vec<u64>,
}

impl Collection {
    pub fn new(mut sets: Vec<u64>) -> Collection {
        sets.sort_unstable();
        sets.dedup();
        Collection { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: u64) -> bool {
        self.sets.binary_search(&set).is_ok()
    }

    /// `S - e`: drop `e` from every member.
    pub fn delete(&self, e: usize) -> Collection {
        Collection::new(self.sets.iter().map(|s| s & !(1u64 << e)).collect())
    }

    /// `S / e`: members `S` with both `S` and `S ∪ e` present, minus `e`.
    pub fn contract(&self, e: usize) -> Collection {
        let bit = 1u64 << e;
        Collection::new(
            self.sets
                .iter()
                .filter(|&&s| s & bit == 0 && self.contains(s | bit))
                .copied()
                .collect(),
        )
    }
}

/// A sign per canonical circuit representative; the value on `-X` is the
/// negation of the value on `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignMap {
    pub values: Vec<Sign>,
}

impl SignMap {
    pub fn constant(m: &OrientedMatroid, s: Sign) -> SignMap {
        SignMap {
            values: vec![s; m.circuits().len()],
        }
    }

    /// Value on an arbitrary signed circuit (either sign of a pair).
    pub fn value_on(&self, m: &OrientedMatroid, c: &SignedSet) -> Sign {
        let canon = c.canonical();
        let idx = m
            .circuits()
            .binary_search_by_key(&(canon.support(), canon.plus), |x| {
                (x.support(), x.plus)
            })
            .expect("circuit of the same matroid");
        if canon == *c {
            self.values[idx]
        } else {
            -self.values[idx]
        }
    }

    pub fn is_total(&self) -> bool {
        self.values.iter().all(|v| !v.is_zero())
    }

    /// Pointwise order: `self ≤ other` iff every value is 0 or equal.
    pub fn leq(&self, other: &SignMap) -> bool {
        self.values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.leq(*b))
    }

    pub fn negated(&self) -> SignMap {
        SignMap {
            values: self.values.iter().map(|v| -*v).collect(),
        }
    }
}

/// Whether `I` and `J` are M-separated; on failure returns a witnessing
/// signed circuit oriented oppositely by the pair.
pub fn is_pair_separated(m: &OrientedMatroid, i: u64, j: u64) -> std::result::Result<(), SignedSet> {
    let i_only = i & !j;
    let j_only = j & !i;
    for c in m.circuits() {
        if c.plus & !i_only == 0 && c.minus & !j_only == 0 {
            return Err(*c);
        }
        if c.minus & !i_only == 0 && c.plus & !j_only == 0 {
            return Err(c.neg());
        }
    }
    Ok(())
}

pub fn pair_separated(m: &OrientedMatroid, i: u64, j: u64) -> bool {
    is_pair_separated(m, i, j).is_ok()
}

/// Whether all members of a collection are pairwise separated.
pub fn is_collection_separated(m: &OrientedMatroid, s: &Collection) -> bool {
    for (a, &x) in s.sets.iter().enumerate() {
        for &y in &s.sets[a + 1..] {
            if !pair_separated(m, x, y) {
                return false;
            }
        }
    }
    true
}

/// The sign map `σ_S`: a circuit gets `+` when some member orients it
/// positively, `-` when negatively, `0` otherwise. A clash (two members
/// orienting one circuit oppositely) reports the conflicting pair.
pub fn sigma_of(m: &OrientedMatroid, s: &Collection) -> std::result::Result<SignMap, (u64, u64)> {
    let mut values = vec![Sign::Zero; m.circuits().len()];
    let mut orienter: Vec<Option<u64>> = vec![None; m.circuits().len()];
    for &set in &s.sets {
        for (idx, c) in m.circuits().iter().enumerate() {
            let o = m.orientation_of(c, set);
            if o.is_zero() {
                continue;
            }
            if values[idx].is_zero() {
                values[idx] = o;
                orienter[idx] = Some(set);
            } else if values[idx] != o {
                return Err((orienter[idx].unwrap(), set));
            }
        }
    }
    Ok(SignMap { values })
}

/// No zeros in `σ_S`.
pub fn is_complete(m: &OrientedMatroid, s: &Collection) -> bool {
    matches!(sigma_of(m, s), Ok(sig) if sig.is_total())
}

/// One position of a corank-2 cycle: a circuit pair index and whether the
/// position carries the negated representative.
pub type CyclePos = (usize, bool);

/// The natural cyclic order of the signed circuits of a corank-2
/// restriction, after removing coloops and merging dual-parallel classes.
///
/// In the reduced matroid each circuit pair omits exactly one class; two
/// signed circuits are cyclically adjacent when they agree outside the
/// union of their zero classes. The returned cycle lists all `2m` signed
/// circuits; the reflection and rotation are fixed by starting at the
/// canonical representative of the least circuit and stepping to its
/// lexicographically smaller neighbor first.
pub fn corank2_circuit_cycle(m: &OrientedMatroid, a: u64) -> Result<Vec<CyclePos>> {
    if m.corank_of(a) != 2 {
        return Err(OmError::NotCorank2);
    }
    // Circuit pairs fully inside A.
    let inside: Vec<(usize, SignedSet)> = m
        .circuits()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.support() & !a == 0)
        .map(|(i, c)| (i, *c))
        .collect();
    if inside.is_empty() {
        return Err(OmError::NotCorank2);
    }
    // Elements of A in some circuit (non-coloops of the restriction).
    let covered = inside.iter().fold(0u64, |acc, (_, c)| acc | c.support());
    // Every reduced circuit support must be `covered` minus one class.
    let signed: Vec<(CyclePos, SignedSet)> = inside
        .iter()
        .flat_map(|&(i, c)| [((i, false), c), ((i, true), c.neg())])
        .collect();
    let k = signed.len();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); k];
    for p in 0..k {
        for q in 0..k {
            if p == q || signed[p].1 == signed[q].1.neg() {
                continue;
            }
            let zp = covered & !signed[p].1.support();
            let zq = covered & !signed[q].1.support();
            if zp == zq {
                continue;
            }
            let outside = covered & !(zp | zq);
            if signed[p].1.restrict(outside) == signed[q].1.restrict(outside) {
                adjacency[p].push(q);
            }
        }
    }
    if adjacency.iter().any(|nb| nb.len() != 2) {
        return Err(OmError::NotCorank2);
    }
    // Walk the unique 2-regular cycle deterministically.
    let start = 0usize;
    let first = *adjacency[start].iter().min().unwrap();
    let mut order = vec![start, first];
    while order.len() < k {
        let cur = *order.last().unwrap();
        let prev = order[order.len() - 2];
        let next = adjacency[cur]
            .iter()
            .copied()
            .find(|&q| q != prev)
            .expect("2-regular");
        if next == start {
            break;
        }
        order.push(next);
    }
    if order.len() != k {
        return Err(OmError::NotCorank2);
    }
    Ok(order.into_iter().map(|p| signed[p].0).collect())
}

/// Las Vergnas restriction types of a sign map on a corank-2 cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RestrictionType {
    TypeI,
    TypeII,
    TypeIII,
    None,
}

/// Reads the σ-values around a corank-2 cycle and pattern-matches the
/// three Las Vergnas types (all patterns up to rotation; reflection is
/// immaterial for them).
pub fn classify_type(sigma: &SignMap, cycle: &[CyclePos]) -> RestrictionType {
    let vals: Vec<Sign> = cycle
        .iter()
        .map(|&(idx, negated)| {
            let v = sigma.values[idx];
            if negated {
                -v
            } else {
                v
            }
        })
        .collect();
    let k = vals.len();
    let m = k / 2;
    if vals.iter().all(|v| v.is_zero()) {
        return RestrictionType::TypeI;
    }
    if type_iii_at_some_rotation(&vals) {
        return RestrictionType::TypeIII;
    }
    // Type II: (+^{m-1}, 0, -^{m-1}, 0) up to rotation.
    'rot: for t in 0..k {
        for (p, v) in vals.iter().enumerate() {
            let rel = (p + k - t) % k;
            let expected = if rel < m - 1 {
                Sign::Plus
            } else if rel == m - 1 {
                Sign::Zero
            } else if rel < k - 1 {
                Sign::Minus
            } else {
                Sign::Zero
            };
            if *v != expected {
                continue 'rot;
            }
        }
        return RestrictionType::TypeII;
    }
    RestrictionType::None
}

fn type_iii_at_some_rotation(vals: &[Sign]) -> bool {
    let k = vals.len();
    let m = k / 2;
    'rot: for t in 0..k {
        for (p, v) in vals.iter().enumerate() {
            let expected = if (p + k - t) % k < m {
                Sign::Plus
            } else {
                Sign::Minus
            };
            if *v != expected {
                continue 'rot;
            }
        }
        return true;
    }
    false
}

/// Whether a partial cyclic pattern (`None` = unassigned) still has a
/// Type III completion.
pub fn type_iii_completable(vals: &[Option<Sign>]) -> bool {
    let k = vals.len();
    let m = k / 2;
    'rot: for t in 0..k {
        for (p, v) in vals.iter().enumerate() {
            let Some(v) = v else { continue };
            let expected = if (p + k - t) % k < m {
                Sign::Plus
            } else {
                Sign::Minus
            };
            if *v != expected {
                continue 'rot;
            }
        }
        return true;
    }
    false
}

/// All corank-2 cycles of a matroid, deduplicated by circuit-index set.
pub fn corank2_cycles(m: &OrientedMatroid) -> Vec<Vec<CyclePos>> {
    let n = m.n_elements();
    let mut seen: std::collections::BTreeSet<Vec<usize>> = Default::default();
    let mut out = Vec::new();
    for a in 0..(1u64 << n) {
        if a.count_ones() < 2 {
            continue;
        }
        if m.corank_of(a) != 2 {
            continue;
        }
        if let Ok(cycle) = corank2_circuit_cycle(m, a) {
            let mut key: Vec<usize> = cycle.iter().map(|&(i, _)| i).collect();
            key.sort_unstable();
            key.dedup();
            if seen.insert(key) {
                out.push(cycle);
            }
        }
    }
    out
}

/// Las Vergnas characterization: a total sign map is a colocalization in
/// general position iff its restriction to every corank-2 subset is of
/// Type III. On failure returns the first offending corank-2 subset.
pub fn is_colocalization_gp(m: &OrientedMatroid, sigma: &SignMap) -> std::result::Result<(), u64> {
    debug_assert!(sigma.is_total());
    let n = m.n_elements();
    for a in 0..(1u64 << n) {
        if a.count_ones() < 2 || m.corank_of(a) != 2 {
            continue;
        }
        let cycle = corank2_circuit_cycle(m, a).expect("corank verified");
        if classify_type(sigma, &cycle) != RestrictionType::TypeIII {
            return Err(a);
        }
    }
    Ok(())
}

/// Circuits of the one-element lifting defined by a colocalization in
/// general position: circuits `(Y, σ(Y))` plus conformal compositions
/// `Y¹∘Y²` of oppositely signed pairs whose support has corank 2.
///
/// The lifting element `g` takes the last index of the new ground set. The
/// result is validated and its contraction along `g` equals `m`.
pub fn lifting_circuits(m: &OrientedMatroid, sigma: &SignMap) -> Result<OrientedMatroid> {
    if !sigma.is_total() {
        return Err(OmError::NotColocalization);
    }
    if is_colocalization_gp(m, sigma).is_err() {
        return Err(OmError::NotColocalization);
    }
    let n = m.n_elements();
    if n + 1 > 63 {
        return Err(OmError::TooManyElements(n + 1));
    }
    let g = 1u64 << n;
    let mut reps: Vec<SignedSet> = Vec::new();
    for (idx, c) in m.circuits().iter().enumerate() {
        let lifted = match sigma.values[idx] {
            Sign::Plus => SignedSet::new(c.plus | g, c.minus),
            Sign::Minus => SignedSet::new(c.plus, c.minus | g),
            Sign::Zero => unreachable!("total sign map"),
        };
        reps.push(lifted.canonical());
    }
    let signed: Vec<(SignedSet, Sign)> = m
        .circuits()
        .iter()
        .enumerate()
        .flat_map(|(i, c)| {
            [
                (*c, sigma.values[i]),
                (c.neg(), -sigma.values[i]),
            ]
        })
        .collect();
    for (y1, s1) in &signed {
        for (y2, s2) in &signed {
            if *s1 != -*s2 || s1.is_zero() {
                continue;
            }
            let comp = y1.compose(y2);
            // Strict conformal growth in both arguments.
            if !(y1.leq(&comp) && y2.leq(&comp)) || *y1 == comp || *y2 == comp {
                continue;
            }
            if m.corank_of(comp.support()) != 2 {
                continue;
            }
            reps.push(comp.canonical());
        }
    }
    let mut labels: Vec<String> = m.ground().labels().to_vec();
    labels.push("g".to_string());
    let lifted = OrientedMatroid::new(crate::ground::GroundSet::new(labels)?, reps)?;
    let back = lifted.contract(n)?;
    if back.circuits() != m.circuits() {
        return Err(OmError::AxiomViolation(
            "lifting does not contract back to the base matroid".into(),
        ));
    }
    Ok(lifted)
}

/// The collection `S(σ)` of all subsets orienting every circuit in
/// agreement with `σ`. Full scan over `2^n` subsets.
pub fn collection_of(m: &OrientedMatroid, sigma: &SignMap) -> Result<Collection> {
    let n = m.n_elements();
    if n > 20 {
        return Err(OmError::ResourceLimit(format!(
            "collection_of scans 2^n subsets; n = {n} > 20"
        )));
    }
    let mut sets = Vec::new();
    'subset: for s in 0..(1u64 << n) {
        for (idx, c) in m.circuits().iter().enumerate() {
            let o = m.orientation_of(c, s);
            if !o.is_zero() && o != sigma.values[idx] {
                continue 'subset;
            }
        }
        sets.push(s);
    }
    Ok(Collection::new(sets))
}

/// The ε-sequence of a separated collection on a corank-2 cycle.
///
/// Around the cycle `Z_1, …, Z_{2m}` of signed circuits, each
/// prefix/suffix-type subset orients exactly two cyclically consecutive
/// signed circuits positively; `ε_k` records whether the member sitting
/// between positions `k-1` and `k` is present (`+`), the antipodal one
/// (`-`), or neither (`0`). Separation makes the two exclusive.
pub fn epsilon_profile(
    m: &OrientedMatroid,
    s: &Collection,
    cycle: &[CyclePos],
) -> Result<Vec<Sign>> {
    if !is_collection_separated(m, s) {
        return Err(OmError::InvalidInput("collection is not separated".into()));
    }
    let k = cycle.len();
    let half = k / 2;
    let signed: Vec<SignedSet> = cycle
        .iter()
        .map(|&(idx, negated)| {
            let c = m.circuits()[idx];
            if negated {
                c.neg()
            } else {
                c
            }
        })
        .collect();
    let corner_present = |p: usize| -> bool {
        let prev = &signed[(p + k - 1) % k];
        let cur = &signed[p];
        s.sets.iter().any(|&set| {
            m.orientation_of(prev, set) == Sign::Plus && m.orientation_of(cur, set) == Sign::Plus
        })
    };
    let mut eps = Vec::with_capacity(half);
    for p in 0..half {
        let plus = corner_present(p);
        let minus = corner_present(p + half);
        debug_assert!(!(plus && minus), "separated collections exclude antipodes");
        eps.push(if plus {
            Sign::Plus
        } else if minus {
            Sign::Minus
        } else {
            Sign::Zero
        });
    }
    Ok(eps)
}

/// Lemma-style adjacency condition on ε-sequences: adjacent opposite
/// nonzero signs never occur, cyclically with `ε_1` against `-ε_m`.
pub fn epsilon_profile_admissible(eps: &[Sign]) -> bool {
    let m = eps.len();
    if m == 0 {
        return true;
    }
    for i in 0..m - 1 {
        if eps[i] == -eps[i + 1] && !eps[i].is_zero() {
            return false;
        }
    }
    // Wrap: ε_1 vs -ε_m.
    !(eps[0] == eps[m - 1] && !eps[0].is_zero())
}

/// Padding `pad(I) = I ∪ {2n, 2n-1, …, n+|I|+1}` into `[2n]`; the image
/// always has exactly `n` elements.
pub fn pad(i: u64, n: usize) -> u64 {
    let size = i.count_ones() as usize;
    let mut out = i;
    for v in (n + size + 1)..=(2 * n) {
        out |= 1 << (v - 1); // labels are 1-based, bits 0-based
    }
    out
}

/// Applies `pad` to every member.
pub fn pad_collection(s: &Collection, n: usize) -> Collection {
    Collection::new(s.sets.iter().map(|&m| pad(m, n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::alternating;
    use crate::signed_set::mask;

    #[test]
    fn pair_separation_on_alternating() {
        let m = alternating(5, 2);
        // I = {1,3}, J = {2} → the circuit ({1,3},{2}) witnesses failure.
        let err = is_pair_separated(&m, mask(&[0, 2]), mask(&[1])).unwrap_err();
        assert_eq!(err, SignedSet::new(mask(&[0, 2]), mask(&[1])));
        // Equal sets are separated.
        assert!(pair_separated(&m, mask(&[0, 2]), mask(&[0, 2])));
    }

    #[test]
    fn chord_separation_counterexample() {
        let m = alternating(5, 3);
        // {1,3} vs {2,4}: circuit on {1,2,3,4} alternates.
        assert!(!pair_separated(&m, mask(&[0, 2]), mask(&[1, 3])));
    }

    #[test]
    fn empty_collection_sigma() {
        let m = alternating(4, 2);
        let s = Collection::new(vec![0]);
        let sigma = sigma_of(&m, &s).unwrap();
        // {∅} orients only circuits with one side empty; none here.
        assert!(sigma.values.iter().all(|v| v.is_zero()));
        assert!(is_collection_separated(&m, &s));
    }

    #[test]
    fn delete_contract_size_identity() {
        // Any collection: |S| = |S - e| + |S / e|.
        let s = Collection::new(vec![
            0b00000, 0b00001, 0b00100, 0b10000, 0b00011, 0b00101, 0b10100, 0b00111, 0b01101,
            0b10101, 0b11100, 0b01111, 0b11101, 0b11110, 0b11111,
        ]);
        for e in 0..5 {
            assert_eq!(
                s.len(),
                s.delete(e).len() + s.contract(e).len(),
                "element {e}"
            );
        }
        // The displayed deletion/contraction sizes at e = 4 (label 4 is
        // bit 3).
        assert_eq!(s.delete(3).len(), 11);
        assert_eq!(s.contract(3).len(), 4);
    }

    #[test]
    fn contract_of_singleton_empty_collection() {
        let s = Collection::new(vec![0]);
        assert_eq!(s.delete(1).sets, vec![0]);
        assert!(s.contract(1).is_empty());
    }

    #[test]
    fn corank2_cycle_of_dual_alternating() {
        // (C^{5,2})^*: circuits C_k = ([1,k-1],[k+1,5]).
        let m = alternating(5, 2).dual();
        let full = m.ground().full_mask();
        let cycle = corank2_circuit_cycle(&m, full).unwrap();
        assert_eq!(cycle.len(), 10);
        // Each consecutive pair agrees outside the two omitted elements.
        let get = |p: &CyclePos| {
            let c = m.circuits()[p.0];
            if p.1 {
                c.neg()
            } else {
                c
            }
        };
        for w in 0..10 {
            let x = get(&cycle[w]);
            let y = get(&cycle[(w + 1) % 10]);
            let outside = full & !(full & !x.support()) & !(full & !y.support());
            assert_eq!(x.restrict(outside), y.restrict(outside));
        }
    }

    #[test]
    fn pad_formula() {
        // n = 3, I = {1} → {1,5,6}.
        assert_eq!(pad(mask(&[0]), 3), mask(&[0, 4, 5]));
        // I = ∅ → {4,5,6} (the full top interval).
        assert_eq!(pad(0, 3), mask(&[3, 4, 5]));
        // Injectivity and size on all of 2^[3].
        let mut images = std::collections::BTreeSet::new();
        for i in 0..8u64 {
            let p = pad(i, 3);
            assert_eq!(p.count_ones(), 3);
            assert!(images.insert(p));
        }
    }
}
