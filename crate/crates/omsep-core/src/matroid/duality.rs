//! Cocircuits, covectors and topes, from circuit orthogonality.

use super::{OrientedMatroid, SubsetsOfSize};
use crate::signed_set::{bits, SignedSet};

/// Minimal nonzero sign vectors orthogonal to every circuit.
///
/// Every cocircuit support is the complement of a hyperplane, hence has at
/// most `corank + 1` elements; candidate supports of that size are scanned
/// and the sign constraints solved by backtracking over the support.
pub fn cocircuits(m: &OrientedMatroid) -> Vec<SignedSet> {
    let n = m.n_elements();
    let max_support = m.corank() + 1;
    let mut found: Vec<SignedSet> = Vec::new();
    for size in 1..=max_support.min(n) {
        let mut subsets = SubsetsOfSize::new(n, size);
        while let Some(supp) = subsets.next() {
            solve_orthogonal(m, supp, &mut found);
        }
    }
    // Keep minimal supports only; per support the solver already returns
    // full-support vectors, so comparability is support containment.
    let minimal: Vec<SignedSet> = found
        .iter()
        .filter(|x| {
            !found
                .iter()
                .any(|y| y.support() != x.support() && y.support() & !x.support() == 0)
        })
        .copied()
        .collect();
    let mut reps: Vec<SignedSet> = minimal.iter().map(|c| c.canonical()).collect();
    reps.sort_by_key(|c| (c.support(), c.plus));
    reps.dedup();
    reps
}

/// Backtracking over sign assignments on `supp`; pushes every vector with
/// support exactly `supp` orthogonal to all circuits.
fn solve_orthogonal(m: &OrientedMatroid, supp: u64, out: &mut Vec<SignedSet>) {
    let elems: Vec<usize> = bits(supp).collect();
    // Respect canonical form: lowest support element gets +.
    let mut x = SignedSet::new(1u64 << elems[0], 0);
    rec(m, &elems, 1, &mut x, supp, out);

    fn rec(
        m: &OrientedMatroid,
        elems: &[usize],
        at: usize,
        x: &mut SignedSet,
        supp: u64,
        out: &mut Vec<SignedSet>,
    ) {
        // Prune: any circuit inside the assigned region must already be
        // orthogonal to the partial vector.
        let assigned = {
            let mut a = 0u64;
            for &e in &elems[..at] {
                a |= 1 << e;
            }
            a | !supp
        };
        for c in m.circuits() {
            if c.support() & !assigned == 0 && !c.orthogonal(x) {
                return;
            }
        }
        if at == elems.len() {
            out.push(*x);
            return;
        }
        let e = elems[at];
        for plus in [true, false] {
            if plus {
                x.plus |= 1 << e;
            } else {
                x.minus |= 1 << e;
            }
            rec(m, elems, at + 1, x, supp, out);
            x.plus &= !(1 << e);
            x.minus &= !(1 << e);
        }
    }
}

/// All sign vectors orthogonal to every circuit. Exponential in `n`.
pub fn covectors(m: &OrientedMatroid) -> Vec<SignedSet> {
    let n = m.n_elements();
    let mut out = Vec::new();
    // Iterate over (plus, minus) disjoint pairs via two nested masks.
    for supp in 0..(1u64 << n) {
        let mut sub = supp;
        loop {
            let x = SignedSet::new(sub, supp & !sub);
            if m.circuits().iter().all(|c| c.orthogonal(&x)) {
                out.push(x);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & supp;
        }
    }
    out
}

/// Maximal covectors.
pub fn topes(m: &OrientedMatroid) -> Vec<SignedSet> {
    let all = covectors(m);
    all.iter()
        .filter(|x| !all.iter().any(|y| x.leq(y) && *x != y))
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::signed_set::mask;

    #[test]
    fn cocircuits_of_parallel_pair() {
        // Two parallel elements: circuit ({0},{1}).
        let m = OrientedMatroid::new(
            GroundSet::numeric(2),
            vec![SignedSet::new(mask(&[0]), mask(&[1]))],
        )
        .unwrap();
        let cc = cocircuits(&m);
        assert_eq!(cc, vec![SignedSet::new(mask(&[0, 1]), 0)]);
    }

    #[test]
    fn cocircuits_of_coloop_matroid() {
        let m = OrientedMatroid::new(GroundSet::numeric(2), vec![]).unwrap();
        let cc = cocircuits(&m);
        // One cocircuit pair per coloop.
        assert_eq!(
            cc,
            vec![
                SignedSet::new(mask(&[0]), 0),
                SignedSet::new(mask(&[1]), 0)
            ]
        );
    }

    #[test]
    fn dual_of_free_is_all_loops() {
        let m = OrientedMatroid::new(GroundSet::numeric(3), vec![]).unwrap();
        let d = m.dual();
        assert_eq!(d.rank(), 0);
        assert_eq!(d.loops(), 0b111);
    }
}
