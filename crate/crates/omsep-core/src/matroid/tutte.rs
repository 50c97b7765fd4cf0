//! Tutte polynomial evaluation by deletion-contraction with memoization.
//!
//! Only integer evaluations are exposed. The memo key is a canonical form
//! of the underlying (unoriented) matroid: circuit supports relabeled by a
//! greedy invariant refinement. Where the refinement fails to separate
//! elements the instance is simply not shared; correctness over maximal
//! sharing.

use super::OrientedMatroid;
use crate::signed_set::bits;
use num_bigint::BigInt;
use std::collections::HashMap;

pub fn tutte_eval(m: &OrientedMatroid, x: i64, y: i64) -> BigInt {
    let supports: Vec<u64> = m.circuits().iter().map(|c| c.support()).collect();
    let mut memo: HashMap<Vec<u64>, BigInt> = HashMap::new();
    eval(supports, m.n_elements(), x, y, &mut memo)
}

fn eval(
    supports: Vec<u64>,
    n: usize,
    x: i64,
    y: i64,
    memo: &mut HashMap<Vec<u64>, BigInt>,
) -> BigInt {
    let loops = supports
        .iter()
        .filter(|s| s.count_ones() == 1)
        .fold(0u64, |a, s| a | s);
    let in_circuit = supports.iter().fold(0u64, |a, s| a | s);
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let coloops = full & !in_circuit;

    // Base case: loops and coloops only.
    let internal = full & !loops & !coloops;
    if internal == 0 {
        return BigInt::from(x).pow(coloops.count_ones()) * BigInt::from(y).pow(loops.count_ones());
    }

    let key = canonical_key(&supports, n);
    if let Some(k) = &key {
        if let Some(v) = memo.get(k) {
            return v.clone();
        }
    }

    let e = internal.trailing_zeros() as usize;
    let del = delete_supports(&supports, n, e);
    let con = contract_supports(&supports, n, e);
    let result = eval(del, n - 1, x, y, memo) + eval(con, n - 1, x, y, memo);

    if let Some(k) = key {
        memo.insert(k, result.clone());
    }
    result
}

fn drop_element(support: u64, e: usize) -> u64 {
    let low = support & ((1u64 << e) - 1);
    let high = support >> (e + 1);
    low | (high << e)
}

fn delete_supports(supports: &[u64], _n: usize, e: usize) -> Vec<u64> {
    let mut out: Vec<u64> = supports
        .iter()
        .filter(|s| *s & (1u64 << e) == 0)
        .map(|s| drop_element(*s, e))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn contract_supports(supports: &[u64], _n: usize, e: usize) -> Vec<u64> {
    let restricted: Vec<u64> = supports
        .iter()
        .map(|s| drop_element(*s & !(1u64 << e), e))
        .filter(|s| *s != 0)
        .collect();
    let mut minimal: Vec<u64> = restricted
        .iter()
        .filter(|s| !restricted.iter().any(|t| t != *s && *t & !**s == 0))
        .copied()
        .collect();
    minimal.sort_unstable();
    minimal.dedup();
    minimal
}

/// Canonical relabeling via iterated invariant refinement. Elements are
/// ranked by (circuit degree, multiset of incident support sizes) and the
/// signature of their neighbors, repeated to a fixed point. Returns `None`
/// when two elements stay indistinguishable.
fn canonical_key(supports: &[u64], n: usize) -> Option<Vec<u64>> {
    let mut color: Vec<u64> = vec![0; n];
    for _ in 0..n {
        let mut sig: Vec<(u64, Vec<(u64, usize)>, usize)> = Vec::with_capacity(n);
        for e in 0..n {
            let mut incident: Vec<(u64, usize)> = supports
                .iter()
                .filter(|s| *s & (1u64 << e) != 0)
                .map(|s| {
                    let mut neigh: Vec<u64> = bits(*s).map(|f| color[f]).collect();
                    neigh.sort_unstable();
                    (neigh.iter().fold(0u64, |a, c| a.wrapping_mul(31).wrapping_add(*c)), s.count_ones() as usize)
                })
                .collect();
            incident.sort_unstable();
            sig.push((color[e], incident, e));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| sig[a].cmp(&sig[b]).then(std::cmp::Ordering::Equal));
        let mut new_color = vec![0u64; n];
        let mut next = 0u64;
        for w in 0..n {
            if w > 0 {
                let (pa, pb) = (order[w - 1], order[w]);
                if (&sig[pa].0, &sig[pa].1) != (&sig[pb].0, &sig[pb].1) {
                    next += 1;
                }
            }
            new_color[order[w]] = next;
        }
        if new_color == color {
            break;
        }
        color = new_color;
    }
    // Discrete partition required for a safe canonical form.
    let mut seen = vec![false; n];
    for &c in &color {
        let idx = c as usize;
        if idx >= n || seen[idx] {
            return None;
        }
        seen[idx] = true;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by_key(|&e| color[e]);
    // perm[i] = old element with color i; remap supports.
    let mut pos = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        pos[old] = new;
    }
    let mut key: Vec<u64> = supports
        .iter()
        .map(|s| bits(*s).fold(0u64, |a, e| a | (1 << pos[e])))
        .collect();
    key.sort_unstable();
    key.push(n as u64);
    Some(key)
}
