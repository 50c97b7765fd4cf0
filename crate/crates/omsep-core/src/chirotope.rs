//! Chirotopes: basis orientation maps, conversions to and from circuits.

use crate::error::{OmError, Result};
use crate::ground::GroundSet;
use crate::matroid::{OrientedMatroid, SubsetsOfSize};
use crate::ratmat::{det, Rat};
use crate::sign::Sign;
use crate::signed_set::{bits, SignedSet};
use num_traits::{Signed, Zero};

/// Basis orientation of a rank-`r` oriented matroid: one sign per sorted
/// `r`-subset, in lexicographic order of subsets. Values on unsorted tuples
/// follow by alternation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chirotope {
    pub n: usize,
    pub rank: usize,
    /// Signs indexed by the lexicographic rank of the sorted r-subset.
    pub signs: Vec<Sign>,
}

impl Chirotope {
    pub fn subset_index(&self, subset: u64) -> usize {
        debug_assert_eq!(subset.count_ones() as usize, self.rank);
        lex_index(subset, self.n, self.rank)
    }

    /// Sign of a sorted r-subset given as a bitmask.
    pub fn sign_of_mask(&self, subset: u64) -> Sign {
        self.signs[self.subset_index(subset)]
    }

    pub fn is_zero(&self) -> bool {
        self.signs.iter().all(|s| s.is_zero())
    }

    /// Alternation check is structural (signs stored on sorted tuples);
    /// this verifies the chirotope is not identically zero for rank > 0.
    pub fn validate(&self) -> Result<()> {
        if self.rank > 0 && self.is_zero() {
            return Err(OmError::InvalidInput(
                "chirotope is identically zero".into(),
            ));
        }
        Ok(())
    }

    /// Chirotope after reorienting the elements of `mask`: tuples flip by
    /// the parity of their intersection with `mask`.
    pub fn reoriented(&self, mask: u64) -> Chirotope {
        let mut out = self.clone();
        let mut it = SubsetsOfSize::new(self.n, self.rank);
        while let Some(s) = it.next() {
            if (s & mask).count_ones() % 2 == 1 {
                let i = self.subset_index(s);
                out.signs[i] = -out.signs[i];
            }
        }
        out
    }

    /// Chirotope after relabeling: new index `i` holds old `perm[i]`.
    /// Sorting the mapped tuple contributes the permutation sign.
    pub fn relabeled(&self, perm: &[usize]) -> Chirotope {
        let mut out = self.clone();
        let mut it = SubsetsOfSize::new(self.n, self.rank);
        while let Some(s) = it.next() {
            let tuple: Vec<usize> = bits(s).map(|i| perm[i]).collect();
            let (sorted_mask, parity) = sort_parity(&tuple);
            let base = self.signs[lex_index(sorted_mask, self.n, self.rank)];
            let idx = lex_index(s, self.n, self.rank);
            out.signs[idx] = if parity { -base } else { base };
        }
        out
    }

    /// Nonnegative on all sorted tuples.
    pub fn is_nonnegative(&self) -> bool {
        self.signs.iter().all(|s| *s != Sign::Minus)
    }
}

/// Lexicographic rank of a k-subset bitmask among k-subsets of `0..n`.
pub fn lex_index(subset: u64, n: usize, k: usize) -> usize {
    let elems: Vec<usize> = bits(subset).collect();
    let mut idx = 0usize;
    let mut prev: isize = -1;
    for (pos, &e) in elems.iter().enumerate() {
        for skipped in (prev + 1) as usize..e {
            idx += crate::matroid::binomial(n - skipped - 1, k - pos - 1);
        }
        prev = e as isize;
    }
    idx
}

/// Sorts a tuple of distinct indices; returns (bitmask, odd-permutation flag).
pub fn sort_parity(tuple: &[usize]) -> (u64, bool) {
    let mut v = tuple.to_vec();
    let mut swaps = 0usize;
    for i in 0..v.len() {
        for j in (i + 1..v.len()).rev() {
            if v[j - 1] > v[j] {
                v.swap(j - 1, j);
                swaps += 1;
            }
        }
    }
    let mask = v.iter().fold(0u64, |a, &e| a | (1 << e));
    (mask, swaps % 2 == 1)
}

/// Chirotope of a rational vector configuration.
///
/// The rank `r` is the matrix rank; determinants are taken in an
/// `r`-dimensional row space found by exact elimination.
pub fn chirotope_from_vectors(columns: &[Vec<Rat>], dim: usize) -> Result<Chirotope> {
    let n = columns.len();
    if n > 63 {
        return Err(OmError::TooManyElements(n));
    }
    let refs: Vec<&[Rat]> = columns.iter().map(|c| c.as_slice()).collect();
    let rank = crate::ratmat::rank_of_columns(&refs, dim);
    // Select `rank` independent rows greedily.
    let mut chosen_rows: Vec<usize> = Vec::new();
    for r in 0..dim {
        if chosen_rows.len() == rank {
            break;
        }
        let mut trial = chosen_rows.clone();
        trial.push(r);
        let projected: Vec<Vec<Rat>> = (0..n)
            .map(|c| trial.iter().map(|&row| columns[c][row].clone()).collect())
            .collect();
        let prefs: Vec<&[Rat]> = projected.iter().map(|c| c.as_slice()).collect();
        if crate::ratmat::rank_of_columns(&prefs, trial.len()) == trial.len() {
            chosen_rows = trial;
        }
    }
    let mut signs = vec![Sign::Zero; crate::matroid::binomial(n, rank)];
    let mut it = SubsetsOfSize::new(n, rank);
    while let Some(s) = it.next() {
        let rows: Vec<Vec<Rat>> = bits(s)
            .map(|c| chosen_rows.iter().map(|&r| columns[c][r].clone()).collect())
            .collect();
        let d = det(&rows);
        signs[lex_index(s, n, rank)] = if d.is_zero() {
            Sign::Zero
        } else if d.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        };
    }
    Ok(Chirotope { n, rank, signs })
}

/// Circuits from a chirotope: each `(r+1)`-subset `S = {s_0 < … < s_r}`
/// yields the signed vector `X_{s_k} = (-1)^k·χ(S - s_k)`; nonzero vectors
/// are exactly the circuits supported on the unique minimal dependent
/// subset of `S`.
pub fn circuits_from_chirotope(chi: &Chirotope) -> Result<OrientedMatroid> {
    chi.validate()?;
    let m = circuits_from_chirotope_unchecked(chi);
    let report = m.validate();
    if !report.passed() {
        return Err(crate::error::OmError::AxiomViolation(report.first_failure()));
    }
    Ok(m)
}

/// Same derivation without axiom validation: used by enumeration loops
/// that validate candidates later.
pub fn circuits_from_chirotope_unchecked(chi: &Chirotope) -> OrientedMatroid {
    let n = chi.n;
    let r = chi.rank;
    let mut reps: Vec<SignedSet> = Vec::new();
    if r < n {
        let mut it = SubsetsOfSize::new(n, r + 1);
        while let Some(s) = it.next() {
            let elems: Vec<usize> = bits(s).collect();
            let mut plus = 0u64;
            let mut minus = 0u64;
            for (k, &e) in elems.iter().enumerate() {
                let sub = s & !(1u64 << e);
                let sign = chi.sign_of_mask(sub);
                let signed = if k % 2 == 1 { -sign } else { sign };
                match signed {
                    Sign::Plus => plus |= 1 << e,
                    Sign::Minus => minus |= 1 << e,
                    Sign::Zero => {}
                }
            }
            if plus | minus != 0 {
                reps.push(SignedSet::new(plus, minus).canonical());
            }
        }
    }
    reps.sort_by_key(|c| (c.support(), c.plus));
    reps.dedup();
    OrientedMatroid::new_unchecked(GroundSet::numeric(n), reps)
}

/// Chirotope recovered from circuits, up to global sign; canonicalized so
/// the lexicographically smallest basis is positive. Signs propagate along
/// basis exchanges through fundamental circuits.
pub fn chirotope_from_circuits(m: &OrientedMatroid) -> Result<Chirotope> {
    let n = m.n_elements();
    let r = m.rank();
    let total = crate::matroid::binomial(n, r);
    let mut signs = vec![Sign::Zero; total];
    let bases = m.bases();
    if bases.is_empty() {
        return Ok(Chirotope { n, rank: r, signs });
    }
    let first = *bases.iter().min().unwrap();
    let mut assigned: std::collections::HashMap<u64, Sign> = Default::default();
    assigned.insert(first, Sign::Plus);
    let mut queue = std::collections::VecDeque::from([first]);
    while let Some(b) = queue.pop_front() {
        let sb = assigned[&b];
        for y in 0..n {
            if b & (1 << y) != 0 {
                continue;
            }
            // Fundamental circuit of y over b.
            let Some(circ) = m
                .signed_circuits()
                .find(|c| c.support() & !(b | (1 << y)) == 0 && c.sign_of(y) == Sign::Plus)
            else {
                continue;
            };
            for x in bits(circ.support() & b) {
                let nb = (b & !(1u64 << x)) | (1 << y);
                if assigned.contains_key(&nb) {
                    continue;
                }
                // det changes by -λ_x·λ_y under the exchange, times the
                // sign of resorting the replaced column into place.
                let lam_x = circ.sign_of(x);
                let between = b & !(1u64 << x);
                let (lo, hi) = (x.min(y), x.max(y));
                let crossings = (between & (((1u64 << hi) - 1) & !((1u64 << (lo + 1)) - 1)))
                    .count_ones();
                let mut s = sb * -lam_x;
                if crossings % 2 == 1 {
                    s = -s;
                }
                assigned.insert(nb, s);
                queue.push_back(nb);
            }
        }
    }
    for (b, s) in assigned {
        signs[lex_index(b, n, r)] = s;
    }
    let chi = Chirotope { n, rank: r, signs };
    chi.validate()?;
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::rat_int;

    #[test]
    fn lex_index_orders_subsets() {
        // 2-subsets of 0..4: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
        assert_eq!(lex_index(0b0011, 4, 2), 0);
        assert_eq!(lex_index(0b0101, 4, 2), 1);
        assert_eq!(lex_index(0b1001, 4, 2), 2);
        assert_eq!(lex_index(0b0110, 4, 2), 3);
        assert_eq!(lex_index(0b1010, 4, 2), 4);
        assert_eq!(lex_index(0b1100, 4, 2), 5);
    }

    #[test]
    fn swap_flips_sign() {
        let cols = vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
        ];
        let chi = chirotope_from_vectors(&cols, 2).unwrap();
        assert_eq!(chi.sign_of_mask(0b11), Sign::Plus);
        let swapped = vec![cols[1].clone(), cols[0].clone()];
        let chi2 = chirotope_from_vectors(&swapped, 2).unwrap();
        assert_eq!(chi2.sign_of_mask(0b11), Sign::Minus);
    }

    #[test]
    fn sort_parity_counts_swaps() {
        assert_eq!(sort_parity(&[2, 1]), (0b110, true));
        assert_eq!(sort_parity(&[1, 2]), (0b110, false));
        assert_eq!(sort_parity(&[3, 1, 2]), (0b1110, false));
    }
}
