//! Coherence of colocalizations via exact rational feasibility, the
//! closed counting formula for all-coherent trees, and the associated
//! hyperplane arrangement.

use crate::error::{OmError, Result};
use crate::matroid::OrientedMatroid;
use crate::ratmat::{minimal_dependence, rat_int, Rat};
use crate::separation::SignMap;
use crate::sign::Sign;
use crate::signed_set::bits;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::tree::{GammaMap, TriangulationTree};

/// Outcome of a strict feasibility question, with a rational witness.
#[derive(Clone, Debug, PartialEq)]
pub enum FeasibilityOutcome {
    Feasible(Vec<Rat>),
    Infeasible,
}

impl FeasibilityOutcome {
    pub fn witness(self) -> Option<Vec<Rat>> {
        match self {
            FeasibilityOutcome::Feasible(w) => Some(w),
            FeasibilityOutcome::Infeasible => None,
        }
    }
}

/// Decides whether some `λ` satisfies `sign(⟨c_i, λ⟩) = s_i` for every
/// row, where each `s_i ∈ {+, -}`.
///
/// Strict inequalities normalize to `s_i·⟨c_i, λ⟩ ≥ 1`: the constraint
/// cone is homogeneous, so strict feasibility and the normalized system
/// are equivalent. The normalized LP is solved by a dense rational
/// phase-one simplex with Bland's rule.
pub fn strict_sign_feasibility(rows: &[(Vec<Rat>, Sign)]) -> Result<FeasibilityOutcome> {
    if rows.is_empty() {
        return Ok(FeasibilityOutcome::Feasible(Vec::new()));
    }
    let dim = rows[0].0.len();
    if rows.iter().any(|(c, s)| c.len() != dim || s.is_zero()) {
        return Err(OmError::InvalidInput(
            "feasibility rows need equal dimension and nonzero required signs".into(),
        ));
    }
    // Variables: λ = u - w with u, w ≥ 0, slack s ≥ 0, artificial a ≥ 0:
    // A(u - w) - s + a = 1 rowwise, minimize Σa.
    let m = rows.len();
    let n_vars = 2 * dim + m; // u, w, slack
    let mut tableau: Vec<Vec<Rat>> = Vec::with_capacity(m + 1);
    for (i, (coef, sign)) in rows.iter().enumerate() {
        let mut row = vec![Rat::zero(); n_vars + m + 1];
        let s = if *sign == Sign::Plus {
            Rat::one()
        } else {
            -Rat::one()
        };
        for (j, c) in coef.iter().enumerate() {
            row[j] = &s * c;
            row[dim + j] = -(&s * c);
        }
        row[2 * dim + i] = -Rat::one(); // slack
        row[n_vars + i] = Rat::one(); // artificial
        row[n_vars + m] = Rat::one(); // rhs
        tableau.push(row);
    }
    // Objective: minimize Σ artificials; reduced cost row = Σ constraint rows
    // over the artificial basis.
    let mut obj = vec![Rat::zero(); n_vars + m + 1];
    for row in &tableau {
        for (j, v) in row.iter().enumerate() {
            if j < n_vars || j == n_vars + m {
                obj[j] = &obj[j] + v;
            }
        }
    }
    let mut basis: Vec<usize> = (n_vars..n_vars + m).collect();

    loop {
        // Bland: entering variable = smallest index with positive reduced
        // cost (maximizing -Σa ⇔ driving obj to zero).
        let entering = (0..n_vars).find(|&j| obj[j].is_positive());
        let Some(e) = entering else { break };
        // Ratio test with Bland tie-break on smallest basis index.
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<Rat> = None;
        for (r, row) in tableau.iter().enumerate() {
            if row[e].is_positive() {
                let ratio = &row[n_vars + m] / &row[e];
                let better = match &best_ratio {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best_ratio = Some(ratio);
                    leave = Some(r);
                }
            }
        }
        let Some(l) = leave else {
            // Unbounded phase-one objective cannot happen (bounded by 0),
            // only a degenerate system would reach here.
            return Err(OmError::InvalidInput("phase-one simplex unbounded".into()));
        };
        pivot(&mut tableau, &mut obj, l, e, n_vars + m);
        basis[l] = e;
    }
    // Feasible iff all artificials are zero, i.e. objective value 0.
    let obj_value = obj[n_vars + m].clone();
    if !obj_value.is_zero() {
        return Ok(FeasibilityOutcome::Infeasible);
    }
    // Read off λ = u - w.
    let mut solution = vec![Rat::zero(); n_vars];
    for (r, &b) in basis.iter().enumerate() {
        if b < n_vars {
            solution[b] = tableau[r][n_vars + m].clone();
        }
    }
    let lambda: Vec<Rat> = (0..dim)
        .map(|j| &solution[j] - &solution[dim + j])
        .collect();
    // Sanity: the witness satisfies every strict constraint.
    for (coef, sign) in rows {
        let v: Rat = coef
            .iter()
            .zip(&lambda)
            .map(|(c, l)| c * l)
            .sum();
        let ok = match sign {
            Sign::Plus => v.is_positive(),
            Sign::Minus => v.is_negative(),
            Sign::Zero => false,
        };
        if !ok {
            return Err(OmError::InvalidInput(
                "simplex produced an invalid witness".into(),
            ));
        }
    }
    Ok(FeasibilityOutcome::Feasible(lambda))
}

fn pivot(tableau: &mut [Vec<Rat>], obj: &mut [Rat], l: usize, e: usize, width: usize) {
    let pv = tableau[l][e].clone();
    for v in tableau[l].iter_mut() {
        *v = &*v / &pv;
    }
    for r in 0..tableau.len() {
        if r != l && !tableau[r][e].is_zero() {
            let f = tableau[r][e].clone();
            for j in 0..=width {
                let d = &f * &tableau[l][j];
                tableau[r][j] = &tableau[r][j] - d;
            }
        }
    }
    if !obj[e].is_zero() {
        let f = obj[e].clone();
        for j in 0..=width {
            let d = &f * &tableau[l][j];
            obj[j] = &obj[j] - d;
        }
    }
}

/// Coherence over a triangulation tree: a vertex labeling μ must reproduce
/// every subtree sign. Feasible systems return the witness.
pub fn is_coherent_tree(tree: &TriangulationTree, gamma: &GammaMap) -> Result<Option<Vec<Rat>>> {
    let n = tree.n_nodes();
    let rows: Vec<(Vec<Rat>, Sign)> = tree
        .subtrees
        .iter()
        .enumerate()
        .map(|(i, &sub)| {
            let mut coef = vec![Rat::zero(); n];
            for v in bits(sub) {
                coef[v] = rat_int(1);
            }
            (coef, gamma.values[i])
        })
        .collect();
    if rows.iter().any(|(_, s)| s.is_zero()) {
        return Err(OmError::InvalidInput(
            "coherence asks for total sign maps".into(),
        ));
    }
    Ok(strict_sign_feasibility(&rows)?.witness())
}

/// Coherence of a colocalization of a graphical matroid: edge weights λ
/// with `sign(λ(C⁺) - λ(C⁻)) = σ(C)` per circuit (all dependence
/// coefficients are 1 for graphical matroids).
pub fn is_coherent_graphical(m: &OrientedMatroid, sigma: &SignMap) -> Result<Option<Vec<Rat>>> {
    let n = m.n_elements();
    let rows: Vec<(Vec<Rat>, Sign)> = m
        .circuits()
        .iter()
        .zip(&sigma.values)
        .map(|(c, s)| {
            let mut coef = vec![Rat::zero(); n];
            for e in bits(c.plus) {
                coef[e] = rat_int(1);
            }
            for e in bits(c.minus) {
                coef[e] = rat_int(-1);
            }
            (coef, *s)
        })
        .collect();
    Ok(strict_sign_feasibility(&rows)?.witness())
}

/// Coherence for a realizable matroid given by its vector configuration:
/// each circuit contributes the row `Σ_{C⁺} α_e λ_e - Σ_{C⁻} α_e λ_e`
/// where the `α_e` come from the unique positive dependence.
pub fn is_coherent_realized(
    config: &crate::construct::VectorConfiguration,
    m: &OrientedMatroid,
    sigma: &SignMap,
) -> Result<Option<Vec<Rat>>> {
    let n = m.n_elements();
    let refs: Vec<&[Rat]> = config.columns.iter().map(|c| c.as_slice()).collect();
    let mut rows: Vec<(Vec<Rat>, Sign)> = Vec::new();
    for (c, s) in m.circuits().iter().zip(&sigma.values) {
        let elems: Vec<usize> = bits(c.support()).collect();
        let cols: Vec<&[Rat]> = elems.iter().map(|&i| refs[i]).collect();
        let dep = minimal_dependence(&cols, config.dimension).ok_or_else(|| {
            OmError::InvalidInput("configuration does not realize the matroid".into())
        })?;
        // Align the dependence with the circuit: make the coefficient at
        // the canonical-plus side positive.
        let first = elems[0];
        let flip = (c.plus & (1 << first) != 0) != dep[0].is_positive();
        let mut coef = vec![Rat::zero(); n];
        for (k, &e) in elems.iter().enumerate() {
            let v = if flip { -dep[k].clone() } else { dep[k].clone() };
            coef[e] = v;
        }
        rows.push((coef, *s));
    }
    Ok(strict_sign_feasibility(&rows)?.witness())
}

/// The closed count of maximal G-separated collections for an
/// all-coherent triangulation with tree `T_{a,b}`:
/// `2(n+1)·n!/(n-a)!·n!/(n-b)!` with `n = a + b + 2`.
pub fn coherent_count(a: usize, b: usize) -> BigInt {
    let n = a + b + 2;
    let falling = |k: usize| -> BigInt {
        let mut r = BigInt::one();
        for i in 0..k {
            r *= BigInt::from((n - i) as u64);
        }
        r
    };
    BigInt::from(2 * (n + 1) as u64) * falling(a) * falling(b)
}

/// A hyperplane of the arrangement attached to `T_{a,b}`, as an exact
/// normal vector over the coordinates `(x_{-a}, …, x_b, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<i64>,
    pub description: String,
}

/// The arrangement of `T_{a,b}` in `R^{a+b+2}`: one hyperplane per
/// connected subtree under the substitution `λ(i) = x_i - x_{i-1}`
/// (with `x_{-a-1} = 0`) and `λ(ℓ) = z`. Path subtrees give
/// `x_j - x_i = 0` (including `x_j = 0`), leaf-through subtrees add `z`.
pub fn arrangement_hyperplanes(a: usize, b: usize) -> Vec<Hyperplane> {
    let n = a + b + 2; // coordinates: x_{-a..b} then z
    let xi = |i: isize| -> usize { (i + a as isize) as usize };
    let mut out = Vec::new();
    // {ℓ}: z = 0.
    let mut normal = vec![0i64; n];
    normal[n - 1] = 1;
    out.push(Hyperplane {
        normal,
        description: "z".into(),
    });
    // Path subtrees [i, j]: x_j - x_{i-1}.
    for i in -(a as isize)..=(b as isize) {
        for j in i..=(b as isize) {
            let mut normal = vec![0i64; n];
            normal[xi(j)] = 1;
            let desc = if i - 1 < -(a as isize) {
                format!("x_{j}")
            } else {
                normal[xi(i - 1)] = -1;
                format!("x_{j} - x_{}", i - 1)
            };
            out.push(Hyperplane {
                normal,
                description: desc,
            });
        }
    }
    // Leaf subtrees [i, ℓ, j] with i ≤ 0 ≤ j: x_j - x_{i-1} + z.
    for i in -(a as isize)..=0 {
        for j in 0..=(b as isize) {
            let mut normal = vec![0i64; n];
            normal[xi(j)] = 1;
            normal[n - 1] = 1;
            let desc = if i - 1 < -(a as isize) {
                format!("x_{j} + z")
            } else {
                normal[xi(i - 1)] = -1;
                format!("x_{j} - x_{} + z", i - 1)
            };
            out.push(Hyperplane {
                normal,
                description: desc,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::rat;

    #[test]
    fn empty_system_feasible_at_zero() {
        let out = strict_sign_feasibility(&[]).unwrap();
        assert_eq!(out, FeasibilityOutcome::Feasible(vec![]));
    }

    #[test]
    fn opposite_strict_signs_infeasible() {
        let rows = vec![
            (vec![rat_int(1)], Sign::Plus),
            (vec![rat_int(1)], Sign::Minus),
        ];
        assert_eq!(
            strict_sign_feasibility(&rows).unwrap(),
            FeasibilityOutcome::Infeasible
        );
    }

    #[test]
    fn simple_two_dimensional_system() {
        // x > 0, y < 0, x + y > 0.
        let rows = vec![
            (vec![rat_int(1), rat_int(0)], Sign::Plus),
            (vec![rat_int(0), rat_int(1)], Sign::Minus),
            (vec![rat_int(1), rat_int(1)], Sign::Plus),
        ];
        let w = strict_sign_feasibility(&rows).unwrap().witness().unwrap();
        assert!(w[0].is_positive());
        assert!(w[1].is_negative());
        assert!((&w[0] + &w[1]).is_positive());
    }

    #[test]
    fn rational_coefficients() {
        let rows = vec![
            (vec![rat(1, 3), rat(-2, 5)], Sign::Plus),
            (vec![rat(-1, 7), rat(1, 2)], Sign::Plus),
        ];
        assert!(strict_sign_feasibility(&rows).unwrap().witness().is_some());
    }

    #[test]
    fn coherent_count_small_cases() {
        assert_eq!(coherent_count(0, 0), BigInt::from(6));
        assert_eq!(coherent_count(1, 0), BigInt::from(24));
        assert_eq!(coherent_count(1, 1), BigInt::from(160));
    }

    #[test]
    fn arrangement_size_matches_subtree_count() {
        // |Conn(T_{a,b})| distinct hyperplanes.
        let t = crate::graphsep::t_ab(1, 0).unwrap();
        let h = arrangement_hyperplanes(1, 0);
        assert_eq!(h.len(), t.subtrees.len());
        let t = crate::graphsep::t_ab(2, 1).unwrap();
        let h = arrangement_hyperplanes(2, 1);
        assert_eq!(h.len(), t.subtrees.len());
    }
}
