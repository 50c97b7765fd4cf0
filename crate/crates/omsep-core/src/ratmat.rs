//! Small dense exact-rational linear algebra: rank, dependences, hulls.
//!
//! Everything here is over `BigRational`; no floating point enters any
//! matroid decision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

/// Rank of the matrix whose columns are `cols` (each of dimension `dim`).
pub fn rank_of_columns(cols: &[&[Rat]], dim: usize) -> usize {
    // Row-major working copy, columns as given.
    let n = cols.len();
    if n == 0 {
        return 0;
    }
    let mut m: Vec<Vec<Rat>> = (0..dim)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect();
    gauss_rank(&mut m)
}

fn gauss_rank(m: &mut [Vec<Rat>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        let pivot = (row..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let pv = m[row][col].clone();
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = &m[r][col] / &pv;
                for c in col..ncols {
                    let delta = &f * &m[row][c];
                    m[r][c] = &m[r][c] - delta;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Unique-up-to-scale dependence among columns that are minimally dependent:
/// returns coefficients `c` with `Σ c_i·cols[i] = 0`, normalized so the
/// first coefficient is positive. Returns `None` if the columns are
/// independent or the kernel is not one-dimensional.
pub fn minimal_dependence(cols: &[&[Rat]], dim: usize) -> Option<Vec<Rat>> {
    let n = cols.len();
    let mut m: Vec<Vec<Rat>> = (0..dim)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect();
    // Reduced row echelon form.
    let rows = dim;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let pivot = (row..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let pv = m[row][col].clone();
        for c in col..n {
            m[row][c] = &m[row][c] / &pv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..n {
                    let delta = &f * &m[row][c];
                    m[r][c] = &m[r][c] - delta;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == rows {
            break;
        }
    }
    if pivots.len() + 1 != n {
        return None;
    }
    // Exactly one free column: kernel vector with 1 there.
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free = (0..n).find(|c| !pivot_cols.contains(c))?;
    let mut kernel = vec![Rat::zero(); n];
    kernel[free] = Rat::one();
    for &(r, c) in &pivots {
        kernel[c] = -m[r][free].clone();
    }
    // Normalize: first nonzero coefficient positive.
    let lead = kernel.iter().find(|v| !v.is_zero())?.clone();
    if lead.is_negative() {
        for v in kernel.iter_mut() {
            *v = -v.clone();
        }
    }
    Some(kernel)
}

/// Determinant of a square matrix given as rows.
pub fn det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut result = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return Rat::zero();
        };
        if p != col {
            m.swap(col, p);
            result = -result;
        }
        let pv = m[col][col].clone();
        result *= pv.clone();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &pv;
                for c in col..n {
                    let d = &f * &m[col][c];
                    m[r][c] = &m[r][c] - d;
                }
            }
        }
    }
    result
}

/// 2-D orientation predicate: sign of the signed area of (a, b, c).
pub fn orient2d(a: &[Rat; 2], b: &[Rat; 2], c: &[Rat; 2]) -> crate::sign::Sign {
    let v = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
    if v.is_zero() {
        crate::sign::Sign::Zero
    } else if v.is_positive() {
        crate::sign::Sign::Plus
    } else {
        crate::sign::Sign::Minus
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_dependence() {
        let c0 = vec![rat_int(1), rat_int(0)];
        let c1 = vec![rat_int(0), rat_int(1)];
        let c2 = vec![rat_int(1), rat_int(1)];
        let cols: Vec<&[Rat]> = vec![&c0, &c1, &c2];
        assert_eq!(rank_of_columns(&cols, 2), 2);
        let dep = minimal_dependence(&cols, 2).unwrap();
        // v0 + v1 - v2 = 0 up to scale, first coefficient positive.
        assert_eq!(dep[0], rat_int(1));
        assert_eq!(dep[1], rat_int(1));
        assert_eq!(dep[2], rat_int(-1));
    }

    #[test]
    fn independent_columns_have_no_dependence() {
        let c0 = vec![rat_int(1), rat_int(0)];
        let c1 = vec![rat_int(0), rat_int(1)];
        let cols: Vec<&[Rat]> = vec![&c0, &c1];
        assert!(minimal_dependence(&cols, 2).is_none());
    }

    #[test]
    fn det_3x3() {
        let rows = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(0), rat_int(1), rat_int(4)],
            vec![rat_int(5), rat_int(6), rat_int(0)],
        ];
        assert_eq!(det(&rows), rat_int(1));
    }
}
