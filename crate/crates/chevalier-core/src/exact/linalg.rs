//! Smith normal form over ℤ and exact rational elimination.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::ring::abs;
use super::sparse::SparseMat;
use super::{Int, Rat};

/// Invariant factors d₁ | d₂ | … of an integer matrix, nonnegative, of
/// length min(nrows, ncols), with zeros (if any) at the end. For square
/// nonsingular input the product of the factors is |det|.
///
/// Elementary row/column operations with pivoting on a minimal absolute
/// value; the inputs here are small (Cartan matrices, stacked weight rows),
/// so no effort is spent on coefficient growth.
pub fn smith_normal_form(m: &SparseMat<Int>) -> Vec<Int> {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut a = vec![vec![Int::zero(); nc]; nr];
    for (r, c, v) in m.iter() {
        a[r][c] = v.clone();
    }
    let rank_bound = nr.min(nc);
    let mut k = 0;
    while k < rank_bound {
        // pick the nonzero entry of smallest |value| in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for r in k..nr {
            for c in k..nc {
                if !a[r][c].is_zero()
                    && pivot.is_none_or(|(pr, pc)| abs(&a[r][c]) < abs(&a[pr][pc]))
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(k, pr);
        for row in a.iter_mut() {
            row.swap(k, pc);
        }
        // clear row and column k by division with remainder; any remainder
        // becomes the new (smaller) pivot on the next pass
        let mut dirty = false;
        for r in k + 1..nr {
            if !a[r][k].is_zero() {
                let q = num_integer::Integer::div_floor(&a[r][k], &a[k][k]);
                for c in k..nc {
                    let t = &a[k][c] * &q;
                    a[r][c] -= t;
                }
                dirty |= !a[r][k].is_zero();
            }
        }
        for c in k + 1..nc {
            if !a[k][c].is_zero() {
                let q = num_integer::Integer::div_floor(&a[k][c], &a[k][k]);
                for r in k..nr {
                    let t = &a[r][k] * &q;
                    a[r][c] -= t;
                }
                dirty |= !a[k][c].is_zero();
            }
        }
        if dirty {
            continue;
        }
        // divisibility: fold any entry the pivot does not divide into column k
        let mut fixed = true;
        'scan: for r in k + 1..nr {
            for c in k + 1..nc {
                if !num_integer::Integer::is_multiple_of(&a[r][c], &a[k][k]) {
                    let row = a[r].clone();
                    for (cc, v) in row.into_iter().enumerate() {
                        a[k][cc] += v;
                    }
                    fixed = false;
                    break 'scan;
                }
            }
        }
        if fixed {
            k += 1;
        }
    }
    let mut factors: Vec<Int> = (0..rank_bound).map(|i| abs(&a[i][i])).collect();
    factors.sort_by_key(|d| d.is_zero()); // zeros last; nonzeros already form a chain
    factors
}

fn to_dense_rat(m: &SparseMat<Int>) -> Vec<Vec<Rat>> {
    let mut a = vec![vec![Rat::zero(); m.ncols()]; m.nrows()];
    for (r, c, v) in m.iter() {
        a[r][c] = Rat::from_integer(v.clone());
    }
    a
}

/// Row-reduce in place; returns the pivot column of each pivot row.
fn row_echelon(a: &mut [Vec<Rat>]) -> Vec<usize> {
    let nr = a.len();
    let nc = if nr == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..nc {
        let Some(p) = (row..nr).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for c in col..nc {
            let v = &a[row][c] * &inv;
            a[row][c] = v;
        }
        for r in 0..nr {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..nc {
                    let t = &a[row][c] * &f;
                    a[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nr {
            break;
        }
    }
    pivots
}

/// Exact solution of `m·x = rhs` for square `m`; `None` when `m` is singular.
pub fn solve_rational(m: &SparseMat<Int>, rhs: &[Int]) -> Option<Vec<Rat>> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "solve_rational needs a square matrix");
    assert_eq!(n, rhs.len(), "right-hand side length");
    let mut a = to_dense_rat(m);
    for (r, row) in a.iter_mut().enumerate() {
        row.push(Rat::from_integer(rhs[r].clone()));
    }
    let pivots = row_echelon(&mut a);
    // a pivot in the augmented column marks inconsistency; fewer than n
    // pivots in the coefficient block marks a singular matrix
    if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some((0..n).map(|r| a[r][n].clone()).collect())
}

/// A basis of the rational kernel of `m` (not necessarily square).
pub fn rational_kernel(m: &SparseMat<Int>) -> Vec<Vec<Rat>> {
    let nc = m.ncols();
    let mut a = to_dense_rat(m);
    let pivots = row_echelon(&mut a);
    let mut basis = Vec::new();
    for free in (0..nc).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); nc];
        v[free] = Rat::from_integer(Int::from(1));
        for (prow, &pcol) in pivots.iter().enumerate() {
            v[pcol] = -a[prow][free].clone();
        }
        basis.push(v);
    }
    basis
}
