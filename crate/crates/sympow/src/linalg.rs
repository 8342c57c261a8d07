//! Exact rational Gaussian elimination: solving square systems, rank, and
//! kernel bases. Desk-scale dense routines used by the vertex enumeration.

use num_traits::Zero;

use crate::rational::Rational;

/// Reduced row echelon form, in place. Returns the pivot columns.
fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let scale = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &scale;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = &factor * p;
                    *x = &*x - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let mut rows = matrix.to_vec();
    rref(&mut rows).len()
}

/// Reduced row echelon form with zero rows dropped; returns the nonzero
/// rows and their pivot columns.
pub fn reduced_row_echelon(matrix: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut rows = matrix.to_vec();
    let pivots = rref(&mut rows);
    rows.truncate(pivots.len());
    (rows, pivots)
}

/// Unique solution of `A x = b` when `A` (not necessarily square) has full
/// column rank and the system is consistent; `None` otherwise.
pub fn solve_unique(matrix: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = matrix.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Rational>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows);
    // Inconsistent when the augmented column is a pivot.
    if pivots.contains(&ncols) {
        return None;
    }
    if pivots.len() != ncols {
        return None;
    }
    let mut solution = vec![Rational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        solution[c] = rows[i][ncols].clone();
    }
    Some(solution)
}

/// Basis of the null space of `A` acting on `dim`-vectors.
pub fn kernel_basis(matrix: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = matrix.to_vec();
    for row in &rows {
        debug_assert_eq!(row.len(), dim);
    }
    let pivots = rref(&mut rows);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Rational::zero(); dim];
        v[f] = Rational::from_integer(1.into());
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -rows[i][f].clone();
        }
        basis.push(v);
    }
    basis
}
