//! Small exact linear algebra over the rationals.

use num_traits::Zero;

use crate::Rational;

/// Solves `A x = b` for a consistent system with `A` of full column rank.
///
/// `columns[j]` is the j-th column of `A`. Returns `None` when the system
/// is inconsistent or under-determined.
pub(crate) fn solve_columns(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let unknowns = columns.len();
    let rows = rhs.len();
    if columns.iter().any(|c| c.len() != rows) {
        return None;
    }
    // augmented row-major matrix
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i]).collect();
            row.push(rhs[i]);
            row
        })
        .collect();

    let mut pivot_row = 0;
    for col in 0..unknowns {
        let p = (pivot_row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, p);
        let pivot = m[pivot_row][col];
        for x in m[pivot_row].iter_mut() {
            *x /= pivot;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col];
                let pivot_vals = m[pivot_row].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_vals) {
                    *x -= factor * *y;
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    Some((0..unknowns).map(|i| m[i][unknowns]).collect())
}

pub(crate) fn int_columns(columns: &[Vec<i32>]) -> Vec<Vec<Rational>> {
    columns
        .iter()
        .map(|c| c.iter().map(|&x| Rational::from_integer(x as i64)).collect())
        .collect()
}
