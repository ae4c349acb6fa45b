//! Exact Gaussian elimination over the rationals.

use num_rational::BigRational;
use num_traits::Zero;

/// Reduces `rows` in place to row echelon form and returns the pivot columns.
fn echelon(rows: &mut [Vec<BigRational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &pivot;
        }
        let src = rows[r].clone();
        for (i, dst) in rows.iter_mut().enumerate() {
            if i != r && !dst[c].is_zero() {
                let f = dst[c].clone();
                for (d, s) in dst.iter_mut().zip(&src) {
                    *d -= &f * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    echelon(&mut rows).len()
}

/// Solves the square system `matrix · x = rhs`; `None` when singular.
pub(crate) fn solve(
    matrix: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<BigRational>> = matrix
        .into_iter()
        .zip(rhs)
        .map(|(mut row, b)| {
            row.push(b);
            row
        })
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.len() != n || pivots.last() == Some(&n) {
        return None;
    }
    Some(aug.into_iter().map(|mut row| row.pop().unwrap()).collect())
}
