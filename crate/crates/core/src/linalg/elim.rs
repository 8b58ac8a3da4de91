//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Rational rows are first scaled by the lcm of their denominators, which
//! changes neither the row space nor the solution set of a linear system.
//! Every intermediate entry is then a minor of the scaled input, so the
//! divisions by the previous pivot are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::{denominator_lcm, Rational};
use crate::error::{Error, Result};

/// Row echelon form produced by [`bareiss`]. `pivots[r]` is the pivot column
/// of row `r`; rows at or beyond `pivots.len()` vanish on the pivot columns.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = denominator_lcm(row);
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

/// Eliminates in place, searching for pivots only among the first
/// `pivot_cols` columns while updating every column.
fn bareiss(mut rows: Vec<Vec<BigInt>>, pivot_cols: usize) -> Echelon {
    let m = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();

    for col in 0..pivot_cols {
        let r = pivots.len();
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);

        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[col];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..width {
                let num = pivot * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        prev = rows[r][col].clone();
        pivots.push(col);
    }
    Echelon { rows, pivots }
}

fn echelon_of(a: &Matrix) -> Echelon {
    let rows = (0..a.rows()).map(|r| integer_row(a.row(r))).collect();
    bareiss(rows, a.cols())
}

/// Rank over the rationals.
pub fn rank(a: &Matrix) -> usize {
    echelon_of(a).pivots.len()
}

/// Columns of `a` that carry pivots in its echelon form, in increasing order.
/// They form a basis of the column space.
pub fn pivot_columns(a: &Matrix) -> Vec<usize> {
    echelon_of(a).pivots
}

/// Finds some `X` with `a * X = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero, so the result is the
/// deterministic particular solution of the elimination order.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!("solve_linear: lhs has {} rows, rhs has {}", a.rows(), b.rows())));
    }
    let n = a.cols();
    let rhs_cols = b.cols();
    let rows = (0..a.rows())
        .map(|r| {
            let joined: Vec<Rational> = a.row(r).iter().chain(b.row(r)).cloned().collect();
            integer_row(&joined)
        })
        .collect();
    let Echelon { rows, pivots } = bareiss(rows, n);

    let consistent = rows[pivots.len()..].iter().all(|row| row[n..].iter().all(Zero::is_zero));
    if !consistent {
        return Ok(None);
    }

    let mut x = Matrix::zeros(n, rhs_cols);
    for (r, &pc) in pivots.iter().enumerate().rev() {
        let row = &rows[r];
        let diag = Rational::from_integer(row[pc].clone());
        for t in 0..rhs_cols {
            let mut acc = Rational::from_integer(row[n + t].clone());
            for &qc in &pivots[r + 1..] {
                if !row[qc].is_zero() {
                    acc -= Rational::from_integer(row[qc].clone()) * &x[(qc, t)];
                }
            }
            x[(pc, t)] = acc / &diag;
        }
    }
    Ok(Some(x))
}

/// Inverse of a nonsingular square matrix; `None` when singular.
pub fn inverse(a: &Matrix) -> Result<Option<Matrix>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if rank(a) < a.rows() {
        return Ok(None);
    }
    solve_linear(a, &Matrix::identity(a.rows()))
}
