//! Generalized inverses. Both serve as independent oracles for the
//! closed-form projections.

use super::elim::{inverse, pivot_columns, solve_linear};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Moore-Penrose inverse via a full-rank factorization `A = F G`:
/// `A† = Gᵀ (G Gᵀ)⁻¹ (Fᵀ F)⁻¹ Fᵀ`. `F` is the set of pivot columns of `A`
/// and `G` the unique coefficients expressing `A` in that basis.
pub fn mp_inverse(a: &Matrix) -> Matrix {
    let pivots = pivot_columns(a);
    if pivots.is_empty() {
        return Matrix::zeros(a.cols(), a.rows());
    }
    let f = a.select_columns(&pivots);
    let g = solve_linear(&f, a).expect("shapes agree by construction").expect("pivot columns span the column space");

    let ft = f.transpose();
    let gt = g.transpose();
    let ftf_inv = inverse(&(&ft * &f)).expect("square").expect("F has full column rank");
    let ggt_inv = inverse(&(&g * &gt)).expect("square").expect("G has full row rank");
    &(&(&gt * &ggt_inv) * &ftf_inv) * &ft
}

/// Group inverse through the characterization: `A` has a group inverse iff
/// `A² X = A` is solvable, and then `A♯ = A X²` for any solution `X`.
/// Returns `None` when no group inverse exists.
pub fn group_inverse_via_solve(a: &Matrix) -> Result<Option<Matrix>> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let a2 = a * a;
    Ok(solve_linear(&a2, a)?.map(|x| &(a * &x) * &x))
}

/// True when `x` satisfies all four Penrose equations for `a`.
pub fn is_penrose_inverse(a: &Matrix, x: &Matrix) -> bool {
    if x.shape() != (a.cols(), a.rows()) {
        return false;
    }
    let ax = a * x;
    let xa = x * a;
    &ax * a == *a && &xa * x == *x && ax.is_symmetric() && xa.is_symmetric()
}

/// True when `x` satisfies `AXA = A`, `XAX = X` and `AX = XA`.
pub fn is_group_inverse(a: &Matrix, x: &Matrix) -> bool {
    if !a.is_square() || x.shape() != a.shape() {
        return false;
    }
    let ax = a * x;
    let xa = x * a;
    &ax * a == *a && &xa * x == *x && ax == xa
}
