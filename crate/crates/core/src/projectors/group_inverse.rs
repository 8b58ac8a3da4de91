//! Group inverse of `A = sum_i (I_k - e_i / k_i)`.
//!
//! Two routes, both expressed in the averaging-operator algebra
//! ([`SubsetPoly`]): the closed form with harmonic-number tail, and the
//! generic solve of `A² X = A` followed by `A♯ = A X²`.
//!
//! Players with a single strategy contribute `e_i / k_i = I`, which is the
//! image of `f_i` under [`SubsetPoly::restrict`]. The space-level functions
//! therefore work over the strategic players only; the resulting matrix is
//! the same.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use super::subset_poly::{ordered_subsets, SubsetPoly};
use crate::error::{Error, Result};
use crate::game::GameSpace;
use crate::linalg::{solve_linear, Matrix, Rational};

/// Largest variable count accepted by [`algorithm1_coefficients`]; the
/// coefficient system has `2^vars` unknowns.
pub const MAX_SUBSET_SOLVE_VARS: usize = 8;

/// `A = n I - sum_i f_i` in the averaging-operator algebra.
pub fn complement_sum_poly(vars: usize) -> SubsetPoly {
    let n = Rational::from_integer(vars.into());
    (0..vars).fold(SubsetPoly::one(vars).scale(&n), |acc, i| &acc - &SubsetPoly::var(vars, i))
}

/// Closed-form group inverse of `A` for `n` players:
///
/// `sum_{j<n} sum_{|S|=j} f_S / ((n - j) C(n, j))  -  H_n f_{[1,n]}`
///
/// where `H_n` is the `n`-th harmonic number.
pub fn closed_form_coefficients(vars: usize) -> SubsetPoly {
    if vars == 0 {
        // A = 0, whose group inverse is 0.
        return SubsetPoly::zero(0);
    }
    let full = (1usize << vars) - 1;
    let harmonic: Rational = (1..=vars).map(|i| Rational::new(1.into(), i.into())).sum();
    let coeffs = (0..=full)
        .map(|mask| {
            let j = mask.count_ones() as usize;
            if mask == full {
                -harmonic.clone()
            } else {
                let c = binomial(BigInt::from(vars), BigInt::from(j));
                Rational::new(1.into(), BigInt::from(vars - j) * c)
            }
        })
        .collect();
    SubsetPoly::from_coeffs(vars, coeffs)
}

/// Group inverse of `A` by solving `A² D = A` for the coefficients `d_S`
/// of `D = sum_S d_S f_S` (unknowns ordered by cardinality then
/// lexicographically, free ones set to zero) and returning `A D²`.
pub fn algorithm1_coefficients(vars: usize) -> Result<SubsetPoly> {
    if vars > MAX_SUBSET_SOLVE_VARS {
        return Err(Error::TooManyPlayers { players: vars, max: MAX_SUBSET_SOLVE_VARS });
    }
    let a = complement_sum_poly(vars);
    let a2 = a.square();
    let order = ordered_subsets(vars);
    let size = order.len();

    // Column t holds the coefficients of A² f_{order[t]}, rows in the same order.
    let mut system = Matrix::zeros(size, size);
    for (t, &mask) in order.iter().enumerate() {
        let image = &a2 * &SubsetPoly::term(vars, mask, Rational::from_integer(1.into()));
        for (r, &row_mask) in order.iter().enumerate() {
            system[(r, t)] = image.coeff(row_mask).clone();
        }
    }
    let rhs = Matrix::from_fn(size, 1, |r, _| a.coeff(order[r]).clone());
    let d = solve_linear(&system, &rhs)?
        .ok_or_else(|| Error::Internal("coefficient system for A² X = A is inconsistent".into()))?;

    let mut coeffs = vec![Rational::zero(); size];
    for (t, &mask) in order.iter().enumerate() {
        coeffs[mask] = d[(t, 0)].clone();
    }
    let d = SubsetPoly::from_coeffs(vars, coeffs);
    Ok(&a * &d.square())
}

/// Closed-form group inverse `X` as a `k x k` matrix.
pub fn group_inverse_closed_form(space: &GameSpace) -> Matrix {
    let players = space.strategic_players();
    closed_form_coefficients(players.len()).materialize(space, &players)
}

/// Group inverse `X` via the coefficient solve, as a `k x k` matrix.
pub fn group_inverse_algorithm1(space: &GameSpace) -> Result<Matrix> {
    let players = space.strategic_players();
    Ok(algorithm1_coefficients(players.len())?.materialize(space, &players))
}
