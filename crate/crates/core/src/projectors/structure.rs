//! Structural matrices of a game space, built densely from Kronecker
//! products. Players are 1-based.

use crate::error::{Error, Result};
use crate::game::GameSpace;
use crate::linalg::{Matrix, Rational};

fn inv(k: usize) -> Rational {
    Rational::new(1.into(), k.into())
}

/// `E_i = I_{k^{[1,i-1]}} ⊗ 1_{k_i} ⊗ I_{k^{[i+1,n]}}`, of shape `k x k/k_i`.
pub fn build_e_matrix(space: &GameSpace, player: usize) -> Result<Matrix> {
    let k_i = space.strategies(player)?;
    let before = Matrix::identity(space.k_range(1, player - 1));
    let after = Matrix::identity(space.k_range(player + 1, space.players()));
    Ok(before.kron(&Matrix::ones_column(k_i)).kron(&after))
}

/// `e_i = E_i E_iᵀ`, the `k x k` matrix summing over player `i`'s strategies.
pub fn build_e(space: &GameSpace, player: usize) -> Result<Matrix> {
    let e = build_e_matrix(space, player)?;
    Ok(&e * &e.transpose())
}

/// `e_{N_s} = prod_{i in N_s} e_i`, with `I_k` for the empty set.
pub fn build_e_set(space: &GameSpace, players: &[usize]) -> Result<Matrix> {
    players.iter().try_fold(Matrix::identity(space.profiles()), |acc, &i| Ok(&acc * &build_e(space, i)?))
}

/// `B_N = E_1 ⊕ ... ⊕ E_n`, of shape `nk x sum_i k/k_i`.
pub fn build_b_n(space: &GameSpace) -> Matrix {
    let blocks: Vec<Matrix> =
        (1..=space.players()).map(|i| build_e_matrix(space, i).expect("player in range")).collect();
    Matrix::direct_sum(&blocks)
}

/// `B_P`: block row `i` is `[I_k, 0, .., E_i, .., 0]`; its image is the
/// potential subspace.
pub fn build_b_p(space: &GameSpace) -> Matrix {
    let k = space.profiles();
    let n = space.players();
    let b_n = build_b_n(space);
    let mut out = Matrix::zeros(n * k, k + b_n.cols());
    for i in 0..n {
        out.set_block(i * k, 0, &Matrix::identity(k));
    }
    out.set_block(0, k, &b_n);
    out
}

/// `P_N`: the `nk x k` stack of `I_k - e_i / k_i`; its image is the
/// pure-potential subspace.
pub fn build_p_n(space: &GameSpace) -> Matrix {
    let k = space.profiles();
    let blocks: Vec<Matrix> = (1..=space.players())
        .map(|i| {
            let e = build_e(space, i).expect("player in range");
            &Matrix::identity(k) - &e.scale(&inv(space.strategy_counts()[i - 1]))
        })
        .collect();
    Matrix::vstack(&blocks).expect("equal widths")
}

/// `sum_i (I_k - e_i / k_i)`, whose group inverse drives the pure-potential
/// projection.
pub fn build_complement_sum(space: &GameSpace) -> Matrix {
    let k = space.profiles();
    (1..=space.players()).fold(Matrix::zeros(k, k), |acc, i| {
        let e = build_e(space, i).expect("player in range");
        let term = &Matrix::identity(k) - &e.scale(&inv(space.strategy_counts()[i - 1]));
        &acc + &term
    })
}

/// `(1/k_1) E_1ᵀ ⊕ ... ⊕ (1/k_n) E_nᵀ`, the pseudo-inverse of `B_N` in closed form.
pub fn build_b_n_pinv(space: &GameSpace) -> Matrix {
    let blocks: Vec<Matrix> = (1..=space.players())
        .map(|i| {
            build_e_matrix(space, i).expect("player in range").transpose().scale(&inv(space.strategy_counts()[i - 1]))
        })
        .collect();
    Matrix::direct_sum(&blocks)
}

/// The unit lower-triangular factor `L` with `[P_N, B_N] = B_P L`:
/// first block column `[I_k; -(1/k_1) E_1ᵀ; ...; -(1/k_n) E_nᵀ]`, identity
/// elsewhere on the diagonal.
pub fn build_potential_factor(space: &GameSpace) -> Matrix {
    let k = space.profiles();
    let b_n_pinv = build_b_n_pinv(space);
    let size = k + b_n_pinv.rows();
    let mut out = Matrix::identity(size);
    let column = Matrix::vstack(
        &(1..=space.players())
            .map(|i| {
                let e_t = build_e_matrix(space, i).expect("player in range").transpose();
                e_t.scale(&-inv(space.strategy_counts()[i - 1]))
            })
            .collect::<Vec<_>>(),
    )
    .expect("equal widths");
    out.set_block(k, 0, &column);
    out
}

/// Row selector for `F_iᵀ = (δ^{s_<i})ᵀ ⊗ I_{k_i} ⊗ (δ^{s_>i})ᵀ`: picks the
/// `k_i` profiles that agree with `s` everywhere except player `i`.
pub fn build_deviation_selector(space: &GameSpace, player: usize, s: &[usize]) -> Result<Matrix> {
    let k_i = space.strategies(player)?;
    if s.len() != space.players() {
        return Err(Error::IndexOutOfRange("profile length differs from player count".into()));
    }
    let prefix = sub_profile_index(space, s, 1, player - 1);
    let suffix = sub_profile_index(space, s, player + 1, space.players());
    let before = Matrix::basis_column(space.k_range(1, player - 1), prefix).transpose();
    let after = Matrix::basis_column(space.k_range(player + 1, space.players()), suffix).transpose();
    Ok(before.kron(&Matrix::identity(k_i)).kron(&after))
}

/// 1-based index of the sub-profile `s_p..s_q` within `k^{[p,q]}` profiles.
fn sub_profile_index(space: &GameSpace, s: &[usize], p: usize, q: usize) -> usize {
    if q < p {
        return 1;
    }
    let counts = space.strategy_counts();
    (p..=q).fold(0usize, |acc, i| acc * counts[i - 1] + (s[i - 1] - 1)) + 1
}

/// `sum_i k / k_i`, the number of columns of `B_N`.
pub fn nonstrategic_dim(space: &GameSpace) -> usize {
    space.strategy_counts().iter().map(|&k_i| space.profiles() / k_i).sum()
}
