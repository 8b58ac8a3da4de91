//! Checks stated directly from the subspace definitions, independent of the
//! projection matrices, and Nash-equilibrium analyses.

use num_traits::Zero;
use serde::Serialize;

use crate::decompose::{own_average, PotentialFunction};
use crate::error::{Error, Result};
use crate::game::{Game, GameSpace, MixedProfile, StrategyProfile};
use crate::linalg::{rank, Matrix, Rational};
use crate::projectors::{build_b_n, build_deviation_selector};

/// Every player's payoff equals its average over their own strategies.
pub fn check_nonstrategic_defn(g: &Game) -> bool {
    (0..g.space().players()).all(|i| own_average(g, i) == g.payoff_rows()[i])
}

/// Payoffs sum to zero at every profile, and each player's payoff sums to
/// zero over their own strategies.
pub fn check_pure_harmonic_defn(g: &Game) -> bool {
    let space = g.space();
    let zero_sum =
        (0..space.profiles()).all(|idx| (0..space.players()).map(|i| g.at(i, idx)).sum::<Rational>().is_zero());
    zero_sum && (0..space.players()).all(|i| own_average(g, i).iter().all(Zero::is_zero))
}

/// `sum_i [(1/k_i) sum_x c_i(x, s_-i) - c_i(s)] = 0` for every profile `s`.
pub fn check_harmonic_defn(g: &Game) -> bool {
    let space = g.space();
    let averages: Vec<_> = (0..space.players()).map(|i| own_average(g, i)).collect();
    (0..space.profiles())
        .all(|idx| (0..space.players()).map(|i| &averages[i][idx] - g.at(i, idx)).sum::<Rational>().is_zero())
}

/// `c_i(x, z) - c_i(y, z) = phi(x, z) - phi(y, z)` for every player `i`,
/// every pair of their strategies and every profile `z` of the others.
pub fn check_potential_defn(g: &Game, phi: &PotentialFunction) -> Result<bool> {
    let space = g.space();
    let values = phi.values();
    if values.len() != space.profiles() {
        return Err(Error::DimensionMismatch(format!(
            "potential has {} values, space has {} profiles",
            values.len(),
            space.profiles()
        )));
    }
    for i in 0..space.players() {
        let k_i = space.strategy_counts()[i];
        for base in (0..space.profiles()).filter(|&idx| space.digit(idx, i) == 0) {
            for x in 0..k_i {
                let sx = space.deviate(base, i, x);
                for y in x + 1..k_i {
                    let sy = space.deviate(base, i, y);
                    if g.at(i, sx) - g.at(i, sy) != &values[sx] - &values[sy] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// All pure Nash equilibria: profiles where no player gains strictly by a
/// unilateral deviation. Ties count as equilibria.
pub fn pure_nash(g: &Game) -> Vec<StrategyProfile> {
    let space = g.space();
    (0..space.profiles())
        .filter(|&idx| {
            (0..space.players()).all(|i| {
                let here = g.at(i, idx);
                (0..space.strategy_counts()[i]).all(|x| g.at(i, space.deviate(idx, i, x)) <= here)
            })
        })
        .map(|idx| space.index_profile(idx + 1).expect("index in range"))
        .collect()
}

/// Whether the uniformly mixed profile is a Nash equilibrium: no player
/// gains by switching to any pure strategy.
pub fn uniform_mixed_nash_check(g: &Game) -> bool {
    let space = g.space();
    let uniform = MixedProfile::uniform(space);
    (1..=space.players()).all(|i| {
        let at_uniform = g.expected_payoff(i, &uniform).expect("profile matches space");
        (1..=space.strategies(i).expect("player in range"))
            .all(|r| g.expected_payoff(i, &uniform.with_pure(i, r)).expect("profile matches space") <= at_uniform)
    })
}

/// For a pure harmonic game, `s` is a pure Nash equilibrium iff
/// `c_i(x, s_-i) = 0` for every player `i` and every `x` in `S^i`.
pub fn harmonic_pure_nash_zero_check(g: &Game, s: &StrategyProfile) -> Result<bool> {
    if !check_pure_harmonic_defn(g) {
        return Err(Error::Precondition("game is not pure harmonic".into()));
    }
    let space = g.space();
    let idx = space.profile_index(s)? - 1;
    Ok((0..space.players())
        .all(|i| (0..space.strategy_counts()[i]).all(|x| g.at(i, space.deviate(idx, i, x)).is_zero())))
}

/// Dimension of the pure harmonic games for which `s` is a pure Nash
/// equilibrium: `nk - rank(G_s)`, with `G_s` stacking `1_nᵀ ⊗ I_k`,
/// `E_1ᵀ ⊕ ... ⊕ E_nᵀ` and `F_1ᵀ ⊕ ... ⊕ F_nᵀ`, where `F_iᵀ` reads player
/// `i`'s payoffs along their deviations from `s`.
pub fn harmonic_nash_kernel_dim(space: &GameSpace, s: &StrategyProfile) -> Result<usize> {
    space.validate_profile(s)?;
    let k = space.profiles();
    let n = space.players();
    let sum_rows = Matrix::ones(1, n).kron(&Matrix::identity(k));
    let averages = build_b_n(space).transpose();
    let selectors = (1..=n).map(|i| build_deviation_selector(space, i, s.choices())).collect::<Result<Vec<_>>>()?;
    let g_s = Matrix::vstack(&[sum_rows, averages, Matrix::direct_sum(&selectors)])?;
    Ok(n * k - rank(&g_s))
}

/// Pure equilibria (1-based profiles) and whether uniform mixing is an
/// equilibrium.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NashReport {
    pub pure_equilibria: Vec<StrategyProfile>,
    pub uniform_mixed_is_nash: bool,
}

pub fn nash_report(g: &Game) -> NashReport {
    NashReport { pure_equilibria: pure_nash(g), uniform_mixed_is_nash: uniform_mixed_nash_check(g) }
}
