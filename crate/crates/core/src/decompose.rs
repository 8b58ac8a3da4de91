//! Decomposition into pure-potential, nonstrategic and pure-harmonic parts,
//! subspace membership, and potential functions.

use num_traits::Zero;

use crate::error::Result;
use crate::game::Game;
use crate::linalg::{solve_linear, Matrix, Rational};
use crate::projectors::{
    build_b_n_pinv, build_e_matrix, build_p_n, build_potential_factor, ProjectorSet, SubspaceKind,
};

/// `u = u_P + u_N + u_H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub pure_potential: Game,
    pub nonstrategic: Game,
    pub pure_harmonic: Game,
}

impl Decomposition {
    /// `u_P + u_N + u_H`, which reproduces the decomposed game.
    pub fn sum(&self) -> Game {
        self.pure_potential
            .checked_add(&self.nonstrategic)
            .and_then(|g| g.checked_add(&self.pure_harmonic))
            .expect("components share a space")
    }
}

/// Potential values indexed by profile, so `phi(s) = values[index(s) - 1]`.
/// Only defined up to an additive constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialFunction {
    values: Vec<Rational>,
}

impl PotentialFunction {
    pub fn new(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    /// The same function plus the constant `c`.
    pub fn shifted(&self, c: &Rational) -> Self {
        Self { values: self.values.iter().map(|v| v + c).collect() }
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }

    /// True when the two functions have equal length and differ by a
    /// constant vector.
    pub fn differs_by_constant(&self, other: &PotentialFunction) -> bool {
        if self.values.len() != other.values.len() {
            return false;
        }
        let mut diffs = self.values.iter().zip(&other.values).map(|(a, b)| a - b);
        match diffs.next() {
            None => true,
            Some(first) => diffs.all(|d| d == first),
        }
    }
}

pub fn decompose(g: &Game) -> Result<Decomposition> {
    decompose_with(&*ProjectorSet::cached(g.space())?, g)
}

/// Decomposition against an already built projector set.
pub fn decompose_with(set: &ProjectorSet, g: &Game) -> Result<Decomposition> {
    Ok(Decomposition {
        pure_potential: set.apply(SubspaceKind::PurePotential, g)?,
        nonstrategic: set.apply(SubspaceKind::Nonstrategic, g)?,
        pure_harmonic: set.apply(SubspaceKind::PureHarmonic, g)?,
    })
}

/// `P_kind u = u`, exactly.
pub fn is_member(g: &Game, kind: SubspaceKind) -> Result<bool> {
    ProjectorSet::cached(g.space())?.contains(kind, g)
}

/// Potential function by projection: the first `k` entries of
/// `L [P_N†; B_N†] u`, which reduce to `P_N† u = X P_Nᵀ u`. The additive
/// constant is zero, so the values sum to zero. `None` for games that are
/// not potential.
pub fn potential_function(g: &Game) -> Result<Option<PotentialFunction>> {
    let set = ProjectorSet::cached(g.space())?;
    if !set.contains(SubspaceKind::Potential, g)? {
        return Ok(None);
    }
    let space = g.space();
    let mut p_n_t_u = vec![Rational::zero(); space.profiles()];
    for i in 0..space.players() {
        let avg = own_average(g, i);
        for (idx, (acc, a)) in p_n_t_u.iter_mut().zip(avg).enumerate() {
            *acc += g.at(i, idx) - a;
        }
    }
    let values = set.group_inverse().mul_vec(&p_n_t_u)?;
    Ok(Some(PotentialFunction::new(values)))
}

/// Experimental: the full vector `L [P_N†; B_N†] u` for any game, of
/// length `k + sum_i k / k_i`. For potential games its first `k` entries
/// are [`potential_function`]; no meaning is claimed otherwise.
pub fn potential_block_vector(g: &Game) -> Result<Vec<Rational>> {
    let space = g.space();
    let set = ProjectorSet::cached(space)?;
    let p_n_pinv = set.group_inverse() * &build_p_n(space).transpose();
    let stacked = Matrix::vstack(&[p_n_pinv, build_b_n_pinv(space)])?;
    let operator = &build_potential_factor(space) * &stacked;
    operator.mul_vec(&g.structure_vector())
}

/// Potential function from the potential equation
/// `E_i ξ_i - E_1 ξ_1 = V_iᵀ - V_1ᵀ` for `i = 2..n`; when it is consistent
/// the potential is `V_1ᵀ - E_1 ξ_1`. `None` when inconsistent.
pub fn solve_potential_equation(g: &Game) -> Result<Option<PotentialFunction>> {
    let space = g.space();
    let n = space.players();
    let rows = g.payoff_rows();
    if n == 1 {
        // A single player's payoff is its own potential.
        return Ok(Some(PotentialFunction::new(rows[0].clone())));
    }
    let k = space.profiles();
    let e: Vec<Matrix> = (1..=n).map(|i| build_e_matrix(space, i)).collect::<Result<_>>()?;
    let offsets: Vec<usize> = e
        .iter()
        .scan(0, |acc, m| {
            let at = *acc;
            *acc += m.cols();
            Some(at)
        })
        .collect();
    let unknowns = offsets[n - 1] + e[n - 1].cols();

    let mut system = Matrix::zeros((n - 1) * k, unknowns);
    let mut rhs = Matrix::zeros((n - 1) * k, 1);
    let neg_e1 = -&e[0];
    for i in 1..n {
        let r0 = (i - 1) * k;
        system.set_block(r0, offsets[0], &neg_e1);
        system.set_block(r0, offsets[i], &e[i]);
        for idx in 0..k {
            rhs[(r0 + idx, 0)] = &rows[i][idx] - &rows[0][idx];
        }
    }
    let Some(xi) = solve_linear(&system, &rhs)? else {
        return Ok(None);
    };
    let xi_1 = xi.block(0, 0, e[0].cols(), 1);
    let correction = &e[0] * &xi_1;
    let values = (0..k).map(|idx| &rows[0][idx] - &correction[(idx, 0)]).collect();
    Ok(Some(PotentialFunction::new(values)))
}

/// Nonstrategic component by direct averaging:
/// `c'_i(x, y) = (1 / k_i) sum_{z in S^i} c_i(z, y)`.
pub fn nonstrategic_component_direct(g: &Game) -> Game {
    let space = g.space().clone();
    let payoffs = (0..space.players()).map(|i| own_average(g, i)).collect();
    Game::new(space, payoffs).expect("shape preserved")
}

/// Player `i`'s (0-based) payoff averaged over their own strategies, at
/// every profile.
pub(crate) fn own_average(g: &Game, i: usize) -> Vec<Rational> {
    let space = g.space();
    let k_i = space.strategy_counts()[i];
    let scale = Rational::new(1.into(), k_i.into());
    let mut out = vec![Rational::zero(); space.profiles()];
    for idx in 0..space.profiles() {
        if space.digit(idx, i) != 0 {
            continue;
        }
        let avg = (0..k_i).map(|x| g.at(i, space.deviate(idx, i, x))).sum::<Rational>() * &scale;
        for x in 0..k_i {
            out[space.deviate(idx, i, x)] = avg.clone();
        }
    }
    out
}
