use num_traits::{One, Signed, Zero};

use super::space::{GameSpace, StrategyProfile};
use crate::error::{Error, Result};
use crate::linalg::{stp_chain, Matrix, Rational};

/// A finite game: one payoff row `V_i` of length `k` per player, each row
/// ordered by profile index. The structure vector is the concatenation
/// `(V_1, ..., V_n)`.
///
/// Equality compares the space and the payoffs; the optional name is a
/// label only.
#[derive(Clone, Debug)]
pub struct Game {
    space: GameSpace,
    payoffs: Vec<Vec<Rational>>,
    name: Option<String>,
}

impl PartialEq for Game {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.payoffs == other.payoffs
    }
}

impl Eq for Game {}

impl Game {
    pub fn new(space: GameSpace, payoffs: Vec<Vec<Rational>>) -> Result<Self> {
        if payoffs.len() != space.players() {
            return Err(Error::PayoffCountMismatch(format!(
                "expected {} payoff rows, got {}",
                space.players(),
                payoffs.len()
            )));
        }
        if let Some((i, row)) = payoffs.iter().enumerate().find(|(_, r)| r.len() != space.profiles()) {
            return Err(Error::PayoffCountMismatch(format!(
                "payoff row {} has {} entries, expected {}",
                i + 1,
                row.len(),
                space.profiles()
            )));
        }
        Ok(Self { space, payoffs, name: None })
    }

    pub fn from_structure_vector(space: GameSpace, v: Vec<Rational>) -> Result<Self> {
        if v.len() != space.nk() {
            return Err(Error::PayoffCountMismatch(format!(
                "structure vector has length {}, expected {}",
                v.len(),
                space.nk()
            )));
        }
        let k = space.profiles();
        let payoffs = v.chunks(k).map(<[Rational]>::to_vec).collect();
        Ok(Self { space, payoffs, name: None })
    }

    pub fn from_i64(space: GameSpace, v: &[i64]) -> Result<Self> {
        Self::from_structure_vector(space, v.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn zero(space: GameSpace) -> Self {
        let payoffs = vec![vec![Rational::zero(); space.profiles()]; space.players()];
        Self { space, payoffs, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn space(&self) -> &GameSpace {
        &self.space
    }

    pub fn payoff_rows(&self) -> &[Vec<Rational>] {
        &self.payoffs
    }

    /// `(V_1, ..., V_n)` as one vector of length `nk`.
    pub fn structure_vector(&self) -> Vec<Rational> {
        self.payoffs.iter().flatten().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.payoffs.iter().flatten().all(Zero::is_zero)
    }

    /// `c_i(s)` for the 1-based player `i`.
    pub fn payoff(&self, player: usize, s: &StrategyProfile) -> Result<&Rational> {
        self.space.check_player(player)?;
        let idx = self.space.profile_index(s)?;
        Ok(&self.payoffs[player - 1][idx - 1])
    }

    /// `c_i(s)` via the semitensor product `V_i ⋉ δ_{k_1}^{s_1} ⋉ ... ⋉ δ_{k_n}^{s_n}`.
    pub fn payoff_by_stp(&self, player: usize, s: &StrategyProfile) -> Result<Rational> {
        self.space.check_player(player)?;
        self.space.validate_profile(s)?;
        let row = Matrix::new(1, self.space.profiles(), self.payoffs[player - 1].clone())?;
        let columns: Vec<Matrix> =
            s.choices().iter().zip(self.space.strategy_counts()).map(|(&c, &k)| Matrix::basis_column(k, c)).collect();
        let product = stp_chain(std::iter::once(&row).chain(&columns)).expect("nonempty chain");
        debug_assert_eq!(product.shape(), (1, 1));
        Ok(product[(0, 0)].clone())
    }

    /// Expected payoff `sum_s c_i(s) prod_j x_j(s_j)` of the 1-based player `i`.
    pub fn expected_payoff(&self, player: usize, x: &MixedProfile) -> Result<Rational> {
        self.space.check_player(player)?;
        if x.probabilities.len() != self.space.players()
            || x.probabilities.iter().zip(self.space.strategy_counts()).any(|(p, &k)| p.len() != k)
        {
            return Err(Error::InvalidMixedProfile("profile does not match the game space".into()));
        }
        let row = &self.payoffs[player - 1];
        let mut total = Rational::zero();
        for (idx, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut weight = Rational::one();
            for (j, d) in self.space.digits(idx).into_iter().enumerate() {
                let p = &x.probabilities[j][d];
                if p.is_zero() {
                    weight = Rational::zero();
                    break;
                }
                weight *= p;
            }
            if !weight.is_zero() {
                total += c * weight;
            }
        }
        Ok(total)
    }

    /// Entrywise sum; both games must share a space.
    pub fn checked_add(&self, other: &Game) -> Result<Game> {
        if self.space != other.space {
            return Err(Error::DimensionMismatch(format!("cannot add games over {} and {}", self.space, other.space)));
        }
        let payoffs = self
            .payoffs
            .iter()
            .zip(&other.payoffs)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Game { space: self.space.clone(), payoffs, name: None })
    }

    /// Payoff of the 0-based player `i` at the 0-based profile `idx`.
    pub(crate) fn at(&self, i: usize, idx: usize) -> &Rational {
        &self.payoffs[i][idx]
    }
}

/// Independent mixed strategies, one probability vector per player.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedProfile {
    probabilities: Vec<Vec<Rational>>,
}

impl MixedProfile {
    pub fn new(space: &GameSpace, probabilities: Vec<Vec<Rational>>) -> Result<Self> {
        if probabilities.len() != space.players() {
            return Err(Error::InvalidMixedProfile(format!(
                "expected {} distributions, got {}",
                space.players(),
                probabilities.len()
            )));
        }
        for (i, (p, &k)) in probabilities.iter().zip(space.strategy_counts()).enumerate() {
            if p.len() != k {
                return Err(Error::InvalidMixedProfile(format!(
                    "player {} distribution has {} entries, expected {k}",
                    i + 1,
                    p.len()
                )));
            }
            if p.iter().any(Signed::is_negative) {
                return Err(Error::InvalidMixedProfile(format!("player {} has a negative probability", i + 1)));
            }
            if !p.iter().sum::<Rational>().is_one() {
                return Err(Error::InvalidMixedProfile(format!("player {} probabilities do not sum to 1", i + 1)));
            }
        }
        Ok(Self { probabilities })
    }

    /// Every player randomizes uniformly: `x_i(s) = 1 / k_i`.
    pub fn uniform(space: &GameSpace) -> Self {
        let probabilities =
            space.strategy_counts().iter().map(|&k| vec![Rational::new(1.into(), k.into()); k]).collect();
        Self { probabilities }
    }

    /// All mass on the pure profile `s`.
    pub fn pure(space: &GameSpace, s: &StrategyProfile) -> Result<Self> {
        space.validate_profile(s)?;
        let probabilities = s
            .choices()
            .iter()
            .zip(space.strategy_counts())
            .map(|(&c, &k)| (1..=k).map(|t| if t == c { Rational::one() } else { Rational::zero() }).collect())
            .collect();
        Ok(Self { probabilities })
    }

    pub fn distribution(&self, player: usize) -> &[Rational] {
        &self.probabilities[player - 1]
    }

    /// Same profile with the 1-based player switched to the pure strategy `choice`.
    pub fn with_pure(&self, player: usize, choice: usize) -> Self {
        let mut out = self.clone();
        for (t, p) in out.probabilities[player - 1].iter_mut().enumerate() {
            *p = if t + 1 == choice { Rational::one() } else { Rational::zero() };
        }
        out
    }
}
