use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Upper bound on `n * k` accepted by default; every projection matrix is
/// a dense `nk x nk` rational matrix.
pub const DEFAULT_SPACE_CAP: usize = 4096;

/// The signature `[n; k_1, ..., k_n]` of a finite game space.
///
/// Players and strategies are 1-based in the public API. Profiles are
/// ordered with player 1 as the most significant digit, which is the order
/// produced by the semitensor product of strategy basis columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameSpace {
    counts: Vec<usize>,
    profiles: usize,
}

impl GameSpace {
    pub fn new(strategy_counts: Vec<usize>) -> Result<Self> {
        Self::with_cap(strategy_counts, DEFAULT_SPACE_CAP)
    }

    pub fn with_cap(strategy_counts: Vec<usize>, cap: usize) -> Result<Self> {
        if strategy_counts.is_empty() {
            return Err(Error::InvalidSpace("a game needs at least one player".into()));
        }
        if let Some(i) = strategy_counts.iter().position(|&k| k == 0) {
            return Err(Error::InvalidSpace(format!("player {} has no strategies", i + 1)));
        }
        let overflow = || Error::SpaceCapExceeded { nk: usize::MAX, cap };
        let profiles = strategy_counts.iter().try_fold(1usize, |acc, &k| acc.checked_mul(k)).ok_or_else(overflow)?;
        let nk = profiles.checked_mul(strategy_counts.len()).ok_or_else(overflow)?;
        if nk > cap {
            return Err(Error::SpaceCapExceeded { nk, cap });
        }
        Ok(Self { counts: strategy_counts, profiles })
    }

    /// Number of players `n`.
    pub fn players(&self) -> usize {
        self.counts.len()
    }

    pub fn strategy_counts(&self) -> &[usize] {
        &self.counts
    }

    /// `k_i` for the 1-based player `i`.
    pub fn strategies(&self, player: usize) -> Result<usize> {
        self.check_player(player)?;
        Ok(self.counts[player - 1])
    }

    /// Number of strategy profiles `k = k_1 * ... * k_n`.
    pub fn profiles(&self) -> usize {
        self.profiles
    }

    /// Length `n * k` of a structure vector.
    pub fn nk(&self) -> usize {
        self.players() * self.profiles
    }

    /// `k^{[p,q]}`: product of `k_p..=k_q` (1-based), or 1 when `q < p`.
    pub fn k_range(&self, p: usize, q: usize) -> usize {
        if q < p {
            return 1;
        }
        assert!(p >= 1 && q <= self.players(), "k_range({p}, {q}) out of bounds");
        self.counts[p - 1..q].iter().product()
    }

    /// Players with at least two strategies, 0-based.
    pub fn strategic_players(&self) -> Vec<usize> {
        (0..self.players()).filter(|&i| self.counts[i] > 1).collect()
    }

    pub fn has_trivial_player(&self) -> bool {
        self.counts.contains(&1)
    }

    pub(crate) fn check_player(&self, player: usize) -> Result<()> {
        if player == 0 || player > self.players() {
            return Err(Error::IndexOutOfRange(format!("player {player} not in 1..={}", self.players())));
        }
        Ok(())
    }

    /// Distance in profile-index units between consecutive strategies of the
    /// 0-based player `i`, i.e. `k^{[i+2,n]}` in 1-based terms.
    pub(crate) fn stride(&self, i: usize) -> usize {
        self.counts[i + 1..].iter().product()
    }

    /// 0-based strategy digits of the 0-based profile index `idx`.
    pub(crate) fn digits(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0; self.players()];
        for (slot, &k) in out.iter_mut().zip(&self.counts).rev() {
            *slot = idx % k;
            idx /= k;
        }
        out
    }

    /// 0-based strategy of the 0-based player `i` in the 0-based profile `idx`.
    pub(crate) fn digit(&self, idx: usize, i: usize) -> usize {
        (idx / self.stride(i)) % self.counts[i]
    }

    /// Profile index reached when the 0-based player `i` switches to the
    /// 0-based strategy `choice`.
    pub(crate) fn deviate(&self, idx: usize, i: usize, choice: usize) -> usize {
        let stride = self.stride(i);
        let current = (idx / stride) % self.counts[i];
        idx - current * stride + choice * stride
    }

    /// 1-based profile index: `1 + sum_i (s_i - 1) * k^{[i+1,n]}`.
    pub fn profile_index(&self, s: &StrategyProfile) -> Result<usize> {
        self.validate_profile(s)?;
        let idx = s.choices().iter().zip(&self.counts).fold(0usize, |acc, (&c, &k)| acc * k + (c - 1));
        Ok(idx + 1)
    }

    /// Inverse of [`GameSpace::profile_index`].
    pub fn index_profile(&self, index: usize) -> Result<StrategyProfile> {
        if index == 0 || index > self.profiles {
            return Err(Error::IndexOutOfRange(format!("profile index {index} not in 1..={}", self.profiles)));
        }
        Ok(StrategyProfile(self.digits(index - 1).into_iter().map(|d| d + 1).collect()))
    }

    pub fn validate_profile(&self, s: &StrategyProfile) -> Result<()> {
        if s.0.len() != self.players() {
            return Err(Error::IndexOutOfRange(format!(
                "profile has {} entries, space has {} players",
                s.0.len(),
                self.players()
            )));
        }
        for (i, (&c, &k)) in s.0.iter().zip(&self.counts).enumerate() {
            if c == 0 || c > k {
                return Err(Error::IndexOutOfRange(format!("player {} strategy {c} not in 1..={k}", i + 1)));
            }
        }
        Ok(())
    }

    /// All profiles in index order.
    pub fn all_profiles(&self) -> impl Iterator<Item = StrategyProfile> + '_ {
        (0..self.profiles).map(|idx| StrategyProfile(self.digits(idx).into_iter().map(|d| d + 1).collect()))
    }
}

impl fmt::Display for GameSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ks: Vec<String> = self.counts.iter().map(ToString::to_string).collect();
        write!(f, "[{};{}]", self.players(), ks.join(","))
    }
}

/// Accepts `n:k1,k2,...` or `[n;k1,k2,...]`.
impl FromStr for GameSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpace(format!("cannot parse space {s:?}; expected n:k1,k2,..."));
        let t = s.trim();
        let t = t.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(t);
        let (n, ks) = t.split_once([':', ';']).ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let ks = ks.split(',').map(|k| k.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        if ks.len() != n {
            return Err(Error::InvalidSpace(format!(
                "space {s:?} declares {n} players but lists {} strategy counts",
                ks.len()
            )));
        }
        Self::new(ks)
    }
}

/// A pure strategy profile `(s_1, ..., s_n)` with 1-based strategies.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct StrategyProfile(Vec<usize>);

impl StrategyProfile {
    pub fn new(choices: Vec<usize>) -> Self {
        Self(choices)
    }

    pub fn choices(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for StrategyProfile {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}
