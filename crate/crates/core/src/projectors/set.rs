use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::group_inverse::closed_form_coefficients;
use super::subset_poly::SubsetPoly;
use crate::error::{Error, Result};
use crate::game::{Game, GameSpace, DEFAULT_SPACE_CAP};
use crate::linalg::Matrix;

/// The five canonical game subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubspaceKind {
    PurePotential,
    Nonstrategic,
    PureHarmonic,
    Potential,
    Harmonic,
}

impl SubspaceKind {
    pub const ALL: [SubspaceKind; 5] = [
        SubspaceKind::PurePotential,
        SubspaceKind::Nonstrategic,
        SubspaceKind::PureHarmonic,
        SubspaceKind::Potential,
        SubspaceKind::Harmonic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubspaceKind::PurePotential => "pure-potential",
            SubspaceKind::Nonstrategic => "nonstrategic",
            SubspaceKind::PureHarmonic => "pure-harmonic",
            SubspaceKind::Potential => "potential",
            SubspaceKind::Harmonic => "harmonic",
        }
    }
}

impl fmt::Display for SubspaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubspaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// Dimension of a subspace of `G_[n; k_1..k_n]`, from the closed formulas.
pub fn dimension(space: &GameSpace, kind: SubspaceKind) -> usize {
    let n = space.players();
    let k = space.profiles();
    let ns: usize = space.strategy_counts().iter().map(|&k_i| k / k_i).sum();
    match kind {
        SubspaceKind::Nonstrategic => ns,
        SubspaceKind::PurePotential => k - 1,
        SubspaceKind::Potential => k + ns - 1,
        SubspaceKind::PureHarmonic => (n - 1) * k + 1 - ns,
        SubspaceKind::Harmonic => (n - 1) * k + 1,
    }
}

/// The orthogonal projections onto the five subspaces over one game space,
/// together with the group inverse `X` of `sum_i (I_k - e_i / k_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorSet {
    space: GameSpace,
    pure_potential: Matrix,
    nonstrategic: Matrix,
    pure_harmonic: Matrix,
    potential: Matrix,
    harmonic: Matrix,
    group_inverse: Matrix,
}

impl ProjectorSet {
    pub fn build(space: &GameSpace) -> Result<Self> {
        Self::build_with_cap(space, DEFAULT_SPACE_CAP)
    }

    /// Builds every projection. `P_P = P_N X P_Nᵀ` is assembled block by
    /// block: block `(a, b)` is `(I - f_a) X (I - f_b)` with `f_i = e_i / k_i`,
    /// evaluated in the averaging-operator algebra before materializing.
    pub fn build_with_cap(space: &GameSpace, cap: usize) -> Result<Self> {
        if space.nk() > cap {
            return Err(Error::SpaceCapExceeded { nk: space.nk(), cap });
        }
        let n = space.players();
        let k = space.profiles();
        let strategic = space.strategic_players();
        let vars = strategic.len();
        let x_poly = closed_form_coefficients(vars);
        let group_inverse = x_poly.materialize(space, &strategic);

        // 1 - f_i for each player; zero for a single-strategy player.
        let complement: Vec<Option<SubsetPoly>> = (0..n)
            .map(|p| strategic.iter().position(|&q| q == p).map(|j| &SubsetPoly::one(vars) - &SubsetPoly::var(vars, j)))
            .collect();

        let mut pure_potential = Matrix::zeros(n * k, n * k);
        for a in 0..n {
            let Some(ca) = &complement[a] else { continue };
            let left = ca * &x_poly;
            for (b, cb) in complement.iter().enumerate().skip(a) {
                let Some(cb) = cb else { continue };
                let block = (&left * cb).materialize(space, &strategic);
                if b != a {
                    pure_potential.set_block(b * k, a * k, &block.transpose());
                }
                pure_potential.set_block(a * k, b * k, &block);
            }
        }

        let blocks: Vec<Matrix> = (0..n)
            .map(|p| match strategic.iter().position(|&q| q == p) {
                Some(j) => SubsetPoly::var(vars, j).materialize(space, &strategic),
                None => Matrix::identity(k),
            })
            .collect();
        let nonstrategic = Matrix::direct_sum(&blocks);

        let identity = Matrix::identity(n * k);
        let pure_harmonic = &(&identity - &pure_potential) - &nonstrategic;
        let potential = &pure_potential + &nonstrategic;
        let harmonic = &identity - &pure_potential;

        Ok(Self {
            space: space.clone(),
            pure_potential,
            nonstrategic,
            pure_harmonic,
            potential,
            harmonic,
            group_inverse,
        })
    }

    /// Shared instance for `space`, built at most once per signature.
    pub fn cached(space: &GameSpace) -> Result<Arc<ProjectorSet>> {
        type Slot = Arc<OnceLock<Arc<ProjectorSet>>>;
        static CACHE: OnceLock<Mutex<HashMap<GameSpace, Slot>>> = OnceLock::new();

        if space.nk() > DEFAULT_SPACE_CAP {
            return Err(Error::SpaceCapExceeded { nk: space.nk(), cap: DEFAULT_SPACE_CAP });
        }
        let slot = {
            let mut map = CACHE.get_or_init(Default::default).lock().unwrap_or_else(|poisoned| poisoned.into_inner());
            map.entry(space.clone()).or_default().clone()
        };
        // The map lock is released; concurrent callers for the same space
        // block on the slot while one of them builds. The cap check above
        // is the only way a build can fail.
        let set = slot.get_or_init(|| Arc::new(ProjectorSet::build(space).expect("space within cap")));
        Ok(set.clone())
    }

    pub fn space(&self) -> &GameSpace {
        &self.space
    }

    pub fn projection(&self, kind: SubspaceKind) -> &Matrix {
        match kind {
            SubspaceKind::PurePotential => &self.pure_potential,
            SubspaceKind::Nonstrategic => &self.nonstrategic,
            SubspaceKind::PureHarmonic => &self.pure_harmonic,
            SubspaceKind::Potential => &self.potential,
            SubspaceKind::Harmonic => &self.harmonic,
        }
    }

    /// The `k x k` group inverse `X` of `sum_i (I_k - e_i / k_i)`.
    pub fn group_inverse(&self) -> &Matrix {
        &self.group_inverse
    }

    /// `P_kind u` for the structure vector `u` of `g`.
    pub fn apply(&self, kind: SubspaceKind, g: &Game) -> Result<Game> {
        self.check_space(g)?;
        let v = self.projection(kind).mul_vec(&g.structure_vector())?;
        Game::from_structure_vector(self.space.clone(), v)
    }

    /// Exact membership test `P_kind u = u`.
    pub fn contains(&self, kind: SubspaceKind, g: &Game) -> Result<bool> {
        self.check_space(g)?;
        let u = g.structure_vector();
        Ok(self.projection(kind).mul_vec(&u)? == u)
    }

    fn check_space(&self, g: &Game) -> Result<()> {
        if g.space() != &self.space {
            return Err(Error::DimensionMismatch(format!(
                "game over {} given to projectors over {}",
                g.space(),
                self.space
            )));
        }
        Ok(())
    }
}
