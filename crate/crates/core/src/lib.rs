//! Exact orthogonal decomposition of finite normal-form games.
//!
//! A game with `n` players and `k_i` strategies per player is a vector of
//! length `n * k` (`k = k_1 * ... * k_n`). This crate builds the closed-form
//! orthogonal projections of that space onto the pure-potential,
//! nonstrategic, pure-harmonic, potential and harmonic subspaces, and uses
//! them to decompose games, classify them and extract potential functions.
//! All arithmetic is over exact rationals.
//!
//! Players, strategies and profile indices are 1-based throughout the public
//! API. Profiles are ordered with player 1 as the most significant digit.

pub mod analysis;
pub mod decompose;
pub mod error;
pub mod game;
pub mod linalg;
pub mod projectors;
pub mod sample;

pub use error::{Error, Result};
pub use game::{parse_game, serialize_game, Game, GameSpace, MixedProfile, StrategyProfile};
pub use linalg::{Matrix, Rational};
pub use projectors::{ProjectorSet, SubspaceKind};
