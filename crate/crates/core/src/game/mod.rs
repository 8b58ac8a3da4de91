//! Finite normal-form games as vectors.

mod format;
mod model;
mod space;

pub use format::{game_from_json, game_to_json, parse_game, parse_game_with_cap, rational_to_json, serialize_game};
pub use model::{Game, MixedProfile};
pub use space::{GameSpace, StrategyProfile, DEFAULT_SPACE_CAP};
