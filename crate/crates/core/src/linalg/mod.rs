//! Exact dense linear algebra over the rationals.

mod elim;
mod inverse;
mod matrix;
pub mod rational;
mod stp;

pub use elim::{inverse, pivot_columns, rank, solve_linear};
pub use inverse::{group_inverse_via_solve, is_group_inverse, is_penrose_inverse, mp_inverse};
pub use matrix::Matrix;
pub use rational::{format_decimal, format_rational, parse_rational, Rational};
pub use stp::{stp, stp_chain};
