//! The commutative algebra spanned by the averaging operators.
//!
//! For a set `S` of players, `f_S = prod_{i in S} e_i / k_i` averages a
//! payoff row over the strategies of every player in `S`. These operators
//! are idempotent and commute, so `f_S f_T = f_{S ∪ T}` (equivalently
//! `e_i e_i = k_i e_i`). A polynomial in the `e_i` is therefore a vector of
//! `2^m` coefficients indexed by subset bitmask, and products cost `4^m`
//! rational operations regardless of `k`.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::game::GameSpace;
use crate::linalg::{Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetPoly {
    vars: usize,
    coeffs: Vec<Rational>,
}

impl SubsetPoly {
    pub fn zero(vars: usize) -> Self {
        assert!(vars < usize::BITS as usize, "too many variables");
        Self { vars, coeffs: vec![Rational::zero(); 1 << vars] }
    }

    /// The identity `f_∅ = I`.
    pub fn one(vars: usize) -> Self {
        Self::term(vars, 0, Rational::one())
    }

    pub fn term(vars: usize, mask: usize, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.coeffs[mask] = c;
        p
    }

    /// `f_{i}` for the 0-based variable `i`.
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars);
        Self::term(vars, 1 << i, Rational::one())
    }

    pub fn from_coeffs(vars: usize, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), 1 << vars);
        Self { vars, coeffs }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Coefficients indexed by subset bitmask.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, mask: usize) -> &Rational {
        &self.coeffs[mask]
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self { vars: self.vars, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Image under `f_i -> I` for every variable not listed in `keep`;
    /// variable `keep[j]` becomes variable `j` of the result.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let mut out = Self::zero(keep.len());
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image =
                keep.iter().enumerate().filter(|(_, &v)| mask & (1 << v) != 0).fold(0, |acc, (j, _)| acc | (1 << j));
            out.coeffs[image] += c;
        }
        out
    }

    /// Nonzero terms as (1-based variable set, coefficient), ordered by
    /// cardinality and then lexicographically.
    pub fn terms(&self) -> Vec<(Vec<usize>, Rational)> {
        ordered_subsets(self.vars)
            .into_iter()
            .filter(|&m| !self.coeffs[m].is_zero())
            .map(|m| (mask_members(m).into_iter().map(|v| v + 1).collect(), self.coeffs[m].clone()))
            .collect()
    }

    /// The `k x k` matrix of this polynomial over `space`, where variable
    /// `j` stands for the 0-based player `players[j]`.
    ///
    /// Entry `(r, c)` of `f_S` is `1 / prod_{i in S} k_i` when the two
    /// profiles agree on every player outside `S` and zero otherwise, so an
    /// entry of the polynomial depends only on the set `D` of players where
    /// `r` and `c` differ: it is `sum_{S ⊇ D} coeff_S / prod_{i in S} k_i`.
    pub fn materialize(&self, space: &GameSpace, players: &[usize]) -> Matrix {
        assert_eq!(players.len(), self.vars, "one player per variable");
        let counts = space.strategy_counts();

        let mut by_difference: Vec<Rational> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, c)| {
                if c.is_zero() {
                    return Rational::zero();
                }
                let weight: usize = mask_members(mask).iter().map(|&v| counts[players[v]]).product();
                c / Rational::from_integer(weight.into())
            })
            .collect();
        // Superset sums: by_difference[D] = sum over S ⊇ D.
        for bit in 0..self.vars {
            for mask in 0..by_difference.len() {
                if mask & (1 << bit) == 0 {
                    let upper = by_difference[mask | (1 << bit)].clone();
                    by_difference[mask] += upper;
                }
            }
        }

        let mut var_of_player = vec![None; space.players()];
        for (j, &p) in players.iter().enumerate() {
            var_of_player[p] = Some(j);
        }
        let k = space.profiles();
        let digits: Vec<Vec<usize>> = (0..k).map(|idx| space.digits(idx)).collect();
        Matrix::from_fn(k, k, |r, c| {
            let mut diff = 0usize;
            for (p, (a, b)) in digits[r].iter().zip(&digits[c]).enumerate() {
                if a != b {
                    match var_of_player[p] {
                        Some(j) => diff |= 1 << j,
                        None => return Rational::zero(),
                    }
                }
            }
            by_difference[diff].clone()
        })
    }
}

impl Add for &SubsetPoly {
    type Output = SubsetPoly;

    fn add(self, rhs: &SubsetPoly) -> SubsetPoly {
        assert_eq!(self.vars, rhs.vars);
        SubsetPoly { vars: self.vars, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &SubsetPoly {
    type Output = SubsetPoly;

    fn sub(self, rhs: &SubsetPoly) -> SubsetPoly {
        assert_eq!(self.vars, rhs.vars);
        SubsetPoly { vars: self.vars, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &SubsetPoly {
    type Output = SubsetPoly;

    fn mul(self, rhs: &SubsetPoly) -> SubsetPoly {
        assert_eq!(self.vars, rhs.vars);
        let mut out = SubsetPoly::zero(self.vars);
        for (s, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[s | t] += a * b;
                }
            }
        }
        out
    }
}

pub(crate) fn mask_members(mask: usize) -> Vec<usize> {
    (0..usize::BITS as usize).filter(|&b| mask & (1 << b) != 0).collect()
}

/// All subset masks of `vars` variables, by cardinality and then
/// lexicographically on the sorted member lists.
pub fn ordered_subsets(vars: usize) -> Vec<usize> {
    let mut masks: Vec<usize> = (0..1usize << vars).collect();
    masks.sort_by_key(|&m| (m.count_ones(), mask_members(m)));
    masks
}
