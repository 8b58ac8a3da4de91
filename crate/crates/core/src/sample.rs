//! Seeded random games for property tests and self-checks. Entries are
//! integers drawn uniformly from `[-9, 9]`.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::game::{Game, GameSpace};
use crate::linalg::Rational;
use crate::projectors::{build_b_p, ProjectorSet, SubspaceKind};

pub const ENTRY_BOUND: i64 = 9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    Rational::from_integer(rng.gen_range(-ENTRY_BOUND..=ENTRY_BOUND).into())
}

fn small_ints<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Rational> {
    (0..len).map(|_| small_int(rng)).collect()
}

pub fn random_game<R: Rng + ?Sized>(space: &GameSpace, rng: &mut R) -> Game {
    Game::from_structure_vector(space.clone(), small_ints(rng, space.nk())).expect("length nk")
}

/// `B_P w` for a random integer `w`, which is always a potential game.
pub fn random_potential_game<R: Rng + ?Sized>(space: &GameSpace, rng: &mut R) -> Game {
    let b_p = build_b_p(space);
    let w = small_ints(rng, b_p.cols());
    Game::from_structure_vector(space.clone(), b_p.mul_vec(&w).expect("shapes agree")).expect("length nk")
}

/// Projection of a random game onto the subspace `kind`.
pub fn random_game_in<R: Rng + ?Sized>(set: &ProjectorSet, kind: SubspaceKind, rng: &mut R) -> Game {
    set.apply(kind, &random_game(set.space(), rng)).expect("same space")
}

/// Symmetric three-player, two-strategy game
/// `[a,b,b,d,c,e,e,f, a,b,c,e,b,d,e,f, a,c,b,e,b,e,d,f]`.
pub fn symmetric_three_by_two(a: Rational, b: Rational, c: Rational, d: Rational, e: Rational, f: Rational) -> Game {
    let v = [
        &a, &b, &b, &d, &c, &e, &e, &f, //
        &a, &b, &c, &e, &b, &d, &e, &f, //
        &a, &c, &b, &e, &b, &e, &d, &f,
    ];
    let space = GameSpace::new(vec![2, 2, 2]).expect("valid space");
    Game::from_structure_vector(space, v.into_iter().cloned().collect()).expect("length 24")
}

/// Symmetric two-player, three-strategy game: player 1 has payoff matrix
/// `[[a,b,c],[d,e,f],[g,h,i]]` and player 2 its transpose.
pub fn symmetric_two_by_three(p: [Rational; 9]) -> Game {
    let [a, b, c, d, e, f, g, h, i] = p;
    let v = vec![
        a.clone(),
        b.clone(),
        c.clone(),
        d.clone(),
        e.clone(),
        f.clone(),
        g.clone(),
        h.clone(),
        i.clone(), //
        a,
        d,
        g,
        b,
        e,
        h,
        c,
        f,
        i,
    ];
    let space = GameSpace::new(vec![3, 3]).expect("valid space");
    Game::from_structure_vector(space, v).expect("length 18")
}

pub fn random_symmetric_three_by_two<R: Rng + ?Sized>(rng: &mut R) -> Game {
    let [a, b, c, d, e, f]: [Rational; 6] = std::array::from_fn(|_| small_int(rng));
    symmetric_three_by_two(a, b, c, d, e, f)
}

pub fn random_symmetric_two_by_three<R: Rng + ?Sized>(rng: &mut R) -> Game {
    symmetric_two_by_three(std::array::from_fn(|_| small_int(rng)))
}
