//! Acceptance suite. Runs without the libtest harness so that one PASS/FAIL
//! line per criterion is always printed; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use gamedecomp::analysis::{
    check_harmonic_defn, check_nonstrategic_defn, check_potential_defn, check_pure_harmonic_defn,
    harmonic_nash_kernel_dim, pure_nash, uniform_mixed_nash_check,
};
use gamedecomp::decompose::{decompose, is_member, potential_function, solve_potential_equation};
use gamedecomp::linalg::rational::{frac, int};
use gamedecomp::linalg::{group_inverse_via_solve, mp_inverse, Matrix, Rational};
use gamedecomp::projectors::{
    build_b_n, build_b_p, build_complement_sum, build_p_n, closed_form_coefficients, dimension,
    group_inverse_algorithm1, group_inverse_closed_form, ProjectorSet, SubspaceKind,
};
use gamedecomp::sample::{
    random_game, random_game_in, random_potential_game, random_symmetric_three_by_two, rng, symmetric_three_by_two,
    symmetric_two_by_three,
};
use gamedecomp::{Game, GameSpace};
use num_traits::Zero;
use rand::Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn space(ks: &[usize]) -> GameSpace {
    GameSpace::new(ks.to_vec()).expect("valid space")
}

fn projectors(ks: &[usize]) -> ProjectorSet {
    ProjectorSet::build(&space(ks)).expect("within cap")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn load_scaled(text: &str, denominator: i64) -> Matrix {
    let rows: Vec<Vec<i64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|x| x.parse().expect("integer entry")).collect())
        .collect();
    Matrix::from_i64_rows(&rows).scale(&frac(1, denominator))
}

const SAMPLE_SPACES: [&[usize]; 4] = [&[2, 2], &[2, 3], &[2, 2, 2], &[3, 3]];

fn criterion_1() -> Outcome {
    let want = load_scaled(include_str!("data/potential_projection_3x2.txt"), 48);
    let got = projectors(&[2, 2, 2]);
    ensure(got.projection(SubspaceKind::Potential) == &want, || "[3;2,2,2] potential projection differs".into())?;
    let want = load_scaled(include_str!("data/potential_projection_2x3.txt"), 18);
    let got = projectors(&[3, 3]);
    ensure(got.projection(SubspaceKind::Potential) == &want, || "[2;3,3] potential projection differs".into())
}

fn criterion_2() -> Outcome {
    let two = closed_form_coefficients(2);
    let want_two = [frac(1, 2), frac(1, 2), frac(1, 2), frac(-3, 2)];
    ensure(two.coeffs() == want_two, || format!("n = 2 coefficients {:?}", two.coeffs()))?;
    let three = closed_form_coefficients(3);
    for (mask, c) in three.coeffs().iter().enumerate() {
        let want = match mask.count_ones() {
            0 => frac(1, 3),
            1 => frac(1, 6),
            2 => frac(1, 3),
            _ => frac(-11, 6),
        };
        ensure(c == &want, || format!("n = 3 coefficient of mask {mask:03b} is {c}"))?;
    }
    for ks in [&[2, 2][..], &[2, 3], &[2, 2, 2], &[2, 3, 2]] {
        let s = space(ks);
        let closed = group_inverse_closed_form(&s);
        let alg1 = group_inverse_algorithm1(&s).map_err(|e| e.to_string())?;
        let via_solve = group_inverse_via_solve(&build_complement_sum(&s))
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{s}: A²X = A inconsistent"))?;
        ensure(closed == alg1, || format!("{s}: closed form differs from the subset-algebra solve"))?;
        ensure(closed == via_solve, || format!("{s}: closed form differs from the A²X = A route"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let g = symmetric_three_by_two(int(1), int(1), int(2), int(-1), int(1), int(-1));
    let phi = potential_function(&g).map_err(|e| e.to_string())?.ok_or("symmetric game reported as not potential")?;
    let shifted = phi.shifted(&frac(-9, 8));
    let want: Vec<Rational> = [-2, -1, -1, -1, -1, -1, -1, -1].into_iter().map(int).collect();
    ensure(shifted.values() == want, || format!("potential {:?}", shifted.values()))
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    for t in 0..100 {
        let g = random_symmetric_three_by_two(&mut r);
        ensure(is_member(&g, SubspaceKind::Potential).unwrap(), || {
            format!("symmetric [3;2,2,2] game {t} not potential")
        })?;
    }

    // Draw raw games and games forced onto each side of both conditions so
    // that every branch of the two equivalences is exercised.
    let mut r = rng(44);
    let mut seen = [0usize; 4];
    for t in 0..300 {
        let mut p: [Rational; 9] = std::array::from_fn(|_| Rational::from_integer(r.gen_range(-9..=9).into()));
        match t % 3 {
            1 => {
                // h = b - c - d + f + g
                p[7] = &p[1] - &p[2] - &p[3] + &p[5] + &p[6];
            }
            2 => {
                let v = &p[1];
                p = [int(0), v.clone(), -v, -v, int(0), v.clone(), v.clone(), -v, int(0)];
            }
            _ => {}
        }
        let [a, b, c, d, e, f, g_, h, i] = &p;
        let potential_condition = (c - b + d - f - g_ + h).is_zero();
        let harmonic_condition =
            a.is_zero() && e.is_zero() && i.is_zero() && b == g_ && g_ == &-c && g_ == &-d && g_ == &-h && g_ == f;
        let game = symmetric_two_by_three(p.clone());
        let potential = is_member(&game, SubspaceKind::Potential).unwrap();
        let pure_harmonic = is_member(&game, SubspaceKind::PureHarmonic).unwrap();
        ensure(potential == potential_condition, || {
            format!("game {t}: potential {potential}, condition {potential_condition}")
        })?;
        ensure(pure_harmonic == harmonic_condition, || {
            format!("game {t}: pure harmonic {pure_harmonic}, condition {harmonic_condition}")
        })?;
        seen[usize::from(potential) * 2 + usize::from(pure_harmonic)] += 1;
    }
    ensure(seen[0] > 0 && seen[1] > 0 && seen[2] > 0, || format!("branch coverage {seen:?}"))
}

fn criterion_5() -> Outcome {
    let g = Game::from_i64(space(&[3, 3]), &[0, -1, 1, 1, 0, -1, -1, 1, 0, 0, 1, -1, -1, 0, 1, 1, -1, 0]).unwrap();
    ensure(is_member(&g, SubspaceKind::PureHarmonic).unwrap(), || "not pure harmonic".into())?;
    ensure(!is_member(&g, SubspaceKind::Potential).unwrap(), || "classified potential".into())?;
    let d = decompose(&g).map_err(|e| e.to_string())?;
    ensure(d.pure_potential.is_zero() && d.nonstrategic.is_zero() && d.pure_harmonic == g, || {
        "decomposition is not (0, 0, u)".into()
    })?;
    ensure(uniform_mixed_nash_check(&g), || "uniform profile not an equilibrium".into())?;
    ensure(pure_nash(&g).is_empty(), || "pure equilibria found".into())
}

fn criterion_6() -> Outcome {
    for (n, ks) in SAMPLE_SPACES.iter().enumerate() {
        let s = space(ks);
        let set = ProjectorSet::build(&s).map_err(|e| e.to_string())?;
        let b_p = build_b_p(&s);
        let b_n = build_b_n(&s);
        let p_n = build_p_n(&s);
        let oracle_gp = &b_p * &mp_inverse(&b_p);
        let oracle_n = &b_n * &mp_inverse(&b_n);
        let oracle_p = &p_n * &mp_inverse(&p_n);
        ensure(set.projection(SubspaceKind::Potential) == &oracle_gp, || format!("{s}: P_GP != B_P B_P†"))?;
        ensure(set.projection(SubspaceKind::Nonstrategic) == &oracle_n, || format!("{s}: P_N != B_N B_N†"))?;
        ensure(set.projection(SubspaceKind::PurePotential) == &oracle_p, || format!("{s}: P_P != P_N P_N†"))?;
        ensure(oracle_gp == &oracle_n + &oracle_p, || format!("{s}: B_P B_P† != B_N B_N† + P_N P_N†"))?;

        let mut r = rng(600 + n as u64);
        for t in 0..50 {
            let u = random_game(&s, &mut r).structure_vector();
            for (kind, oracle) in [
                (SubspaceKind::Potential, &oracle_gp),
                (SubspaceKind::Nonstrategic, &oracle_n),
                (SubspaceKind::PurePotential, &oracle_p),
            ] {
                let lhs = set.projection(kind).mul_vec(&u).unwrap();
                ensure(lhs == oracle.mul_vec(&u).unwrap(), || format!("{s} game {t}: {kind} image differs"))?;
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    use SubspaceKind::*;
    for ks in SAMPLE_SPACES.iter().copied().chain([&[2, 3, 2][..], &[4], &[2, 1, 3]]) {
        let s = space(ks);
        let set = ProjectorSet::build(&s).map_err(|e| e.to_string())?;
        for kind in SubspaceKind::ALL {
            let p = set.projection(kind);
            ensure(p.is_symmetric(), || format!("{s}: {kind} not symmetric"))?;
            ensure(&(p * p) == p, || format!("{s}: {kind} not idempotent"))?;
            let want = Rational::from_integer(dimension(&s, kind).into());
            ensure(p.trace() == want, || format!("{s}: trace of {kind} is {}, expected {want}", p.trace()))?;
        }
        let (pp, pn, ph) = (set.projection(PurePotential), set.projection(Nonstrategic), set.projection(PureHarmonic));
        ensure((&(pp + pn) + ph).is_identity(), || format!("{s}: components do not sum to I"))?;
        for (a, b, name) in [(pp, pn, "P·N"), (pp, ph, "P·H"), (pn, ph, "N·H")] {
            ensure((a * b).is_zero(), || format!("{s}: {name} nonzero"))?;
        }
        ensure(set.projection(Potential) == &(pp + pn), || format!("{s}: P_GP != P_P + P_N"))?;
        ensure(set.projection(Harmonic) == &(&Matrix::identity(s.nk()) - pp), || format!("{s}: P_GH != I - P_P"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for (n, ks) in SAMPLE_SPACES.iter().enumerate() {
        let s = space(ks);
        let set = ProjectorSet::cached(&s).map_err(|e| e.to_string())?;
        let mut r = rng(800 + n as u64);
        for t in 0..200 {
            let raw = random_game(&s, &mut r);
            // The raw draw is almost never a member; its projections are.
            let mut games = vec![raw.clone()];
            games.extend(SubspaceKind::ALL.iter().map(|&k| set.apply(k, &raw).unwrap()));
            for g in &games {
                let checks = [
                    (SubspaceKind::Nonstrategic, check_nonstrategic_defn(g)),
                    (SubspaceKind::PureHarmonic, check_pure_harmonic_defn(g)),
                    (SubspaceKind::Harmonic, check_harmonic_defn(g)),
                ];
                for (kind, by_definition) in checks {
                    let by_projection = set.contains(kind, g).unwrap();
                    ensure(by_projection == by_definition, || {
                        format!("{s} game {t}: {kind} projection {by_projection}, definition {by_definition}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for (n, ks) in SAMPLE_SPACES.iter().enumerate() {
        let s = space(ks);
        let set = ProjectorSet::cached(&s).map_err(|e| e.to_string())?;
        let mut r = rng(900 + n as u64);
        for t in 0..200 {
            let h = random_game_in(&set, SubspaceKind::Harmonic, &mut r);
            ensure(uniform_mixed_nash_check(&h), || format!("{s} harmonic game {t} fails the uniform check"))?;
            let ns = random_game_in(&set, SubspaceKind::Nonstrategic, &mut r);
            ensure(pure_nash(&ns).len() == s.profiles(), || format!("{s} nonstrategic game {t}: not every profile"))?;
        }
    }
    let s = space(&[2, 2]);
    for p in s.all_profiles() {
        let dim = harmonic_nash_kernel_dim(&s, &p).map_err(|e| e.to_string())?;
        ensure(dim == 0, || format!("kernel dimension {dim} at {:?}", p.choices()))?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    for (n, ks) in SAMPLE_SPACES.iter().enumerate() {
        let s = space(ks);
        let set = ProjectorSet::cached(&s).map_err(|e| e.to_string())?;
        let mut r = rng(1000 + n as u64);
        for t in 0..50 {
            let g = random_potential_game(&s, &mut r);
            let by_projection =
                potential_function(&g).unwrap().ok_or_else(|| format!("{s} game {t}: projection route failed"))?;
            let by_equation = solve_potential_equation(&g)
                .unwrap()
                .ok_or_else(|| format!("{s} game {t}: potential equation failed"))?;
            ensure(by_projection.differs_by_constant(&by_equation), || format!("{s} game {t}: routes disagree"))?;
            ensure(check_potential_defn(&g, &by_projection).unwrap(), || format!("{s} game {t}: not a potential"))?;
        }
        let mut produced = 0;
        while produced < 50 {
            let g = random_game(&s, &mut r);
            if set.apply(SubspaceKind::PureHarmonic, &g).unwrap().is_zero() {
                continue;
            }
            produced += 1;
            ensure(potential_function(&g).unwrap().is_none(), || {
                format!("{s}: projection route accepted a non-potential game")
            })?;
            ensure(solve_potential_equation(&g).unwrap().is_none(), || {
                format!("{s}: potential equation accepted a non-potential game")
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("projection regression against the reference potential projections", criterion_1),
        ("group inverse closed form, subset-algebra solve and A²X = A agree", criterion_2),
        ("potential function of the symmetric three-player example", criterion_3),
        ("symmetric-game potential and pure-harmonic conditions", criterion_4),
        ("rock-paper-scissors", criterion_5),
        ("projections equal their Moore-Penrose oracles", criterion_6),
        ("projection algebra and dimension formulas", criterion_7),
        ("projection membership equals definitional checks", criterion_8),
        ("Nash properties of harmonic and nonstrategic games", criterion_9),
        ("potential-function routes agree", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {:>2}: {name} ({elapsed:.2}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
