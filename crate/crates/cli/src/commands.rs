use std::collections::BTreeMap;

use anyhow::{bail, Result};
use gamedecomp::analysis::{
    check_harmonic_defn, check_nonstrategic_defn, check_potential_defn, check_pure_harmonic_defn,
    harmonic_pure_nash_zero_check, nash_report, pure_nash,
};
use gamedecomp::decompose::{
    decompose_with, nonstrategic_component_direct, potential_block_vector, potential_function, solve_potential_equation,
};
use gamedecomp::linalg::{group_inverse_via_solve, mp_inverse};
use gamedecomp::projectors::{
    build_b_n, build_b_p, build_complement_sum, build_p_n, dimension, group_inverse_algorithm1,
    group_inverse_closed_form, MAX_SUBSET_SOLVE_VARS,
};
use gamedecomp::{Game, GameSpace, Matrix, ProjectorSet, Rational, SubspaceKind};
use serde_json::{json, Value};

use crate::render::Render;

/// A document for the output stream, plus a failure message when the
/// command ran but a check did not hold.
pub struct Outcome {
    pub doc: Value,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(doc: Value) -> Self {
        Self { doc, failure: None }
    }

    fn failing_if(doc: Value, failed: bool, message: &str) -> Self {
        Self { doc, failure: failed.then(|| message.to_string()) }
    }
}

fn profiles(space: &GameSpace) -> Value {
    space.all_profiles().map(|p| json!(p.choices())).collect()
}

fn kinds_map<T: Into<Value>>(f: impl Fn(SubspaceKind) -> T) -> Value {
    let map: BTreeMap<&str, Value> = SubspaceKind::ALL.iter().map(|&k| (k.name(), f(k).into())).collect();
    json!(map)
}

pub fn decompose(g: &Game, r: Render) -> Result<Outcome> {
    let set = ProjectorSet::cached(g.space())?;
    let d = decompose_with(&set, g)?;
    let resums = d.sum() == *g;
    let in_subspaces = set.contains(SubspaceKind::PurePotential, &d.pure_potential)?
        && set.contains(SubspaceKind::Nonstrategic, &d.nonstrategic)?
        && set.contains(SubspaceKind::PureHarmonic, &d.pure_harmonic)?;
    if !(resums && in_subspaces) {
        bail!("internal consistency check failed for the decomposition");
    }
    Ok(Outcome::ok(json!({
        "command": "decompose",
        "space": g.space().to_string(),
        "output": r.arithmetic(),
        "components": {
            "pure-potential": r.game(&d.pure_potential),
            "nonstrategic": r.game(&d.nonstrategic),
            "pure-harmonic": r.game(&d.pure_harmonic),
        },
        "exactness": {
            "computation": "exact rational arithmetic",
            "components_sum_to_input": resums,
            "components_in_subspaces": in_subspaces,
        },
    })))
}

/// Membership decided from the defining equations rather than from the
/// projections.
fn definitional_memberships(g: &Game) -> Result<BTreeMap<SubspaceKind, bool>> {
    let potential = match solve_potential_equation(g)? {
        Some(phi) => check_potential_defn(g, &phi)?,
        None => false,
    };
    let normalized = nonstrategic_component_direct(g).is_zero();
    Ok(BTreeMap::from([
        (SubspaceKind::PurePotential, potential && normalized),
        (SubspaceKind::Nonstrategic, check_nonstrategic_defn(g)),
        (SubspaceKind::PureHarmonic, check_pure_harmonic_defn(g)),
        (SubspaceKind::Potential, potential),
        (SubspaceKind::Harmonic, check_harmonic_defn(g)),
    ]))
}

pub fn classify(g: &Game) -> Result<Outcome> {
    let set = ProjectorSet::cached(g.space())?;
    let by_projection: BTreeMap<SubspaceKind, bool> =
        SubspaceKind::ALL.iter().map(|&k| Ok((k, set.contains(k, g)?))).collect::<Result<_>>()?;
    let by_definition = definitional_memberships(g)?;
    let all_agree = by_projection == by_definition;
    let doc = json!({
        "command": "classify",
        "space": g.space().to_string(),
        "memberships": kinds_map(|k| by_projection[&k]),
        "definitional_checks": kinds_map(|k| json!({
            "holds": by_definition[&k],
            "agrees": by_definition[&k] == by_projection[&k],
        })),
        "all_agree": all_agree,
    });
    Ok(Outcome::failing_if(doc, !all_agree, "projection and definitional memberships disagree"))
}

pub fn potential(g: &Game, shift: &Rational, experimental_raw: bool, r: Render) -> Result<Outcome> {
    let projected = potential_function(g)?;
    let solved = solve_potential_equation(g)?;
    let mut doc = json!({ "command": "potential", "space": g.space().to_string(), "output": r.arithmetic() });
    let failure = match (&projected, &solved) {
        (Some(a), Some(b)) => {
            let agree = a.differs_by_constant(b);
            let holds = check_potential_defn(g, a)? && check_potential_defn(g, b)?;
            doc["potential"] = json!(true);
            doc["verdict"] = json!("potential");
            doc["profiles"] = profiles(g.space());
            doc["shift"] = r.number(shift);
            doc["potential_function"] = r.numbers(a.shifted(shift).values());
            doc["equation_route"] = r.numbers(b.values());
            doc["routes_agree_up_to_constant"] = json!(agree);
            doc["satisfies_definition"] = json!(holds);
            (!(agree && holds)).then(|| "the two potential routes do not agree".to_string())
        }
        (None, None) => {
            doc["potential"] = json!(false);
            doc["verdict"] = json!("not potential");
            None
        }
        _ => Some("the projection and equation routes disagree on whether the game is potential".into()),
    };
    if experimental_raw {
        doc["experimental_raw_vector"] = json!({
            "note": "experimental: defined for every game, no interpretation is claimed",
            "values": r.numbers(&potential_block_vector(g)?),
        });
    }
    Ok(Outcome { doc, failure })
}

/// The projection matrix, released only after the three component
/// projections are confirmed to sum to the identity.
pub fn project(space: &GameSpace, kind: SubspaceKind) -> Result<Matrix> {
    let set = ProjectorSet::cached(space)?;
    if !components_sum_to_identity(&set) {
        bail!("projections onto the three components do not sum to the identity");
    }
    Ok(set.projection(kind).clone())
}

pub fn project_json(space: &GameSpace, kind: SubspaceKind, m: &Matrix, r: Render) -> Value {
    json!({
        "command": "project",
        "space": space.to_string(),
        "kind": kind.name(),
        "output": r.arithmetic(),
        "rows": m.rows(),
        "cols": m.cols(),
        "components_sum_to_identity": true,
        "matrix": r.matrix(m),
    })
}

pub fn nash(g: &Game) -> Result<Outcome> {
    let report = nash_report(g);
    let mut doc = json!({ "command": "nash", "space": g.space().to_string() });
    doc["pure_equilibria"] = json!(report.pure_equilibria);
    doc["uniform_mixed_is_nash"] = json!(report.uniform_mixed_is_nash);
    Ok(Outcome::ok(doc))
}

struct Checks(Vec<(&'static str, bool)>);

impl Checks {
    fn push(&mut self, name: &'static str, passed: bool) {
        self.0.push((name, passed));
    }
}

fn components_sum_to_identity(set: &ProjectorSet) -> bool {
    let partial = set.projection(SubspaceKind::PurePotential) + set.projection(SubspaceKind::Nonstrategic);
    (&partial + set.projection(SubspaceKind::PureHarmonic)).is_identity()
}

fn is_orthogonal_projection(p: &Matrix) -> bool {
    p.is_symmetric() && &(p * p) == p
}

/// Every cross-oracle check that applies to a single game and its space.
pub fn verify(g: &Game) -> Result<Outcome> {
    let space = g.space();
    let set = ProjectorSet::cached(space)?;
    let proj = |k| set.projection(k);
    let mut c = Checks(Vec::new());

    let b_p = build_b_p(space);
    let b_n = build_b_n(space);
    let p_n = build_p_n(space);
    c.push(
        "potential-projection-equals-pseudo-inverse-route",
        *proj(SubspaceKind::Potential) == &b_p * &mp_inverse(&b_p),
    );
    c.push(
        "nonstrategic-projection-equals-pseudo-inverse-route",
        *proj(SubspaceKind::Nonstrategic) == &b_n * &mp_inverse(&b_n),
    );
    c.push(
        "pure-potential-projection-equals-pseudo-inverse-route",
        *proj(SubspaceKind::PurePotential) == &p_n * &mp_inverse(&p_n),
    );

    c.push("components-sum-to-identity", components_sum_to_identity(&set));
    c.push(
        "projections-symmetric-and-idempotent",
        SubspaceKind::ALL.iter().all(|&k| is_orthogonal_projection(proj(k))),
    );
    c.push(
        "traces-match-dimensions",
        SubspaceKind::ALL.iter().all(|&k| proj(k).trace() == Rational::from_integer(dimension(space, k).into())),
    );

    let closed = group_inverse_closed_form(space);
    let solved = group_inverse_via_solve(&build_complement_sum(space))?;
    let mut group_ok = solved.as_ref() == Some(&closed) && set.group_inverse() == &closed;
    if space.strategic_players().len() <= MAX_SUBSET_SOLVE_VARS {
        group_ok &= group_inverse_algorithm1(space)? == closed;
    }
    c.push("group-inverse-routes-agree", group_ok);

    let d = decompose_with(&set, g)?;
    c.push("decomposition-sums-to-input", d.sum() == *g);
    c.push(
        "components-in-subspaces",
        set.contains(SubspaceKind::PurePotential, &d.pure_potential)?
            && set.contains(SubspaceKind::Nonstrategic, &d.nonstrategic)?
            && set.contains(SubspaceKind::PureHarmonic, &d.pure_harmonic)?,
    );
    c.push("nonstrategic-component-direct-route", nonstrategic_component_direct(g) == d.nonstrategic);

    let by_definition = definitional_memberships(g)?;
    let mut members_ok = true;
    for &k in &SubspaceKind::ALL {
        members_ok &= set.contains(k, g)? == by_definition[&k];
    }
    c.push("memberships-match-definitions", members_ok);

    let potential_ok = match (potential_function(g)?, solve_potential_equation(g)?) {
        (Some(a), Some(b)) => a.differs_by_constant(&b) && check_potential_defn(g, &a)?,
        (None, None) => true,
        _ => false,
    };
    c.push("potential-routes-agree", potential_ok);

    let pp_phi = potential_function(&d.pure_potential)?;
    c.push(
        "pure-potential-component-has-potential",
        match pp_phi {
            Some(phi) => check_potential_defn(&d.pure_potential, &phi)?,
            None => false,
        },
    );

    let h = &d.pure_harmonic;
    let equilibria = pure_nash(h);
    let mut zero_ok = true;
    for s in space.all_profiles() {
        zero_ok &= harmonic_pure_nash_zero_check(h, &s)? == equilibria.contains(&s);
    }
    c.push("pure-harmonic-equilibria-match-zero-check", zero_ok);

    let all_passed = c.0.iter().all(|&(_, p)| p);
    let checks: Vec<Value> = c.0.iter().map(|&(name, passed)| json!({ "name": name, "passed": passed })).collect();
    let doc = json!({
        "command": "verify",
        "space": space.to_string(),
        "checks": checks,
        "all_passed": all_passed,
    });
    Ok(Outcome::failing_if(doc, !all_passed, "verification failed"))
}
