//! Update-operator laws, the induced orders, derived operators, and the
//! minimal-update instantiations, checked exhaustively at two-element scale.

mod common;

use std::collections::BTreeSet;

use common::{all_teams, f, m2};
use teamlog::{
    apply_update, check_laws, derived_operator, leq, leq_reachable, minimal_apply, Evaluator,
    Scope, SymmetricDifference, Team, TeamSpace, UpdateKind, UpdateOperator, DEFAULT_CAP,
};

#[test]
fn builtins_pass_all_laws_exhaustively() {
    let m = m2();
    let space = TeamSpace::new(&m, Scope::new(["x", "y"]), DEFAULT_CAP);
    for kind in UpdateKind::ALL {
        for report in check_laws(&kind, &space).unwrap() {
            assert!(
                report.passed,
                "{} fails {}: {:?}",
                kind.name(),
                report.law.name(),
                report.counterexample
            );
        }
    }
}

#[test]
fn symmetric_difference_counterexample_rechecks() {
    let m = m2();
    let space = TeamSpace::new(&m, Scope::new(["x", "y"]), DEFAULT_CAP);
    let reports = check_laws(&SymmetricDifference, &space).unwrap();
    let idem = reports
        .iter()
        .find(|r| r.law == teamlog::Law::Idempotence)
        .unwrap();
    assert!(!idem.passed);
    let x = &idem.counterexample.as_ref().unwrap()[0];
    let outcome = SymmetricDifference.apply(x, x).unwrap();
    assert!(outcome.results.len() != 1 || !outcome.contains(x));
}

#[test]
fn closed_form_order_matches_existential_order() {
    let m = m2();
    let space = TeamSpace::new(&m, Scope::new(["x", "y"]), DEFAULT_CAP);
    let teams = all_teams(&m, &["x", "y"]);
    for kind in UpdateKind::ALL {
        for x in &teams {
            for y in &teams {
                let closed = leq(kind, x, y).unwrap();
                let existential = leq_reachable(&kind, &space, x, y).unwrap();
                assert_eq!(closed, existential, "{} on {x:?} vs {y:?}", kind.name());
            }
        }
    }
}

#[test]
fn orders_are_inclusion_in_the_stated_direction() {
    let m = m2();
    let teams = all_teams(&m, &["x", "y"]);
    for x in &teams {
        for y in &teams {
            let stricter = y.is_subteam_of(x).unwrap();
            let looser = x.is_subteam_of(y).unwrap();
            assert_eq!(leq(UpdateKind::Confident, x, y).unwrap(), stricter);
            assert_eq!(leq(UpdateKind::Skeptical, x, y).unwrap(), stricter);
            assert_eq!(leq(UpdateKind::Credulous, x, y).unwrap(), looser);
            assert_eq!(leq(UpdateKind::Openminded, x, y).unwrap(), looser);
        }
    }
}

#[test]
fn order_is_a_partial_order() {
    let m = m2();
    let teams = all_teams(&m, &["x"]);
    for kind in UpdateKind::ALL {
        for x in &teams {
            assert!(leq(kind, x, x).unwrap());
            for y in &teams {
                if leq(kind, x, y).unwrap() && leq(kind, y, x).unwrap() {
                    assert_eq!(x, y);
                }
                for z in &teams {
                    if leq(kind, x, y).unwrap() && leq(kind, y, z).unwrap() {
                        assert!(leq(kind, x, z).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn derived_operators_match_their_guarded_builtins() {
    let m = m2();
    let teams = all_teams(&m, &["x", "y"]);
    let from_confident = derived_operator(UpdateKind::Confident);
    let from_credulous = derived_operator(UpdateKind::Credulous);
    for x in &teams {
        for y in &teams {
            assert_eq!(
                from_confident.apply(x, y).unwrap(),
                apply_update(UpdateKind::Skeptical, x, y).unwrap(),
                "derived confident vs skeptical on {x:?}, {y:?}"
            );
            assert_eq!(
                from_credulous.apply(x, y).unwrap(),
                apply_update(UpdateKind::Openminded, x, y).unwrap(),
                "derived credulous vs openminded on {x:?}, {y:?}"
            );
        }
    }
}

// Independent statements of the four minimal updates, written directly from
// their explicit set-theoretic forms. `minimal_apply` must agree with these
// on every sampled (team, family).
mod explicit {
    use super::*;

    pub fn boxplus(x: &Team, family: &BTreeSet<Team>, space: &[Team]) -> BTreeSet<Team> {
        let mut out = BTreeSet::new();
        for y in family {
            let z = x.intersection(y).unwrap();
            let dominated = space.iter().any(|bigger| {
                z.is_subteam_of(bigger).unwrap()
                    && *bigger != z
                    && family
                        .iter()
                        .any(|y2| x.intersection(y2).unwrap() == *bigger)
            });
            if !dominated {
                out.insert(z);
            }
        }
        out
    }

    pub fn boxtimes(x: &Team, family: &BTreeSet<Team>, space: &[Team]) -> BTreeSet<Team> {
        let mut out = BTreeSet::new();
        for y in family {
            let z = x.union(y).unwrap();
            let dominated = space.iter().any(|smaller| {
                smaller.is_subteam_of(&z).unwrap()
                    && *smaller != z
                    && family.iter().any(|y2| x.union(y2).unwrap() == *smaller)
            });
            if !dominated {
                out.insert(z);
            }
        }
        out
    }

    pub fn boxminus(x: &Team, family: &BTreeSet<Team>, space: &[Team]) -> BTreeSet<Team> {
        family
            .iter()
            .filter(|z| z.is_subteam_of(x).unwrap())
            .filter(|z| {
                !space.iter().any(|bigger| {
                    z.is_subteam_of(bigger).unwrap()
                        && *bigger != **z
                        && bigger.is_subteam_of(x).unwrap()
                        && family.contains(bigger)
                })
            })
            .cloned()
            .collect()
    }

    pub fn boxdot(x: &Team, family: &BTreeSet<Team>, space: &[Team]) -> BTreeSet<Team> {
        family
            .iter()
            .filter(|z| x.is_subteam_of(z).unwrap())
            .filter(|z| {
                !space.iter().any(|smaller| {
                    x.is_subteam_of(smaller).unwrap()
                        && smaller.is_subteam_of(z).unwrap()
                        && *smaller != **z
                        && family.contains(smaller)
                })
            })
            .cloned()
            .collect()
    }
}

#[test]
fn minimal_apply_matches_explicit_instantiations() {
    let m = m2();
    let teams = all_teams(&m, &["x", "y"]);
    let mut evaluator = Evaluator::new(&m, DEFAULT_CAP);
    let scope = Scope::new(["x", "y"]);
    let mut families: Vec<BTreeSet<Team>> = [
        "const(x)",
        "inc(x; y)",
        "P(x = y)",
        "B(x = y)",
        "not const(x)",
    ]
    .iter()
    .map(|text| {
        evaluator
            .bel_teams(&scope, &f(text))
            .unwrap()
            .iter()
            .cloned()
            .collect()
    })
    .collect();
    families.push(BTreeSet::new());
    families.push(teams.iter().take(5).cloned().collect());

    for family in &families {
        for x in &teams {
            assert_eq!(
                minimal_apply(UpdateKind::Confident, x, family).unwrap(),
                explicit::boxplus(x, family, &teams)
            );
            assert_eq!(
                minimal_apply(UpdateKind::Credulous, x, family).unwrap(),
                explicit::boxtimes(x, family, &teams)
            );
            assert_eq!(
                minimal_apply(UpdateKind::Skeptical, x, family).unwrap(),
                explicit::boxminus(x, family, &teams)
            );
            assert_eq!(
                minimal_apply(UpdateKind::Openminded, x, family).unwrap(),
                explicit::boxdot(x, family, &teams)
            );
        }
    }
}

#[test]
fn minimal_skeptical_keeps_maximal_subteams() {
    let m = m2();
    let full = common::team(
        &m,
        &["x", "y"],
        &[&["0", "0"], &["0", "1"], &["1", "0"], &["1", "1"]],
    );
    let mut evaluator = Evaluator::new(&m, DEFAULT_CAP);
    let family: BTreeSet<Team> = evaluator
        .bel_teams(&Scope::new(["x", "y"]), &f("const(x)"))
        .unwrap()
        .iter()
        .cloned()
        .collect();
    let outcomes = minimal_apply(UpdateKind::Skeptical, &full, &family).unwrap();
    let col0 = common::team(&m, &["x", "y"], &[&["0", "0"], &["0", "1"]]);
    let col1 = common::team(&m, &["x", "y"], &[&["1", "0"], &["1", "1"]]);
    assert_eq!(outcomes, BTreeSet::from([col0, col1]));
}
