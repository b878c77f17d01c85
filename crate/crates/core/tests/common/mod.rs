//! Shared fixtures for the integration suites.

#![allow(dead_code)]

use teamlog::{
    Evaluator, Scope, Structure, StructureData, Team, TeamFormula, TeamSpace, DEFAULT_CAP,
};

/// Two-element structure with constants `c0`, `c1`.
pub fn m2() -> Structure {
    named_elements(&["0", "1"])
}

/// Three-element structure with constants `c0`, `c1`, `c2`.
pub fn m3() -> Structure {
    named_elements(&["0", "1", "2"])
}

/// Two-element structure with constants plus a unary `R = {1}` and a binary
/// `Lt = {(0, 1)}`, for first-order tests that want relations.
pub fn m2r() -> Structure {
    let mut data = StructureData {
        domain: vec!["0".into(), "1".into()],
        ..Default::default()
    };
    data.constants.insert("c0".into(), "0".into());
    data.constants.insert("c1".into(), "1".into());
    data.relations.insert("R".into(), vec![vec!["1".into()]]);
    data.relations
        .insert("Lt".into(), vec![vec!["0".into(), "1".into()]]);
    Structure::from_data(&data).unwrap()
}

/// Tournament structure: players Tom, Bob, Jack and `Female = {Bob}`.
pub fn tournament() -> Structure {
    let mut data = StructureData {
        domain: vec!["Tom".into(), "Bob".into(), "Jack".into()],
        ..Default::default()
    };
    data.relations.insert("Female".into(), vec![vec!["Bob".into()]]);
    Structure::from_data(&data).unwrap()
}

fn named_elements(names: &[&str]) -> Structure {
    let mut data = StructureData {
        domain: names.iter().map(|n| n.to_string()).collect(),
        ..Default::default()
    };
    for (i, name) in names.iter().enumerate() {
        data.constants.insert(format!("c{i}"), name.to_string());
    }
    Structure::from_data(&data).unwrap()
}

pub fn team(m: &Structure, vars: &[&str], rows: &[&[&str]]) -> Team {
    Team::new(
        Scope::new(vars.iter().copied()),
        rows.iter()
            .map(|r| r.iter().map(|n| m.element(n).unwrap()).collect()),
    )
    .unwrap()
}

pub fn f(text: &str) -> TeamFormula {
    teamlog::parse(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn holds(evaluator: &mut Evaluator, team: &Team, text: &str) -> bool {
    evaluator
        .holds(team, &f(text))
        .unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn all_teams(m: &Structure, vars: &[&str]) -> Vec<Team> {
    TeamSpace::new(m, Scope::new(vars.iter().copied()), DEFAULT_CAP)
        .enumerate_teams()
        .unwrap()
        .collect()
}

/// Downward-closed formulas from the list, decided by enumeration over the
/// given scope.
pub fn downward_closed(
    m: &Structure,
    vars: &[&str],
    candidates: &[TeamFormula],
) -> Vec<TeamFormula> {
    let teams = all_teams(m, vars);
    let mut evaluator = Evaluator::new(m, DEFAULT_CAP);
    candidates
        .iter()
        .filter(|formula| {
            teams.iter().all(|x| {
                if !evaluator.holds(x, formula).unwrap() {
                    return true;
                }
                subteams(x).iter().all(|y| evaluator.holds(y, formula).unwrap())
            })
        })
        .cloned()
        .collect()
}

/// All subteams of a team.
pub fn subteams(team: &Team) -> Vec<Team> {
    let rows: Vec<Vec<teamlog::Element>> = team.rows().map(<[_]>::to_vec).collect();
    (0..(1u64 << rows.len()))
        .map(|mask| {
            Team::new(
                team.scope().clone(),
                rows.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> *i & 1 == 1)
                    .map(|(_, row)| row.clone()),
            )
            .unwrap()
        })
        .collect()
}
