//! First-class belief-update operators: application, the induced partial
//! orders, minimal updates, and law checking.
//!
//! The four built-in operators are deterministic (at most one outcome) and
//! satisfy idempotence, associativity, and monotonicity; custom operators
//! implementing [`UpdateOperator`] may be nondeterministic or lawless, which
//! is exactly what [`check_laws`] is for.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::model::{Team, TeamSpace};

/// The four built-in update kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UpdateKind {
    /// `X ⊕ Y ↦ X ∩ Y`: trust both belief sets.
    Confident,
    /// `X ⊗ Y ↦ X ∪ Y`: entertain either belief set.
    Credulous,
    /// `X ⊖ Y ↦ Y` when `Y ⊆ X`, refused otherwise.
    Skeptical,
    /// `X ⊙ Y ↦ Y` when `X ⊆ Y`, refused otherwise.
    Openminded,
}

impl UpdateKind {
    pub const ALL: [UpdateKind; 4] = [
        UpdateKind::Confident,
        UpdateKind::Credulous,
        UpdateKind::Skeptical,
        UpdateKind::Openminded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            UpdateKind::Confident => "confident",
            UpdateKind::Credulous => "credulous",
            UpdateKind::Skeptical => "skeptical",
            UpdateKind::Openminded => "openminded",
        }
    }
}

/// The set of possible outcomes of one update. A refused update is an empty
/// outcome set, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpdateOutcome {
    pub results: BTreeSet<Team>,
}

impl UpdateOutcome {
    pub fn empty() -> UpdateOutcome {
        UpdateOutcome {
            results: BTreeSet::new(),
        }
    }

    pub fn single(team: Team) -> UpdateOutcome {
        UpdateOutcome {
            results: BTreeSet::from([team]),
        }
    }

    pub fn contains(&self, team: &Team) -> bool {
        self.results.contains(team)
    }
}

/// Applies a built-in update. Errors only on scope mismatch.
pub fn apply_update(kind: UpdateKind, x: &Team, y: &Team) -> Result<UpdateOutcome> {
    let outcome = match kind {
        UpdateKind::Confident => UpdateOutcome::single(x.intersection(y)?),
        UpdateKind::Credulous => UpdateOutcome::single(x.union(y)?),
        UpdateKind::Skeptical => {
            if y.is_subteam_of(x)? {
                UpdateOutcome::single(y.clone())
            } else {
                UpdateOutcome::empty()
            }
        }
        UpdateKind::Openminded => {
            if x.is_subteam_of(y)? {
                UpdateOutcome::single(y.clone())
            } else {
                UpdateOutcome::empty()
            }
        }
    };
    Ok(outcome)
}

/// The induced reachability order `X ≤◊ Y`, in closed form: the confident
/// and skeptical updates induce `Y ⊆ X`, the credulous and openminded ones
/// `X ⊆ Y`.
pub fn leq(kind: UpdateKind, x: &Team, y: &Team) -> Result<bool> {
    match kind {
        UpdateKind::Confident | UpdateKind::Skeptical => y.is_subteam_of(x),
        UpdateKind::Credulous | UpdateKind::Openminded => x.is_subteam_of(y),
    }
}

/// The existential form of the order: `X ≤ Y` iff some `X'` in the space
/// updates `X` to `Y`. Meant for cross-checking `leq` and for custom
/// operators, where the closed forms above do not apply.
pub fn leq_reachable(
    op: &dyn UpdateOperator,
    space: &TeamSpace,
    x: &Team,
    y: &Team,
) -> Result<bool> {
    for candidate in space.enumerate_teams()? {
        if op.apply(x, &candidate)?.contains(y) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `X ◊ V ↦ Z` for the ≤◊-minimal `Z`: applies the update against every
/// member of the family and keeps the outcomes no other outcome strictly
/// precedes.
pub fn minimal_apply(
    kind: UpdateKind,
    x: &Team,
    family: &BTreeSet<Team>,
) -> Result<BTreeSet<Team>> {
    let mut outcomes = BTreeSet::new();
    for y in family {
        outcomes.extend(apply_update(kind, x, y)?.results);
    }
    let mut minimal = BTreeSet::new();
    for z in &outcomes {
        let mut is_minimal = true;
        for other in &outcomes {
            if other != z && leq(kind, other, z)? {
                is_minimal = false;
                break;
            }
        }
        if is_minimal {
            minimal.insert(z.clone());
        }
    }
    Ok(minimal)
}

/// An update operator as a value, so law checking and derivation apply to
/// user-supplied operators as well as the built-ins.
pub trait UpdateOperator {
    fn apply(&self, x: &Team, y: &Team) -> Result<UpdateOutcome>;

    fn name(&self) -> String;
}

impl UpdateOperator for UpdateKind {
    fn apply(&self, x: &Team, y: &Team) -> Result<UpdateOutcome> {
        apply_update(*self, x, y)
    }

    fn name(&self) -> String {
        UpdateKind::name(*self).to_string()
    }
}

/// The operator `X ◊' Y ↦ Z ⇔ X ≤◊ Y and X ◊ Y ↦ Z` derived from a
/// built-in: the agent accepts the update only when the other belief state
/// is one it could itself reach. Derived from the confident update this
/// behaves as the skeptical one, and from the credulous as the openminded.
#[derive(Debug, Clone, Copy)]
pub struct DerivedOperator {
    base: UpdateKind,
}

pub fn derived_operator(kind: UpdateKind) -> DerivedOperator {
    DerivedOperator { base: kind }
}

impl UpdateOperator for DerivedOperator {
    fn apply(&self, x: &Team, y: &Team) -> Result<UpdateOutcome> {
        if leq(self.base, x, y)? {
            apply_update(self.base, x, y)
        } else {
            Ok(UpdateOutcome::empty())
        }
    }

    fn name(&self) -> String {
        format!("derived({})", self.base.name())
    }
}

/// `X ◊ Y ↦ X Δ Y`. A deliberately lawless control operator: it fails
/// idempotence on any nonempty team.
#[derive(Debug, Clone, Copy)]
pub struct SymmetricDifference;

impl UpdateOperator for SymmetricDifference {
    fn apply(&self, x: &Team, y: &Team) -> Result<UpdateOutcome> {
        let union = x.union(y)?;
        let both = x.intersection(y)?;
        let rows = union.rows().filter(|r| !both.contains(r)).map(<[_]>::to_vec);
        Ok(UpdateOutcome::single(Team::new(x.scope().clone(), rows)?))
    }

    fn name(&self) -> String {
        "symmetric-difference".to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Idempotence,
    Associativity,
    Monotonicity,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::Idempotence => "idempotence",
            Law::Associativity => "associativity",
            Law::Monotonicity => "monotonicity",
        }
    }
}

/// Outcome of checking one law over an enumerated space. The counterexample
/// teams are the quantified ones, in quantifier order, and re-check as a
/// genuine violation.
#[derive(Debug, Clone)]
pub struct LawReport {
    pub law: Law,
    pub passed: bool,
    pub counterexample: Option<Vec<Team>>,
}

/// Exhaustively tests idempotence, associativity, and monotonicity over the
/// space's teams, reporting the first counterexample in canonical order for
/// each law.
pub fn check_laws(op: &dyn UpdateOperator, space: &TeamSpace) -> Result<Vec<LawReport>> {
    let teams: Vec<Team> = space.enumerate_teams()?.collect();
    let mut reports = Vec::new();

    // Idempotence: X ◊ X ↦ Y iff Y = X.
    let mut counterexample = None;
    'idem: for x in &teams {
        let outcome = op.apply(x, x)?;
        if outcome.results.len() != 1 || !outcome.contains(x) {
            counterexample = Some(vec![x.clone()]);
            break 'idem;
        }
    }
    reports.push(LawReport {
        law: Law::Idempotence,
        passed: counterexample.is_none(),
        counterexample,
    });

    // Associativity: X1 ◊ X2 ↦ Y and Y ◊ X3 ↦ Z imply some W with
    // X2 ◊ X3 ↦ W and X1 ◊ W ↦ Z.
    let mut counterexample = None;
    'assoc: for x1 in &teams {
        for x2 in &teams {
            let firsts = op.apply(x1, x2)?;
            for x3 in &teams {
                for y in &firsts.results {
                    for z in &op.apply(y, x3)?.results {
                        let mut witnessed = false;
                        for w in &op.apply(x2, x3)?.results {
                            if op.apply(x1, w)?.contains(z) {
                                witnessed = true;
                                break;
                            }
                        }
                        if !witnessed {
                            counterexample = Some(vec![x1.clone(), x2.clone(), x3.clone()]);
                            break 'assoc;
                        }
                    }
                }
            }
        }
    }
    reports.push(LawReport {
        law: Law::Associativity,
        passed: counterexample.is_none(),
        counterexample,
    });

    // Monotonicity: X ◊ Y ↦ Z and Z ◊ W ↦ X imply X = Z.
    let mut counterexample = None;
    'mono: for x in &teams {
        for y in &teams {
            for z in &op.apply(x, y)?.results {
                for w in &teams {
                    if op.apply(z, w)?.contains(x) && x != z {
                        counterexample = Some(vec![x.clone(), y.clone(), z.clone(), w.clone()]);
                        break 'mono;
                    }
                }
            }
        }
    }
    reports.push(LawReport {
        law: Law::Monotonicity,
        passed: counterexample.is_none(),
        counterexample,
    });

    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Element, Scope, Structure, StructureData, DEFAULT_CAP};

    fn two_el() -> Structure {
        Structure::from_data(&StructureData {
            domain: vec!["0".into(), "1".into()],
            ..Default::default()
        })
        .unwrap()
    }

    fn team(vars: &[&str], rows: &[&[usize]]) -> Team {
        Team::new(
            Scope::new(vars.iter().copied()),
            rows.iter().map(|r| r.iter().map(|&i| Element(i)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn confident_is_intersection() {
        let x = team(&["x"], &[&[0], &[1]]);
        let y = team(&["x"], &[&[1]]);
        assert_eq!(
            apply_update(UpdateKind::Confident, &x, &y).unwrap(),
            UpdateOutcome::single(y)
        );
    }

    #[test]
    fn skeptical_refuses_non_subteams() {
        let x = team(&["x"], &[&[0]]);
        let y = team(&["x"], &[&[1]]);
        assert_eq!(
            apply_update(UpdateKind::Skeptical, &x, &y).unwrap(),
            UpdateOutcome::empty()
        );
    }

    #[test]
    fn self_update_is_identity_for_all_kinds() {
        let x = team(&["x"], &[&[0], &[1]]);
        for kind in UpdateKind::ALL {
            assert_eq!(
                apply_update(kind, &x, &x).unwrap(),
                UpdateOutcome::single(x.clone())
            );
        }
    }

    #[test]
    fn scope_mismatch_is_an_error() {
        let x = team(&["x"], &[&[0]]);
        let y = team(&["y"], &[&[0]]);
        assert!(apply_update(UpdateKind::Confident, &x, &y).is_err());
    }

    #[test]
    fn leq_closed_forms() {
        let x = team(&["x"], &[&[0], &[1]]);
        let y = team(&["x"], &[&[1]]);
        assert!(leq(UpdateKind::Confident, &x, &y).unwrap());
        assert!(leq(UpdateKind::Skeptical, &x, &y).unwrap());
        assert!(!leq(UpdateKind::Credulous, &x, &y).unwrap());
        assert!(leq(UpdateKind::Openminded, &y, &x).unwrap());
        for kind in UpdateKind::ALL {
            assert!(leq(kind, &x, &x).unwrap());
        }
    }

    #[test]
    fn minimal_apply_singleton_family() {
        let x = team(&["x"], &[&[0], &[1]]);
        let family = BTreeSet::from([x.clone()]);
        for kind in UpdateKind::ALL {
            assert_eq!(
                minimal_apply(kind, &x, &family).unwrap(),
                BTreeSet::from([x.clone()])
            );
        }
    }

    #[test]
    fn minimal_apply_empty_when_refused() {
        let x = team(&["x"], &[&[0]]);
        let family = BTreeSet::from([team(&["x"], &[&[1]])]);
        assert!(minimal_apply(UpdateKind::Skeptical, &x, &family)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn derived_confident_guards_like_skeptical() {
        let x = team(&["x"], &[&[0], &[1]]);
        let y = team(&["x"], &[&[1]]);
        let derived = derived_operator(UpdateKind::Confident);
        assert_eq!(derived.apply(&x, &y).unwrap(), UpdateOutcome::single(y.clone()));
        let z = team(&["x"], &[&[0]]);
        assert_eq!(derived.apply(&y, &z).unwrap(), UpdateOutcome::empty());
    }

    #[test]
    fn builtins_pass_all_laws_on_small_space() {
        let m = two_el();
        let space = TeamSpace::new(&m, Scope::new(["x"]), DEFAULT_CAP);
        for kind in UpdateKind::ALL {
            let reports = check_laws(&kind, &space).unwrap();
            for report in reports {
                assert!(report.passed, "{} fails {}", kind.name(), report.law.name());
            }
        }
    }

    #[test]
    fn symmetric_difference_fails_idempotence() {
        let m = two_el();
        let space = TeamSpace::new(&m, Scope::new(["x"]), DEFAULT_CAP);
        let reports = check_laws(&SymmetricDifference, &space).unwrap();
        let idem = &reports[0];
        assert_eq!(idem.law, Law::Idempotence);
        assert!(!idem.passed);
        // The counterexample re-checks: X Δ X = ∅ ≠ X for nonempty X.
        let x = &idem.counterexample.as_ref().unwrap()[0];
        assert!(!x.is_empty());
        let outcome = SymmetricDifference.apply(x, x).unwrap();
        assert!(!outcome.contains(x));
    }

    #[test]
    fn skeptical_chain_spot_test() {
        // X1 ⊇ X2 ⊇ X3: updating down the chain reassociates.
        let x1 = team(&["x"], &[&[0], &[1]]);
        let x2 = team(&["x"], &[&[0]]);
        let x3 = Team::empty(Scope::new(["x"]));
        let y = apply_update(UpdateKind::Skeptical, &x1, &x2).unwrap();
        assert!(y.contains(&x2));
        let z = apply_update(UpdateKind::Skeptical, &x2, &x3).unwrap();
        assert!(z.contains(&x3));
        assert!(apply_update(UpdateKind::Skeptical, &x1, &x3)
            .unwrap()
            .contains(&x3));
    }
}
