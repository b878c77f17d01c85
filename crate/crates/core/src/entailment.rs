//! Belief-family materialization and model-relative entailment with
//! counterexample extraction.
//!
//! Entailment here is always relative to explicit finite models: `entails`
//! decides `T1 ⊨_M T2` by filtering the enumerated team space, and
//! `entails_batch` runs that over a supplied list of models. A batch pass is
//! a bounded counterexample search, not a proof of entailment over all
//! models.

use crate::error::{Error, Result};
use crate::evaluator::{check_scope, Evaluator};
use crate::model::{Scope, Structure, Team, TeamSpace};
use crate::syntax::TeamFormula;

/// A nonempty list of formulas; a team satisfies the theory iff it
/// satisfies every member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    formulas: Vec<TeamFormula>,
}

impl Theory {
    pub fn new(formulas: Vec<TeamFormula>) -> Result<Theory> {
        if formulas.is_empty() {
            return Err(Error::EmptyTheory);
        }
        Ok(Theory { formulas })
    }

    pub fn single(formula: TeamFormula) -> Theory {
        Theory {
            formulas: vec![formula],
        }
    }

    pub fn formulas(&self) -> &[TeamFormula] {
        &self.formulas
    }

    fn satisfied_by(&self, evaluator: &mut Evaluator, team: &Team) -> Result<bool> {
        for formula in &self.formulas {
            if !evaluator.holds(team, formula)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Result of one entailment or equivalence check. The counterexample, when
/// present, is the first offending team in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntailmentResult {
    pub holds: bool,
    pub counterexample: Option<Team>,
    pub teams_examined: u64,
}

/// `Bel_M(T)`: every team over the scope satisfying the theory, in
/// canonical order.
pub fn bel(
    structure: &Structure,
    theory: &Theory,
    scope: &Scope,
    cap: u64,
) -> Result<Vec<Team>> {
    for formula in theory.formulas() {
        check_scope(structure, scope, formula)?;
    }
    let mut evaluator = Evaluator::new(structure, cap);
    let space = TeamSpace::new(structure, scope.clone(), cap);
    let mut out = Vec::new();
    for team in space.enumerate_teams()? {
        if theory.satisfied_by(&mut evaluator, &team)? {
            out.push(team);
        }
    }
    Ok(out)
}

/// `T1 ⊨_M T2`: every team satisfying `T1` satisfies `T2`.
pub fn entails(
    structure: &Structure,
    premise: &Theory,
    conclusion: &Theory,
    scope: &Scope,
    cap: u64,
) -> Result<EntailmentResult> {
    for formula in premise.formulas().iter().chain(conclusion.formulas()) {
        check_scope(structure, scope, formula)?;
    }
    let mut evaluator = Evaluator::new(structure, cap);
    let space = TeamSpace::new(structure, scope.clone(), cap);
    let mut examined = 0;
    for team in space.enumerate_teams()? {
        examined += 1;
        if premise.satisfied_by(&mut evaluator, &team)?
            && !conclusion.satisfied_by(&mut evaluator, &team)?
        {
            return Ok(EntailmentResult {
                holds: false,
                counterexample: Some(team),
                teams_examined: examined,
            });
        }
    }
    Ok(EntailmentResult {
        holds: true,
        counterexample: None,
        teams_examined: examined,
    })
}

/// Two-sided entailment: `Bel_M({φ}) = Bel_M({ψ})`, with a counterexample
/// from the symmetric difference.
pub fn equivalent(
    structure: &Structure,
    left: &TeamFormula,
    right: &TeamFormula,
    scope: &Scope,
    cap: u64,
) -> Result<EntailmentResult> {
    check_scope(structure, scope, left)?;
    check_scope(structure, scope, right)?;
    let mut evaluator = Evaluator::new(structure, cap);
    let space = TeamSpace::new(structure, scope.clone(), cap);
    let mut examined = 0;
    for team in space.enumerate_teams()? {
        examined += 1;
        if evaluator.holds(&team, left)? != evaluator.holds(&team, right)? {
            return Ok(EntailmentResult {
                holds: false,
                counterexample: Some(team),
                teams_examined: examined,
            });
        }
    }
    Ok(EntailmentResult {
        holds: true,
        counterexample: None,
        teams_examined: examined,
    })
}

/// Per-model verdicts for a batch entailment run.
#[derive(Debug)]
pub struct BatchResult {
    pub per_model: Vec<Result<EntailmentResult>>,
    /// Conjunction of the per-model verdicts. Vacuously true when no models
    /// were supplied.
    pub all_hold: bool,
    /// Set when the model list was empty: a vacuous pass proves nothing.
    pub vacuous: bool,
}

/// Runs `entails` against each supplied model. This is a bounded search for
/// counterexamples, not a proof of `T1 ⊨ T2`.
pub fn entails_batch(
    models: &[Structure],
    premise: &Theory,
    conclusion: &Theory,
    scope: &Scope,
    cap: u64,
) -> BatchResult {
    let per_model: Vec<Result<EntailmentResult>> = models
        .iter()
        .map(|m| entails(m, premise, conclusion, scope, cap))
        .collect();
    let all_hold = per_model
        .iter()
        .all(|r| matches!(r, Ok(result) if result.holds));
    BatchResult {
        all_hold,
        vacuous: models.is_empty(),
        per_model,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{StructureData, DEFAULT_CAP};
    use crate::syntax::parse;

    fn with_constants(names: &[&str]) -> Structure {
        let mut data = StructureData {
            domain: names.iter().map(|n| n.to_string()).collect(),
            ..Default::default()
        };
        for (i, _) in names.iter().enumerate() {
            data.constants.insert(format!("c{i}"), names[i].to_string());
        }
        Structure::from_data(&data).unwrap()
    }

    fn theory(texts: &[&str]) -> Theory {
        Theory::new(texts.iter().map(|t| parse(t).unwrap()).collect()).unwrap()
    }

    #[test]
    fn bel_counts_for_constancy() {
        let m = with_constants(&["0", "1"]);
        let scope = Scope::new(["x", "y"]);
        // Subsets of each x-column plus the shared empty team: 4 + 4 - 1.
        let teams = bel(&m, &theory(&["const(x)"]), &scope, DEFAULT_CAP).unwrap();
        assert_eq!(teams.len(), 7);
        assert_eq!(
            bel(&m, &theory(&["B(x = x)"]), &scope, DEFAULT_CAP)
                .unwrap()
                .len(),
            16
        );
        assert_eq!(
            bel(&m, &theory(&["P(x = x)"]), &scope, DEFAULT_CAP)
                .unwrap()
                .len(),
            15
        );
    }

    #[test]
    fn bel_respects_conjunction() {
        let m = with_constants(&["0", "1"]);
        let scope = Scope::new(["x", "y"]);
        let both = bel(&m, &theory(&["const(x)", "inc(x; y)"]), &scope, DEFAULT_CAP).unwrap();
        let lhs = bel(&m, &theory(&["const(x)"]), &scope, DEFAULT_CAP).unwrap();
        let rhs = bel(&m, &theory(&["inc(x; y)"]), &scope, DEFAULT_CAP).unwrap();
        let expected: Vec<Team> = lhs.into_iter().filter(|t| rhs.contains(t)).collect();
        assert_eq!(both, expected);
    }

    #[test]
    fn credulous_self_update_is_not_idempotent() {
        let m = with_constants(&["0", "1"]);
        let scope = Scope::new(["x"]);
        let result = entails(
            &m,
            &theory(&["const(x) otimes const(x)"]),
            &theory(&["const(x)"]),
            &scope,
            DEFAULT_CAP,
        )
        .unwrap();
        assert!(!result.holds);
        let counterexample = result.counterexample.unwrap();
        assert_eq!(counterexample.len(), 2);
    }

    #[test]
    fn entailment_is_reflexive() {
        let m = with_constants(&["0", "1"]);
        let scope = Scope::new(["x", "y"]);
        let t = theory(&["inc(x; y)", "P(x = y)"]);
        assert!(entails(&m, &t, &t, &scope, DEFAULT_CAP).unwrap().holds);
    }

    #[test]
    fn equivalence_with_counterexample() {
        let m = with_constants(&["0", "1"]);
        let scope = Scope::new(["x"]);
        let result = equivalent(
            &m,
            &parse("const(x)").unwrap(),
            &parse("B(x = c0)").unwrap(),
            &scope,
            DEFAULT_CAP,
        )
        .unwrap();
        assert!(!result.holds);
        // The constant x=1 team separates the two.
        let counterexample = result.counterexample.unwrap();
        let one = m.element("1").unwrap();
        assert!(counterexample.rows().all(|r| r == [one]));
    }

    #[test]
    fn constancy_is_independence_with_itself() {
        let m = with_constants(&["0", "1"]);
        let scope = Scope::new(["x", "y"]);
        let result = equivalent(
            &m,
            &parse("const(x)").unwrap(),
            &parse("ind(x; x)").unwrap(),
            &scope,
            DEFAULT_CAP,
        )
        .unwrap();
        assert!(result.holds);
        assert_eq!(result.teams_examined, 16);
    }

    #[test]
    fn batch_claim_true_at_two_elements_false_at_three() {
        let m2 = with_constants(&["0", "1"]);
        let m3 = with_constants(&["0", "1", "2"]);
        let scope = Scope::new(["x"]);
        let premise = theory(&["const(x)"]);
        let conclusion = theory(&["B(x = c0) or B(x = c1)"]);
        let batch = entails_batch(&[m2, m3], &premise, &conclusion, &scope, DEFAULT_CAP);
        assert!(!batch.all_hold);
        assert!(!batch.vacuous);
        assert!(batch.per_model[0].as_ref().unwrap().holds);
        assert!(!batch.per_model[1].as_ref().unwrap().holds);
    }

    #[test]
    fn empty_batch_is_vacuous() {
        let scope = Scope::new(["x"]);
        let t = theory(&["const(x)"]);
        let batch = entails_batch(&[], &t, &t, &scope, DEFAULT_CAP);
        assert!(batch.all_hold);
        assert!(batch.vacuous);
    }

    #[test]
    fn credulous_update_is_associative_as_entailment() {
        let m = with_constants(&["0", "1"]);
        let scope = Scope::new(["x", "y"]);
        let triples = [
            ("const(x)", "inc(x; y)", "P(x = y)"),
            ("B(x = y)", "const(y)", "not const(x)"),
            ("dep(x; y)", "exc(x; y)", "const(x)"),
        ];
        for (a, b, c) in triples {
            let left = theory(&[&format!("(({a}) otimes ({b})) otimes ({c})")]);
            let right = theory(&[&format!("({a}) otimes (({b}) otimes ({c}))")]);
            assert!(entails(&m, &left, &right, &scope, DEFAULT_CAP).unwrap().holds);
            assert!(entails(&m, &right, &left, &scope, DEFAULT_CAP).unwrap().holds);
        }
    }

    // φ ◊ ψ ⊨_M θ agrees with φ ⊨_M ψ →◊ θ on every model in the batch,
    // at domain sizes two and three.
    #[test]
    fn adjointness_instances_hold_at_sizes_two_and_three() {
        let models = [with_constants(&["0", "1"]), with_constants(&["0", "1", "2"])];
        let scope = Scope::new(["x", "y"]);
        let instances = [
            ("const(x)", "const(y)", "dep(x; y)"),
            ("inc(x; y)", "B(x = y)", "P(x = x)"),
        ];
        let operators = [
            ("oplus", "c->"),
            ("otimes", "l->"),
            ("ominus", "s->"),
            ("odot", "o->"),
        ];
        for (phi, psi, theta) in instances {
            for (update, implication) in operators {
                let updated = theory(&[&format!("({phi}) {update} ({psi})")]);
                let left = entails_batch(&models, &updated, &theory(&[theta]), &scope, DEFAULT_CAP);
                let implied = theory(&[&format!("({psi}) {implication} ({theta})")]);
                let right =
                    entails_batch(&models, &theory(&[phi]), &implied, &scope, DEFAULT_CAP);
                assert!(!left.vacuous && left.per_model.len() == 2);
                for (l, r) in left.per_model.iter().zip(&right.per_model) {
                    assert_eq!(
                        l.as_ref().unwrap().holds,
                        r.as_ref().unwrap().holds,
                        "{phi} {update} {psi} vs {psi} {implication} {theta}"
                    );
                }
            }
        }
    }
}
