//! The team-level satisfaction relation `M ⊨_X φ`, implemented by
//! exhaustive search over the relevant team space.
//!
//! Search connectives quantify over teams: the update connectives search
//! splits or labelings of assignments, the implications quantify over every
//! satisfying team, and the minimal connectives materialize whole belief
//! families. All of this is brute force by design; the cap bounds the
//! assignment space, and searches that would need more than
//! [`SEARCH_LIMIT`] assignments in the current scope are refused rather
//! than left to run forever.
//!
//! Verdicts are memoized per `(formula, team)` within one evaluator, since
//! the implication and minimal connectives re-evaluate subformulas across
//! the whole team space.

use std::collections::HashMap;
use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::fo_eval::Env;
use crate::model::{x_variants, Element, Scope, Structure, Team, TeamSpace, SEARCH_LIMIT};
use crate::syntax::{TeamFormula, TeamQuantifier, Term};
use crate::updates::{minimal_apply, UpdateKind};

/// One satisfaction question: does `team` satisfy `formula` in `structure`?
#[derive(Debug, Clone)]
pub struct Query<'a> {
    pub structure: &'a Structure,
    pub team: &'a Team,
    pub formula: &'a TeamFormula,
    pub cap: u64,
}

/// Evaluation result. A witness is attached where the connective family
/// supports one: the found split or source team for update connectives and
/// existential quantifiers, the offending team for failed implications and
/// failed `regardless`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// The `(Y, Z)` pair found for an update connective.
    Split { left: Team, right: Team },
    /// A single team of evidence.
    Team(Team),
}

impl Verdict {
    fn plain(holds: bool) -> Verdict {
        Verdict {
            holds,
            witness: None,
        }
    }
}

/// Checks that every free variable is either in scope or names one of the
/// structure's constants.
pub fn check_scope(structure: &Structure, scope: &Scope, formula: &TeamFormula) -> Result<()> {
    for var in formula.free_variables() {
        if !scope.contains(&var) && !structure.has_constant(&var) {
            return Err(Error::ScopeViolation { var });
        }
    }
    Ok(())
}

/// Evaluates one query with a fresh evaluator.
pub fn evaluate(query: &Query) -> Result<Verdict> {
    Evaluator::new(query.structure, query.cap).evaluate(query.team, query.formula)
}

/// A reusable evaluation context: one structure, one cap, and the verdict
/// and belief-set caches shared across queries against that structure.
pub struct Evaluator<'a> {
    structure: &'a Structure,
    cap: u64,
    /// Distinct formulas seen so far, interned to indices into `memo`.
    formula_ids: HashMap<TeamFormula, usize>,
    memo: Vec<HashMap<Team, bool>>,
    bel_cache: HashMap<(usize, Scope), Rc<Vec<Team>>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(structure: &'a Structure, cap: u64) -> Evaluator<'a> {
        Evaluator {
            structure,
            cap,
            formula_ids: HashMap::new(),
            memo: Vec::new(),
            bel_cache: HashMap::new(),
        }
    }

    fn formula_id(&mut self, formula: &TeamFormula) -> usize {
        if let Some(&id) = self.formula_ids.get(formula) {
            return id;
        }
        let id = self.memo.len();
        self.formula_ids.insert(formula.clone(), id);
        self.memo.push(HashMap::new());
        id
    }

    pub fn structure(&self) -> &'a Structure {
        self.structure
    }

    /// Full verdict for the top-level connective, with witness capture.
    pub fn evaluate(&mut self, team: &Team, formula: &TeamFormula) -> Result<Verdict> {
        check_scope(self.structure, team.scope(), formula)?;
        self.verdict(team, formula)
    }

    /// Boolean-only entry point.
    pub fn holds(&mut self, team: &Team, formula: &TeamFormula) -> Result<bool> {
        check_scope(self.structure, team.scope(), formula)?;
        self.eval(team, formula)
    }

    /// All teams over `scope` satisfying the formula, in canonical order.
    pub fn bel_teams(&mut self, scope: &Scope, formula: &TeamFormula) -> Result<Rc<Vec<Team>>> {
        let key = (self.formula_id(formula), scope.clone());
        if let Some(cached) = self.bel_cache.get(&key) {
            return Ok(Rc::clone(cached));
        }
        let space = TeamSpace::new(self.structure, scope.clone(), self.cap);
        let mut satisfying = Vec::new();
        for team in space.enumerate_teams()? {
            if self.eval(&team, formula)? {
                satisfying.push(team);
            }
        }
        let satisfying = Rc::new(satisfying);
        self.bel_cache.insert(key, Rc::clone(&satisfying));
        Ok(satisfying)
    }

    fn eval(&mut self, team: &Team, formula: &TeamFormula) -> Result<bool> {
        let id = self.formula_id(formula);
        if let Some(&cached) = self.memo[id].get(team) {
            return Ok(cached);
        }
        let holds = self.verdict(team, formula)?.holds;
        self.memo[id].insert(team.clone(), holds);
        Ok(holds)
    }

    fn verdict(&mut self, team: &Team, formula: &TeamFormula) -> Result<Verdict> {
        use TeamFormula::*;
        match formula {
            Belief(fo) => {
                for row in team.rows() {
                    if !Env::new(self.structure, team.scope(), row).sat(fo)? {
                        return Ok(Verdict::plain(false));
                    }
                }
                Ok(Verdict::plain(true))
            }
            Possible(fo) => {
                for row in team.rows() {
                    if Env::new(self.structure, team.scope(), row).sat(fo)? {
                        return Ok(Verdict::plain(true));
                    }
                }
                Ok(Verdict::plain(false))
            }
            Constancy(ts) => {
                let mut first: Option<Vec<Element>> = None;
                for row in team.rows() {
                    let value = self.tuple(team.scope(), row, ts)?;
                    match &first {
                        None => first = Some(value),
                        Some(seen) if *seen != value => return Ok(Verdict::plain(false)),
                        Some(_) => {}
                    }
                }
                Ok(Verdict::plain(true))
            }
            Dependence(t1, t2) => {
                // Rows agreeing on t1 must agree on t2.
                let mut seen: BTreeMap<Vec<Element>, Vec<Element>> = BTreeMap::new();
                for row in team.rows() {
                    let key = self.tuple(team.scope(), row, t1)?;
                    let value = self.tuple(team.scope(), row, t2)?;
                    if let Some(previous) = seen.get(&key) {
                        if *previous != value {
                            return Ok(Verdict::plain(false));
                        }
                    } else {
                        seen.insert(key, value);
                    }
                }
                Ok(Verdict::plain(true))
            }
            Inclusion(t1, t2) => {
                self.check_tuple_lengths(t1, t2)?;
                let mut right: BTreeSet<Vec<Element>> = BTreeSet::new();
                for row in team.rows() {
                    right.insert(self.tuple(team.scope(), row, t2)?);
                }
                for row in team.rows() {
                    if !right.contains(&self.tuple(team.scope(), row, t1)?) {
                        return Ok(Verdict::plain(false));
                    }
                }
                Ok(Verdict::plain(true))
            }
            Exclusion(t1, t2) => {
                self.check_tuple_lengths(t1, t2)?;
                let mut left = BTreeSet::new();
                let mut right = BTreeSet::new();
                for row in team.rows() {
                    left.insert(self.tuple(team.scope(), row, t1)?);
                    right.insert(self.tuple(team.scope(), row, t2)?);
                }
                Ok(Verdict::plain(left.intersection(&right).next().is_none()))
            }
            Independence(t1, t2) => {
                // The realized (t1, t2) pairs must form a full product.
                let mut pairs = BTreeSet::new();
                let mut lefts = BTreeSet::new();
                let mut rights = BTreeSet::new();
                for row in team.rows() {
                    let a = self.tuple(team.scope(), row, t1)?;
                    let b = self.tuple(team.scope(), row, t2)?;
                    lefts.insert(a.clone());
                    rights.insert(b.clone());
                    pairs.insert((a, b));
                }
                for a in &lefts {
                    for b in &rights {
                        if !pairs.contains(&(a.clone(), b.clone())) {
                            return Ok(Verdict::plain(false));
                        }
                    }
                }
                Ok(Verdict::plain(true))
            }
            CondIndependence { cond, left, right } => {
                // Within each group of rows agreeing on the condition tuple,
                // the (left, right) pairs must form a full product.
                let mut groups: BTreeMap<Vec<Element>, Group> = BTreeMap::new();
                for row in team.rows() {
                    let c = self.tuple(team.scope(), row, cond)?;
                    let a = self.tuple(team.scope(), row, left)?;
                    let b = self.tuple(team.scope(), row, right)?;
                    let group = groups.entry(c).or_default();
                    group.lefts.insert(a.clone());
                    group.rights.insert(b.clone());
                    group.pairs.insert((a, b));
                }
                for group in groups.values() {
                    for a in &group.lefts {
                        for b in &group.rights {
                            if !group.pairs.contains(&(a.clone(), b.clone())) {
                                return Ok(Verdict::plain(false));
                            }
                        }
                    }
                }
                Ok(Verdict::plain(true))
            }
            And(a, b) => Ok(Verdict::plain(self.eval(team, a)? && self.eval(team, b)?)),
            Or(a, b) => Ok(Verdict::plain(self.eval(team, a)? || self.eval(team, b)?)),
            Not(inner) => Ok(Verdict::plain(!self.eval(team, inner)?)),
            Exists1(x, body) => {
                for el in self.structure.elements() {
                    if self.eval(team, &body.substitute(x, el))? {
                        return Ok(Verdict::plain(true));
                    }
                }
                Ok(Verdict::plain(false))
            }
            Forall1(x, body) => {
                for el in self.structure.elements() {
                    if !self.eval(team, &body.substitute(x, el))? {
                        return Ok(Verdict::plain(false));
                    }
                }
                Ok(Verdict::plain(true))
            }
            Update(kind, a, b) => self.verdict_update(team, *kind, a, b),
            AdjointImp(kind, a, b) => self.verdict_adjoint_imp(team, *kind, a, b),
            MinUpdate(kind, a, b) => self.verdict_min_update(team, *kind, a, b),
            MinImp(kind, a, b) => self.verdict_min_imp(team, *kind, a, b),
            Quantified(q, x, body) => self.verdict_quantifier(team, *q, x, body),
        }
    }

    fn tuple(&self, scope: &Scope, row: &[Element], terms: &[Term]) -> Result<Vec<Element>> {
        let env = Env::new(self.structure, scope, row);
        terms.iter().map(|t| env.eval_term(t)).collect()
    }

    fn check_tuple_lengths(&self, a: &[Term], b: &[Term]) -> Result<()> {
        if a.len() != b.len() {
            return Err(Error::TupleLengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        Ok(())
    }

    /// Canonical assignment list of the current scope, guarded by the cap
    /// and the search limit. Every team-space search goes through this.
    fn search_rows(&self, scope: &Scope) -> Result<Vec<Vec<Element>>> {
        let space = TeamSpace::new(self.structure, scope.clone(), self.cap);
        let rows = space.canonical_rows()?;
        if rows.len() > SEARCH_LIMIT as usize {
            return Err(Error::SearchTooLarge {
                assignments: rows.len() as u128,
                limit: SEARCH_LIMIT,
            });
        }
        Ok(rows)
    }

    fn team_from(&self, scope: &Scope, rows: BTreeSet<Vec<Element>>) -> Team {
        Team::new(scope.clone(), rows).expect("rows come from the same scope")
    }

    fn verdict_update(
        &mut self,
        team: &Team,
        kind: UpdateKind,
        left: &TeamFormula,
        right: &TeamFormula,
    ) -> Result<Verdict> {
        let scope = team.scope().clone();
        match kind {
            // X = Y ∪ Z: Y ranges over subsets of X, Z over (X \ Y) plus any
            // part of Y. The split need not be disjoint (lax semantics).
            UpdateKind::Credulous => {
                self.search_rows(&scope)?;
                let rows: Vec<Vec<Element>> = team.rows().map(<[_]>::to_vec).collect();
                for y_rows in subsets(&rows) {
                    let y = self.team_from(&scope, y_rows.iter().cloned().collect());
                    if !self.eval(&y, left)? {
                        continue;
                    }
                    let complement: BTreeSet<Vec<Element>> = rows
                        .iter()
                        .filter(|row| !y.contains(row))
                        .cloned()
                        .collect();
                    for overlap in subsets(&y_rows) {
                        let mut z_rows = complement.clone();
                        z_rows.extend(overlap);
                        let z = self.team_from(&scope, z_rows);
                        if self.eval(&z, right)? {
                            return Ok(Verdict {
                                holds: true,
                                witness: Some(Witness::Split { left: y, right: z }),
                            });
                        }
                    }
                }
                Ok(Verdict::plain(false))
            }
            // X = Y ∩ Z: Y and Z extend X with disjoint sets of assignments
            // from outside X.
            UpdateKind::Confident => {
                let outside: Vec<Vec<Element>> = self
                    .search_rows(&scope)?
                    .into_iter()
                    .filter(|row| !team.contains(row))
                    .collect();
                for y_extra in subsets(&outside) {
                    let mut y_rows: BTreeSet<Vec<Element>> =
                        team.rows().map(<[_]>::to_vec).collect();
                    y_rows.extend(y_extra);
                    let y = self.team_from(&scope, y_rows);
                    if !self.eval(&y, left)? {
                        continue;
                    }
                    let rest: Vec<Vec<Element>> = outside
                        .iter()
                        .filter(|row| !y.contains(row))
                        .cloned()
                        .collect();
                    for z_extra in subsets(&rest) {
                        let mut z_rows: BTreeSet<Vec<Element>> =
                            team.rows().map(<[_]>::to_vec).collect();
                        z_rows.extend(z_extra);
                        let z = self.team_from(&scope, z_rows);
                        if self.eval(&z, right)? {
                            return Ok(Verdict {
                                holds: true,
                                witness: Some(Witness::Split { left: y, right: z }),
                            });
                        }
                    }
                }
                Ok(Verdict::plain(false))
            }
            // M ⊨_X ψ and some Y ⊇ X satisfies φ.
            UpdateKind::Skeptical => {
                let outside: Vec<Vec<Element>> = self
                    .search_rows(&scope)?
                    .into_iter()
                    .filter(|row| !team.contains(row))
                    .collect();
                if !self.eval(team, right)? {
                    return Ok(Verdict::plain(false));
                }
                for extra in subsets(&outside) {
                    let mut rows: BTreeSet<Vec<Element>> =
                        team.rows().map(<[_]>::to_vec).collect();
                    rows.extend(extra);
                    let y = self.team_from(&scope, rows);
                    if self.eval(&y, left)? {
                        return Ok(Verdict {
                            holds: true,
                            witness: Some(Witness::Split {
                                left: y,
                                right: team.clone(),
                            }),
                        });
                    }
                }
                Ok(Verdict::plain(false))
            }
            // M ⊨_X ψ and some Y ⊆ X satisfies φ.
            UpdateKind::Openminded => {
                self.search_rows(&scope)?;
                if !self.eval(team, right)? {
                    return Ok(Verdict::plain(false));
                }
                let rows: Vec<Vec<Element>> = team.rows().map(<[_]>::to_vec).collect();
                for subset in subsets(&rows) {
                    let y = self.team_from(&scope, subset.into_iter().collect());
                    if self.eval(&y, left)? {
                        return Ok(Verdict {
                            holds: true,
                            witness: Some(Witness::Split {
                                left: y,
                                right: team.clone(),
                            }),
                        });
                    }
                }
                Ok(Verdict::plain(false))
            }
        }
    }

    fn verdict_adjoint_imp(
        &mut self,
        team: &Team,
        kind: UpdateKind,
        left: &TeamFormula,
        right: &TeamFormula,
    ) -> Result<Verdict> {
        let scope = team.scope().clone();
        match kind {
            // For every Y satisfying the antecedent, X ∩ Y (resp. X ∪ Y)
            // must satisfy the consequent. Y ranges over the whole space.
            UpdateKind::Confident | UpdateKind::Credulous => {
                let antecedents = self.bel_teams(&scope, left)?;
                for y in antecedents.iter() {
                    let z = if kind == UpdateKind::Confident {
                        team.intersection(y)?
                    } else {
                        team.union(y)?
                    };
                    if !self.eval(&z, right)? {
                        return Ok(Verdict {
                            holds: false,
                            witness: Some(Witness::Team(y.clone())),
                        });
                    }
                }
                Ok(Verdict::plain(true))
            }
            // Every subteam satisfying the antecedent satisfies the consequent.
            UpdateKind::Skeptical => {
                self.search_rows(&scope)?;
                let rows: Vec<Vec<Element>> = team.rows().map(<[_]>::to_vec).collect();
                for subset in subsets(&rows) {
                    let y = self.team_from(&scope, subset.into_iter().collect());
                    if self.eval(&y, left)? && !self.eval(&y, right)? {
                        return Ok(Verdict {
                            holds: false,
                            witness: Some(Witness::Team(y)),
                        });
                    }
                }
                Ok(Verdict::plain(true))
            }
            // Every superteam satisfying the antecedent satisfies the consequent.
            UpdateKind::Openminded => {
                let all_rows = self.search_rows(&scope)?;
                let outside: Vec<Vec<Element>> = all_rows
                    .into_iter()
                    .filter(|row| !team.contains(row))
                    .collect();
                for extra in subsets(&outside) {
                    let mut rows: BTreeSet<Vec<Element>> =
                        team.rows().map(<[_]>::to_vec).collect();
                    rows.extend(extra);
                    let y = self.team_from(&scope, rows);
                    if self.eval(&y, left)? && !self.eval(&y, right)? {
                        return Ok(Verdict {
                            holds: false,
                            witness: Some(Witness::Team(y)),
                        });
                    }
                }
                Ok(Verdict::plain(true))
            }
        }
    }

    fn verdict_min_update(
        &mut self,
        team: &Team,
        kind: UpdateKind,
        left: &TeamFormula,
        right: &TeamFormula,
    ) -> Result<Verdict> {
        let scope = team.scope().clone();
        let family: BTreeSet<Team> = self.bel_teams(&scope, right)?.iter().cloned().collect();
        let sources = self.bel_teams(&scope, left)?;
        for y in sources.iter() {
            if minimal_apply(kind, y, &family)?.contains(team) {
                return Ok(Verdict {
                    holds: true,
                    witness: Some(Witness::Team(y.clone())),
                });
            }
        }
        Ok(Verdict::plain(false))
    }

    fn verdict_min_imp(
        &mut self,
        team: &Team,
        kind: UpdateKind,
        left: &TeamFormula,
        right: &TeamFormula,
    ) -> Result<Verdict> {
        let scope = team.scope().clone();
        let family: BTreeSet<Team> = self.bel_teams(&scope, left)?.iter().cloned().collect();
        for z in minimal_apply(kind, team, &family)? {
            if !self.eval(&z, right)? {
                return Ok(Verdict {
                    holds: false,
                    witness: Some(Witness::Team(z)),
                });
            }
        }
        Ok(Verdict::plain(true))
    }

    fn verdict_quantifier(
        &mut self,
        team: &Team,
        quantifier: TeamQuantifier,
        var: &str,
        body: &TeamFormula,
    ) -> Result<Verdict> {
        match quantifier {
            // Erasing the variable yields a body team.
            TeamQuantifier::Forgetting => {
                Ok(Verdict::plain(self.eval(&team.restrict(var), body)?))
            }
            // The team is the erasure of some body team.
            TeamQuantifier::Forgotten => {
                if team.scope().contains(var) {
                    return Err(Error::VariableInScope {
                        var: var.to_string(),
                    });
                }
                for candidate in x_variants(team, var, self.structure, self.cap)? {
                    if self.eval(&candidate, body)? {
                        return Ok(Verdict {
                            holds: true,
                            witness: Some(Witness::Team(candidate)),
                        });
                    }
                }
                Ok(Verdict::plain(false))
            }
            TeamQuantifier::Disbelief => {
                for candidate in x_variants(team, var, self.structure, self.cap)? {
                    if self.eval(&candidate, body)? {
                        return Ok(Verdict {
                            holds: true,
                            witness: Some(Witness::Team(candidate)),
                        });
                    }
                }
                Ok(Verdict::plain(false))
            }
            TeamQuantifier::Regardless => {
                for candidate in x_variants(team, var, self.structure, self.cap)? {
                    if !self.eval(&candidate, body)? {
                        return Ok(Verdict {
                            holds: false,
                            witness: Some(Witness::Team(candidate)),
                        });
                    }
                }
                Ok(Verdict::plain(true))
            }
            // Blanking out the variable yields a body team.
            TeamQuantifier::Doubting => Ok(Verdict::plain(
                self.eval(&team.blanket_expand(self.structure, var), body)?,
            )),
            // X = Y[M/x] forces X to be saturated at x; the candidate
            // sources Y are then exactly the teams agreeing with X off x.
            TeamQuantifier::Doubted => {
                if !team.scope().contains(var)
                    || *team != team.blanket_expand(self.structure, var)
                {
                    return Ok(Verdict::plain(false));
                }
                for candidate in x_variants(team, var, self.structure, self.cap)? {
                    if self.eval(&candidate, body)? {
                        return Ok(Verdict {
                            holds: true,
                            witness: Some(Witness::Team(candidate)),
                        });
                    }
                }
                Ok(Verdict::plain(false))
            }
        }
    }
}

#[derive(Default)]
struct Group {
    lefts: BTreeSet<Vec<Element>>,
    rights: BTreeSet<Vec<Element>>,
    pairs: BTreeSet<(Vec<Element>, Vec<Element>)>,
}

/// All subsets of a row list in ascending bitmask order, starting from the
/// empty subset.
fn subsets<'b>(rows: &'b [Vec<Element>]) -> impl Iterator<Item = Vec<Vec<Element>>> + 'b {
    let total: u128 = 1u128 << rows.len();
    (0..total).map(move |mask| {
        rows.iter()
            .enumerate()
            .filter(|(i, _)| mask >> *i & 1 == 1)
            .map(|(_, row)| row.clone())
            .collect()
    })
}
