//! Finite first-order structures, assignments, teams, and the team-space
//! enumeration primitives the rest of the engine consumes.
//!
//! Teams carry an explicit scope: the empty team over `{x}` and the empty
//! team over `{x,y}` are different values, and teams with different scopes
//! never compare equal. Elements are interned as indices into the domain
//! ordering so rows can be compared and enumerated cheaply.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of assignments in an enumerated space.
pub const DEFAULT_CAP: u64 = 4096;

/// Team-space searches represent teams as subset masks over the canonical
/// assignment list, so the list must fit in one 64-bit word.
pub const SEARCH_LIMIT: u32 = 64;

/// An element of a structure's domain. Two elements of the same structure
/// are equal iff their indices in the domain ordering are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub(crate) usize);

impl Element {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A relation interpretation: declared arity plus its extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub arity: usize,
    pub tuples: BTreeSet<Vec<Element>>,
}

/// A function interpretation, total on `domain^arity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Function {
    pub arity: usize,
    pub map: BTreeMap<Vec<Element>, Element>,
}

/// A finite first-order structure. Always valid by construction: build one
/// from a [`StructureData`] (which may describe anything, including garbage)
/// via [`Structure::from_data`], which runs [`validate_structure`] first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    domain: Vec<String>,
    relations: BTreeMap<String, Relation>,
    functions: BTreeMap<String, Function>,
    constants: BTreeMap<String, Element>,
}

impl Structure {
    pub fn from_data(data: &StructureData) -> Result<Structure> {
        let report = validate_structure(data);
        if !report.is_valid() {
            return Err(Error::InvalidStructure(report.violations));
        }
        let index: BTreeMap<&str, Element> = data
            .domain
            .iter()
            .enumerate()
            .map(|(i, name)| (name.as_str(), Element(i)))
            .collect();
        let resolve = |name: &str| index[name];
        let relations = data
            .relations
            .iter()
            .map(|(name, tuples)| {
                let arity = tuples.first().map_or(0, Vec::len);
                let tuples = tuples
                    .iter()
                    .map(|t| t.iter().map(|e| resolve(e)).collect())
                    .collect();
                (name.clone(), Relation { arity, tuples })
            })
            .collect();
        let functions = data
            .functions
            .iter()
            .map(|(name, f)| {
                let map = f
                    .map
                    .iter()
                    .map(|(args, val)| (args.iter().map(|e| resolve(e)).collect(), resolve(val)))
                    .collect();
                (name.clone(), Function { arity: f.arity, map })
            })
            .collect();
        let constants = data
            .constants
            .iter()
            .map(|(name, el)| (name.clone(), resolve(el)))
            .collect();
        Ok(Structure {
            domain: data.domain.clone(),
            relations,
            functions,
            constants,
        })
    }

    pub fn to_data(&self) -> StructureData {
        StructureData {
            domain: self.domain.clone(),
            relations: self
                .relations
                .iter()
                .map(|(name, r)| {
                    let tuples = r
                        .tuples
                        .iter()
                        .map(|t| t.iter().map(|e| self.domain[e.0].clone()).collect())
                        .collect();
                    (name.clone(), tuples)
                })
                .collect(),
            functions: self
                .functions
                .iter()
                .map(|(name, f)| {
                    let map = f
                        .map
                        .iter()
                        .map(|(args, val)| {
                            let args = args.iter().map(|e| self.domain[e.0].clone()).collect();
                            (args, self.domain[val.0].clone())
                        })
                        .collect();
                    (name.clone(), FunctionData { arity: f.arity, map })
                })
                .collect(),
            constants: self
                .constants
                .iter()
                .map(|(name, el)| (name.clone(), self.domain[el.0].clone()))
                .collect(),
        }
    }

    pub fn from_json_str(json: &str) -> Result<Structure> {
        let data: StructureData = serde_json::from_str(json)?;
        Structure::from_data(&data)
    }

    pub fn domain_size(&self) -> usize {
        self.domain.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.domain.len()).map(Element)
    }

    pub fn element(&self, name: &str) -> Result<Element> {
        self.domain
            .iter()
            .position(|n| n == name)
            .map(Element)
            .ok_or_else(|| Error::UnknownSymbol {
                kind: "element",
                name: name.to_string(),
            })
    }

    pub fn element_name(&self, el: Element) -> &str {
        &self.domain[el.0]
    }

    pub fn relation(&self, name: &str) -> Result<&Relation> {
        self.relations.get(name).ok_or_else(|| Error::UnknownSymbol {
            kind: "relation",
            name: name.to_string(),
        })
    }

    pub fn function(&self, name: &str) -> Result<&Function> {
        self.functions.get(name).ok_or_else(|| Error::UnknownSymbol {
            kind: "function",
            name: name.to_string(),
        })
    }

    pub fn constant(&self, name: &str) -> Option<Element> {
        self.constants.get(name).copied()
    }

    pub fn has_constant(&self, name: &str) -> bool {
        self.constants.contains_key(name)
    }
}

/// Wire form of a structure, matching the JSON model-file format. May hold
/// invalid data; [`validate_structure`] reports every violation it finds.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct StructureData {
    pub domain: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub relations: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functions: BTreeMap<String, FunctionData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub constants: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionData {
    pub arity: usize,
    pub map: Vec<(Vec<String>, String)>,
}

/// Validation report for a structure description.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every structure invariant and lists each violation: empty or
/// duplicated domain, unknown elements, arity mismatches, and partial or
/// ambiguous function maps.
pub fn validate_structure(data: &StructureData) -> ValidationReport {
    let mut violations = Vec::new();
    if data.domain.is_empty() {
        violations.push("domain is empty".to_string());
    }
    let mut seen = BTreeSet::new();
    for name in &data.domain {
        if !seen.insert(name) {
            violations.push(format!("duplicate domain element '{name}'"));
        }
    }
    let known = |name: &String| data.domain.contains(name);

    for (name, tuples) in &data.relations {
        let arity = tuples.first().map_or(0, Vec::len);
        for tuple in tuples {
            if tuple.len() != arity {
                violations.push(format!(
                    "relation '{name}': tuple {tuple:?} has arity {} but expected {arity}",
                    tuple.len()
                ));
            }
            for el in tuple {
                if !known(el) {
                    violations.push(format!("relation '{name}': unknown element '{el}'"));
                }
            }
        }
    }

    for (name, f) in &data.functions {
        let mut keys = BTreeSet::new();
        for (args, val) in &f.map {
            if args.len() != f.arity {
                violations.push(format!(
                    "function '{name}': entry {args:?} has arity {} but expected {}",
                    args.len(),
                    f.arity
                ));
            }
            for el in args.iter().chain(std::iter::once(val)) {
                if !known(el) {
                    violations.push(format!("function '{name}': unknown element '{el}'"));
                }
            }
            if !keys.insert(args.clone()) {
                violations.push(format!("function '{name}': duplicate entry for {args:?}"));
            }
        }
        let expected = (data.domain.len() as u128).pow(f.arity.min(u32::MAX as usize) as u32);
        if (keys.len() as u128) < expected {
            violations.push(format!(
                "function '{name}' is partial: {} of {expected} entries",
                keys.len()
            ));
        }
    }

    for (name, el) in &data.constants {
        if !known(el) {
            violations.push(format!("constant '{name}': unknown element '{el}'"));
        }
    }
    ValidationReport { violations }
}

/// An ordered set of variable names. Kept sorted so equal scopes compare
/// equal regardless of the order the variables were written in.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scope(Vec<String>);

impl Scope {
    pub fn new<I, S>(vars: I) -> Scope
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        vars.sort();
        vars.dedup();
        Scope(vars)
    }

    pub fn empty() -> Scope {
        Scope(Vec::new())
    }

    pub fn vars(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, var: &str) -> bool {
        self.position(var).is_some()
    }

    pub fn position(&self, var: &str) -> Option<usize> {
        self.0.binary_search_by(|v| v.as_str().cmp(var)).ok()
    }

    /// Scope extended with `var` (no-op if already present).
    pub fn with(&self, var: &str) -> Scope {
        if self.contains(var) {
            return self.clone();
        }
        let mut vars = self.0.clone();
        let pos = vars.partition_point(|v| v.as_str() < var);
        vars.insert(pos, var.to_string());
        Scope(vars)
    }

    /// Scope with `var` removed (no-op if absent).
    pub fn without(&self, var: &str) -> Scope {
        Scope(self.0.iter().filter(|v| v.as_str() != var).cloned().collect())
    }
}

/// A total map from a scope's variables to domain elements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment {
    scope: Scope,
    values: Vec<Element>,
}

impl Assignment {
    pub fn new(scope: Scope, values: Vec<Element>) -> Result<Assignment> {
        if values.len() != scope.len() {
            return Err(Error::RowLengthMismatch {
                expected: scope.len(),
                got: values.len(),
            });
        }
        Ok(Assignment { scope, values })
    }

    pub fn scope(&self) -> &Scope {
        &self.scope
    }

    pub fn values(&self) -> &[Element] {
        &self.values
    }

    pub fn get(&self, var: &str) -> Option<Element> {
        self.scope.position(var).map(|i| self.values[i])
    }
}

/// A set of assignments sharing one scope; the belief-set representation.
/// The empty team is a legal value for any scope.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Team {
    scope: Scope,
    rows: BTreeSet<Vec<Element>>,
}

impl Team {
    pub fn empty(scope: Scope) -> Team {
        Team {
            scope,
            rows: BTreeSet::new(),
        }
    }

    pub fn new<I>(scope: Scope, rows: I) -> Result<Team>
    where
        I: IntoIterator<Item = Vec<Element>>,
    {
        let mut set = BTreeSet::new();
        for row in rows {
            if row.len() != scope.len() {
                return Err(Error::RowLengthMismatch {
                    expected: scope.len(),
                    got: row.len(),
                });
            }
            set.insert(row);
        }
        Ok(Team { scope, rows: set })
    }

    pub fn scope(&self) -> &Scope {
        &self.scope
    }

    /// Rows in canonical (lexicographic) order.
    pub fn rows(&self) -> impl Iterator<Item = &[Element]> {
        self.rows.iter().map(Vec::as_slice)
    }

    pub fn assignments(&self) -> impl Iterator<Item = Assignment> + '_ {
        self.rows.iter().map(move |row| Assignment {
            scope: self.scope.clone(),
            values: row.clone(),
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains(&self, row: &[Element]) -> bool {
        self.rows.contains(row)
    }

    fn check_scope(&self, other: &Team) -> Result<()> {
        if self.scope != other.scope {
            return Err(Error::ScopeMismatch {
                left: self.scope.0.clone(),
                right: other.scope.0.clone(),
            });
        }
        Ok(())
    }

    pub fn union(&self, other: &Team) -> Result<Team> {
        self.check_scope(other)?;
        Ok(Team {
            scope: self.scope.clone(),
            rows: self.rows.union(&other.rows).cloned().collect(),
        })
    }

    pub fn intersection(&self, other: &Team) -> Result<Team> {
        self.check_scope(other)?;
        Ok(Team {
            scope: self.scope.clone(),
            rows: self.rows.intersection(&other.rows).cloned().collect(),
        })
    }

    pub fn is_subteam_of(&self, other: &Team) -> Result<bool> {
        self.check_scope(other)?;
        Ok(self.rows.is_subset(&other.rows))
    }

    /// `X_{\x}`: drop the variable's column and collapse duplicate rows.
    /// Identity when the variable is not in scope.
    pub fn restrict(&self, var: &str) -> Team {
        let Some(pos) = self.scope.position(var) else {
            return self.clone();
        };
        let scope = self.scope.without(var);
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.remove(pos);
                r
            })
            .collect();
        Team { scope, rows }
    }

    /// `X[M/x]`: every row duplicated once per domain element with `x` set
    /// to that element. Overwrites the column if `x` is already in scope.
    pub fn blanket_expand(&self, structure: &Structure, var: &str) -> Team {
        let base = self.restrict(var);
        let scope = base.scope.with(var);
        let pos = scope.position(var).expect("var was just added");
        let rows = base
            .rows
            .iter()
            .flat_map(|row| {
                structure.elements().map(move |el| {
                    let mut r = row.clone();
                    r.insert(pos, el);
                    r
                })
            })
            .collect();
        Team { scope, rows }
    }

    pub fn from_data(data: &TeamData, structure: &Structure) -> Result<Team> {
        let scope = Scope::new(data.vars.iter().cloned());
        if scope.len() != data.vars.len() {
            return Err(Error::InvalidStructure(vec![
                "team file lists a duplicate variable".to_string(),
            ]));
        }
        // Column permutation from file order to sorted scope order.
        let order: Vec<usize> = scope
            .vars()
            .iter()
            .map(|v| data.vars.iter().position(|w| w == v).unwrap())
            .collect();
        let mut rows = BTreeSet::new();
        for row in &data.rows {
            if row.len() != data.vars.len() {
                return Err(Error::RowLengthMismatch {
                    expected: data.vars.len(),
                    got: row.len(),
                });
            }
            let resolved: Vec<Element> = order
                .iter()
                .map(|&i| structure.element(&row[i]))
                .collect::<Result<_>>()?;
            rows.insert(resolved);
        }
        Ok(Team { scope, rows })
    }

    pub fn to_data(&self, structure: &Structure) -> TeamData {
        TeamData {
            vars: self.scope.vars().to_vec(),
            rows: self
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|&el| structure.element_name(el).to_string())
                        .collect()
                })
                .collect(),
        }
    }
}

/// Wire form of a team, matching the JSON team-file format. Row entries
/// positionally match `vars`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TeamData {
    pub vars: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

pub fn load_structure(path: impl AsRef<Path>) -> Result<Structure> {
    Structure::from_json_str(&fs::read_to_string(path)?)
}

pub fn load_team(path: impl AsRef<Path>, structure: &Structure) -> Result<Team> {
    let data: TeamData = serde_json::from_str(&fs::read_to_string(path)?)?;
    Team::from_data(&data, structure)
}

/// The assignment space of a scope over a structure's domain, with the
/// canonical enumeration everything downstream relies on: assignments are
/// ordered lexicographically (by variable order, then element index) and
/// teams in subset-bitmask order over that assignment list.
#[derive(Debug, Clone)]
pub struct TeamSpace<'a> {
    structure: &'a Structure,
    scope: Scope,
    cap: u64,
}

impl<'a> TeamSpace<'a> {
    pub fn new(structure: &'a Structure, scope: Scope, cap: u64) -> TeamSpace<'a> {
        TeamSpace {
            structure,
            scope,
            cap,
        }
    }

    pub fn scope(&self) -> &Scope {
        &self.scope
    }

    pub fn structure(&self) -> &'a Structure {
        self.structure
    }

    /// `|domain|^|scope|`, after checking the cap.
    pub fn assignment_count(&self) -> Result<u64> {
        let d = self.structure.domain_size() as u128;
        let mut count: u128 = 1;
        for _ in 0..self.scope.len() {
            count = count.saturating_mul(d);
            if count > self.cap as u128 {
                return Err(Error::SpaceTooLarge {
                    assignments: count,
                    cap: self.cap,
                });
            }
        }
        Ok(count as u64)
    }

    /// All assignments in canonical lexicographic order.
    pub fn enumerate_assignments(&self) -> Result<Vec<Assignment>> {
        Ok(self
            .canonical_rows()?
            .into_iter()
            .map(|values| Assignment {
                scope: self.scope.clone(),
                values,
            })
            .collect())
    }

    pub(crate) fn canonical_rows(&self) -> Result<Vec<Vec<Element>>> {
        let count = self.assignment_count()?;
        let d = self.structure.domain_size();
        let k = self.scope.len();
        let mut rows = Vec::with_capacity(count as usize);
        let mut current = vec![Element(0); k];
        for _ in 0..count {
            rows.push(current.clone());
            // Advance like a base-d odometer, last variable fastest.
            for i in (0..k).rev() {
                if current[i].0 + 1 < d {
                    current[i].0 += 1;
                    break;
                }
                current[i].0 = 0;
            }
        }
        Ok(rows)
    }

    /// Every subset of the assignment space exactly once, in subset-bitmask
    /// order (bit `i` selects the `i`-th canonical assignment).
    pub fn enumerate_teams(&self) -> Result<TeamIter> {
        let rows = self.canonical_rows()?;
        if rows.len() > SEARCH_LIMIT as usize {
            return Err(Error::SearchTooLarge {
                assignments: rows.len() as u128,
                limit: SEARCH_LIMIT,
            });
        }
        Ok(TeamIter {
            scope: self.scope.clone(),
            rows,
            next: 0,
            done: false,
        })
    }

    pub fn team_count(&self) -> Result<u128> {
        let count = self.assignment_count()?;
        if count > SEARCH_LIMIT as u64 {
            return Err(Error::SearchTooLarge {
                assignments: count as u128,
                limit: SEARCH_LIMIT,
            });
        }
        Ok(1u128 << count)
    }
}

/// Stream over all teams of a space in canonical mask order.
pub struct TeamIter {
    scope: Scope,
    rows: Vec<Vec<Element>>,
    next: u128,
    done: bool,
}

impl Iterator for TeamIter {
    type Item = Team;

    fn next(&mut self) -> Option<Team> {
        if self.done {
            return None;
        }
        let mask = self.next;
        let team = Team {
            scope: self.scope.clone(),
            rows: self
                .rows
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> *i & 1 == 1)
                .map(|(_, row)| row.clone())
                .collect(),
        };
        if mask + 1 == 1u128 << self.rows.len() {
            self.done = true;
        } else {
            self.next = mask + 1;
        }
        Some(team)
    }
}

/// Every team `Y` with `scope(Y) = scope(X) ∪ {x}` and the same restriction
/// at `x` as `X`. Equivalently: all `X[H/x]` for `H` mapping each row of
/// `X_{\x}` to a nonempty subset of the domain.
pub fn x_variants(
    team: &Team,
    var: &str,
    structure: &Structure,
    cap: u64,
) -> Result<XVariants> {
    let space = TeamSpace::new(structure, team.scope().with(var), cap);
    space.assignment_count()?;
    let d = structure.domain_size();
    if d > 63 {
        return Err(Error::SearchTooLarge {
            assignments: d as u128,
            limit: SEARCH_LIMIT,
        });
    }
    let base = team.restrict(var);
    let scope = base.scope().with(var);
    let pos = scope.position(var).expect("var was just added");
    let base_rows: Vec<Vec<Element>> = base.rows.iter().cloned().collect();
    let choices = vec![1u64; base_rows.len()];
    Ok(XVariants {
        scope,
        pos,
        base_rows,
        full: (1u64 << d) - 1,
        choices,
        done: false,
    })
}

/// Lazy stream over the `(2^|domain| - 1)^|rows|` supplementations of a team
/// at one variable, in a fixed odometer order (first row most significant).
pub struct XVariants {
    scope: Scope,
    pos: usize,
    base_rows: Vec<Vec<Element>>,
    full: u64,
    choices: Vec<u64>,
    done: bool,
}

impl Iterator for XVariants {
    type Item = Team;

    fn next(&mut self) -> Option<Team> {
        if self.done {
            return None;
        }
        let mut rows = BTreeSet::new();
        for (row, &subset) in self.base_rows.iter().zip(&self.choices) {
            let mut bits = subset;
            while bits != 0 {
                let el = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let mut r = row.clone();
                r.insert(self.pos, Element(el));
                rows.insert(r);
            }
        }
        let team = Team {
            scope: self.scope.clone(),
            rows,
        };
        // Advance the per-row subset odometer; subsets run 1 ..= full.
        let mut i = self.base_rows.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.choices[i] < self.full {
                self.choices[i] += 1;
                break;
            }
            self.choices[i] = 1;
        }
        Some(team)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_el() -> Structure {
        Structure::from_data(&StructureData {
            domain: vec!["0".into(), "1".into()],
            ..Default::default()
        })
        .unwrap()
    }

    fn team_over(structure: &Structure, vars: &[&str], rows: &[&[usize]]) -> Team {
        let scope = Scope::new(vars.iter().copied());
        let _ = structure;
        Team::new(
            scope,
            rows.iter().map(|r| r.iter().map(|&i| Element(i)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn validates_empty_interpretations() {
        let report = validate_structure(&StructureData {
            domain: vec!["0".into(), "1".into()],
            ..Default::default()
        });
        assert!(report.is_valid());
    }

    #[test]
    fn reports_bad_arity_tuple() {
        let mut data = StructureData {
            domain: vec!["0".into(), "1".into()],
            ..Default::default()
        };
        data.relations.insert(
            "R".into(),
            vec![vec!["0".into()], vec!["0".into(), "1".into()]],
        );
        let report = validate_structure(&data);
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.contains("arity")));
    }

    #[test]
    fn validates_tournament_structure() {
        let mut data = StructureData {
            domain: vec!["Tom".into(), "Bob".into(), "Jack".into()],
            ..Default::default()
        };
        data.relations.insert("Female".into(), vec![vec!["Bob".into()]]);
        assert!(validate_structure(&data).is_valid());
    }

    #[test]
    fn reports_partial_function() {
        let mut data = StructureData {
            domain: vec!["0".into(), "1".into()],
            ..Default::default()
        };
        data.functions.insert(
            "f".into(),
            FunctionData {
                arity: 1,
                map: vec![(vec!["0".into()], "1".into())],
            },
        );
        let report = validate_structure(&data);
        assert!(report.violations.iter().any(|v| v.contains("partial")));
    }

    #[test]
    fn assignment_counts() {
        let m = two_el();
        let space = TeamSpace::new(&m, Scope::new(["x", "y"]), DEFAULT_CAP);
        assert_eq!(space.enumerate_assignments().unwrap().len(), 4);

        let m3 = Structure::from_data(&StructureData {
            domain: vec!["a".into(), "b".into(), "c".into()],
            ..Default::default()
        })
        .unwrap();
        let space = TeamSpace::new(&m3, Scope::new(["w1", "w2", "w3"]), DEFAULT_CAP);
        assert_eq!(space.enumerate_assignments().unwrap().len(), 27);

        let space = TeamSpace::new(&m, Scope::empty(), DEFAULT_CAP);
        assert_eq!(space.enumerate_assignments().unwrap().len(), 1);
    }

    #[test]
    fn cap_guard_fires() {
        let m = two_el();
        let space = TeamSpace::new(&m, Scope::new(["a", "b", "c", "d"]), 8);
        assert!(matches!(
            space.assignment_count(),
            Err(Error::SpaceTooLarge { .. })
        ));
    }

    #[test]
    fn team_counts() {
        let m = two_el();
        for (vars, expected) in [
            (vec!["x", "y"], 16usize),
            (vec!["x"], 4),
            (vec!["x", "y", "z"], 256),
        ] {
            let space = TeamSpace::new(&m, Scope::new(vars), DEFAULT_CAP);
            assert_eq!(space.enumerate_teams().unwrap().count(), expected);
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let m = two_el();
        let space = TeamSpace::new(&m, Scope::new(["x", "y"]), DEFAULT_CAP);
        let first: Vec<Team> = space.enumerate_teams().unwrap().collect();
        let second: Vec<Team> = space.enumerate_teams().unwrap().collect();
        assert_eq!(first, second);
        assert_eq!(
            space.enumerate_assignments().unwrap(),
            space.enumerate_assignments().unwrap()
        );
        let x = team_over(&m, &["y"], &[&[0], &[1]]);
        let variants: Vec<Team> = x_variants(&x, "x", &m, DEFAULT_CAP).unwrap().collect();
        let again: Vec<Team> = x_variants(&x, "x", &m, DEFAULT_CAP).unwrap().collect();
        assert_eq!(variants, again);
    }

    #[test]
    fn restrict_collapses_rows() {
        let m = two_el();
        let x = team_over(&m, &["x", "y"], &[&[0, 1], &[1, 1]]);
        let restricted = x.restrict("x");
        assert_eq!(restricted, team_over(&m, &["y"], &[&[1]]));
    }

    #[test]
    fn restrict_empty_and_missing() {
        let m = two_el();
        let empty = Team::empty(Scope::new(["x", "y"]));
        assert_eq!(empty.restrict("x"), Team::empty(Scope::new(["y"])));
        let x = team_over(&m, &["x", "y"], &[&[0, 1]]);
        assert_eq!(x.restrict("z"), x);
    }

    #[test]
    fn blanket_expand_duplicates_rows() {
        let m = two_el();
        let x = team_over(&m, &["y"], &[&[0]]);
        let expanded = x.blanket_expand(&m, "x");
        assert_eq!(expanded, team_over(&m, &["x", "y"], &[&[0, 0], &[1, 0]]));

        let empty = Team::empty(Scope::new(["y"]));
        assert_eq!(
            empty.blanket_expand(&m, "x"),
            Team::empty(Scope::new(["x", "y"]))
        );

        let two = team_over(&m, &["y"], &[&[0], &[1]]);
        assert_eq!(two.blanket_expand(&m, "x").len(), 4);
    }

    #[test]
    fn restrict_undoes_blanket_expand() {
        let m = two_el();
        let x = team_over(&m, &["y"], &[&[0], &[1]]);
        assert_eq!(x.blanket_expand(&m, "x").restrict("x"), x);
    }

    #[test]
    fn x_variant_counts() {
        let m = two_el();
        let one = team_over(&m, &["y"], &[&[0]]);
        assert_eq!(x_variants(&one, "x", &m, DEFAULT_CAP).unwrap().count(), 3);

        let empty = Team::empty(Scope::new(["y"]));
        let variants: Vec<Team> = x_variants(&empty, "x", &m, DEFAULT_CAP).unwrap().collect();
        assert_eq!(variants, vec![Team::empty(Scope::new(["x", "y"]))]);

        let two = team_over(&m, &["y"], &[&[0], &[1]]);
        assert_eq!(x_variants(&two, "x", &m, DEFAULT_CAP).unwrap().count(), 9);
    }

    #[test]
    fn x_variants_match_space_filter() {
        // The H-map enumeration must coincide with filtering the whole team
        // space by restriction equality.
        let m = two_el();
        let space = TeamSpace::new(&m, Scope::new(["y"]), DEFAULT_CAP);
        for x in space.enumerate_teams().unwrap() {
            let from_h: BTreeSet<Team> = x_variants(&x, "x", &m, DEFAULT_CAP).unwrap().collect();
            let expanded = TeamSpace::new(&m, Scope::new(["x", "y"]), DEFAULT_CAP);
            let filtered: BTreeSet<Team> = expanded
                .enumerate_teams()
                .unwrap()
                .filter(|y| y.restrict("x") == x.restrict("x"))
                .collect();
            assert_eq!(from_h, filtered, "variants of {x:?}");
        }
    }

    #[test]
    fn team_json_round_trip() {
        let m = two_el();
        let x = team_over(&m, &["x", "y"], &[&[0, 1], &[1, 0]]);
        let data = x.to_data(&m);
        let json = serde_json::to_string(&data).unwrap();
        let back: TeamData = serde_json::from_str(&json).unwrap();
        assert_eq!(Team::from_data(&back, &m).unwrap(), x);
    }

    #[test]
    fn team_file_vars_order_is_canonicalized() {
        let m = two_el();
        let data = TeamData {
            vars: vec!["y".into(), "x".into()],
            rows: vec![vec!["1".into(), "0".into()]],
        };
        let team = Team::from_data(&data, &m).unwrap();
        assert_eq!(team, team_over(&m, &["x", "y"], &[&[0, 1]]));
    }

    #[test]
    fn structure_json_round_trip() {
        let mut data = StructureData {
            domain: vec!["0".into(), "1".into()],
            ..Default::default()
        };
        data.constants.insert("c0".into(), "0".into());
        data.constants.insert("c1".into(), "1".into());
        data.functions.insert(
            "f".into(),
            FunctionData {
                arity: 1,
                map: vec![(vec!["0".into()], "1".into()), (vec!["1".into()], "0".into())],
            },
        );
        data.relations.insert("R".into(), vec![vec!["1".into()]]);
        let m = Structure::from_data(&data).unwrap();
        let json = serde_json::to_string(&m.to_data()).unwrap();
        assert_eq!(Structure::from_json_str(&json).unwrap(), m);
    }
}
