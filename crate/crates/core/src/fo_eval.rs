//! Tarski semantics for the first-order layer: term valuation and
//! assignment-level satisfaction, consumed by `B` and `P`.

use crate::error::{Error, Result};
use crate::model::{Assignment, Element, Scope, Structure};
use crate::syntax::{FoFormula, Term};

/// Evaluation environment: a team row plus the bindings pushed by
/// first-order quantifiers. Innermost bindings shadow the row, and the row
/// shadows structure constants.
pub(crate) struct Env<'a> {
    structure: &'a Structure,
    scope: &'a Scope,
    row: &'a [Element],
    bound: Vec<(String, Element)>,
}

impl<'a> Env<'a> {
    pub(crate) fn new(structure: &'a Structure, scope: &'a Scope, row: &'a [Element]) -> Env<'a> {
        Env {
            structure,
            scope,
            row,
            bound: Vec::new(),
        }
    }

    fn lookup(&self, name: &str) -> Option<Element> {
        if let Some((_, el)) = self.bound.iter().rev().find(|(n, _)| n == name) {
            return Some(*el);
        }
        if let Some(pos) = self.scope.position(name) {
            return Some(self.row[pos]);
        }
        self.structure.constant(name)
    }

    pub(crate) fn eval_term(&self, term: &Term) -> Result<Element> {
        match term {
            Term::Var(name) => self.lookup(name).ok_or_else(|| Error::UnboundVariable {
                name: name.clone(),
            }),
            Term::Const(name) => {
                self.structure
                    .constant(name)
                    .ok_or_else(|| Error::UnknownSymbol {
                        kind: "constant",
                        name: name.clone(),
                    })
            }
            Term::Value(el) => Ok(*el),
            Term::App(name, args) => {
                let function = self.structure.function(name)?;
                if args.len() != function.arity {
                    return Err(Error::ArityMismatch {
                        name: name.clone(),
                        expected: function.arity,
                        got: args.len(),
                    });
                }
                let values: Vec<Element> =
                    args.iter().map(|a| self.eval_term(a)).collect::<Result<_>>()?;
                Ok(*function.map.get(&values).expect("function map is total"))
            }
        }
    }

    pub(crate) fn sat(&mut self, formula: &FoFormula) -> Result<bool> {
        match formula {
            FoFormula::Rel(name, args) => {
                let relation = self.structure.relation(name)?;
                if relation.tuples.is_empty() {
                    return Ok(false);
                }
                if args.len() != relation.arity {
                    return Err(Error::ArityMismatch {
                        name: name.clone(),
                        expected: relation.arity,
                        got: args.len(),
                    });
                }
                let values: Vec<Element> =
                    args.iter().map(|a| self.eval_term(a)).collect::<Result<_>>()?;
                Ok(relation.tuples.contains(&values))
            }
            FoFormula::Eq(a, b) => Ok(self.eval_term(a)? == self.eval_term(b)?),
            FoFormula::Not(inner) => Ok(!self.sat(inner)?),
            FoFormula::And(a, b) => Ok(self.sat(a)? && self.sat(b)?),
            FoFormula::Or(a, b) => Ok(self.sat(a)? || self.sat(b)?),
            FoFormula::Exists(x, inner) => {
                for el in self.structure.elements() {
                    self.bound.push((x.clone(), el));
                    let holds = self.sat(inner);
                    self.bound.pop();
                    if holds? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            FoFormula::Forall(x, inner) => {
                for el in self.structure.elements() {
                    self.bound.push((x.clone(), el));
                    let holds = self.sat(inner);
                    self.bound.pop();
                    if !holds? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }
}

/// Standard inductive term valuation under an assignment.
pub fn eval_term(structure: &Structure, assignment: &Assignment, term: &Term) -> Result<Element> {
    Env::new(structure, assignment.scope(), assignment.values()).eval_term(term)
}

/// `M ⊨_s φ` by the usual Tarski semantics; quantifiers range over the
/// whole domain.
pub fn tarski_sat(
    structure: &Structure,
    assignment: &Assignment,
    formula: &FoFormula,
) -> Result<bool> {
    Env::new(structure, assignment.scope(), assignment.values()).sat(formula)
}
