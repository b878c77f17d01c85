//! AST, concrete grammar, parser, and pretty-printer for the two-layer
//! formula language.
//!
//! Team layer, loosest to tightest: implications (`c->`, `l->`, `s->`,
//! `o->`, their minimal forms `[c]->` .. `[o]->`, and `hook->` as an alias
//! for `[s]->`, all right-associative) < update connectives (`oplus`,
//! `otimes`, `ominus`, `odot`, `boxplus`, `boxtimes`, `boxminus`, `boxdot`,
//! left-associative, one kind per chain) < `or` < `and` < prefix `not` and
//! the quantifiers `E`, `A`, `forgotten`, `forgetting`, `disbelief`,
//! `regardless`, `doubted`, `doubting` (each written `Q x. body`, binding
//! only the next unary formula) < atoms.
//!
//! The first-order layer inside `B(...)` and `P(...)` uses `|`, `&`, `!`,
//! `exists x.`, `forall x.`, equations `t = t` / `t != t`, and relation
//! applications `Rel(t, ...)`. Bare first-order formulas are not accepted
//! at team level.

mod lexer;
mod parser;
mod printer;

use std::collections::BTreeSet;

use crate::model::Element;
use crate::updates::UpdateKind;

pub use parser::parse;

/// A first-order term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    /// Explicit reference to a named structure constant. The parser never
    /// produces this: a bare identifier parses as [`Term::Var`] and is
    /// resolved against the structure's constants at evaluation time.
    Const(String),
    App(String, Vec<Term>),
    /// Internal element literal, used when the element quantifiers
    /// substitute a domain element for a variable. Not parseable.
    Value(Element),
}

/// First-order formulas, the operands of `B` and `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FoFormula {
    Rel(String, Vec<Term>),
    Eq(Term, Term),
    Not(Box<FoFormula>),
    And(Box<FoFormula>, Box<FoFormula>),
    Or(Box<FoFormula>, Box<FoFormula>),
    Exists(String, Box<FoFormula>),
    Forall(String, Box<FoFormula>),
}

/// The six team quantifiers of the forgetting, disbelief, and doubting
/// operator pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TeamQuantifier {
    /// `forgotten x.` — the team is some φ-team with `x` erased.
    Forgotten,
    /// `forgetting x.` — erasing `x` from the team yields a φ-team.
    Forgetting,
    /// `disbelief x.` — some team agreeing off `x` satisfies φ.
    Disbelief,
    /// `regardless x.` — every team agreeing off `x` satisfies φ.
    Regardless,
    /// `doubted x.` — the team is a φ-team with `x` blanked out.
    Doubted,
    /// `doubting x.` — blanking out `x` yields a φ-team.
    Doubting,
}

/// Team-level formulas.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TeamFormula {
    Belief(FoFormula),
    Possible(FoFormula),
    Constancy(Vec<Term>),
    Dependence(Vec<Term>, Vec<Term>),
    Inclusion(Vec<Term>, Vec<Term>),
    Exclusion(Vec<Term>, Vec<Term>),
    /// Unconditional independence `t̄1 ⊥ t̄2`; tuples may differ in length.
    Independence(Vec<Term>, Vec<Term>),
    /// `left ⊥_cond right`, written `cind(cond; left; right)`.
    CondIndependence {
        cond: Vec<Term>,
        left: Vec<Term>,
        right: Vec<Term>,
    },
    And(Box<TeamFormula>, Box<TeamFormula>),
    Or(Box<TeamFormula>, Box<TeamFormula>),
    Not(Box<TeamFormula>),
    Exists1(String, Box<TeamFormula>),
    Forall1(String, Box<TeamFormula>),
    Update(UpdateKind, Box<TeamFormula>, Box<TeamFormula>),
    AdjointImp(UpdateKind, Box<TeamFormula>, Box<TeamFormula>),
    MinUpdate(UpdateKind, Box<TeamFormula>, Box<TeamFormula>),
    MinImp(UpdateKind, Box<TeamFormula>, Box<TeamFormula>),
    Quantified(TeamQuantifier, String, Box<TeamFormula>),
}

impl Term {
    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(name) => {
                out.insert(name.clone());
            }
            Term::Const(_) | Term::Value(_) => {}
            Term::App(_, args) => {
                for arg in args {
                    arg.collect_vars(out);
                }
            }
        }
    }

    fn substitute(&self, var: &str, value: Element) -> Term {
        match self {
            Term::Var(name) if name == var => Term::Value(value),
            Term::Var(_) | Term::Const(_) | Term::Value(_) => self.clone(),
            Term::App(name, args) => Term::App(
                name.clone(),
                args.iter().map(|t| t.substitute(var, value)).collect(),
            ),
        }
    }
}

fn tuple_vars(terms: &[Term], out: &mut BTreeSet<String>) {
    for t in terms {
        t.collect_vars(out);
    }
}

fn tuple_subst(terms: &[Term], var: &str, value: Element) -> Vec<Term> {
    terms.iter().map(|t| t.substitute(var, value)).collect()
}

impl FoFormula {
    pub fn free_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            FoFormula::Rel(_, args) => tuple_vars(args, out),
            FoFormula::Eq(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            FoFormula::Not(f) => f.collect_free(out),
            FoFormula::And(a, b) | FoFormula::Or(a, b) => {
                a.collect_free(out);
                b.collect_free(out);
            }
            FoFormula::Exists(x, f) | FoFormula::Forall(x, f) => {
                let mut inner = f.free_variables();
                inner.remove(x);
                out.extend(inner);
            }
        }
    }

    fn substitute(&self, var: &str, value: Element) -> FoFormula {
        match self {
            FoFormula::Rel(name, args) => FoFormula::Rel(name.clone(), tuple_subst(args, var, value)),
            FoFormula::Eq(a, b) => FoFormula::Eq(a.substitute(var, value), b.substitute(var, value)),
            FoFormula::Not(f) => FoFormula::Not(Box::new(f.substitute(var, value))),
            FoFormula::And(a, b) => FoFormula::And(
                Box::new(a.substitute(var, value)),
                Box::new(b.substitute(var, value)),
            ),
            FoFormula::Or(a, b) => FoFormula::Or(
                Box::new(a.substitute(var, value)),
                Box::new(b.substitute(var, value)),
            ),
            FoFormula::Exists(x, f) if x == var => FoFormula::Exists(x.clone(), f.clone()),
            FoFormula::Forall(x, f) if x == var => FoFormula::Forall(x.clone(), f.clone()),
            FoFormula::Exists(x, f) => {
                FoFormula::Exists(x.clone(), Box::new(f.substitute(var, value)))
            }
            FoFormula::Forall(x, f) => {
                FoFormula::Forall(x.clone(), Box::new(f.substitute(var, value)))
            }
        }
    }
}

impl TeamFormula {
    /// Free variables. Team quantifiers bind their variable; first-order
    /// quantifiers bind within `B`/`P` operands. Named constants resolved
    /// against a structure are not distinguished here: callers subtract the
    /// structure's constant names before checking scope coverage.
    pub fn free_variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            TeamFormula::Belief(f) | TeamFormula::Possible(f) => f.collect_free(out),
            TeamFormula::Constancy(ts) => tuple_vars(ts, out),
            TeamFormula::Dependence(a, b)
            | TeamFormula::Inclusion(a, b)
            | TeamFormula::Exclusion(a, b)
            | TeamFormula::Independence(a, b) => {
                tuple_vars(a, out);
                tuple_vars(b, out);
            }
            TeamFormula::CondIndependence { cond, left, right } => {
                tuple_vars(cond, out);
                tuple_vars(left, out);
                tuple_vars(right, out);
            }
            TeamFormula::And(a, b)
            | TeamFormula::Or(a, b)
            | TeamFormula::Update(_, a, b)
            | TeamFormula::AdjointImp(_, a, b)
            | TeamFormula::MinUpdate(_, a, b)
            | TeamFormula::MinImp(_, a, b) => {
                a.collect_free(out);
                b.collect_free(out);
            }
            TeamFormula::Not(f) => f.collect_free(out),
            TeamFormula::Exists1(x, f)
            | TeamFormula::Forall1(x, f)
            | TeamFormula::Quantified(_, x, f) => {
                let mut inner = f.free_variables();
                inner.remove(x);
                out.extend(inner);
            }
        }
    }

    /// Replaces free occurrences of `var` with an element literal. Used by
    /// the element quantifiers `E`/`A`.
    pub fn substitute(&self, var: &str, value: Element) -> TeamFormula {
        use TeamFormula::*;
        match self {
            Belief(f) => Belief(f.substitute(var, value)),
            Possible(f) => Possible(f.substitute(var, value)),
            Constancy(ts) => Constancy(tuple_subst(ts, var, value)),
            Dependence(a, b) => {
                Dependence(tuple_subst(a, var, value), tuple_subst(b, var, value))
            }
            Inclusion(a, b) => Inclusion(tuple_subst(a, var, value), tuple_subst(b, var, value)),
            Exclusion(a, b) => Exclusion(tuple_subst(a, var, value), tuple_subst(b, var, value)),
            Independence(a, b) => {
                Independence(tuple_subst(a, var, value), tuple_subst(b, var, value))
            }
            CondIndependence { cond, left, right } => CondIndependence {
                cond: tuple_subst(cond, var, value),
                left: tuple_subst(left, var, value),
                right: tuple_subst(right, var, value),
            },
            And(a, b) => And(
                Box::new(a.substitute(var, value)),
                Box::new(b.substitute(var, value)),
            ),
            Or(a, b) => Or(
                Box::new(a.substitute(var, value)),
                Box::new(b.substitute(var, value)),
            ),
            Not(f) => Not(Box::new(f.substitute(var, value))),
            Exists1(x, f) if x == var => Exists1(x.clone(), f.clone()),
            Forall1(x, f) if x == var => Forall1(x.clone(), f.clone()),
            Quantified(q, x, f) if x == var => Quantified(*q, x.clone(), f.clone()),
            Exists1(x, f) => Exists1(x.clone(), Box::new(f.substitute(var, value))),
            Forall1(x, f) => Forall1(x.clone(), Box::new(f.substitute(var, value))),
            Quantified(q, x, f) => Quantified(*q, x.clone(), Box::new(f.substitute(var, value))),
            Update(k, a, b) => Update(
                *k,
                Box::new(a.substitute(var, value)),
                Box::new(b.substitute(var, value)),
            ),
            AdjointImp(k, a, b) => AdjointImp(
                *k,
                Box::new(a.substitute(var, value)),
                Box::new(b.substitute(var, value)),
            ),
            MinUpdate(k, a, b) => MinUpdate(
                *k,
                Box::new(a.substitute(var, value)),
                Box::new(b.substitute(var, value)),
            ),
            MinImp(k, a, b) => MinImp(
                *k,
                Box::new(a.substitute(var, value)),
                Box::new(b.substitute(var, value)),
            ),
        }
    }
}
