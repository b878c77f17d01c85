//! Canonical pretty-printer. `parse(print(f)) == f` for every AST in the
//! parser's image; printing inserts parentheses only where the grammar
//! demands them.

use std::fmt;

use crate::syntax::{FoFormula, TeamFormula, TeamQuantifier, Term};
use crate::updates::UpdateKind;

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(name) | Term::Const(name) => write!(f, "{name}"),
            Term::App(name, args) => {
                write!(f, "{name}(")?;
                write_terms(f, args)?;
                write!(f, ")")
            }
            // Internal literals are not part of the concrete syntax.
            Term::Value(el) => write!(f, "#{}", el.index()),
        }
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[Term]) -> fmt::Result {
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{t}")?;
    }
    Ok(())
}

// Precedence levels, loosest to tightest.
const IMP: u8 = 0;
const UPD: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;
const ATOM: u8 = 5;

fn upd_token(kind: UpdateKind, minimal: bool) -> &'static str {
    match (kind, minimal) {
        (UpdateKind::Confident, false) => "oplus",
        (UpdateKind::Credulous, false) => "otimes",
        (UpdateKind::Skeptical, false) => "ominus",
        (UpdateKind::Openminded, false) => "odot",
        (UpdateKind::Confident, true) => "boxplus",
        (UpdateKind::Credulous, true) => "boxtimes",
        (UpdateKind::Skeptical, true) => "boxminus",
        (UpdateKind::Openminded, true) => "boxdot",
    }
}

fn imp_token(kind: UpdateKind, minimal: bool) -> &'static str {
    match (kind, minimal) {
        (UpdateKind::Confident, false) => "c->",
        (UpdateKind::Credulous, false) => "l->",
        (UpdateKind::Skeptical, false) => "s->",
        (UpdateKind::Openminded, false) => "o->",
        (UpdateKind::Confident, true) => "[c]->",
        (UpdateKind::Credulous, true) => "[l]->",
        (UpdateKind::Skeptical, true) => "[s]->",
        (UpdateKind::Openminded, true) => "[o]->",
    }
}

fn quant_token(q: TeamQuantifier) -> &'static str {
    match q {
        TeamQuantifier::Forgotten => "forgotten",
        TeamQuantifier::Forgetting => "forgetting",
        TeamQuantifier::Disbelief => "disbelief",
        TeamQuantifier::Regardless => "regardless",
        TeamQuantifier::Doubted => "doubted",
        TeamQuantifier::Doubting => "doubting",
    }
}

fn level(formula: &TeamFormula) -> u8 {
    use TeamFormula::*;
    match formula {
        AdjointImp(..) | MinImp(..) => IMP,
        Update(..) | MinUpdate(..) => UPD,
        Or(..) => OR,
        And(..) => AND,
        Not(..) | Exists1(..) | Forall1(..) | Quantified(..) => UNARY,
        _ => ATOM,
    }
}

fn write_team(f: &mut fmt::Formatter<'_>, formula: &TeamFormula, min: u8) -> fmt::Result {
    if level(formula) < min {
        write!(f, "(")?;
        write_team(f, formula, IMP)?;
        return write!(f, ")");
    }
    use TeamFormula::*;
    match formula {
        Belief(fo) => {
            write!(f, "B(")?;
            write_fo(f, fo, 0)?;
            write!(f, ")")
        }
        Possible(fo) => {
            write!(f, "P(")?;
            write_fo(f, fo, 0)?;
            write!(f, ")")
        }
        Constancy(ts) => {
            write!(f, "const(")?;
            write_terms(f, ts)?;
            write!(f, ")")
        }
        Dependence(a, b) => write_pair(f, "dep", a, b),
        Inclusion(a, b) => write_pair(f, "inc", a, b),
        Exclusion(a, b) => write_pair(f, "exc", a, b),
        Independence(a, b) => write_pair(f, "ind", a, b),
        CondIndependence { cond, left, right } => {
            write!(f, "cind(")?;
            write_terms(f, cond)?;
            write!(f, "; ")?;
            write_terms(f, left)?;
            write!(f, "; ")?;
            write_terms(f, right)?;
            write!(f, ")")
        }
        And(a, b) => {
            write_team(f, a, AND)?;
            write!(f, " and ")?;
            write_team(f, b, UNARY)
        }
        Or(a, b) => {
            write_team(f, a, OR)?;
            write!(f, " or ")?;
            write_team(f, b, AND)
        }
        Not(inner) => {
            write!(f, "not ")?;
            write_team(f, inner, UNARY)
        }
        Exists1(x, inner) => {
            write!(f, "E {x}. ")?;
            write_team(f, inner, UNARY)
        }
        Forall1(x, inner) => {
            write!(f, "A {x}. ")?;
            write_team(f, inner, UNARY)
        }
        Quantified(q, x, inner) => {
            write!(f, "{} {x}. ", quant_token(*q))?;
            write_team(f, inner, UNARY)
        }
        Update(kind, a, b) | MinUpdate(kind, a, b) => {
            let minimal = matches!(formula, MinUpdate(..));
            // Same-operator chains stay flat; anything else on the left is
            // parenthesized, matching the one-kind-per-chain grammar rule.
            let same_chain = match (formula, a.as_ref()) {
                (Update(..), Update(k2, ..)) => *k2 == *kind,
                (MinUpdate(..), MinUpdate(k2, ..)) => *k2 == *kind,
                _ => false,
            };
            write_team(f, a, if same_chain { UPD } else { OR })?;
            write!(f, " {} ", upd_token(*kind, minimal))?;
            write_team(f, b, OR)
        }
        AdjointImp(kind, a, b) | MinImp(kind, a, b) => {
            let minimal = matches!(formula, MinImp(..));
            write_team(f, a, UPD)?;
            write!(f, " {} ", imp_token(*kind, minimal))?;
            write_team(f, b, IMP)
        }
    }
}

fn write_pair(
    f: &mut fmt::Formatter<'_>,
    name: &str,
    a: &[Term],
    b: &[Term],
) -> fmt::Result {
    write!(f, "{name}(")?;
    write_terms(f, a)?;
    write!(f, "; ")?;
    write_terms(f, b)?;
    write!(f, ")")
}

// First-order precedence levels.
const FO_OR: u8 = 0;
const FO_AND: u8 = 1;
const FO_UNARY: u8 = 2;
const FO_ATOM: u8 = 3;

fn fo_level(formula: &FoFormula) -> u8 {
    match formula {
        FoFormula::Or(..) => FO_OR,
        FoFormula::And(..) => FO_AND,
        // A negated equation prints as `t != t`, which is an atom.
        FoFormula::Not(inner) => {
            if matches!(**inner, FoFormula::Eq(..)) {
                FO_ATOM
            } else {
                FO_UNARY
            }
        }
        FoFormula::Exists(..) | FoFormula::Forall(..) => FO_UNARY,
        FoFormula::Rel(..) | FoFormula::Eq(..) => FO_ATOM,
    }
}

fn write_fo(f: &mut fmt::Formatter<'_>, formula: &FoFormula, min: u8) -> fmt::Result {
    if fo_level(formula) < min {
        write!(f, "(")?;
        write_fo(f, formula, FO_OR)?;
        return write!(f, ")");
    }
    match formula {
        FoFormula::Rel(name, args) => {
            write!(f, "{name}(")?;
            write_terms(f, args)?;
            write!(f, ")")
        }
        FoFormula::Eq(a, b) => write!(f, "{a} = {b}"),
        FoFormula::Not(inner) => match inner.as_ref() {
            FoFormula::Eq(a, b) => write!(f, "{a} != {b}"),
            _ => {
                write!(f, "!")?;
                write_fo(f, inner, FO_UNARY)
            }
        },
        FoFormula::And(a, b) => {
            write_fo(f, a, FO_AND)?;
            write!(f, " & ")?;
            write_fo(f, b, FO_UNARY)
        }
        FoFormula::Or(a, b) => {
            write_fo(f, a, FO_OR)?;
            write!(f, " | ")?;
            write_fo(f, b, FO_AND)
        }
        FoFormula::Exists(x, inner) => {
            write!(f, "exists {x}. ")?;
            write_fo(f, inner, FO_UNARY)
        }
        FoFormula::Forall(x, inner) => {
            write!(f, "forall {x}. ")?;
            write_fo(f, inner, FO_UNARY)
        }
    }
}

impl fmt::Display for FoFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_fo(f, self, FO_OR)
    }
}

impl fmt::Display for TeamFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_team(f, self, IMP)
    }
}
