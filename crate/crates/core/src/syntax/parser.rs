//! Recursive descent parser for the team-layer grammar.

use crate::error::ParseError;
use crate::syntax::lexer::{tokenize, Tok, Token};
use crate::syntax::{FoFormula, TeamFormula, Term};

/// Parses a team-level formula. Rejects anything outside the grammar with a
/// position-annotated diagnostic; inclusion and exclusion tuple lengths are
/// checked here since they are statically visible.
pub fn parse(input: &str) -> Result<TeamFormula, ParseError> {
    let tokens = tokenize(input)?;
    let mut parser = Parser { tokens, pos: 0 };
    let formula = parser.formula()?;
    parser.expect(Tok::Eof)?;
    Ok(formula)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn here(&self) -> (usize, usize) {
        let t = &self.tokens[self.pos];
        (t.line, t.column)
    }

    fn bump(&mut self) -> Tok {
        let tok = self.tokens[self.pos].tok.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.here();
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().describe()
            )))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Tok::Ident(name) => {
                let name = name.clone();
                self.bump();
                Ok(name)
            }
            other => Err(self.error(format!("expected {what}, found {}", other.describe()))),
        }
    }

    // formula := imp
    fn formula(&mut self) -> Result<TeamFormula, ParseError> {
        self.imp()
    }

    // imp := upd (IMPOP imp)?   (right-associative)
    fn imp(&mut self) -> Result<TeamFormula, ParseError> {
        let left = self.upd()?;
        if let Tok::Imp { kind, minimal } = *self.peek() {
            self.bump();
            let right = self.imp()?;
            let ctor = if minimal {
                TeamFormula::MinImp
            } else {
                TeamFormula::AdjointImp
            };
            return Ok(ctor(kind, Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    // upd := disj (UPDOP disj)*   (left-associative, one operator per chain)
    fn upd(&mut self) -> Result<TeamFormula, ParseError> {
        let mut left = self.disj()?;
        let mut chain: Option<(crate::updates::UpdateKind, bool)> = None;
        while let Tok::Upd { kind, minimal } = *self.peek() {
            match chain {
                None => chain = Some((kind, minimal)),
                Some(seen) if seen == (kind, minimal) => {}
                Some(_) => {
                    return Err(self
                        .error("mixing different update operators requires parentheses"));
                }
            }
            self.bump();
            let right = self.disj()?;
            let ctor = if minimal {
                TeamFormula::MinUpdate
            } else {
                TeamFormula::Update
            };
            left = ctor(kind, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn disj(&mut self) -> Result<TeamFormula, ParseError> {
        let mut left = self.conj()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let right = self.conj()?;
            left = TeamFormula::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn conj(&mut self) -> Result<TeamFormula, ParseError> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let right = self.unary()?;
            left = TeamFormula::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<TeamFormula, ParseError> {
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                Ok(TeamFormula::Not(Box::new(self.unary()?)))
            }
            Tok::ElementExists => {
                self.bump();
                let var = self.ident("a variable")?;
                self.expect(Tok::Dot)?;
                Ok(TeamFormula::Exists1(var, Box::new(self.unary()?)))
            }
            Tok::ElementForall => {
                self.bump();
                let var = self.ident("a variable")?;
                self.expect(Tok::Dot)?;
                Ok(TeamFormula::Forall1(var, Box::new(self.unary()?)))
            }
            Tok::Quant(q) => {
                self.bump();
                let var = self.ident("a variable")?;
                self.expect(Tok::Dot)?;
                Ok(TeamFormula::Quantified(q, var, Box::new(self.unary()?)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<TeamFormula, ParseError> {
        match self.peek().clone() {
            Tok::Belief => {
                self.bump();
                self.expect(Tok::LParen)?;
                let fo = self.fo()?;
                self.expect(Tok::RParen)?;
                Ok(TeamFormula::Belief(fo))
            }
            Tok::Possible => {
                self.bump();
                self.expect(Tok::LParen)?;
                let fo = self.fo()?;
                self.expect(Tok::RParen)?;
                Ok(TeamFormula::Possible(fo))
            }
            Tok::ConstAtom => {
                self.bump();
                self.expect(Tok::LParen)?;
                let ts = self.terms()?;
                self.expect(Tok::RParen)?;
                Ok(TeamFormula::Constancy(ts))
            }
            Tok::DepAtom => {
                let (a, b) = self.tuple_pair()?;
                Ok(TeamFormula::Dependence(a, b))
            }
            Tok::IncAtom => {
                let start = self.here();
                let (a, b) = self.tuple_pair()?;
                self.check_lengths(&a, &b, start)?;
                Ok(TeamFormula::Inclusion(a, b))
            }
            Tok::ExcAtom => {
                let start = self.here();
                let (a, b) = self.tuple_pair()?;
                self.check_lengths(&a, &b, start)?;
                Ok(TeamFormula::Exclusion(a, b))
            }
            Tok::IndAtom => {
                let (a, b) = self.tuple_pair()?;
                Ok(TeamFormula::Independence(a, b))
            }
            Tok::CindAtom => {
                self.bump();
                self.expect(Tok::LParen)?;
                let cond = self.terms()?;
                self.expect(Tok::Semi)?;
                let left = self.terms()?;
                self.expect(Tok::Semi)?;
                let right = self.terms()?;
                self.expect(Tok::RParen)?;
                Ok(TeamFormula::CondIndependence { cond, left, right })
            }
            other => Err(self.error(format!("expected a formula, found {}", other.describe()))),
        }
    }

    fn tuple_pair(&mut self) -> Result<(Vec<Term>, Vec<Term>), ParseError> {
        self.bump();
        self.expect(Tok::LParen)?;
        let a = self.terms()?;
        self.expect(Tok::Semi)?;
        let b = self.terms()?;
        self.expect(Tok::RParen)?;
        Ok((a, b))
    }

    fn check_lengths(
        &self,
        a: &[Term],
        b: &[Term],
        at: (usize, usize),
    ) -> Result<(), ParseError> {
        if a.len() != b.len() {
            return Err(ParseError {
                line: at.0,
                column: at.1,
                message: format!(
                    "tuple lengths must match here: {} vs {}",
                    a.len(),
                    b.len()
                ),
            });
        }
        Ok(())
    }

    fn terms(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut out = vec![self.term()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.term()?);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let name = self.ident("a term")?;
        if *self.peek() == Tok::LParen {
            self.bump();
            let args = self.terms()?;
            self.expect(Tok::RParen)?;
            return Ok(Term::App(name, args));
        }
        Ok(Term::Var(name))
    }

    // First-order layer, inside B(...) and P(...).

    fn fo(&mut self) -> Result<FoFormula, ParseError> {
        let mut left = self.fo_conj()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            let right = self.fo_conj()?;
            left = FoFormula::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn fo_conj(&mut self) -> Result<FoFormula, ParseError> {
        let mut left = self.fo_unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let right = self.fo_unary()?;
            left = FoFormula::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn fo_unary(&mut self) -> Result<FoFormula, ParseError> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(FoFormula::Not(Box::new(self.fo_unary()?)))
            }
            Tok::FoExists => {
                self.bump();
                let var = self.ident("a variable")?;
                self.expect(Tok::Dot)?;
                Ok(FoFormula::Exists(var, Box::new(self.fo_unary()?)))
            }
            Tok::FoForall => {
                self.bump();
                let var = self.ident("a variable")?;
                self.expect(Tok::Dot)?;
                Ok(FoFormula::Forall(var, Box::new(self.fo_unary()?)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.fo()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => self.fo_atom(),
        }
    }

    fn fo_atom(&mut self) -> Result<FoFormula, ParseError> {
        let term = self.term()?;
        match self.peek() {
            Tok::Eq => {
                self.bump();
                let right = self.term()?;
                Ok(FoFormula::Eq(term, right))
            }
            Tok::Neq => {
                self.bump();
                let right = self.term()?;
                Ok(FoFormula::Not(Box::new(FoFormula::Eq(term, right))))
            }
            _ => match term {
                // A bare application is a relation atom.
                Term::App(name, args) => Ok(FoFormula::Rel(name, args)),
                _ => Err(self.error("expected '=', '!=', or a relation application")),
            },
        }
    }
}
