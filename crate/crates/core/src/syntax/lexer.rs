//! Tokenizer shared by the team and first-order layers.

use crate::error::ParseError;
use crate::syntax::TeamQuantifier;
use crate::updates::UpdateKind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) enum Tok {
    Ident(String),
    // Team layer.
    And,
    Or,
    Not,
    ElementExists,
    ElementForall,
    Quant(TeamQuantifier),
    /// Update connective; `minimal` selects the box variant.
    Upd {
        kind: UpdateKind,
        minimal: bool,
    },
    /// Adjoint implication; `minimal` selects the bracketed variant.
    Imp {
        kind: UpdateKind,
        minimal: bool,
    },
    Belief,
    Possible,
    ConstAtom,
    DepAtom,
    IncAtom,
    ExcAtom,
    IndAtom,
    CindAtom,
    // First-order layer.
    FoExists,
    FoForall,
    Amp,
    Pipe,
    Bang,
    Eq,
    Neq,
    // Shared punctuation.
    LParen,
    RParen,
    Comma,
    Semi,
    Dot,
    Eof,
}

impl Tok {
    pub(super) fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier '{name}'"),
            Tok::Eof => "end of input".to_string(),
            other => format!("'{}'", other.lexeme()),
        }
    }

    fn lexeme(&self) -> &'static str {
        match self {
            Tok::And => "and",
            Tok::Or => "or",
            Tok::Not => "not",
            Tok::ElementExists => "E",
            Tok::ElementForall => "A",
            Tok::Quant(TeamQuantifier::Forgotten) => "forgotten",
            Tok::Quant(TeamQuantifier::Forgetting) => "forgetting",
            Tok::Quant(TeamQuantifier::Disbelief) => "disbelief",
            Tok::Quant(TeamQuantifier::Regardless) => "regardless",
            Tok::Quant(TeamQuantifier::Doubted) => "doubted",
            Tok::Quant(TeamQuantifier::Doubting) => "doubting",
            Tok::Upd { kind, minimal: false } => match kind {
                UpdateKind::Confident => "oplus",
                UpdateKind::Credulous => "otimes",
                UpdateKind::Skeptical => "ominus",
                UpdateKind::Openminded => "odot",
            },
            Tok::Upd { kind, minimal: true } => match kind {
                UpdateKind::Confident => "boxplus",
                UpdateKind::Credulous => "boxtimes",
                UpdateKind::Skeptical => "boxminus",
                UpdateKind::Openminded => "boxdot",
            },
            Tok::Imp { kind, minimal: false } => match kind {
                UpdateKind::Confident => "c->",
                UpdateKind::Credulous => "l->",
                UpdateKind::Skeptical => "s->",
                UpdateKind::Openminded => "o->",
            },
            Tok::Imp { kind, minimal: true } => match kind {
                UpdateKind::Confident => "[c]->",
                UpdateKind::Credulous => "[l]->",
                UpdateKind::Skeptical => "[s]->",
                UpdateKind::Openminded => "[o]->",
            },
            Tok::Belief => "B",
            Tok::Possible => "P",
            Tok::ConstAtom => "const",
            Tok::DepAtom => "dep",
            Tok::IncAtom => "inc",
            Tok::ExcAtom => "exc",
            Tok::IndAtom => "ind",
            Tok::CindAtom => "cind",
            Tok::FoExists => "exists",
            Tok::FoForall => "forall",
            Tok::Amp => "&",
            Tok::Pipe => "|",
            Tok::Bang => "!",
            Tok::Eq => "=",
            Tok::Neq => "!=",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Dot => ".",
            Tok::Ident(_) | Tok::Eof => unreachable!(),
        }
    }
}

#[derive(Debug, Clone)]
pub(super) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

fn imp_kind(name: &str) -> Option<UpdateKind> {
    match name {
        "c" => Some(UpdateKind::Confident),
        "l" => Some(UpdateKind::Credulous),
        "s" => Some(UpdateKind::Skeptical),
        "o" => Some(UpdateKind::Openminded),
        _ => None,
    }
}

fn keyword(name: &str) -> Option<Tok> {
    let tok = match name {
        "and" => Tok::And,
        "or" => Tok::Or,
        "not" => Tok::Not,
        "E" => Tok::ElementExists,
        "A" => Tok::ElementForall,
        "forgotten" => Tok::Quant(TeamQuantifier::Forgotten),
        "forgetting" => Tok::Quant(TeamQuantifier::Forgetting),
        "disbelief" => Tok::Quant(TeamQuantifier::Disbelief),
        "regardless" => Tok::Quant(TeamQuantifier::Regardless),
        "doubted" => Tok::Quant(TeamQuantifier::Doubted),
        "doubting" => Tok::Quant(TeamQuantifier::Doubting),
        "oplus" => Tok::Upd { kind: UpdateKind::Confident, minimal: false },
        "otimes" => Tok::Upd { kind: UpdateKind::Credulous, minimal: false },
        "ominus" => Tok::Upd { kind: UpdateKind::Skeptical, minimal: false },
        "odot" => Tok::Upd { kind: UpdateKind::Openminded, minimal: false },
        "boxplus" => Tok::Upd { kind: UpdateKind::Confident, minimal: true },
        "boxtimes" => Tok::Upd { kind: UpdateKind::Credulous, minimal: true },
        "boxminus" => Tok::Upd { kind: UpdateKind::Skeptical, minimal: true },
        "boxdot" => Tok::Upd { kind: UpdateKind::Openminded, minimal: true },
        "B" => Tok::Belief,
        "P" => Tok::Possible,
        "const" => Tok::ConstAtom,
        "dep" => Tok::DepAtom,
        "inc" => Tok::IncAtom,
        "exc" => Tok::ExcAtom,
        "ind" => Tok::IndAtom,
        "cind" => Tok::CindAtom,
        "exists" => Tok::FoExists,
        "forall" => Tok::FoForall,
        _ => return None,
    };
    Some(tok)
}

pub(super) fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    let mut line = 1;
    let mut column = 1;

    let mut push = |tok: Tok, line: usize, column: usize| tokens.push(Token { tok, line, column });

    while i < chars.len() {
        let c = chars[i];
        let (tok_line, tok_col) = (line, column);
        let advance = |i: &mut usize, line: &mut usize, column: &mut usize, n: usize| {
            for _ in 0..n {
                if chars[*i] == '\n' {
                    *line += 1;
                    *column = 1;
                } else {
                    *column += 1;
                }
                *i += 1;
            }
        };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut column, 1);
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            let mut end = i;
            while end < chars.len() && (chars[end].is_ascii_alphanumeric() || chars[end] == '_') {
                end += 1;
            }
            let name: String = chars[start..end].iter().collect();
            advance(&mut i, &mut line, &mut column, end - start);
            // `c->`, `l->`, `s->`, `o->` and `hook->` are atomic tokens.
            let arrow_follows = i + 1 < chars.len() && chars[i] == '-' && chars[i + 1] == '>';
            if arrow_follows {
                if let Some(kind) = imp_kind(&name) {
                    advance(&mut i, &mut line, &mut column, 2);
                    push(Tok::Imp { kind, minimal: false }, tok_line, tok_col);
                    continue;
                }
                if name == "hook" {
                    advance(&mut i, &mut line, &mut column, 2);
                    push(
                        Tok::Imp { kind: UpdateKind::Skeptical, minimal: true },
                        tok_line,
                        tok_col,
                    );
                    continue;
                }
            }
            match keyword(&name) {
                Some(tok) => push(tok, tok_line, tok_col),
                None => push(Tok::Ident(name), tok_line, tok_col),
            }
            continue;
        }
        match c {
            '[' => {
                // `[c]->` and friends.
                let mut j = i + 1;
                let start = j;
                while j < chars.len() && chars[j].is_ascii_alphabetic() {
                    j += 1;
                }
                let name: String = chars[start..j].iter().collect();
                let kind = imp_kind(&name).ok_or_else(|| ParseError {
                    line: tok_line,
                    column: tok_col,
                    message: format!("unknown implication '[{name}]'"),
                })?;
                if !(j + 2 < chars.len() && chars[j] == ']' && chars[j + 1] == '-' && chars[j + 2] == '>')
                {
                    return Err(ParseError {
                        line: tok_line,
                        column: tok_col,
                        message: format!("expected '[{name}]->'"),
                    });
                }
                let width = j + 3 - i;
                advance(&mut i, &mut line, &mut column, width);
                push(Tok::Imp { kind, minimal: true }, tok_line, tok_col);
            }
            '(' => {
                advance(&mut i, &mut line, &mut column, 1);
                push(Tok::LParen, tok_line, tok_col);
            }
            ')' => {
                advance(&mut i, &mut line, &mut column, 1);
                push(Tok::RParen, tok_line, tok_col);
            }
            ',' => {
                advance(&mut i, &mut line, &mut column, 1);
                push(Tok::Comma, tok_line, tok_col);
            }
            ';' => {
                advance(&mut i, &mut line, &mut column, 1);
                push(Tok::Semi, tok_line, tok_col);
            }
            '.' => {
                advance(&mut i, &mut line, &mut column, 1);
                push(Tok::Dot, tok_line, tok_col);
            }
            '&' => {
                advance(&mut i, &mut line, &mut column, 1);
                push(Tok::Amp, tok_line, tok_col);
            }
            '|' => {
                advance(&mut i, &mut line, &mut column, 1);
                push(Tok::Pipe, tok_line, tok_col);
            }
            '=' => {
                advance(&mut i, &mut line, &mut column, 1);
                push(Tok::Eq, tok_line, tok_col);
            }
            '!' => {
                if i + 1 < chars.len() && chars[i + 1] == '=' {
                    advance(&mut i, &mut line, &mut column, 2);
                    push(Tok::Neq, tok_line, tok_col);
                } else {
                    advance(&mut i, &mut line, &mut column, 1);
                    push(Tok::Bang, tok_line, tok_col);
                }
            }
            other => {
                return Err(ParseError {
                    line: tok_line,
                    column: tok_col,
                    message: format!("unexpected character '{other}'"),
                });
            }
        }
    }
    tokens.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(tokens)
}
