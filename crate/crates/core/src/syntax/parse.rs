use thiserror::Error;

use super::{is_name_ident, L1Formula, ModalFormula, NameVar};

/// A syntax error; `pos` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    Or,
    Implies,
    Iff,
    Box,
    Diamond,
    LParen,
    RParen,
    Comma,
    Ident(String),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Not => "'!'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Implies => "'->'".into(),
            Tok::Iff => "'<->'".into(),
            Tok::Box => "'[]'".into(),
            Tok::Diamond => "'<>'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Ident(s) => format!("identifier '{s}'"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let rest = &text[i..];
        let (tok, len) = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' => (Tok::Not, 1),
            b'&' => (Tok::And, 1),
            b'|' => (Tok::Or, 1),
            b'(' => (Tok::LParen, 1),
            b')' => (Tok::RParen, 1),
            b',' => (Tok::Comma, 1),
            _ if rest.starts_with("->") => (Tok::Implies, 2),
            _ if rest.starts_with("<->") => (Tok::Iff, 3),
            _ if rest.starts_with("<>") => (Tok::Diamond, 2),
            _ if rest.starts_with("[]") => (Tok::Box, 2),
            _ if c.is_ascii_alphabetic() || c == b'_' => {
                let len = rest
                    .bytes()
                    .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
                    .count();
                (Tok::Ident(rest[..len].to_string()), len)
            }
            _ => {
                let ch = rest.chars().next().unwrap_or('?');
                return Err(ParseError::new(i, format!("unexpected character {ch:?}")));
            }
        };
        out.push((i, tok));
        i += len;
    }
    Ok(out)
}

/// Connective hooks for the two object languages.
trait Language: Sized {
    const HAS_BOX: bool;
    fn not(f: Self) -> Self;
    fn or(l: Self, r: Self) -> Self;
    fn boxed(f: Self) -> Self;
    fn atom(p: &mut Parser) -> Result<Self, ParseError>;

    fn and(l: Self, r: Self) -> Self {
        Self::not(Self::or(Self::not(l), Self::not(r)))
    }
    fn implies(l: Self, r: Self) -> Self {
        Self::or(Self::not(l), r)
    }
}

impl Language for L1Formula {
    const HAS_BOX: bool = false;
    fn not(f: Self) -> Self {
        L1Formula::not(f)
    }
    fn or(l: Self, r: Self) -> Self {
        L1Formula::or(l, r)
    }
    fn boxed(_: Self) -> Self {
        unreachable!("HAS_BOX is false")
    }
    fn atom(p: &mut Parser) -> Result<Self, ParseError> {
        let pos = p.pos();
        match p.next() {
            Some(Tok::Ident(kw)) if kw == "eps" => {}
            Some(t) => {
                return Err(ParseError::new(
                    pos,
                    format!("expected 'eps(..)', found {}", t.describe()),
                ))
            }
            None => {
                return Err(ParseError::new(
                    pos,
                    "expected 'eps(..)', found end of input",
                ))
            }
        }
        p.expect(Tok::LParen)?;
        let a = p.name()?;
        p.expect(Tok::Comma)?;
        let b = p.name()?;
        p.expect(Tok::RParen)?;
        Ok(L1Formula::Eps(a, b))
    }
}

impl Language for ModalFormula {
    const HAS_BOX: bool = true;
    fn not(f: Self) -> Self {
        ModalFormula::not(f)
    }
    fn or(l: Self, r: Self) -> Self {
        ModalFormula::or(l, r)
    }
    fn boxed(f: Self) -> Self {
        ModalFormula::boxed(f)
    }
    fn atom(p: &mut Parser) -> Result<Self, ParseError> {
        let pos = p.pos();
        match p.next() {
            Some(Tok::Ident(v)) => Ok(ModalFormula::Var(v)),
            Some(t) => Err(ParseError::new(
                pos,
                format!("expected a variable, found {}", t.describe()),
            )),
            None => Err(ParseError::new(
                pos,
                "expected a variable, found end of input",
            )),
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(t) if t == tok => Ok(()),
            Some(t) => Err(ParseError::new(
                pos,
                format!("expected {}, found {}", tok.describe(), t.describe()),
            )),
            None => Err(ParseError::new(
                pos,
                format!("expected {}, found end of input", tok.describe()),
            )),
        }
    }

    fn name(&mut self) -> Result<NameVar, ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Ident(s)) if is_name_ident(&s) => Ok(NameVar(s)),
            Some(Tok::Ident(s)) => Err(ParseError::new(
                pos,
                format!("'{s}' is not a lowercase name variable"),
            )),
            Some(t) => Err(ParseError::new(
                pos,
                format!("expected a name variable, found {}", t.describe()),
            )),
            None => Err(ParseError::new(
                pos,
                "expected a name variable, found end of input",
            )),
        }
    }

    fn iff<L: Language + Clone>(&mut self) -> Result<L, ParseError> {
        let mut lhs = self.implication::<L>()?;
        while self.eat(&Tok::Iff) {
            let rhs = self.implication::<L>()?;
            lhs = L::and(L::implies(lhs.clone(), rhs.clone()), L::implies(rhs, lhs));
        }
        Ok(lhs)
    }

    fn implication<L: Language + Clone>(&mut self) -> Result<L, ParseError> {
        let lhs = self.disjunction::<L>()?;
        if self.eat(&Tok::Implies) {
            let rhs = self.implication::<L>()?;
            return Ok(L::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction<L: Language + Clone>(&mut self) -> Result<L, ParseError> {
        let mut lhs = self.conjunction::<L>()?;
        while self.eat(&Tok::Or) {
            let rhs = self.conjunction::<L>()?;
            lhs = L::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction<L: Language + Clone>(&mut self) -> Result<L, ParseError> {
        let mut lhs = self.unary::<L>()?;
        while self.eat(&Tok::And) {
            let rhs = self.unary::<L>()?;
            lhs = L::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary<L: Language + Clone>(&mut self) -> Result<L, ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Not) => {
                self.idx += 1;
                Ok(L::not(self.unary::<L>()?))
            }
            Some(Tok::Box | Tok::Diamond) if !L::HAS_BOX => {
                Err(ParseError::new(pos, "modal operators are not allowed here"))
            }
            Some(Tok::Box) => {
                self.idx += 1;
                Ok(L::boxed(self.unary::<L>()?))
            }
            Some(Tok::Diamond) => {
                self.idx += 1;
                Ok(L::not(L::boxed(L::not(self.unary::<L>()?))))
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let inner = self.iff::<L>()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => L::atom(self),
        }
    }
}

fn parse_with<L: Language + Clone>(text: &str) -> Result<L, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        end: text.len(),
    };
    let f = p.iff::<L>()?;
    if let Some(t) = p.peek() {
        return Err(ParseError::new(
            p.pos(),
            format!("unexpected {} after formula", t.describe()),
        ));
    }
    Ok(f)
}

/// Parses an epsilon-calculus formula, expanding `&`, `->` and `<->`.
pub fn parse_l1(text: &str) -> Result<L1Formula, ParseError> {
    parse_with(text)
}

/// Parses a modal formula, expanding `&`, `->`, `<->` and `<>`.
pub fn parse_modal(text: &str) -> Result<ModalFormula, ParseError> {
    parse_with(text)
}
