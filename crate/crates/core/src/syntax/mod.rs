//! Formula representations for the epsilon calculus and for propositional
//! modal logic.
//!
//! Both languages are stored over the primitive connectives `¬` and `∨` (plus
//! `□` on the modal side). Conjunction, implication, equivalence and the
//! diamond are surface syntax: the smart constructors below expand them, and
//! the parser calls those constructors, so a parsed formula never contains a
//! derived connective.

mod parse;
pub(crate) mod parts;
mod print;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use parse::{parse_l1, parse_modal, ParseError};
pub use parts::{is_axiom_tl1, minimal_parts, parts, PartOccurrence, Polarity};
pub use print::Rendering;

/// A name variable of the epsilon calculus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NameVar(String);

impl NameVar {
    /// Creates a name variable, returning `None` unless `id` is a lowercase
    /// identifier (`[a-z][a-z0-9_]*`).
    pub fn new(id: impl Into<String>) -> Option<Self> {
        let id = id.into();
        is_name_ident(&id).then_some(NameVar(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The propositional variable standing for this name under translation.
    pub fn prop_var(&self) -> String {
        format!("p_{}", self.0)
    }
}

impl fmt::Display for NameVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_name_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

/// A formula of the propositional epsilon calculus over `¬` and `∨`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum L1Formula {
    /// `εab`: "the a is b".
    Eps(NameVar, NameVar),
    Not(Box<L1Formula>),
    Or(Box<L1Formula>, Box<L1Formula>),
}

impl L1Formula {
    /// Builds `εab`.
    ///
    /// # Panics
    ///
    /// Panics if either argument is not a valid name identifier.
    pub fn eps(subject: &str, predicate: &str) -> Self {
        let name =
            |s: &str| NameVar::new(s).unwrap_or_else(|| panic!("invalid name variable {s:?}"));
        L1Formula::Eps(name(subject), name(predicate))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: L1Formula) -> Self {
        L1Formula::Not(Box::new(inner))
    }

    pub fn or(left: L1Formula, right: L1Formula) -> Self {
        L1Formula::Or(Box::new(left), Box::new(right))
    }

    pub fn and(left: L1Formula, right: L1Formula) -> Self {
        Self::not(Self::or(Self::not(left), Self::not(right)))
    }

    pub fn implies(left: L1Formula, right: L1Formula) -> Self {
        Self::or(Self::not(left), right)
    }

    pub fn iff(left: L1Formula, right: L1Formula) -> Self {
        Self::and(
            Self::implies(left.clone(), right.clone()),
            Self::implies(right, left),
        )
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            L1Formula::Eps(..) => 1,
            L1Formula::Not(inner) => 1 + inner.size(),
            L1Formula::Or(l, r) => 1 + l.size() + r.size(),
        }
    }

    /// All name variables occurring in the formula.
    pub fn name_vars(&self) -> BTreeSet<NameVar> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut BTreeSet<NameVar>) {
        match self {
            L1Formula::Eps(a, b) => {
                out.insert(a.clone());
                out.insert(b.clone());
            }
            L1Formula::Not(inner) => inner.collect_names(out),
            L1Formula::Or(l, r) => {
                l.collect_names(out);
                r.collect_names(out);
            }
        }
    }

    /// Every subformula occurrence, preorder.
    pub fn subformulas(&self) -> Vec<&L1Formula> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            out.push(f);
            match f {
                L1Formula::Eps(..) => {}
                L1Formula::Not(inner) => stack.push(inner),
                L1Formula::Or(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        out
    }

    /// The subformula reached by following `path` (0 = only/left child, 1 = right child).
    pub fn at_path(&self, path: &[usize]) -> Option<&L1Formula> {
        let mut cur = self;
        for &step in path {
            cur = match (cur, step) {
                (L1Formula::Not(inner), 0) => inner,
                (L1Formula::Or(l, _), 0) => l,
                (L1Formula::Or(_, r), 1) => r,
                _ => return None,
            };
        }
        Some(cur)
    }

    /// Classical truth value, treating each `ε`-atom as an opaque proposition.
    pub fn eval(&self, atom: &mut impl FnMut(&NameVar, &NameVar) -> bool) -> bool {
        match self {
            L1Formula::Eps(a, b) => atom(a, b),
            L1Formula::Not(inner) => !inner.eval(atom),
            L1Formula::Or(l, r) => l.eval(atom) || r.eval(atom),
        }
    }

    /// Renders with `&`, `->` recovered where the shape allows it.
    pub fn pretty(&self) -> String {
        print::render(self, Rendering::Sugared)
    }
}

impl fmt::Display for L1Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::render(self, Rendering::Core))
    }
}

/// Serialized as its core-syntax string.
impl Serialize for L1Formula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A propositional modal formula with a single box-like operator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModalFormula {
    Var(String),
    Not(Box<ModalFormula>),
    Or(Box<ModalFormula>, Box<ModalFormula>),
    Box(Box<ModalFormula>),
}

impl ModalFormula {
    pub fn var(name: impl Into<String>) -> Self {
        ModalFormula::Var(name.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: ModalFormula) -> Self {
        ModalFormula::Not(Box::new(inner))
    }

    pub fn or(left: ModalFormula, right: ModalFormula) -> Self {
        ModalFormula::Or(Box::new(left), Box::new(right))
    }

    pub fn boxed(inner: ModalFormula) -> Self {
        ModalFormula::Box(Box::new(inner))
    }

    pub fn diamond(inner: ModalFormula) -> Self {
        Self::not(Self::boxed(Self::not(inner)))
    }

    pub fn and(left: ModalFormula, right: ModalFormula) -> Self {
        Self::not(Self::or(Self::not(left), Self::not(right)))
    }

    pub fn implies(left: ModalFormula, right: ModalFormula) -> Self {
        Self::or(Self::not(left), right)
    }

    pub fn iff(left: ModalFormula, right: ModalFormula) -> Self {
        Self::and(
            Self::implies(left.clone(), right.clone()),
            Self::implies(right, left),
        )
    }

    pub fn size(&self) -> usize {
        match self {
            ModalFormula::Var(_) => 1,
            ModalFormula::Not(inner) | ModalFormula::Box(inner) => 1 + inner.size(),
            ModalFormula::Or(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                ModalFormula::Var(v) => {
                    out.insert(v.clone());
                }
                ModalFormula::Not(inner) | ModalFormula::Box(inner) => stack.push(inner),
                ModalFormula::Or(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
            }
        }
        out
    }

    /// Renders using `[]`/`<>`, or the deontic `O`/`P` glyphs, with derived
    /// connectives recovered where the shape allows it.
    pub fn render(&self, rendering: Rendering) -> String {
        print::render(self, rendering)
    }
}

impl fmt::Display for ModalFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::render(self, Rendering::Core))
    }
}

/// Serialized as its core-syntax string.
impl Serialize for ModalFormula {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A one-level view of a formula node, shared by the printer.
pub(crate) enum Shape<'a, F> {
    Atom(String),
    Not(&'a F),
    Or(&'a F, &'a F),
    Box(&'a F),
}

pub(crate) trait HasShape: Sized {
    fn shape(&self) -> Shape<'_, Self>;
}

impl HasShape for L1Formula {
    fn shape(&self) -> Shape<'_, Self> {
        match self {
            L1Formula::Eps(a, b) => Shape::Atom(format!("eps({a},{b})")),
            L1Formula::Not(inner) => Shape::Not(inner),
            L1Formula::Or(l, r) => Shape::Or(l, r),
        }
    }
}

impl HasShape for ModalFormula {
    fn shape(&self) -> Shape<'_, Self> {
        match self {
            ModalFormula::Var(v) => Shape::Atom(v.clone()),
            ModalFormula::Not(inner) => Shape::Not(inner),
            ModalFormula::Or(l, r) => Shape::Or(l, r),
            ModalFormula::Box(inner) => Shape::Box(inner),
        }
    }
}
