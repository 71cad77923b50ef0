use super::{HasShape, Shape};

/// How a formula is printed.
///
/// `Core` prints the stored primitives only (`!`, `|`, `[]`). `Sugared` folds
/// `¬(¬x ∨ ¬y)` back into `x & y`, `¬x ∨ y` into `x -> y` and `¬□¬x` into
/// `<>x`. `Deontic` is `Sugared` with `O`/`P` in place of `[]`/`<>`.
/// Core and sugared output both parse back to the identical AST.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rendering {
    Core,
    Sugared,
    Deontic,
}

// Binding strength, loosest first. Equivalence is never emitted.
const IMP: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const PREFIX: u8 = 5;
const ATOM: u8 = 6;

enum View<'a, F> {
    Atom(String),
    Not(&'a F),
    Box(&'a F),
    Diamond(&'a F),
    Or(&'a F, &'a F),
    And(&'a F, &'a F),
    Implies(&'a F, &'a F),
}

impl<F> View<'_, F> {
    fn level(&self) -> u8 {
        match self {
            View::Atom(_) => ATOM,
            View::Not(_) | View::Box(_) | View::Diamond(_) => PREFIX,
            View::Or(..) => OR,
            View::And(..) => AND,
            View::Implies(..) => IMP,
        }
    }
}

fn view<F: HasShape>(f: &F, sugar: bool) -> View<'_, F> {
    match f.shape() {
        Shape::Atom(s) => View::Atom(s),
        Shape::Box(inner) => View::Box(inner),
        Shape::Or(l, r) => {
            if sugar {
                if let Shape::Not(a) = l.shape() {
                    return View::Implies(a, r);
                }
            }
            View::Or(l, r)
        }
        Shape::Not(inner) => {
            if sugar {
                match inner.shape() {
                    Shape::Or(l, r) => {
                        if let (Shape::Not(a), Shape::Not(b)) = (l.shape(), r.shape()) {
                            return View::And(a, b);
                        }
                    }
                    Shape::Box(b) => {
                        if let Shape::Not(a) = b.shape() {
                            return View::Diamond(a);
                        }
                    }
                    _ => {}
                }
            }
            View::Not(inner)
        }
    }
}

pub(crate) fn render<F: HasShape>(f: &F, rendering: Rendering) -> String {
    let mut out = String::new();
    write(f, rendering, 0, &mut out);
    out
}

fn write<F: HasShape>(f: &F, rendering: Rendering, min_level: u8, out: &mut String) {
    let v = view(f, rendering != Rendering::Core);
    let paren = v.level() < min_level;
    if paren {
        out.push('(');
    }
    let deontic = rendering == Rendering::Deontic;
    match v {
        View::Atom(s) => out.push_str(&s),
        View::Not(a) => {
            out.push('!');
            write(a, rendering, PREFIX, out);
        }
        View::Box(a) => modal_prefix(if deontic { "O" } else { "[]" }, a, rendering, out),
        View::Diamond(a) => modal_prefix(if deontic { "P" } else { "<>" }, a, rendering, out),
        View::Or(l, r) => binary(l, " | ", r, OR, AND, rendering, out),
        View::And(l, r) => binary(l, " & ", r, AND, PREFIX, rendering, out),
        View::Implies(l, r) => binary(l, " -> ", r, OR, IMP, rendering, out),
    }
    if paren {
        out.push(')');
    }
}

fn modal_prefix<F: HasShape>(glyph: &str, a: &F, rendering: Rendering, out: &mut String) {
    out.push_str(glyph);
    // A letter glyph directly followed by an identifier would merge with it.
    if glyph.starts_with(|c: char| c.is_ascii_alphabetic()) && matches!(a.shape(), Shape::Atom(_)) {
        out.push(' ');
    }
    write(a, rendering, PREFIX, out);
}

fn binary<F: HasShape>(
    l: &F,
    op: &str,
    r: &F,
    left_min: u8,
    right_min: u8,
    rendering: Rendering,
    out: &mut String,
) {
    write(l, rendering, left_min, out);
    out.push_str(op);
    write(r, rendering, right_min, out);
}
