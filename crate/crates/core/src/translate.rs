//! Translations of the epsilon calculus into propositional modal logic.
//!
//! Both translations commute with `¬` and `∨` and send the name variable `a`
//! to the propositional variable `p_a`. They differ on atoms:
//!
//! * Blass: `εab ↦ (p_a ∧ □(p_a ⊃ p_b)) ∧ (p_b ⊃ □(p_b ⊃ p_a))`
//! * naive: `εab ↦ p_a ∧ □(p_a ≡ p_b)`
//!
//! The naive translation is sound but not faithful; it is kept to show the
//! contrast. Reading `□` as the deontic `O` changes only the printed glyph.

use serde::{Deserialize, Serialize};

use crate::syntax::{L1Formula, ModalFormula, NameVar, Rendering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchemeTag {
    Blass,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModalityRendering {
    /// `[]` / `<>`
    Box,
    /// `O` / `P`
    O,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TranslationScheme {
    pub tag: SchemeTag,
    pub rendering: ModalityRendering,
}

impl TranslationScheme {
    pub fn translate(&self, phi: &L1Formula) -> ModalFormula {
        match self.tag {
            SchemeTag::Blass => blass(phi),
            SchemeTag::Naive => naive(phi),
        }
    }

    pub fn render(&self, m: &ModalFormula) -> String {
        m.render(match self.rendering {
            ModalityRendering::Box => Rendering::Sugared,
            ModalityRendering::O => Rendering::Deontic,
        })
    }
}

fn homomorphic(
    phi: &L1Formula,
    atom: &impl Fn(&NameVar, &NameVar) -> ModalFormula,
) -> ModalFormula {
    match phi {
        L1Formula::Eps(a, b) => atom(a, b),
        L1Formula::Not(inner) => ModalFormula::not(homomorphic(inner, atom)),
        L1Formula::Or(l, r) => ModalFormula::or(homomorphic(l, atom), homomorphic(r, atom)),
    }
}

/// The Blass image of a single atom `εab`.
pub fn blass_atom(a: &NameVar, b: &NameVar) -> ModalFormula {
    let pa = || ModalFormula::var(a.prop_var());
    let pb = || ModalFormula::var(b.prop_var());
    ModalFormula::and(
        ModalFormula::and(pa(), ModalFormula::boxed(ModalFormula::implies(pa(), pb()))),
        ModalFormula::implies(pb(), ModalFormula::boxed(ModalFormula::implies(pb(), pa()))),
    )
}

/// The naive image of a single atom `εab`.
pub fn naive_atom(a: &NameVar, b: &NameVar) -> ModalFormula {
    let pa = || ModalFormula::var(a.prop_var());
    let pb = || ModalFormula::var(b.prop_var());
    ModalFormula::and(pa(), ModalFormula::boxed(ModalFormula::iff(pa(), pb())))
}

pub fn blass(phi: &L1Formula) -> ModalFormula {
    homomorphic(phi, &blass_atom)
}

pub fn naive(phi: &L1Formula) -> ModalFormula {
    homomorphic(phi, &naive_atom)
}

/// Maximum nesting depth of `□`.
pub fn modal_depth(m: &ModalFormula) -> usize {
    match m {
        ModalFormula::Var(_) => 0,
        ModalFormula::Not(inner) => modal_depth(inner),
        ModalFormula::Or(l, r) => modal_depth(l).max(modal_depth(r)),
        ModalFormula::Box(inner) => 1 + modal_depth(inner),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_modal;

    fn e(a: &str, b: &str) -> L1Formula {
        L1Formula::eps(a, b)
    }

    #[test]
    fn blass_atom_shape() {
        let got = blass(&e("a", "b"));
        let expected = parse_modal("(p_a & [](p_a -> p_b)) & (p_b -> [](p_b -> p_a))").unwrap();
        assert_eq!(got, expected);
        assert_eq!(
            TranslationScheme {
                tag: SchemeTag::Blass,
                rendering: ModalityRendering::Box
            }
            .render(&got),
            "p_a & [](p_a -> p_b) & (p_b -> [](p_b -> p_a))"
        );
        assert_eq!(
            TranslationScheme {
                tag: SchemeTag::Blass,
                rendering: ModalityRendering::O
            }
            .render(&got),
            "p_a & O(p_a -> p_b) & (p_b -> O(p_b -> p_a))"
        );
    }

    #[test]
    fn blass_commutes_with_negation() {
        let got = blass(&L1Formula::not(e("a", "a")));
        let expected = parse_modal("!(p_a & [](p_a -> p_a) & (p_a -> [](p_a -> p_a)))").unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn naive_atom_shape() {
        assert_eq!(
            naive(&e("a", "b")),
            parse_modal("p_a & [](p_a <-> p_b)").unwrap()
        );
        assert_eq!(
            naive(&e("a", "a")),
            parse_modal("p_a & [](p_a <-> p_a)").unwrap()
        );
    }

    #[test]
    fn depth() {
        assert_eq!(modal_depth(&ModalFormula::var("p_a")), 0);
        assert_eq!(modal_depth(&blass(&e("a", "b"))), 1);
        assert_eq!(modal_depth(&parse_modal("[]<>p | []q").unwrap()), 2);
    }
}
