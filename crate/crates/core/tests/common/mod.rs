//! Shared test oracles and generators.
#![allow(dead_code)]

use std::collections::BTreeMap;

use epsilon_core::syntax::{L1Formula, ModalFormula, NameVar};
use proptest::prelude::*;

/// Semantic L₁ provability: `phi` is a theorem iff it is true under every
/// valuation of the atoms `εxy` (x, y ∈ NV(phi)) that satisfies every
/// instance of the three axioms over those names. Valuations on NV(phi)
/// extend to all names by making every new atom false, so restricting to
/// NV(phi) loses nothing.
pub fn hilbert_provable(phi: &L1Formula) -> bool {
    let names: Vec<NameVar> = phi.name_vars().into_iter().collect();
    let k = names.len();
    assert!(k <= 4, "oracle limited to 4 names");
    let pos: BTreeMap<&NameVar, usize> = names.iter().zip(0..).collect();
    let bit = |a: usize, b: usize| a * k + b;
    let atoms = k * k;

    for v in 0u32..(1u32 << atoms) {
        let holds = |a: usize, b: usize| v >> bit(a, b) & 1 == 1;
        let admissible = (0..k).all(|a| {
            (0..k).all(|b| {
                (!holds(a, b) || holds(a, a))
                    && (0..k).all(|c| !(holds(a, b) && holds(b, c)) || (holds(a, c) && holds(b, a)))
            })
        });
        if admissible && !phi.eval(&mut |a, b| holds(pos[a], pos[b])) {
            return false;
        }
    }
    true
}

pub fn name(i: usize) -> NameVar {
    NameVar::new(((b'a' + i as u8) as char).to_string()).unwrap()
}

/// L₁ formulas over the first `names` letters with at most `max_size` nodes.
pub fn l1_formula(names: usize, max_size: usize) -> impl Strategy<Value = L1Formula> {
    let leaf = (0..names, 0..names).prop_map(|(a, b)| L1Formula::Eps(name(a), name(b)));
    leaf.prop_recursive(6, max_size as u32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(L1Formula::not),
            (inner.clone(), inner).prop_map(|(l, r)| L1Formula::or(l, r)),
        ]
    })
    .prop_filter("size bound", move |f| f.size() <= max_size)
}

fn var(i: usize) -> ModalFormula {
    ModalFormula::var(["p", "q", "r", "s"][i])
}

fn propositional(vars: usize) -> impl Strategy<Value = ModalFormula> {
    (0..vars).prop_map(var).prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(ModalFormula::not),
            (inner.clone(), inner).prop_map(|(l, r)| ModalFormula::or(l, r)),
        ]
    })
}

/// Modal formulas of depth at most one over the first `vars` of `p, q, r, s`.
pub fn depth1_formula(vars: usize) -> impl Strategy<Value = ModalFormula> {
    let leaf = prop_oneof![
        propositional(vars),
        propositional(vars).prop_map(ModalFormula::boxed),
    ];
    leaf.prop_recursive(3, 10, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(ModalFormula::not),
            (inner.clone(), inner).prop_map(|(l, r)| ModalFormula::or(l, r)),
        ]
    })
}

/// Arbitrary modal formulas over `p, q, r`.
pub fn modal_formula() -> impl Strategy<Value = ModalFormula> {
    (0..3usize).prop_map(var).prop_recursive(5, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(ModalFormula::not),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| ModalFormula::or(l, r)),
            inner.prop_map(ModalFormula::boxed),
        ]
    })
}
