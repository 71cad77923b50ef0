mod common;

use common::l1_formula;
use epsilon_core::chains::analyze;
use epsilon_core::kripke::{
    audit_variant, countermodel_k, countermodel_variant, forces_at_star, frame_properties,
    DeonticSystem, FrameVariant,
};
use epsilon_core::syntax::{parse_l1, parts, L1Formula, Polarity};
use epsilon_core::tableau::{hintikka_formulas, is_provable_l1};
use epsilon_core::translate::blass;
use proptest::prelude::*;

fn atomic_parts(psi: &L1Formula, pol: Polarity) -> Vec<L1Formula> {
    parts(psi)
        .into_iter()
        .filter(|p| p.polarity == pol && matches!(p.formula, L1Formula::Eps(..)))
        .map(|p| p.formula)
        .collect()
}

fn star_variant(v: FrameVariant) -> bool {
    matches!(v, FrameVariant::StarCross | FrameVariant::StarReturn)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn countermodel_falsifies_leaf_and_decides_atoms(phi in l1_formula(4, 12)) {
        for psi in hintikka_formulas(&phi) {
            let m = countermodel_k(&psi).unwrap();
            prop_assert!(!forces_at_star(&m, &blass(&psi)).unwrap(), "{}", psi);
            for d in atomic_parts(&psi, Polarity::Positive) {
                prop_assert!(!forces_at_star(&m, &blass(&d)).unwrap(), "p.p. {} of {}", d, psi);
            }
            for e in atomic_parts(&psi, Polarity::Negative) {
                prop_assert!(forces_at_star(&m, &blass(&e)).unwrap(), "n.p. {} of {}", e, psi);
            }
        }
    }

    #[test]
    fn chain_representatives_form_a_unit_matrix(phi in l1_formula(4, 12)) {
        for psi in hintikka_formulas(&phi) {
            let an = analyze(&psi).unwrap();
            let m = countermodel_k(&psi).unwrap();
            for (i, ci) in an.chains.iter().enumerate() {
                let rep = ci.first().unwrap().prop_var();
                for j in 0..an.chains.len() {
                    let g = format!("g{}", j + 1);
                    prop_assert_eq!(m.value(&rep, &g), Some(i == j));
                }
            }
        }
    }

    #[test]
    fn base_frames_are_finite_strict_orders(phi in l1_formula(4, 12)) {
        for psi in hintikka_formulas(&phi) {
            let p = frame_properties(&countermodel_k(&psi).unwrap());
            prop_assert!(p.transitive && p.irreflexive);
        }
    }

    #[test]
    fn variants_keep_worlds_and_valuation(phi in l1_formula(3, 10)) {
        for psi in hintikka_formulas(&phi) {
            let base = countermodel_k(&psi).unwrap();
            for v in FrameVariant::all() {
                let m = countermodel_variant(&psi, v).unwrap();
                prop_assert_eq!(m.worlds(), base.worlds());
                for x in base.variables() {
                    for w in base.worlds() {
                        prop_assert_eq!(m.value(x, w), base.value(x, w));
                    }
                }
            }
        }
    }

    #[test]
    fn variants_without_star_loop_falsify(phi in l1_formula(4, 12)) {
        for psi in hintikka_formulas(&phi) {
            for v in FrameVariant::all().into_iter().filter(|v| !star_variant(*v)) {
                let m = countermodel_variant(&psi, v).unwrap();
                prop_assert!(!forces_at_star(&m, &blass(&psi)).unwrap(), "{} on {}", v, psi);
            }
        }
    }
}

#[test]
fn preconditions_are_enforced() {
    let provable = parse_l1("eps(a,b) -> eps(a,a)").unwrap();
    assert!(is_provable_l1(&provable));
    assert!(countermodel_k(&provable).is_err());
    assert!(countermodel_k(&parse_l1("!eps(a,b)").unwrap()).is_err());
}

#[test]
fn star_loop_breaks_tail_atoms() {
    // b tails the chain {a}; with * R *, blass(eps(a,b)) fails at * itself.
    let psi = parse_l1("!eps(a,b) | !eps(a,a)").unwrap();
    for v in [FrameVariant::StarCross, FrameVariant::StarReturn] {
        let m = countermodel_variant(&psi, v).unwrap();
        assert!(forces_at_star(&m, &blass(&psi)).unwrap(), "{v}");
    }
    // without tails the star loop is harmless
    let chain_only = parse_l1("!eps(a,a)").unwrap();
    for v in [FrameVariant::StarCross, FrameVariant::StarReturn] {
        let m = countermodel_variant(&chain_only, v).unwrap();
        assert!(!forces_at_star(&m, &blass(&chain_only)).unwrap(), "{v}");
    }
}

#[test]
fn audits_of_documented_frames() {
    for n in 1..=5 {
        let base = audit_variant(FrameVariant::Base, n).properties;
        assert!(base.transitive && base.irreflexive && !base.serial);

        let full = audit_variant(FrameVariant::DeonticComplete, n).properties;
        assert!(full.euclidean && full.almost_reflexive && full.almost_symmetric && full.serial);

        for s in DeonticSystem::ALL.iter().filter(|s| !s.is_s5()) {
            let p = audit_variant(FrameVariant::Deontic(*s), n).properties;
            assert!(p.serial && p.almost_reflexive, "{s:?} n = {n}");
        }
    }
    let looped = audit_variant(FrameVariant::Looped, 3).properties;
    assert!(looped.almost_reflexive && looped.transitive);
    let om = audit_variant(FrameVariant::Deontic(DeonticSystem::Om), 2).properties;
    assert!(om.almost_reflexive && om.serial);
}

#[test]
fn audits_report_discrepancies() {
    let star_cross = audit_variant(FrameVariant::StarCross, 2);
    assert!(star_cross
        .relation
        .contains(&("*".to_string(), "g1".to_string())));
    assert!(star_cross.notes.iter().any(|n| n.contains("star-to-g")));

    let s5_empty = audit_variant(FrameVariant::Deontic(DeonticSystem::Os5), 0);
    assert!(!s5_empty.properties.euclidean);
    assert!(s5_empty.notes.iter().any(|n| n.contains("euclidean")));
}
