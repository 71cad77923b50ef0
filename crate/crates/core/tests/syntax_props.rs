mod common;

use common::{l1_formula, modal_formula};
use epsilon_core::syntax::{
    minimal_parts, parse_l1, parse_modal, parts, L1Formula, Polarity, Rendering,
};
use proptest::prelude::*;

fn atom_paths(phi: &L1Formula) -> Vec<Vec<usize>> {
    fn walk(f: &L1Formula, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match f {
            L1Formula::Eps(..) => out.push(path.clone()),
            L1Formula::Not(inner) => {
                path.push(0);
                walk(inner, path, out);
                path.pop();
            }
            L1Formula::Or(l, r) => {
                for (i, child) in [l, r].into_iter().enumerate() {
                    path.push(i);
                    walk(child, path, out);
                    path.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    walk(phi, &mut Vec::new(), &mut out);
    out
}

proptest! {
    #[test]
    fn l1_core_print_parses_back(phi in l1_formula(3, 15)) {
        prop_assert_eq!(parse_l1(&phi.to_string()).unwrap(), phi);
    }

    #[test]
    fn l1_sugared_print_parses_back(phi in l1_formula(3, 15)) {
        prop_assert_eq!(parse_l1(&phi.pretty()).unwrap(), phi);
    }

    #[test]
    fn modal_prints_parse_back(f in modal_formula()) {
        prop_assert_eq!(parse_modal(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(parse_modal(&f.render(Rendering::Sugared)).unwrap(), f);
    }

    #[test]
    fn root_is_positive_and_paths_address_formulas(phi in l1_formula(3, 12)) {
        let ps = parts(&phi);
        let root = ps.iter().find(|p| p.path.is_empty()).unwrap();
        prop_assert_eq!(root.polarity, Polarity::Positive);
        for p in &ps {
            prop_assert_eq!(phi.at_path(&p.path), Some(&p.formula));
        }
    }

    #[test]
    fn atom_occurrences_have_at_most_one_polarity(phi in l1_formula(3, 12)) {
        let ps = parts(&phi);
        for path in atom_paths(&phi) {
            prop_assert!(ps.iter().filter(|p| p.path == path).count() <= 1);
        }
    }

    #[test]
    fn double_negation_shifts_parts(phi in l1_formula(3, 10)) {
        let wrapped = L1Formula::not(L1Formula::not(phi.clone()));
        let outer = parts(&wrapped);
        let mut expected: Vec<_> = parts(&phi)
            .into_iter()
            .map(|mut p| {
                p.path.splice(0..0, [0, 0]);
                p
            })
            .collect();
        expected.sort_by(|a, b| a.path.cmp(&b.path));
        let mut inner: Vec<_> = outer.into_iter().filter(|p| p.path.len() >= 2).collect();
        inner.sort_by(|a, b| a.path.cmp(&b.path));
        prop_assert_eq!(inner, expected);
    }

    #[test]
    fn minimal_parts_are_atoms_or_negative_disjunctions(phi in l1_formula(3, 12)) {
        let (pos, neg) = minimal_parts(&phi);
        prop_assert!(pos.iter().all(|f| matches!(f, L1Formula::Eps(..))));
        prop_assert!(neg.iter().all(|f| matches!(f, L1Formula::Eps(..) | L1Formula::Or(..))));
    }
}
