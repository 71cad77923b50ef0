mod common;

use std::collections::BTreeSet;

use common::l1_formula;
use epsilon_core::chains::{analyze, chain_quotient, chain_relation, chains_ki};
use epsilon_core::syntax::{parts, L1Formula, NameVar, Polarity};
use epsilon_core::tableau::hintikka_formulas;
use proptest::prelude::*;

fn negative_atoms(psi: &L1Formula) -> BTreeSet<(NameVar, NameVar)> {
    parts(psi)
        .into_iter()
        .filter(|p| p.polarity == Polarity::Negative)
        .filter_map(|p| match p.formula {
            L1Formula::Eps(a, b) => Some((a, b)),
            _ => None,
        })
        .collect()
}

fn leaves(phi: &L1Formula) -> Vec<L1Formula> {
    hintikka_formulas(phi).into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn relation_is_an_equivalence_on_cn(phi in l1_formula(4, 12)) {
        for psi in leaves(&phi) {
            let rel = chain_relation(&psi).unwrap();
            let cn: BTreeSet<NameVar> = rel.iter().map(|(a, _)| a.clone()).collect();
            for x in &cn {
                prop_assert!(rel.contains(&(x.clone(), x.clone())));
            }
            for (a, b) in &rel {
                prop_assert!(rel.contains(&(b.clone(), a.clone())));
                for (b2, c) in &rel {
                    if b2 == b {
                        prop_assert!(rel.contains(&(a.clone(), c.clone())));
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_matches_saturation(phi in l1_formula(4, 12)) {
        for psi in leaves(&phi) {
            prop_assert_eq!(chain_quotient(&psi).unwrap(), chains_ki(&psi).unwrap());
        }
    }

    #[test]
    fn partition_and_tails(phi in l1_formula(4, 12)) {
        for psi in leaves(&phi) {
            let an = analyze(&psi).unwrap();
            let np = negative_atoms(&psi);

            let union: BTreeSet<_> = an.cn.iter().chain(&an.tails).chain(&an.rest).cloned().collect();
            prop_assert_eq!(&union, &an.nv);
            prop_assert_eq!(an.cn.len() + an.tails.len() + an.rest.len(), an.nv.len());

            for t in &an.tails {
                let links = &an.tail_links[t];
                prop_assert!(!links.is_empty());
                // no atom with a tail as subject is a negative part
                prop_assert!(np.iter().all(|(a, _)| a != t));
                for &i in links {
                    prop_assert!(!an.chains[i].contains(t));
                    prop_assert!(np.iter().any(|(a, b)| b == t && an.chains[i].contains(a)));
                }
            }
            // rest variables never occur in an atomic negative part
            for x in &an.rest {
                prop_assert!(np.iter().all(|(a, b)| a != x && b != x));
            }
            prop_assert!(an.rest_outside_minimal_positive.is_subset(&an.rest));
        }
    }

    #[test]
    fn chains_are_disjoint_and_sorted(phi in l1_formula(4, 12)) {
        for psi in leaves(&phi) {
            let an = analyze(&psi).unwrap();
            let mut seen = BTreeSet::new();
            for c in &an.chains {
                prop_assert!(!c.is_empty());
                for x in c {
                    prop_assert!(seen.insert(x.clone()));
                }
            }
            let firsts: Vec<_> = an.chains.iter().map(|c| c.first().unwrap()).collect();
            prop_assert!(firsts.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
