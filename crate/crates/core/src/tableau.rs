//! Normal tableaux for the epsilon calculus.
//!
//! A node is a single formula `G`. A reduction picks negative parts of `G`
//! and adjoins a new disjunct `¬χ`, so that `χ` becomes a negative part of
//! the child `G ∨ ¬χ`:
//!
//! | rule | trigger (negative parts) | adjoined `χ`           |
//! |------|--------------------------|------------------------|
//! | `∨₋` | `η ∨ ξ`                  | `η` (left), `ξ` (right)|
//! | `ε₁` | `εab`                    | `εaa`                  |
//! | `ε₂` | `εab`, `εbc`             | `εac`                  |
//! | `ε₃` | `εab`, `εbc`             | `εba`                  |
//!
//! Normality: nothing is applied to a node that is already an axiom, and a
//! rule is applied only if what it adjoins is not already a negative part.
//! Under this restriction every branch ends either in an axiom or in a
//! Hintikka formula.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::syntax::parts::{axiom_witness, visit_parts};
use crate::syntax::{L1Formula, NameVar, PartOccurrence, Polarity};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RuleKind {
    #[serde(rename = "or-")]
    VeeMinus,
    #[serde(rename = "eps1")]
    Eps1,
    #[serde(rename = "eps2")]
    Eps2,
    #[serde(rename = "eps3")]
    Eps3,
}

impl RuleKind {
    pub fn arity(self) -> usize {
        match self {
            RuleKind::VeeMinus => 2,
            _ => 1,
        }
    }
}

/// One rule application: the negative-part occurrences it consumed and the
/// formulas it adjoins (one per child).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionRule {
    pub kind: RuleKind,
    pub trigger: Vec<PartOccurrence>,
    pub emitted: Vec<L1Formula>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    /// Axiom leaf; `witness` is a formula occurring both positively and negatively.
    Closed { witness: L1Formula },
    /// Hintikka leaf.
    Open,
    Reduced {
        rule: ReductionRule,
        children: Vec<TableauNode>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauNode {
    pub formula: L1Formula,
    pub expansion: Expansion,
}

impl TableauNode {
    pub fn is_leaf(&self) -> bool {
        !matches!(self.expansion, Expansion::Reduced { .. })
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&TableauNode> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            match &node.expansion {
                Expansion::Reduced { children, .. } => stack.extend(children.iter().rev()),
                _ => out.push(node),
            }
        }
        out
    }

    /// Length of the longest branch, counted in rule applications.
    pub fn depth(&self) -> usize {
        match &self.expansion {
            Expansion::Reduced { children, .. } => {
                1 + children.iter().map(TableauNode::depth).max().unwrap_or(0)
            }
            _ => 0,
        }
    }

    pub fn trace(&self) -> TraceNode {
        let (rule, leaf, children) = match &self.expansion {
            Expansion::Closed { .. } => (None, Some("closed"), Vec::new()),
            Expansion::Open => (None, Some("open"), Vec::new()),
            Expansion::Reduced { rule, children } => (
                Some(rule.kind),
                None,
                children.iter().map(TableauNode::trace).collect(),
            ),
        };
        TraceNode {
            formula: self.formula.to_string(),
            rule,
            leaf,
            children,
        }
    }
}

/// JSON shape of a tableau node for `--trace` output.
#[derive(Debug, Clone, Serialize)]
pub struct TraceNode {
    pub formula: String,
    pub rule: Option<RuleKind>,
    pub leaf: Option<&'static str>,
    pub children: Vec<TraceNode>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    pub root: TableauNode,
}

impl Tableau {
    pub fn is_closed(&self) -> bool {
        self.root
            .leaves()
            .iter()
            .all(|leaf| matches!(leaf.expansion, Expansion::Closed { .. }))
    }

    /// Formulas at open leaves, left to right (duplicates kept).
    pub fn open_leaves(&self) -> Vec<&L1Formula> {
        self.root
            .leaves()
            .into_iter()
            .filter(|leaf| leaf.expansion == Expansion::Open)
            .map(|leaf| &leaf.formula)
            .collect()
    }
}

fn np_occurrences(phi: &L1Formula) -> Vec<(Vec<usize>, &L1Formula)> {
    let mut out = Vec::new();
    visit_parts(phi, &mut |path, pol, f| {
        if pol == Polarity::Negative {
            out.push((path.to_vec(), f));
        }
    });
    out
}

/// Finds the first applicable rule under the fixed strategy: negative parts
/// in post-order, and for each one the rules in the order `∨₋, ε₁, ε₂, ε₃`.
fn next_rule(phi: &L1Formula) -> Option<ReductionRule> {
    let occurrences = np_occurrences(phi);
    let present: HashSet<&L1Formula> = occurrences.iter().map(|(_, f)| *f).collect();
    let occ = |path: &[usize], f: &L1Formula| PartOccurrence {
        path: path.to_vec(),
        polarity: Polarity::Negative,
        formula: f.clone(),
    };

    for (path, f) in &occurrences {
        match f {
            L1Formula::Or(l, r) => {
                if !present.contains(&**l) && !present.contains(&**r) {
                    return Some(ReductionRule {
                        kind: RuleKind::VeeMinus,
                        trigger: vec![occ(path, f)],
                        emitted: vec![(**l).clone(), (**r).clone()],
                    });
                }
            }
            L1Formula::Eps(a, b) => {
                let aa = L1Formula::Eps(a.clone(), a.clone());
                if !present.contains(&aa) {
                    return Some(ReductionRule {
                        kind: RuleKind::Eps1,
                        trigger: vec![occ(path, f)],
                        emitted: vec![aa],
                    });
                }
                let partners = || {
                    occurrences.iter().filter_map(move |(p2, g)| match g {
                        L1Formula::Eps(b2, c) if b2 == b => Some((p2, *g, c)),
                        _ => None,
                    })
                };
                for (p2, g, c) in partners() {
                    let ac = L1Formula::Eps(a.clone(), c.clone());
                    if !present.contains(&ac) {
                        return Some(ReductionRule {
                            kind: RuleKind::Eps2,
                            trigger: vec![occ(path, f), occ(p2, g)],
                            emitted: vec![ac],
                        });
                    }
                }
                let ba = L1Formula::Eps(b.clone(), a.clone());
                if !present.contains(&ba) {
                    if let Some((p2, g, _)) = partners().next() {
                        return Some(ReductionRule {
                            kind: RuleKind::Eps3,
                            trigger: vec![occ(path, f), occ(p2, g)],
                            emitted: vec![ba],
                        });
                    }
                }
            }
            L1Formula::Not(_) => {}
        }
    }
    None
}

fn expand(formula: L1Formula) -> TableauNode {
    if let Some(witness) = axiom_witness(&formula) {
        let witness = witness.clone();
        return TableauNode {
            formula,
            expansion: Expansion::Closed { witness },
        };
    }
    match next_rule(&formula) {
        None => TableauNode {
            formula,
            expansion: Expansion::Open,
        },
        Some(rule) => {
            let children = rule
                .emitted
                .iter()
                .map(|chi| expand(L1Formula::or(formula.clone(), L1Formula::not(chi.clone()))))
                .collect();
            TableauNode {
                formula,
                expansion: Expansion::Reduced { rule, children },
            }
        }
    }
}

/// Builds the normal tableau of `phi` under the deterministic strategy.
pub fn build_normal_tableau(phi: &L1Formula) -> Tableau {
    Tableau {
        root: expand(phi.clone()),
    }
}

/// Decides provability: every branch of the normal tableau closes.
pub fn is_provable_l1(phi: &L1Formula) -> bool {
    build_normal_tableau(phi).is_closed()
}

/// The formulas ending open branches of the normal tableau of `phi`.
pub fn hintikka_formulas(phi: &L1Formula) -> BTreeSet<L1Formula> {
    build_normal_tableau(phi)
        .open_leaves()
        .into_iter()
        .cloned()
        .collect()
}

/// The first open leaf, if `phi` is unprovable.
pub fn first_hintikka_formula(phi: &L1Formula) -> Option<L1Formula> {
    build_normal_tableau(phi)
        .open_leaves()
        .first()
        .map(|f| (*f).clone())
}

/// Whether `phi` is a Hintikka formula: not an axiom, and its negative parts
/// are closed under the disjunction and `ε` conditions.
pub fn is_hintikka(phi: &L1Formula) -> bool {
    if axiom_witness(phi).is_some() {
        return false;
    }
    let np: HashSet<&L1Formula> = np_occurrences(phi).into_iter().map(|(_, f)| f).collect();
    let has = |a: &NameVar, b: &NameVar| np.contains(&L1Formula::Eps(a.clone(), b.clone()));
    let atoms: Vec<_> = np
        .iter()
        .filter_map(|f| match f {
            L1Formula::Eps(a, b) => Some((a, b)),
            _ => None,
        })
        .collect();
    let disjunctions_ok = np.iter().all(|f| match f {
        L1Formula::Or(l, r) => np.contains(&**l) || np.contains(&**r),
        _ => true,
    });
    disjunctions_ok
        && atoms.iter().all(|(a, _)| has(a, a))
        && atoms.iter().all(|(a, b)| {
            atoms
                .iter()
                .filter(|(b2, _)| b2 == b)
                .all(|(_, c)| has(a, c) && has(b, a))
        })
}
