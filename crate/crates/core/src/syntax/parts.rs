//! Positive and negative parts of a formula.
//!
//! The formula itself is a positive part; the disjuncts of a positive
//! disjunction are positive parts; the operand of a positive negation is a
//! negative part and the operand of a negative negation is a positive part.
//! Nothing else is a part. In particular a negative disjunction is not
//! decomposed: its disjuncts become parts only once a tableau reduction
//! adjoins them.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use super::L1Formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn flip(self) -> Self {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

/// One occurrence of a part, located by its child-index path from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartOccurrence {
    pub path: Vec<usize>,
    pub polarity: Polarity,
    pub formula: L1Formula,
}

impl PartOccurrence {
    /// Two occurrences overlap when one lies inside the other.
    pub fn overlaps(&self, other: &PartOccurrence) -> bool {
        paths_overlap(&self.path, &other.path)
    }
}

pub(crate) fn paths_overlap(a: &[usize], b: &[usize]) -> bool {
    let n = a.len().min(b.len());
    a[..n] == b[..n]
}

/// Walks every part occurrence in post-order (children before their parent,
/// left before right).
pub(crate) fn visit_parts<'a>(
    phi: &'a L1Formula,
    visit: &mut impl FnMut(&[usize], Polarity, &'a L1Formula),
) {
    let mut path = Vec::new();
    walk(phi, Polarity::Positive, &mut path, visit);
}

fn walk<'a>(
    f: &'a L1Formula,
    pol: Polarity,
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize], Polarity, &'a L1Formula),
) {
    match (f, pol) {
        (L1Formula::Or(l, r), Polarity::Positive) => {
            path.push(0);
            walk(l, pol, path, visit);
            path.pop();
            path.push(1);
            walk(r, pol, path, visit);
            path.pop();
        }
        (L1Formula::Not(inner), _) => {
            path.push(0);
            walk(inner, pol.flip(), path, visit);
            path.pop();
        }
        _ => {}
    }
    visit(path, pol, f);
}

/// Every positive and negative part occurrence of `phi`.
pub fn parts(phi: &L1Formula) -> Vec<PartOccurrence> {
    let mut out = Vec::new();
    visit_parts(phi, &mut |path, polarity, formula| {
        out.push(PartOccurrence {
            path: path.to_vec(),
            polarity,
            formula: formula.clone(),
        })
    });
    out
}

/// Minimal positive parts (neither negations nor disjunctions) and minimal
/// negative parts (not negations).
pub fn minimal_parts(phi: &L1Formula) -> (BTreeSet<L1Formula>, BTreeSet<L1Formula>) {
    let mut pos = BTreeSet::new();
    let mut neg = BTreeSet::new();
    visit_parts(phi, &mut |_, pol, f| match (pol, f) {
        (Polarity::Positive, L1Formula::Eps(..)) => {
            pos.insert(f.clone());
        }
        (Polarity::Negative, L1Formula::Eps(..) | L1Formula::Or(..)) => {
            neg.insert(f.clone());
        }
        _ => {}
    });
    (pos, neg)
}

/// Whether some formula occurs both as a positive and as a negative part at
/// non-overlapping occurrences, i.e. whether `phi` closes a tableau branch.
pub fn is_axiom_tl1(phi: &L1Formula) -> bool {
    axiom_witness(phi).is_some()
}

/// The formula witnessing [`is_axiom_tl1`], if any.
pub(crate) fn axiom_witness(phi: &L1Formula) -> Option<&L1Formula> {
    let mut positive: HashMap<&L1Formula, Vec<Vec<usize>>> = HashMap::new();
    let mut negative: Vec<(Vec<usize>, &L1Formula)> = Vec::new();
    visit_parts(phi, &mut |path, pol, f| match pol {
        Polarity::Positive => positive.entry(f).or_default().push(path.to_vec()),
        Polarity::Negative => negative.push((path.to_vec(), f)),
    });
    negative.into_iter().find_map(|(neg_path, f)| {
        positive
            .get(f)?
            .iter()
            .any(|pos_path| !paths_overlap(pos_path, &neg_path))
            .then_some(f)
    })
}
