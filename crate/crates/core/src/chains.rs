//! Chains, tails and the name-variable partition of a Hintikka formula.
//!
//! Only the atomic negative parts of a Hintikka formula matter here. A name
//! variable belongs to a chain when `εab` and `εba` are both negative parts
//! for some `b` (`b = a` allowed, a single `εaa` witnessing both directions).
//! Chains are the classes of that both-directions relation; a tail of a chain
//! `C` is a variable `b ∉ C` with `εab` negative for some `a ∈ C`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::syntax::parts::visit_parts;
use crate::syntax::{minimal_parts, L1Formula, NameVar, Polarity};
use crate::tableau::is_hintikka;

pub type Chain = BTreeSet<NameVar>;

/// Per tail, the indices of the chains it tails.
pub type TailLinks = BTreeMap<NameVar, BTreeSet<usize>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("formula is not a Hintikka formula: {0}")]
    NotHintikka(String),
    #[error("chain analysis invariant violated: {0}")]
    Invariant(String),
}

/// Name-variable partition of a Hintikka formula.
///
/// `chains` is sorted by least member; `tail_links` maps each tail to the
/// indices (into `chains`) of the chains it tails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainAnalysis {
    pub nv: BTreeSet<NameVar>,
    pub cn: BTreeSet<NameVar>,
    pub chains: Vec<Chain>,
    pub tails: BTreeSet<NameVar>,
    pub rest: BTreeSet<NameVar>,
    pub tail_links: TailLinks,
    /// Rest variables that occur in no minimal positive part. Variables that
    /// only occur inside a negative disjunction land here.
    pub rest_outside_minimal_positive: BTreeSet<NameVar>,
}

impl ChainAnalysis {
    /// Index of the chain containing `x`.
    pub fn chain_of(&self, x: &NameVar) -> Option<usize> {
        self.chains.iter().position(|c| c.contains(x))
    }
}

/// All name variables of `phi`.
pub fn name_vars(phi: &L1Formula) -> BTreeSet<NameVar> {
    phi.name_vars()
}

/// The atomic negative parts, as ordered pairs.
pub(crate) fn negative_atoms(phi: &L1Formula) -> HashSet<(NameVar, NameVar)> {
    let mut out = HashSet::new();
    visit_parts(phi, &mut |_, pol, f| {
        if let (Polarity::Negative, L1Formula::Eps(a, b)) = (pol, f) {
            out.insert((a.clone(), b.clone()));
        }
    });
    out
}

fn require_hintikka(psi: &L1Formula) -> Result<(), ChainError> {
    if is_hintikka(psi) {
        Ok(())
    } else {
        Err(ChainError::NotHintikka(psi.to_string()))
    }
}

fn both_ways(np: &HashSet<(NameVar, NameVar)>, a: &NameVar, b: &NameVar) -> bool {
    np.contains(&(a.clone(), b.clone())) && np.contains(&(b.clone(), a.clone()))
}

fn chain_names(psi: &L1Formula, np: &HashSet<(NameVar, NameVar)>) -> BTreeSet<NameVar> {
    let nv = psi.name_vars();
    nv.iter()
        .filter(|a| nv.iter().any(|b| both_ways(np, a, b)))
        .cloned()
        .collect()
}

/// The chain relation `{(a, b) ∈ CN × CN : εab and εba are negative parts}`.
pub fn chain_relation(psi: &L1Formula) -> Result<BTreeSet<(NameVar, NameVar)>, ChainError> {
    require_hintikka(psi)?;
    let np = negative_atoms(psi);
    let cn = chain_names(psi, &np);
    let mut rel = BTreeSet::new();
    for a in &cn {
        for b in &cn {
            if both_ways(&np, a, b) {
                rel.insert((a.clone(), b.clone()));
            }
        }
    }
    Ok(rel)
}

/// Equivalence classes of [`chain_relation`], sorted by least member.
pub fn chain_quotient(psi: &L1Formula) -> Result<Vec<Chain>, ChainError> {
    let rel = chain_relation(psi)?;
    let mut classes: Vec<Chain> = Vec::new();
    for (a, _) in &rel {
        if classes.iter().any(|c| c.contains(a)) {
            continue;
        }
        let class = rel
            .iter()
            .filter(|(x, _)| x == a)
            .map(|(_, y)| y.clone())
            .collect();
        classes.push(class);
    }
    classes.sort();
    Ok(classes)
}

/// Maximal sets whose members are pairwise (and reflexively) linked both
/// ways, found by greedy saturation from each seed in name order.
///
/// This deliberately does not go through [`chain_relation`], so agreement
/// with [`chain_quotient`] is a real check.
pub fn chains_ki(psi: &L1Formula) -> Result<Vec<Chain>, ChainError> {
    require_hintikka(psi)?;
    let np = negative_atoms(psi);
    let linked = |x: &NameVar, y: &NameVar| {
        np.contains(&(x.clone(), y.clone())) && np.contains(&(y.clone(), x.clone()))
    };
    let candidates: Vec<NameVar> = psi
        .name_vars()
        .into_iter()
        .filter(|x| linked(x, x))
        .collect();
    let mut found: BTreeSet<Chain> = BTreeSet::new();
    for seed in &candidates {
        let mut clique: Vec<&NameVar> = vec![seed];
        for other in &candidates {
            if !clique.contains(&other) && clique.iter().all(|m| linked(m, other)) {
                clique.push(other);
            }
        }
        found.insert(clique.into_iter().cloned().collect());
    }
    Ok(found.into_iter().collect())
}

/// Tails and, per tail, the indices of the chains (as ordered by
/// [`chain_quotient`]) it tails.
pub fn tails_of(psi: &L1Formula) -> Result<(BTreeSet<NameVar>, TailLinks), ChainError> {
    let chains = chain_quotient(psi)?;
    let np = negative_atoms(psi);
    let mut links: BTreeMap<NameVar, BTreeSet<usize>> = BTreeMap::new();
    for (a, b) in &np {
        for (i, chain) in chains.iter().enumerate() {
            if chain.contains(a) && !chain.contains(b) {
                links.entry(b.clone()).or_default().insert(i);
            }
        }
    }
    Ok((links.keys().cloned().collect(), links))
}

/// Assembles the full partition and checks it is a disjoint union.
pub fn analyze(psi: &L1Formula) -> Result<ChainAnalysis, ChainError> {
    let chains = chain_quotient(psi)?;
    let (tails, tail_links) = tails_of(psi)?;
    let nv = psi.name_vars();
    let cn: BTreeSet<NameVar> = chains.iter().flatten().cloned().collect();

    if let Some(x) = tails.intersection(&cn).next() {
        return Err(ChainError::Invariant(format!(
            "tail {x} belongs to a chain"
        )));
    }
    let rest: BTreeSet<NameVar> = nv
        .iter()
        .filter(|x| !cn.contains(*x) && !tails.contains(*x))
        .cloned()
        .collect();
    if cn.len() + tails.len() + rest.len() != nv.len() {
        return Err(ChainError::Invariant("NV is not CN ⊔ TN ⊔ Rest".into()));
    }

    let (min_pos, _) = minimal_parts(psi);
    let in_min_pos: BTreeSet<NameVar> = min_pos.iter().flat_map(L1Formula::name_vars).collect();
    let rest_outside_minimal_positive = rest.difference(&in_min_pos).cloned().collect();

    Ok(ChainAnalysis {
        nv,
        cn,
        chains,
        tails,
        rest,
        tail_links,
        rest_outside_minimal_positive,
    })
}
