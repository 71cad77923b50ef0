//! Kripke countermodels for Hintikka formulas.
//!
//! With chains `C1..Cn` the model has worlds `*, g1..gn` and edges `* → gi`.
//! At `*` a variable is true iff it belongs to a chain. Chain variables form a
//! unit matrix over the `gi`, a tail is true exactly at the worlds of the
//! chains it tails, and every other variable is false at every `gi`. With no
//! chains the model is `{*, g}`, `* → g`, everything false.

use std::collections::BTreeMap;

use thiserror::Error;

use super::frames::{g_worlds, variant_frame, FrameVariant};
use super::{KripkeModel, STAR};
use crate::chains::{analyze, ChainError};
use crate::syntax::L1Formula;
use crate::tableau::is_provable_l1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountermodelError {
    #[error("formula is not a Hintikka formula: {0}")]
    NotHintikka(String),
    #[error("formula is provable, so it has no countermodel")]
    ProvableInput,
    #[error(transparent)]
    Chains(#[from] ChainError),
}

/// The countermodel over the base frame.
pub fn countermodel_k(psi: &L1Formula) -> Result<KripkeModel, CountermodelError> {
    if is_provable_l1(psi) {
        return Err(CountermodelError::ProvableInput);
    }
    let analysis = analyze(psi).map_err(|e| match e {
        ChainError::NotHintikka(s) => CountermodelError::NotHintikka(s),
        other => CountermodelError::Chains(other),
    })?;

    let n = analysis.chains.len();
    let gs = g_worlds(n);
    let mut worlds = vec![STAR.to_string()];
    worlds.extend(gs.iter().cloned());

    let mut valuation = BTreeMap::new();
    for x in &analysis.nv {
        let mut row = BTreeMap::new();
        row.insert(STAR.to_string(), analysis.cn.contains(x));
        for (i, g) in gs.iter().enumerate() {
            let value = if n == 0 {
                false
            } else if let Some(c) = analysis.chain_of(x) {
                c == i
            } else if let Some(links) = analysis.tail_links.get(x) {
                links.contains(&i)
            } else {
                false
            };
            row.insert(g.clone(), value);
        }
        valuation.insert(x.prop_var(), row);
    }

    let relation = gs.iter().map(|g| (STAR.to_string(), g.clone()));
    KripkeModel::new(worlds, STAR, relation, valuation)
        .map_err(|e| CountermodelError::Chains(ChainError::Invariant(e.to_string())))
}

/// The countermodel with the variant's accessibility relation.
pub fn countermodel_variant(
    psi: &L1Formula,
    v: FrameVariant,
) -> Result<KripkeModel, CountermodelError> {
    let base = countermodel_k(psi)?;
    let n = if base.worlds().iter().any(|w| w == "g") {
        0
    } else {
        base.worlds().len() - 1
    };
    let (_, relation) = variant_frame(v, n);
    Ok(base.with_relation(relation))
}
