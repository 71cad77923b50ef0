//! Finite pointed Kripke models and the forcing relation.

mod countermodel;
mod frames;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::ModalFormula;

pub use countermodel::{countermodel_k, countermodel_variant, CountermodelError};
pub use frames::{
    audit_variant, frame_properties, DeonticSystem, FrameAudit, FrameCondition, FrameProperties,
    FrameVariant,
};

pub const STAR: &str = "*";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown world {0:?}")]
    UnknownWorld(String),
    #[error("variable {0:?} is not declared in the model")]
    UndeclaredVariable(String),
    #[error("malformed model: {0}")]
    Malformed(String),
}

/// A finite pointed Kripke model.
///
/// The valuation is total on (declared variable × world). On disk the model
/// uses the `model.json` layout, with truth values written as `0`/`1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ModelFile", into = "ModelFile")]
pub struct KripkeModel {
    worlds: Vec<String>,
    star: String,
    relation: BTreeSet<(String, String)>,
    valuation: BTreeMap<String, BTreeMap<String, bool>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ModelFile {
    worlds: Vec<String>,
    star: String,
    relation: Vec<(String, String)>,
    valuation: BTreeMap<String, BTreeMap<String, u8>>,
}

impl TryFrom<ModelFile> for KripkeModel {
    type Error = ModelError;

    fn try_from(file: ModelFile) -> Result<Self, ModelError> {
        let mut valuation = BTreeMap::new();
        for (var, row) in file.valuation {
            let mut bits = BTreeMap::new();
            for (world, bit) in row {
                let value = match bit {
                    0 => false,
                    1 => true,
                    other => {
                        return Err(ModelError::Malformed(format!(
                            "value {other} for {var} at {world} is not 0 or 1"
                        )))
                    }
                };
                bits.insert(world, value);
            }
            valuation.insert(var, bits);
        }
        KripkeModel::new(file.worlds, file.star, file.relation, valuation)
    }
}

impl From<KripkeModel> for ModelFile {
    fn from(m: KripkeModel) -> Self {
        ModelFile {
            worlds: m.worlds,
            star: m.star,
            relation: m.relation.into_iter().collect(),
            valuation: m
                .valuation
                .into_iter()
                .map(|(var, row)| {
                    (
                        var,
                        row.into_iter().map(|(w, b)| (w, u8::from(b))).collect(),
                    )
                })
                .collect(),
        }
    }
}

impl KripkeModel {
    /// Validates and builds a model.
    pub fn new(
        worlds: Vec<String>,
        star: impl Into<String>,
        relation: impl IntoIterator<Item = (String, String)>,
        valuation: BTreeMap<String, BTreeMap<String, bool>>,
    ) -> Result<Self, ModelError> {
        let star = star.into();
        let known: BTreeSet<&String> = worlds.iter().collect();
        if worlds.is_empty() {
            return Err(ModelError::Malformed("no worlds".into()));
        }
        if known.len() != worlds.len() {
            return Err(ModelError::Malformed("duplicate world ids".into()));
        }
        if !known.contains(&star) {
            return Err(ModelError::UnknownWorld(star));
        }
        let relation: BTreeSet<(String, String)> = relation.into_iter().collect();
        for (x, y) in &relation {
            for w in [x, y] {
                if !known.contains(w) {
                    return Err(ModelError::UnknownWorld(w.clone()));
                }
            }
        }
        for (var, row) in &valuation {
            if let Some(w) = row.keys().find(|w| !known.contains(w)) {
                return Err(ModelError::UnknownWorld(w.clone()));
            }
            if let Some(w) = worlds.iter().find(|w| !row.contains_key(*w)) {
                return Err(ModelError::Malformed(format!(
                    "{var} has no value at world {w}"
                )));
            }
        }
        Ok(KripkeModel {
            worlds,
            star,
            relation,
            valuation,
        })
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn star(&self) -> &str {
        &self.star
    }

    pub fn relation(&self) -> &BTreeSet<(String, String)> {
        &self.relation
    }

    pub fn variables(&self) -> impl Iterator<Item = &String> {
        self.valuation.keys()
    }

    pub fn value(&self, var: &str, world: &str) -> Option<bool> {
        self.valuation.get(var)?.get(world).copied()
    }

    pub fn successors<'a>(&'a self, world: &'a str) -> impl Iterator<Item = &'a str> {
        self.relation
            .iter()
            .filter(move |(x, _)| x == world)
            .map(|(_, y)| y.as_str())
    }

    /// Same worlds and valuation, different accessibility relation.
    pub(crate) fn with_relation(&self, relation: BTreeSet<(String, String)>) -> Self {
        KripkeModel {
            relation,
            ..self.clone()
        }
    }
}

/// Whether `f` holds at world `w` of `m`.
pub fn forces(m: &KripkeModel, w: &str, f: &ModalFormula) -> Result<bool, ModelError> {
    if !m.worlds.iter().any(|x| x == w) {
        return Err(ModelError::UnknownWorld(w.to_string()));
    }
    if let Some(v) = f.vars().into_iter().find(|v| !m.valuation.contains_key(v)) {
        return Err(ModelError::UndeclaredVariable(v));
    }
    Ok(eval(m, w, f))
}

fn eval(m: &KripkeModel, w: &str, f: &ModalFormula) -> bool {
    match f {
        ModalFormula::Var(v) => m.valuation[v][w],
        ModalFormula::Not(inner) => !eval(m, w, inner),
        ModalFormula::Or(l, r) => eval(m, w, l) || eval(m, w, r),
        ModalFormula::Box(inner) => m.successors(w).all(|s| eval(m, s, inner)),
    }
}

/// Whether `f` holds at the distinguished world.
pub fn forces_at_star(m: &KripkeModel, f: &ModalFormula) -> Result<bool, ModelError> {
    forces(m, &m.star, f)
}
