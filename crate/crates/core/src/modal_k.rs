//! Validity in the modal logic K.
//!
//! [`is_valid_k`] runs a destructive tableau on the negation normal form of
//! `¬f`: the propositional part of a world is saturated (branching on `∨`),
//! then every `◇φ` gets its own successor holding `φ` and all `□`-contents.
//! Each successor has strictly smaller modal depth, so the search terminates.
//! An open branch is read off as a tree model rooted at `*`.
//!
//! [`is_valid_k_depth1`] is an independent semantic check for formulas of
//! modal depth at most one. Such a formula's truth at a world depends only on
//! the world's own valuation and on the set of valuations of its successors,
//! so enumerating every pair (root valuation, set of successor valuations) is
//! exhaustive.

use std::collections::{BTreeMap, BTreeSet};
use std::rc::Rc;

use serde::Serialize;
use thiserror::Error;

use crate::kripke::{KripkeModel, STAR};
use crate::syntax::ModalFormula;
use crate::translate::modal_depth;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    /// Present iff not valid; falsifies the formula at its star world.
    pub countermodel: Option<KripkeModel>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("modal depth {0} exceeds 1")]
    DepthExceeded(usize),
    #[error("{0} variables exceed the oracle limit of {MAX_ORACLE_VARS}")]
    TooManyVariables(usize),
}

/// Largest variable count the depth-1 oracle accepts (2^4 · 2^16 configurations).
pub const MAX_ORACLE_VARS: usize = 4;

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Nnf {
    Lit(bool, Rc<str>),
    And(Rc<Nnf>, Rc<Nnf>),
    Or(Rc<Nnf>, Rc<Nnf>),
    Box(Rc<Nnf>),
    Dia(Rc<Nnf>),
}

fn nnf(f: &ModalFormula, positive: bool) -> Rc<Nnf> {
    Rc::new(match f {
        ModalFormula::Var(v) => Nnf::Lit(positive, Rc::from(v.as_str())),
        ModalFormula::Not(inner) => return nnf(inner, !positive),
        ModalFormula::Or(l, r) if positive => Nnf::Or(nnf(l, true), nnf(r, true)),
        ModalFormula::Or(l, r) => Nnf::And(nnf(l, false), nnf(r, false)),
        ModalFormula::Box(inner) if positive => Nnf::Box(nnf(inner, true)),
        ModalFormula::Box(inner) => Nnf::Dia(nnf(inner, false)),
    })
}

/// A world of an open branch: its true variables and its successors.
struct Node {
    truths: BTreeSet<Rc<str>>,
    children: Vec<Node>,
}

#[derive(Clone, Default)]
struct Branch {
    pos: BTreeSet<Rc<str>>,
    neg: BTreeSet<Rc<str>>,
    boxes: BTreeSet<Rc<Nnf>>,
    dias: BTreeSet<Rc<Nnf>>,
}

fn satisfy(formulas: Vec<Rc<Nnf>>) -> Option<Node> {
    expand(formulas, Branch::default())
}

fn expand(mut todo: Vec<Rc<Nnf>>, mut branch: Branch) -> Option<Node> {
    while let Some(f) = todo.pop() {
        match &*f {
            Nnf::Lit(true, v) => {
                if branch.neg.contains(v) {
                    return None;
                }
                branch.pos.insert(v.clone());
            }
            Nnf::Lit(false, v) => {
                if branch.pos.contains(v) {
                    return None;
                }
                branch.neg.insert(v.clone());
            }
            Nnf::And(l, r) => {
                todo.push(r.clone());
                todo.push(l.clone());
            }
            Nnf::Or(l, r) => {
                for side in [l, r] {
                    let mut next = todo.clone();
                    next.push(side.clone());
                    if let Some(node) = expand(next, branch.clone()) {
                        return Some(node);
                    }
                }
                return None;
            }
            Nnf::Box(inner) => {
                branch.boxes.insert(inner.clone());
            }
            Nnf::Dia(inner) => {
                branch.dias.insert(inner.clone());
            }
        }
    }
    let mut children = Vec::with_capacity(branch.dias.len());
    for d in &branch.dias {
        let mut successor = vec![d.clone()];
        successor.extend(branch.boxes.iter().cloned());
        children.push(satisfy(successor)?);
    }
    Some(Node {
        truths: branch.pos,
        children,
    })
}

fn tree_model(root: &Node, vars: &BTreeSet<String>) -> KripkeModel {
    fn walk(
        node: &Node,
        id: String,
        next: &mut usize,
        worlds: &mut Vec<(String, BTreeSet<Rc<str>>)>,
        relation: &mut Vec<(String, String)>,
    ) {
        worlds.push((id.clone(), node.truths.clone()));
        for child in &node.children {
            *next += 1;
            let child_id = format!("w{next}");
            relation.push((id.clone(), child_id.clone()));
            walk(child, child_id, next, worlds, relation);
        }
    }
    let mut worlds = Vec::new();
    let mut relation = Vec::new();
    walk(root, STAR.to_string(), &mut 0, &mut worlds, &mut relation);

    let valuation = vars
        .iter()
        .map(|v| {
            let row = worlds
                .iter()
                .map(|(w, truths)| (w.clone(), truths.contains(v.as_str())))
                .collect();
            (v.clone(), row)
        })
        .collect();
    let ids = worlds.into_iter().map(|(w, _)| w).collect();
    KripkeModel::new(ids, STAR, relation, valuation).expect("tableau model is well formed")
}

/// Decides K-validity with the tableau; invalid verdicts carry a tree countermodel.
pub fn is_valid_k(f: &ModalFormula) -> Verdict {
    match satisfy(vec![nnf(f, false)]) {
        None => Verdict {
            valid: true,
            countermodel: None,
        },
        Some(root) => Verdict {
            valid: false,
            countermodel: Some(tree_model(&root, &f.vars())),
        },
    }
}

fn eval_depth1(
    f: &ModalFormula,
    index: &BTreeMap<String, usize>,
    world: u32,
    succs: &[u32],
) -> bool {
    match f {
        ModalFormula::Var(v) => world >> index[v] & 1 == 1,
        ModalFormula::Not(inner) => !eval_depth1(inner, index, world, succs),
        ModalFormula::Or(l, r) => {
            eval_depth1(l, index, world, succs) || eval_depth1(r, index, world, succs)
        }
        ModalFormula::Box(inner) => succs.iter().all(|s| eval_depth1(inner, index, *s, &[])),
    }
}

/// Decides K-validity of a depth-1 formula by enumerating every root
/// valuation together with every set of successor valuations.
pub fn is_valid_k_depth1(f: &ModalFormula) -> Result<Verdict, OracleError> {
    let depth = modal_depth(f);
    if depth > 1 {
        return Err(OracleError::DepthExceeded(depth));
    }
    let vars = f.vars();
    if vars.len() > MAX_ORACLE_VARS {
        return Err(OracleError::TooManyVariables(vars.len()));
    }
    let index: BTreeMap<String, usize> = vars.iter().cloned().zip(0..).collect();
    let valuations = 1u32 << vars.len();

    for sigma in 0..valuations {
        for set in 0u64..(1u64 << valuations) {
            let succs: Vec<u32> = (0..valuations).filter(|v| set >> v & 1 == 1).collect();
            if !eval_depth1(f, &index, sigma, &succs) {
                return Ok(Verdict {
                    valid: false,
                    countermodel: Some(star_model(&index, sigma, &succs)),
                });
            }
        }
    }
    Ok(Verdict {
        valid: true,
        countermodel: None,
    })
}

fn star_model(index: &BTreeMap<String, usize>, sigma: u32, succs: &[u32]) -> KripkeModel {
    let mut worlds = vec![(STAR.to_string(), sigma)];
    worlds.extend(
        succs
            .iter()
            .enumerate()
            .map(|(i, s)| (format!("s{}", i + 1), *s)),
    );
    let relation = worlds[1..]
        .iter()
        .map(|(w, _)| (STAR.to_string(), w.clone()));
    let valuation = index
        .iter()
        .map(|(v, i)| {
            let row = worlds
                .iter()
                .map(|(w, bits)| (w.clone(), bits >> i & 1 == 1))
                .collect();
            (v.clone(), row)
        })
        .collect();
    let ids = worlds.iter().map(|(w, _)| w.clone()).collect();
    KripkeModel::new(ids, STAR, relation, valuation).expect("oracle model is well formed")
}
