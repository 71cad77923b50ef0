//! Formula corpora and the faithfulness round trip.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::modal_k::is_valid_k;
use crate::syntax::{L1Formula, NameVar};
use crate::tableau::is_provable_l1;
use crate::translate::blass;

/// The first `n` name variables `a, b, c, …` (at most 26).
pub fn names(n: usize) -> Vec<NameVar> {
    assert!(n <= 26, "at most 26 single-letter names");
    (b'a'..)
        .take(n)
        .map(|c| NameVar::new((c as char).to_string()).expect("letters are valid names"))
        .collect()
}

fn atoms(names: &[NameVar]) -> Vec<L1Formula> {
    names
        .iter()
        .flat_map(|a| {
            names
                .iter()
                .map(move |b| L1Formula::Eps(a.clone(), b.clone()))
        })
        .collect()
}

/// Every formula over `names` with at most `max_size` AST nodes, ordered by
/// size and then by the derived ordering.
pub fn enumerate_l1(names: &[NameVar], max_size: usize) -> Vec<L1Formula> {
    let mut by_size: Vec<Vec<L1Formula>> = vec![Vec::new(); max_size + 1];
    if max_size == 0 || names.is_empty() {
        return Vec::new();
    }
    by_size[1] = atoms(names);
    for size in 2..=max_size {
        let mut level: Vec<L1Formula> = by_size[size - 1]
            .iter()
            .cloned()
            .map(L1Formula::not)
            .collect();
        for left in 1..size - 1 {
            let right = size - 1 - left;
            for l in &by_size[left] {
                for r in &by_size[right] {
                    level.push(L1Formula::or(l.clone(), r.clone()));
                }
            }
        }
        level.sort();
        by_size[size] = level;
    }
    by_size.into_iter().flatten().collect()
}

/// A random formula over `names` whose size is drawn uniformly from `1..=max_size`.
pub fn random_l1(rng: &mut impl Rng, names: &[NameVar], max_size: usize) -> L1Formula {
    assert!(max_size >= 1 && !names.is_empty());
    let size = rng.gen_range(1..=max_size);
    random_of_size(rng, names, size)
}

fn random_of_size(rng: &mut impl Rng, names: &[NameVar], size: usize) -> L1Formula {
    match size {
        1 => {
            let a = &names[rng.gen_range(0..names.len())];
            let b = &names[rng.gen_range(0..names.len())];
            L1Formula::Eps(a.clone(), b.clone())
        }
        2 => L1Formula::not(random_of_size(rng, names, 1)),
        _ if rng.gen_bool(0.3) => L1Formula::not(random_of_size(rng, names, size - 1)),
        _ => {
            let left = rng.gen_range(1..size - 1);
            L1Formula::or(
                random_of_size(rng, names, left),
                random_of_size(rng, names, size - 1 - left),
            )
        }
    }
}

/// A formula where the L₁ tableau and the K tableau on its Blass image disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub formula: L1Formula,
    pub provable_l1: bool,
    pub valid_k: bool,
}

/// Checks `is_provable_l1(φ) = is_valid_k(blass(φ))` for every formula, in parallel.
pub fn faithfulness_mismatches(formulas: &[L1Formula]) -> Vec<Mismatch> {
    formulas
        .par_iter()
        .filter_map(|phi| {
            let provable_l1 = is_provable_l1(phi);
            let valid_k = is_valid_k(&blass(phi)).valid;
            (provable_l1 != valid_k).then(|| Mismatch {
                formula: phi.clone(),
                provable_l1,
                valid_k,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn counts() {
        // sizes 1..=3 over one name: 1 atom, 1 negation, 1 + 1 (¬¬ and ∨)
        assert_eq!(enumerate_l1(&names(1), 3).len(), 4);
        // four atoms: 4, 4, 4 + 16
        assert_eq!(enumerate_l1(&names(2), 3).len(), 28);
    }

    #[test]
    fn ordered_by_size() {
        let all = enumerate_l1(&names(2), 5);
        assert!(all
            .windows(2)
            .all(|w| w[0].size() < w[1].size() || (w[0].size() == w[1].size() && w[0] < w[1])));
    }

    #[test]
    fn random_respects_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let ns = names(3);
        for _ in 0..200 {
            let f = random_l1(&mut rng, &ns, 9);
            assert!(f.size() <= 9);
            assert!(f.name_vars().iter().all(|x| ns.contains(x)));
        }
    }

    #[test]
    fn small_round_trip() {
        assert!(faithfulness_mismatches(&enumerate_l1(&names(2), 4)).is_empty());
    }
}
