//! Bounded best-first reduction to `Tr R^{-m} W(z,z)`.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::expr::{Factor, NormalForm, WilsonExpr};
use super::rules::{RuleId, Site};
use super::script::{Derivation, Step};
use crate::diagram::KnotDiagram;

/// Search limits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of expanded words.
    pub expansions: usize,
    /// Words may grow at most this many factors beyond the start.
    pub extra_len: usize,
    /// Bound on the sum of absolute monodromy exponents.
    pub power_bound: i64,
    /// Maximum number of factors in each commuted block.
    pub block: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            expansions: 100_000,
            extra_len: 4,
            power_bound: 6,
            block: 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("the starting word is not traced")]
    NotTraced,
    #[error("search budget exhausted after {expansions} expansions")]
    BudgetExhausted { expansions: usize },
}

/// Outcome of a successful search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Found {
    pub word: WilsonExpr,
    pub derivation: Derivation,
    pub expansions: usize,
}

fn mono_weight(e: &WilsonExpr) -> i64 {
    e.factors()
        .iter()
        .map(|f| match f {
            Factor::Mono(k) => k.abs(),
            Factor::Line(_) => 0,
        })
        .sum()
}

fn canonical(e: &WilsonExpr) -> (u32, Vec<Factor>) {
    let f = e.factors();
    let best = (0..f.len().max(1))
        .map(|r| {
            let mut v = f.to_vec();
            if !v.is_empty() {
                v.rotate_left(r);
            }
            v
        })
        .min()
        .unwrap_or_default();
    (e.base, best)
}

/// All single-rule successors of `e` in left-to-right site order; sites that
/// wrap around the word are reached through a leading `Cyclic` step.
pub fn successors(e: &WilsonExpr, budget: &Budget) -> Vec<(Vec<Step>, WilsonExpr)> {
    let n = e.len();
    let mut out = Vec::new();
    for r in 0..n {
        let (prefix, view) = if r == 0 {
            (None, e.clone())
        } else {
            let step = Step::new(RuleId::Cyclic, Site::at(r), &[]);
            (Some(step), e.rotated(r))
        };
        let mut push = |rule: RuleId, site: Site, params: &[i64]| {
            if let Ok(next) = view.apply_rule(rule, site, params) {
                let mut steps = Vec::with_capacity(2);
                steps.extend(prefix.clone());
                steps.push(Step::new(rule, site, params));
                out.push((steps, next));
            }
        };
        let f = view.factors();
        if n >= 2 {
            push(RuleId::Merge, Site::new(0, 1), &[]);
        }
        if let Factor::Line(l) = f[0] {
            for k in 1..l.len {
                if view.traversal().partner((l.start + k) as usize).is_some() {
                    push(RuleId::Split, Site::at(0), &[k as i64]);
                }
            }
        }
        for kx in 1..=budget.block {
            for ky in 1..=budget.block {
                if kx + ky <= n {
                    push(
                        RuleId::BraidCommute,
                        Site::new(0, kx + ky - 1),
                        &[kx as i64],
                    );
                }
            }
        }
        if n >= 4 {
            push(RuleId::UpCross, Site::new(0, 3), &[]);
            push(RuleId::UnderCross, Site::new(0, 3), &[]);
        }
        if let (Some(w), true) = (e.winding(), n >= 3) {
            push(RuleId::WindingPower, Site::new(0, 2), &[w]);
        }
    }
    out
}

struct Node {
    word: WilsonExpr,
    parent: usize,
    steps: Vec<Step>,
}

/// Generic best-first search over rule applications.
///
/// Expansion order is `key` ascending, then insertion order; successors are
/// generated in left-to-right site order, so results are deterministic.
pub fn best_first<K: Ord>(
    start: &WilsonExpr,
    budget: &Budget,
    goal: impl Fn(&WilsonExpr) -> bool,
    key: impl Fn(&WilsonExpr) -> K,
) -> Result<Found, ReduceError> {
    if !start.is_traced() {
        return Err(ReduceError::NotTraced);
    }
    let max_len = start.len() + budget.extra_len;
    let mut nodes = alloc::vec![Node {
        word: start.clone(),
        parent: usize::MAX,
        steps: Vec::new(),
    }];
    let mut seen = BTreeSet::new();
    seen.insert(canonical(start));
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((key(start), 0usize)));
    let mut expansions = 0;
    while let Some(Reverse((_, idx))) = heap.pop() {
        if goal(&nodes[idx].word) {
            let mut steps = Vec::new();
            let mut at = idx;
            while at != 0 {
                steps.extend(nodes[at].steps.iter().rev().cloned());
                at = nodes[at].parent;
            }
            steps.reverse();
            return Ok(Found {
                word: nodes[idx].word.clone(),
                derivation: Derivation { steps },
                expansions,
            });
        }
        if expansions == budget.expansions {
            break;
        }
        expansions += 1;
        for (steps, next) in successors(&nodes[idx].word, budget) {
            if next.len() > max_len || mono_weight(&next) > budget.power_bound {
                continue;
            }
            if seen.insert(canonical(&next)) {
                heap.push(Reverse((key(&next), nodes.len())));
                nodes.push(Node {
                    word: next,
                    parent: idx,
                    steps,
                });
            }
        }
    }
    Err(ReduceError::BudgetExhausted { expansions })
}

/// Searches for a normal form, preferring small monodromy weight, then short
/// words, then few power factors.
pub fn reduce(e: &WilsonExpr, budget: &Budget) -> Result<(NormalForm, Derivation), ReduceError> {
    let found = best_first(
        e,
        budget,
        |w| w.normal_form().is_some(),
        |w| {
            let monos = w
                .factors()
                .iter()
                .filter(|f| matches!(f, Factor::Mono(_)))
                .count();
            (w.total_power().abs(), w.len(), monos)
        },
    )?;
    let nf = found.word.normal_form().expect("goal reached");
    Ok((nf, found.derivation))
}

/// The invariant exponent of a diagram under the reducer.
pub fn invariant_m(d: &KnotDiagram, budget: &Budget) -> Result<i64, ReduceError> {
    reduce(&super::encode_wilson(d), budget).map(|(nf, _)| nf.m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_diagram;
    use crate::diagram::tests::CURL;
    use crate::wilson::{check_derivation, encode_wilson};

    #[test]
    fn unknot_is_already_normal() {
        let d = parse_diagram("knot u base z1\n").unwrap();
        let (nf, der) = reduce(&encode_wilson(&d), &Budget::default()).unwrap();
        assert_eq!(nf.m, 0);
        assert!(der.is_empty());
    }

    #[test]
    fn curl_reduces_with_checked_witness() {
        let e = encode_wilson(&parse_diagram(CURL).unwrap());
        let (nf, der) = reduce(&e, &Budget::default()).unwrap();
        assert_eq!(nf.m, 0);
        assert_eq!(check_derivation(&e, &der).unwrap(), nf);
    }

    #[test]
    fn exhausted_budget_is_reported() {
        let e = encode_wilson(&parse_diagram(CURL).unwrap());
        let tiny = Budget {
            expansions: 0,
            ..Budget::default()
        };
        assert_eq!(
            reduce(&e, &tiny),
            Err(ReduceError::BudgetExhausted { expansions: 0 })
        );
    }
}
