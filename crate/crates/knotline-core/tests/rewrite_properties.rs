mod common;

use common::all_diagrams;
use knotline_core::wilson::{encode_wilson, successors, Budget, RuleId, Site, WilsonExpr};
use knotline_core::{parse_diagram, KnotDiagram};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

/// Left endpoints and right endpoints form the same multiset.
fn endpoints_balance(w: &WilsonExpr) -> bool {
    let mut left: Vec<&str> = w.endpoints().iter().map(|e| e.0).collect();
    let mut right: Vec<&str> = w.endpoints().iter().map(|e| e.1).collect();
    left.sort_unstable();
    right.sort_unstable();
    left == right
}

/// Tries a random rule at a random site, falling back to a random reducer
/// successor; returns the rule used and the new word.
fn random_step(w: &WilsonExpr, rng: &mut StdRng, budget: &Budget) -> Option<(RuleId, WilsonExpr)> {
    let n = w.len();
    for _ in 0..20 {
        let rule = RuleId::ALL[rng.random_range(0..RuleId::ALL.len())];
        let from = rng.random_range(0..n);
        let to = (from + rng.random_range(0..4)).min(n - 1);
        let params = [rng.random_range(-2i64..5)];
        if let Ok(next) = w.apply_rule(rule, Site::new(from, to), &params) {
            return Some((rule, next));
        }
    }
    let succ = successors(w, budget);
    if succ.is_empty() {
        return None;
    }
    let (steps, next) = &succ[rng.random_range(0..succ.len())];
    Some((steps.last().expect("non-empty").rule, next.clone()))
}

#[test]
fn random_legal_rewrites_preserve_closure() {
    const TARGET: usize = 10_000;
    let mut rng = StdRng::seed_from_u64(0x6b6e6f74);
    let budget = Budget::default();
    let starts: Vec<WilsonExpr> = all_diagrams()
        .into_iter()
        .filter(|(_, d)| !d.crossings().is_empty())
        .map(|(_, d)| encode_wilson(&d))
        .collect();
    let mut applied = 0;
    let mut by_rule = [0usize; 8];
    'walks: while applied < TARGET {
        let mut w = starts[rng.random_range(0..starts.len())].clone();
        for _ in 0..60 {
            let Some((rule, next)) = random_step(&w, &mut rng, &budget) else {
                continue 'walks;
            };
            assert!(
                next.tiles_circle(),
                "{rule} broke the tiling: {w} -> {next}"
            );
            assert!(endpoints_balance(&next), "{rule} opened the word: {next}");
            assert_eq!(next.is_traced(), w.is_traced());
            if matches!(rule, RuleId::Merge | RuleId::Split | RuleId::Cyclic) {
                assert_eq!(
                    next.total_power(),
                    w.total_power(),
                    "{rule} changed the power"
                );
            }
            by_rule[RuleId::ALL.iter().position(|r| *r == rule).unwrap()] += 1;
            applied += 1;
            w = next;
        }
    }
    for (rule, count) in RuleId::ALL.iter().zip(by_rule) {
        if *rule != RuleId::WindingPower && *rule != RuleId::CollapseLoop {
            assert!(count > 0, "{rule} never applied");
        }
    }
}

fn corpus_diagram() -> impl Strategy<Value = KnotDiagram> {
    let ds: Vec<KnotDiagram> = all_diagrams().into_iter().map(|(_, d)| d).collect();
    proptest::sample::select(ds)
}

proptest! {
    #[test]
    fn diagram_text_round_trips(d in corpus_diagram(), k in 0usize..6) {
        let d = if d.crossings().is_empty() { d } else { d.rotate_basepoint(k % d.crossings().len()).unwrap() };
        let again = parse_diagram(&d.to_string()).unwrap();
        prop_assert_eq!(&again, &d);
        prop_assert_eq!(encode_wilson(&again).word(), encode_wilson(&d).word());
    }

    #[test]
    fn rotation_rotates_crossing_blocks(d in corpus_diagram(), k in 0usize..6) {
        prop_assume!(!d.crossings().is_empty());
        let k = k % d.crossings().len();
        let rotated = encode_wilson(&d.rotate_basepoint(k).unwrap());
        let shifted = encode_wilson(&d).rotated(4 * k);
        prop_assert_eq!(rotated.word(), shifted.word());
    }

    #[test]
    fn encodings_are_closed(d in corpus_diagram()) {
        let e = encode_wilson(&d);
        prop_assert!(e.tiles_circle());
        prop_assert!(endpoints_balance(&e));
    }
}
