use knotline_core::arith::{
    is_jumping_over_first, star, star_all, times, Assignment, KnotExpr, PrimeKnot, Table,
};
use proptest::prelude::*;
use std::sync::OnceLock;

fn prime() -> impl Strategy<Value = KnotExpr> {
    (3u32..9, 1u32..4).prop_map(|(c, i)| KnotExpr::Prime(PrimeKnot::new(c, i).unwrap()))
}

fn expr() -> impl Strategy<Value = KnotExpr> {
    prime().prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| star(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| times(a, b)),
        ]
    })
}

fn assignment() -> &'static Assignment {
    static TABLE: OnceLock<Table> = OnceLock::new();
    &TABLE
        .get_or_init(|| Table::build_to(32).unwrap())
        .assignment
}

/// Prime knots with their numbers from the table through 32.
fn assigned_prime() -> impl Strategy<Value = (KnotExpr, u64)> {
    let primes: Vec<(KnotExpr, u64)> = assignment()
        .primes()
        .into_iter()
        .map(|(p, k)| (KnotExpr::Prime(k), p))
        .collect();
    proptest::sample::select(primes)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn star_and_times_commute(a in expr(), b in expr()) {
        prop_assert_eq!(star(a.clone(), b.clone()), star(b.clone(), a.clone()));
        prop_assert_eq!(times(a.clone(), b.clone()), times(b, a));
    }

    #[test]
    fn star_and_times_associate(a in expr(), b in expr(), c in expr()) {
        prop_assert_eq!(
            star(star(a.clone(), b.clone()), c.clone()),
            star(a.clone(), star(b.clone(), c.clone()))
        );
        prop_assert_eq!(times(times(a.clone(), b.clone()), c.clone()), times(a, times(b, c)));
    }

    #[test]
    fn canonical_text_round_trips(a in expr()) {
        let back: KnotExpr = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn shuffled_operands_share_a_canonical_form(items in prop::collection::vec(expr(), 1..6), seed in any::<u64>()) {
        let mut shuffled = items.clone();
        let n = shuffled.len();
        shuffled.rotate_left((seed as usize) % n);
        shuffled.reverse();
        prop_assert_eq!(star_all(items), star_all(shuffled));
    }
}

proptest! {
    #[test]
    fn related_number_is_multiplicative(
        xs in prop::collection::vec(assigned_prime(), 1..4),
        ys in prop::collection::vec(assigned_prime(), 1..4),
    ) {
        let a = assignment();
        let x = star_all(xs.iter().map(|(k, _)| k.clone()));
        let y = star_all(ys.iter().map(|(k, _)| k.clone()));
        let rx = a.related_number(&x).unwrap();
        let ry = a.related_number(&y).unwrap();
        prop_assert_eq!(rx, xs.iter().map(|(_, p)| p).product::<u64>());
        prop_assert_eq!(a.related_number(&star(x, y)).unwrap(), rx * ry);
    }
}

#[test]
fn unknot_is_the_identity_for_both_sums() {
    let k: KnotExpr = "5_2".parse().unwrap();
    assert_eq!(star(k.clone(), KnotExpr::unknot()), k);
    assert_eq!(times(k.clone(), KnotExpr::unknot()), k);
}

/// Exhaustive split oracle: every sub-multiset of factors, written with
/// bitmasks over factor slots rather than grouped counts.
fn oracle_first_kind(factors: &[(KnotExpr, u64)], n: u32) -> bool {
    let trefoil = KnotExpr::trefoil();
    let len = factors.len();
    if len < 2 {
        return false;
    }
    (1u32..(1 << len) - 1).any(|mask| {
        let (left, right): (Vec<_>, Vec<_>) = (0..len).partition(|i| mask & (1 << i) != 0);
        let bare_trefoil = |side: &[usize]| side.len() == 1 && factors[side[0]].0 == trefoil;
        if bare_trefoil(&left) || bare_trefoil(&right) {
            return false;
        }
        let p: u64 = left.iter().map(|&i| factors[i].1).product();
        let q: u64 = right.iter().map(|&i| factors[i].1).product();
        if p * q >= 1 << n {
            return false;
        }
        (2..=n.saturating_sub(2)).all(|n0| {
            let (a, b) = (1u64 << n0, 1u64 << (n - n0));
            (a < p && b > q) || (a > p && b < q)
        })
    })
}

/// All multisets of indivisible factors with product below `bound`.
fn multisets(atoms: &[(KnotExpr, u64)], bound: u64) -> Vec<Vec<(KnotExpr, u64)>> {
    fn go(
        atoms: &[(KnotExpr, u64)],
        start: usize,
        prod: u64,
        bound: u64,
        cur: &mut Vec<(KnotExpr, u64)>,
        out: &mut Vec<Vec<(KnotExpr, u64)>>,
    ) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for i in start..atoms.len() {
            let next = prod * atoms[i].1;
            if next < bound {
                cur.push(atoms[i].clone());
                go(atoms, i, next, bound, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(atoms, 0, 1, bound, &mut Vec::new(), &mut out);
    out
}

#[test]
fn first_kind_matches_the_exhaustive_oracle() {
    let table = Table::build_to(32).unwrap();
    let a = &table.assignment;
    let mut atoms: Vec<(KnotExpr, u64)> = a
        .primes()
        .into_iter()
        .map(|(p, k)| (KnotExpr::Prime(k), p))
        .collect();
    atoms.extend(
        a.iter()
            .filter(|(_, k)| matches!(k, KnotExpr::Times(_)))
            .map(|(p, k)| (k.clone(), p)),
    );
    let cases = multisets(&atoms, 1 << 7);
    assert!(cases.len() > 50);
    for factors in &cases {
        let e = star_all(factors.iter().map(|(k, _)| k.clone()));
        for n in 2..=7 {
            let got = is_jumping_over_first(&e, n, a).unwrap().is_some();
            assert_eq!(got, oracle_first_kind(factors, n), "{e} at n = {n}");
        }
    }
}
