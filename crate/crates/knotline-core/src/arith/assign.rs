//! Knot↔integer assignments, related numbers and the jumping-over predicates.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::expr::{star_all, KnotExpr, PrimeKnot};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("factor {0} of the expression has no assigned number")]
    Unassigned(KnotExpr),
}

/// The induction step holding `x`: the least `n ≥ 1` with `x ≤ 2^n`.
pub fn step_of(x: u64) -> u32 {
    if x <= 2 {
        1
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Positions `2^{n-1}+1 ..= 2^n` of step `n ≥ 2`.
pub fn rooms(n: u32) -> core::ops::RangeInclusive<u64> {
    (1u64 << (n - 1)) + 1..=1u64 << n
}

/// Positions filled so far, with the numbers of prime knots and `×` knots.
///
/// The trefoil sits at position 1 and is related to the number 2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    by_position: BTreeMap<u64, KnotExpr>,
    by_knot: BTreeMap<KnotExpr, u64>,
}

impl Assignment {
    /// The initial data: `3_1` at position 1, position 2 reserved.
    pub fn initial() -> Assignment {
        let mut a = Assignment::default();
        a.insert(1, KnotExpr::trefoil());
        a
    }

    pub fn insert(&mut self, position: u64, knot: KnotExpr) {
        if let Some(old) = self.by_position.insert(position, knot.clone()) {
            self.by_knot.remove(&old);
        }
        self.by_knot.insert(knot, position);
    }

    pub fn get(&self, position: u64) -> Option<&KnotExpr> {
        self.by_position.get(&position)
    }

    pub fn position_of(&self, knot: &KnotExpr) -> Option<u64> {
        self.by_knot.get(knot).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &KnotExpr)> {
        self.by_position.iter().map(|(p, k)| (*p, k))
    }

    /// Highest position filled.
    pub fn max_position(&self) -> u64 {
        self.by_position.keys().next_back().copied().unwrap_or(0)
    }

    /// Number standing for an indivisible factor: 2 for the trefoil, the
    /// assigned position for other prime knots and for `×` knots.
    pub fn factor_number(&self, factor: &KnotExpr) -> Result<u64, ArithError> {
        match factor {
            KnotExpr::Prime(p) if *p == PrimeKnot::TREFOIL => Ok(2),
            KnotExpr::Star(_) => self.related_number(factor),
            other => self
                .position_of(other)
                .ok_or_else(|| ArithError::Unassigned(other.clone())),
        }
    }

    /// Product of the factor numbers over the `⋆` factorization.
    pub fn related_number(&self, e: &KnotExpr) -> Result<u64, ArithError> {
        match e {
            KnotExpr::Star(v) => v
                .iter()
                .try_fold(1u64, |acc, f| Ok(acc * self.factor_number(f)?)),
            other => self.factor_number(other),
        }
    }

    /// Prime numbers assigned to prime knots, with 2 for the trefoil.
    pub fn primes(&self) -> Vec<(u64, PrimeKnot)> {
        let mut out: Vec<(u64, PrimeKnot)> = self
            .by_position
            .iter()
            .filter_map(|(pos, k)| match k {
                KnotExpr::Prime(p) if *p == PrimeKnot::TREFOIL => Some((2, *p)),
                KnotExpr::Prime(p) => Some((*pos, *p)),
                _ => None,
            })
            .collect();
        out.sort();
        out
    }

    /// The prime knot assigned to the prime number `p`.
    pub fn prime_knot(&self, p: u64) -> Option<PrimeKnot> {
        self.primes()
            .into_iter()
            .find(|(q, _)| *q == p)
            .map(|(_, k)| k)
    }

    /// Prime knots assigned within step `k`, by number.
    pub fn primes_in_step(&self, k: u32) -> Vec<(u64, PrimeKnot)> {
        self.primes()
            .into_iter()
            .filter(|(p, _)| step_of(*p) == k)
            .collect()
    }

    /// `⋆` product of assigned prime knots whose numbers multiply to `x`, if
    /// every prime factor of `x` is assigned.
    pub fn knot_for_number(&self, x: u64) -> Option<KnotExpr> {
        let mut rest = x;
        let mut factors = Vec::new();
        for (p, knot) in self.primes() {
            while rest.is_multiple_of(p) {
                rest /= p;
                factors.push(KnotExpr::Prime(knot));
            }
        }
        (rest == 1 && x > 1).then(|| star_all(factors))
    }
}

/// A split `e = K2 ⋆ K3` with related numbers `p` and `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub left: KnotExpr,
    pub right: KnotExpr,
    pub p: u64,
    pub q: u64,
}

/// All ordered splits of the `⋆` factors into two non-empty parts, neither
/// being the bare trefoil.
fn splits(e: &KnotExpr, a: &Assignment) -> Result<Vec<Split>, ArithError> {
    let mut groups: Vec<(KnotExpr, usize)> = Vec::new();
    for f in e.star_factors() {
        match groups.last_mut() {
            Some((g, c)) if g == f => *c += 1,
            _ => groups.push((f.clone(), 1)),
        }
    }
    let mut out = Vec::new();
    let mut take = alloc::vec![0usize; groups.len()];
    loop {
        let mut i = 0;
        while i < groups.len() && take[i] == groups[i].1 {
            take[i] = 0;
            i += 1;
        }
        if i == groups.len() {
            break;
        }
        take[i] += 1;
        let pick = |left: bool| {
            star_all(groups.iter().zip(&take).flat_map(|((g, c), t)| {
                let n = if left { *t } else { c - t };
                core::iter::repeat_n(g.clone(), n)
            }))
        };
        let (left, right) = (pick(true), pick(false));
        if left.is_unknot() || right.is_unknot() {
            continue;
        }
        if left == KnotExpr::trefoil() || right == KnotExpr::trefoil() {
            continue;
        }
        let p = a.related_number(&left)?;
        let q = a.related_number(&right)?;
        out.push(Split { left, right, p, q });
    }
    Ok(out)
}

fn separates(split: &Split, n: u32) -> bool {
    let total = 1u64 << n;
    if split.p.saturating_mul(split.q) >= total {
        return false;
    }
    (2..=n.saturating_sub(2)).all(|n0| {
        let (a, b) = (1u64 << n0, 1u64 << (n - n0));
        (a < split.p && b > split.q) || (a > split.p && b < split.q)
    })
}

/// Whether `e` jumps over `3_1^n` in the first sense; returns the first
/// witnessing split in enumeration order.
pub fn is_jumping_over_first(
    e: &KnotExpr,
    n: u32,
    a: &Assignment,
) -> Result<Option<Split>, ArithError> {
    if e.star_factors().len() < 2 || n < 2 {
        return Ok(None);
    }
    Ok(splits(e, a)?.into_iter().find(|s| separates(s, n)))
}

/// Whether `e` jumps over `3_1^n` in the general sense: either in the first
/// sense, or after replacing every occurrence of one prime factor by the
/// largest prime of that prime's step, keeping the related number in the
/// same step.
pub fn is_jumping_over_general(e: &KnotExpr, n: u32, a: &Assignment) -> Result<bool, ArithError> {
    if is_jumping_over_first(e, n, a)?.is_some() {
        return Ok(true);
    }
    let rel = a.related_number(e)?;
    let mut seen = Vec::new();
    for f in e.star_factors() {
        let KnotExpr::Prime(p) = f else { continue };
        if seen.contains(p) {
            continue;
        }
        seen.push(*p);
        let num = a.factor_number(f)?;
        let Some(&(q, qknot)) = a.primes_in_step(step_of(num)).last() else {
            continue;
        };
        if q == num {
            continue;
        }
        let swapped = star_all(e.star_factors().iter().map(|g| match g {
            KnotExpr::Prime(x) if x == p => KnotExpr::Prime(qknot),
            other => other.clone(),
        }));
        let swapped_rel = a.related_number(&swapped)?;
        if step_of(swapped_rel) == step_of(rel) && is_jumping_over_first(&swapped, n, a)?.is_some()
        {
            return Ok(true);
        }
    }
    Ok(false)
}
