//! Knot expressions under the connected sums `⋆` and `×`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A prime knot symbol `c_i`: minimal crossing number `c`, table index `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeKnot {
    pub crossings: u32,
    pub index: u32,
}

impl PrimeKnot {
    pub const TREFOIL: PrimeKnot = PrimeKnot {
        crossings: 3,
        index: 1,
    };
    pub const FIGURE_EIGHT: PrimeKnot = PrimeKnot {
        crossings: 4,
        index: 1,
    };

    pub fn new(crossings: u32, index: u32) -> Option<PrimeKnot> {
        (crossings >= 3 && index >= 1).then_some(PrimeKnot { crossings, index })
    }
}

impl fmt::Display for PrimeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.crossings, self.index)
    }
}

/// Canonical knot expression.
///
/// `Star` and `Times` hold sorted operand lists of length at least two with
/// no operand of their own kind; the unknot is the empty `Star`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnotExpr {
    Prime(PrimeKnot),
    Times(Vec<KnotExpr>),
    Star(Vec<KnotExpr>),
}

impl From<PrimeKnot> for KnotExpr {
    fn from(p: PrimeKnot) -> Self {
        KnotExpr::Prime(p)
    }
}

impl KnotExpr {
    pub fn unknot() -> KnotExpr {
        KnotExpr::Star(Vec::new())
    }

    pub fn trefoil() -> KnotExpr {
        KnotExpr::Prime(PrimeKnot::TREFOIL)
    }

    pub fn is_unknot(&self) -> bool {
        matches!(self, KnotExpr::Star(v) if v.is_empty())
    }

    pub fn is_prime(&self) -> bool {
        matches!(self, KnotExpr::Prime(_))
    }

    /// `3_1 ⋆ … ⋆ 3_1` with `n` factors.
    pub fn trefoil_power(n: usize) -> KnotExpr {
        star_all(core::iter::repeat_n(KnotExpr::trefoil(), n))
    }

    /// Top-level `⋆` factors; a non-`Star` expression is its own single factor.
    pub fn star_factors(&self) -> &[KnotExpr] {
        match self {
            KnotExpr::Star(v) => v,
            other => core::slice::from_ref(other),
        }
    }

    /// Total alternating crossings: prime knots count their crossings,
    /// `⋆` subtracts two per join and `×` adds.
    pub fn alternating_crossings(&self) -> i64 {
        match self {
            KnotExpr::Prime(p) => p.crossings as i64,
            KnotExpr::Times(v) => v.iter().map(|k| k.alternating_crossings()).sum(),
            KnotExpr::Star(v) if v.is_empty() => 0,
            KnotExpr::Star(v) => {
                v.iter().map(|k| k.alternating_crossings()).sum::<i64>() - 2 * (v.len() as i64 - 1)
            }
        }
    }

    /// Whether any `×` occurs in the expression.
    pub fn has_times(&self) -> bool {
        match self {
            KnotExpr::Prime(_) => false,
            KnotExpr::Times(_) => true,
            KnotExpr::Star(v) => v.iter().any(KnotExpr::has_times),
        }
    }
}

fn combine(kind_is_star: bool, items: impl IntoIterator<Item = KnotExpr>) -> KnotExpr {
    let mut out = Vec::new();
    for k in items {
        match (kind_is_star, k) {
            (_, k) if k.is_unknot() => {}
            (true, KnotExpr::Star(v)) | (false, KnotExpr::Times(v)) => out.extend(v),
            (_, k) => out.push(k),
        }
    }
    out.sort();
    match out.len() {
        0 => KnotExpr::unknot(),
        1 => out.pop().expect("one element"),
        _ if kind_is_star => KnotExpr::Star(out),
        _ => KnotExpr::Times(out),
    }
}

/// Connected sum `a ⋆ b`.
pub fn star(a: KnotExpr, b: KnotExpr) -> KnotExpr {
    combine(true, [a, b])
}

/// Connected sum `a × b`.
pub fn times(a: KnotExpr, b: KnotExpr) -> KnotExpr {
    combine(false, [a, b])
}

pub fn star_all(items: impl IntoIterator<Item = KnotExpr>) -> KnotExpr {
    combine(true, items)
}

pub fn times_all(items: impl IntoIterator<Item = KnotExpr>) -> KnotExpr {
    combine(false, items)
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(f: &mut fmt::Formatter<'_>, k: &KnotExpr) -> fmt::Result {
            match k {
                KnotExpr::Prime(p) => write!(f, "{p}"),
                other => write!(f, "({other})"),
            }
        }
        let (items, sep) = match self {
            KnotExpr::Prime(p) => return write!(f, "{p}"),
            KnotExpr::Star(v) if v.is_empty() => return f.write_str("0_1"),
            KnotExpr::Star(v) => (v, '*'),
            KnotExpr::Times(v) => (v, 'x'),
        };
        for (i, k) in items.iter().enumerate() {
            if i > 0 {
                write!(f, "{sep}")?;
            }
            operand(f, k)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse knot expression at byte {at}: {message}")]
pub struct ExprError {
    pub at: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a [u8],
    at: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, message: &str) -> Result<T, ExprError> {
        Err(ExprError {
            at: self.at,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.at).is_some_and(u8::is_ascii_whitespace) {
            self.at += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.at) == Some(&c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u32, ExprError> {
        self.skip_ws();
        let start = self.at;
        while self.src.get(self.at).is_some_and(u8::is_ascii_digit) {
            self.at += 1;
        }
        core::str::from_utf8(&self.src[start..self.at])
            .ok()
            .and_then(|s| s.parse().ok())
            .map_or_else(|| self.fail("expected a number"), Ok)
    }

    // star := times ('*' times)*
    fn star(&mut self) -> Result<KnotExpr, ExprError> {
        let mut items = alloc::vec![self.times()?];
        while self.eat(b'*') {
            items.push(self.times()?);
        }
        Ok(star_all(items))
    }

    // times := atom ('x' atom)*
    fn times(&mut self) -> Result<KnotExpr, ExprError> {
        let mut items = alloc::vec![self.atom()?];
        while self.eat(b'x') {
            items.push(self.atom()?);
        }
        Ok(times_all(items))
    }

    fn atom(&mut self) -> Result<KnotExpr, ExprError> {
        if self.eat(b'(') {
            let inner = self.star()?;
            if !self.eat(b')') {
                return self.fail("expected `)`");
            }
            return Ok(inner);
        }
        let crossings = self.number()?;
        if !self.eat(b'_') {
            return self.fail("expected `_`");
        }
        let index = self.number()?;
        match (crossings, index) {
            (0, 1) => Ok(KnotExpr::unknot()),
            _ => PrimeKnot::new(crossings, index)
                .map(KnotExpr::Prime)
                .map_or_else(|| self.fail("not a prime knot symbol"), Ok),
        }
    }
}

impl FromStr for KnotExpr {
    type Err = ExprError;

    /// Parses ASCII expressions such as `3_1*(3_1x4_1)`; `x` binds tighter
    /// than `*`, and `0_1` is the unknot.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            src: s.as_bytes(),
            at: 0,
        };
        let e = p.star()?;
        p.skip_ws();
        if p.at != s.len() {
            return p.fail("trailing input");
        }
        Ok(e)
    }
}
