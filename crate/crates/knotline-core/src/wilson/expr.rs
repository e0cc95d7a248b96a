//! Traced words of Wilson lines and monodromy powers.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{KnotDiagram, Traversal};

/// A Wilson line following the knot from `start` for `len` unit steps.
///
/// Positions index the diagram traversal; a line of full length is closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    pub start: u32,
    pub len: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    Line(Line),
    /// `Mono(k)` is the monodromy power `R^k`; never zero once normalized.
    Mono(i64),
}

impl Factor {
    pub fn line(self) -> Option<Line> {
        match self {
            Factor::Line(l) => Some(l),
            Factor::Mono(_) => None,
        }
    }
}

/// A traced word over the lines of one knot diagram.
#[derive(Clone, Debug)]
pub struct WilsonExpr {
    pub(crate) walk: Arc<Traversal>,
    pub(crate) factors: Vec<Factor>,
    pub(crate) base: u32,
    pub(crate) traced: bool,
    pub(crate) winding: Option<i64>,
}

impl PartialEq for WilsonExpr {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
            && self.base == other.base
            && self.traced == other.traced
            && self.walk == other.walk
    }
}

impl Eq for WilsonExpr {}

/// Integer invariant read off a fully reduced word `Tr R^{-m} W(z,z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub m: i64,
    pub base: String,
}

impl WilsonExpr {
    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn traversal(&self) -> &Traversal {
        &self.walk
    }

    pub fn is_traced(&self) -> bool {
        self.traced
    }

    /// Circle position of the current basepoint.
    pub fn basepoint(&self) -> usize {
        self.base as usize
    }

    pub fn winding(&self) -> Option<i64> {
        self.winding
    }

    /// Number of unit steps around the knot.
    pub fn circumference(&self) -> u32 {
        self.walk.len() as u32
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub(crate) fn with_factors(&self, factors: Vec<Factor>) -> WilsonExpr {
        WilsonExpr {
            walk: self.walk.clone(),
            factors: normalize_monos(factors),
            base: self.base,
            traced: self.traced,
            winding: self.winding,
        }
    }

    pub fn left_label(&self, l: Line) -> &str {
        self.walk.label(l.start as usize)
    }

    pub fn right_label(&self, l: Line) -> &str {
        self.walk.label((l.start + l.len) as usize)
    }

    /// Sum of all monodromy exponents.
    pub fn total_power(&self) -> i64 {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Mono(k) => *k,
                Factor::Line(_) => 0,
            })
            .sum()
    }

    /// Line endpoints as label pairs in word order.
    pub fn endpoints(&self) -> Vec<(&str, &str)> {
        self.factors
            .iter()
            .filter_map(|f| f.line())
            .map(|l| (self.left_label(l), self.right_label(l)))
            .collect()
    }

    /// True when the lines tile the knot exactly once.
    pub fn tiles_circle(&self) -> bool {
        let n = self.circumference() as usize;
        let mut covered = alloc::vec![false; n];
        let mut total = 0usize;
        for l in self.factors.iter().filter_map(|f| f.line()) {
            total += l.len as usize;
            if l.len == 0 || total > n {
                return false;
            }
            for step in 0..l.len as usize {
                let p = (l.start as usize + step) % n;
                if covered[p] {
                    return false;
                }
                covered[p] = true;
            }
        }
        self.is_empty() || total == n
    }

    /// Reads off `m` when the word is `R^{-m} W(z,z)` up to rotation and
    /// consolidation of powers.
    pub fn normal_form(&self) -> Option<NormalForm> {
        let mut lines = self.factors.iter().filter_map(|f| f.line());
        let Some(line) = lines.next() else {
            return (self.factors.is_empty()).then(|| NormalForm {
                m: 0,
                base: String::new(),
            });
        };
        if lines.next().is_some() || line.len != self.circumference() {
            return None;
        }
        Some(NormalForm {
            m: -self.total_power(),
            base: self.left_label(line).into(),
        })
    }

    /// The same word read with a rotated factor order.
    pub fn rotated(&self, k: usize) -> WilsonExpr {
        let mut factors = self.factors.clone();
        if !factors.is_empty() {
            let n = factors.len();
            factors.rotate_left(k % n);
        }
        self.with_factors(factors)
    }

    /// Label-level rendering of the factors without the trace prefix.
    pub fn word(&self) -> String {
        use core::fmt::Write;
        let mut out = String::new();
        for f in &self.factors {
            match *f {
                Factor::Line(l) => {
                    let _ = write!(out, "W({},{})", self.left_label(l), self.right_label(l));
                }
                Factor::Mono(1) => out.push('R'),
                Factor::Mono(k) => {
                    let _ = write!(out, "R^{k}");
                }
            }
        }
        out
    }
}

impl fmt::Display for WilsonExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.traced {
            f.write_str("Tr ")?;
        }
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        f.write_str(&self.word())
    }
}

/// Merges adjacent powers and drops trivial ones.
pub(crate) fn normalize_monos(factors: Vec<Factor>) -> Vec<Factor> {
    let mut out: Vec<Factor> = Vec::with_capacity(factors.len());
    for f in factors {
        match (f, out.last_mut()) {
            (Factor::Mono(0), _) => {}
            (Factor::Mono(k), Some(Factor::Mono(prev))) => {
                *prev += k;
                if *prev == 0 {
                    out.pop();
                }
            }
            _ => out.push(f),
        }
    }
    out
}

/// Encodes each crossing as `W(under_in,w)W(w,over_out)W(over_in,w)W(w,under_out)`
/// in sequence order; a crossing-free diagram encodes to `Tr W(z,z)`.
pub fn encode_wilson(d: &KnotDiagram) -> WilsonExpr {
    let walk = d.traversal();
    let n = walk.len();
    let pos = |label: &str| walk.position_of(label).expect("validated arc") as u32;
    let factors = if d.crossings().is_empty() {
        alloc::vec![Factor::Line(Line { start: 0, len: 1 })]
    } else {
        d.crossings()
            .iter()
            .flat_map(|c| {
                let unit = |start: u32| {
                    Factor::Line(Line {
                        start: start % n as u32,
                        len: 1,
                    })
                };
                [
                    unit(pos(&c.under_in)),
                    unit(pos(&c.over_out) + n as u32 - 1),
                    unit(pos(&c.over_in)),
                    unit(pos(&c.under_out) + n as u32 - 1),
                ]
            })
            .collect()
    };
    WilsonExpr {
        walk: Arc::new(walk),
        factors,
        base: 0,
        traced: true,
        winding: d.winding(),
    }
}
