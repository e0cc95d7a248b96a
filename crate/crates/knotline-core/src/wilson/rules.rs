//! The rewrite rules of the trace-word calculus.
//!
//! Offsets are measured along the knot from the current basepoint. A block
//! starting at offset `s` and ending at offset `e` has `e < s` exactly when
//! the basepoint lies strictly inside it.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::expr::{Factor, Line, WilsonExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Merge,
    Split,
    Cyclic,
    BraidCommute,
    UpCross,
    UnderCross,
    CollapseLoop,
    WindingPower,
}

impl RuleId {
    pub const ALL: [RuleId; 8] = [
        RuleId::Merge,
        RuleId::Split,
        RuleId::Cyclic,
        RuleId::BraidCommute,
        RuleId::UpCross,
        RuleId::UnderCross,
        RuleId::CollapseLoop,
        RuleId::WindingPower,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Merge => "Merge",
            RuleId::Split => "Split",
            RuleId::Cyclic => "Cyclic",
            RuleId::BraidCommute => "BraidCommute",
            RuleId::UpCross => "UpCross",
            RuleId::UnderCross => "UnderCross",
            RuleId::CollapseLoop => "CollapseLoop",
            RuleId::WindingPower => "WindingPower",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

/// Inclusive factor-index span `from..to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Site {
    pub from: usize,
    pub to: usize,
}

impl Site {
    pub fn new(from: usize, to: usize) -> Site {
        Site { from, to }
    }

    pub fn at(i: usize) -> Site {
        Site { from: i, to: i }
    }

    pub fn width(self) -> usize {
        self.to + 1 - self.from
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.from, self.to)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RuleError {
    #[error("site {site} is invalid for a word of {len} factors")]
    InvalidSite { site: Site, len: usize },
    #[error("{0}")]
    Mismatch(String),
}

fn mismatch<T>(msg: impl Into<String>) -> Result<T, RuleError> {
    Err(RuleError::Mismatch(msg.into()))
}

impl WilsonExpr {
    fn modulus(&self) -> u32 {
        self.circumference()
    }

    fn end_of(&self, l: Line) -> u32 {
        (l.start + l.len) % self.modulus()
    }

    /// Offset of a start position from the basepoint, in `0..n`.
    pub(crate) fn start_offset(&self, pos: u32) -> u32 {
        let n = self.modulus();
        (pos % n + n - self.base) % n
    }

    /// Offset of an end position from the basepoint, in `1..=n`.
    pub(crate) fn end_offset(&self, pos: u32) -> u32 {
        let n = self.modulus();
        (pos % n + 2 * n - self.base - 1) % n + 1
    }

    /// The arc covered by a block of consecutive factors, if its lines are
    /// disjoint and together form one contiguous stretch of the knot.
    pub fn block_span(&self, block: &[Factor]) -> Option<Line> {
        let lines: Vec<Line> = block.iter().filter_map(|f| f.line()).collect();
        let total: u32 = lines.iter().map(|l| l.len).sum();
        if lines.is_empty() || total >= self.modulus() {
            return None;
        }
        'first: for first in &lines {
            let mut used = alloc::vec![false; lines.len()];
            let mut at = first.start;
            let mut count = 0;
            while count < lines.len() {
                let Some(i) =
                    (0..lines.len()).find(|&i| !used[i] && lines[i].start == at % self.modulus())
                else {
                    continue 'first;
                };
                used[i] = true;
                at = (at + lines[i].len) % self.modulus();
                count += 1;
            }
            return Some(Line {
                start: first.start,
                len: total,
            });
        }
        None
    }

    /// Whether a line, or the line continuing it at one of its crossing
    /// endpoints, passes that crossing a second time.
    pub fn loop_attached(&self, line: Line) -> bool {
        let n = self.modulus();
        let walk = &self.walk;
        let inside = |l: Line, q: u32| {
            let d = (q + n - l.start) % n;
            d > 0 && d < l.len
        };
        let lines: Vec<Line> = self.factors.iter().filter_map(|f| f.line()).collect();
        let start = line.start;
        let end = self.end_of(line);
        for (p, at_end) in [(start, false), (end, true)] {
            let Some(q) = walk.partner(p as usize) else {
                continue;
            };
            let q = q as u32;
            if inside(line, q) {
                return true;
            }
            let neighbour = lines.iter().find(|l| {
                if at_end {
                    l.start == p
                } else {
                    self.end_of(**l) == p
                }
            });
            if neighbour.is_some_and(|l| inside(*l, q)) {
                return true;
            }
        }
        false
    }

    /// Applies one rule at `site`.
    pub fn apply_rule(
        &self,
        rule: RuleId,
        site: Site,
        params: &[i64],
    ) -> Result<WilsonExpr, RuleError> {
        let len = self.factors.len();
        if site.from > site.to || site.to >= len {
            return Err(RuleError::InvalidSite { site, len });
        }
        let param = |i: usize| -> Result<i64, RuleError> {
            params
                .get(i)
                .copied()
                .ok_or_else(|| RuleError::Mismatch(format!("{rule} needs parameter {}", i + 1)))
        };
        let f = &self.factors;
        let line_at = |i: usize| -> Result<Line, RuleError> {
            f[i].line()
                .ok_or_else(|| RuleError::Mismatch(format!("factor {i} is not a line")))
        };
        let splice = |replacement: Vec<Factor>| {
            let mut out = Vec::with_capacity(len + 2);
            out.extend_from_slice(&f[..site.from]);
            out.extend(replacement);
            out.extend_from_slice(&f[site.to + 1..]);
            self.with_factors(out)
        };
        match rule {
            RuleId::Merge => {
                if site.width() != 2 {
                    return mismatch("Merge acts on two factors");
                }
                let (a, b) = (line_at(site.from)?, line_at(site.to)?);
                if self.end_of(a) != b.start || a.len + b.len > self.modulus() {
                    return mismatch("lines are not consecutive along the knot");
                }
                Ok(splice(alloc::vec![Factor::Line(Line {
                    start: a.start,
                    len: a.len + b.len,
                })]))
            }
            RuleId::Split => {
                if site.width() != 1 {
                    return mismatch("Split acts on one factor");
                }
                let a = line_at(site.from)?;
                let k = param(0)?;
                if k <= 0 || k >= a.len as i64 {
                    return mismatch(format!(
                        "split point {k} is not inside a line of length {}",
                        a.len
                    ));
                }
                let k = k as u32;
                Ok(splice(alloc::vec![
                    Factor::Line(Line {
                        start: a.start,
                        len: k
                    }),
                    Factor::Line(Line {
                        start: (a.start + k) % self.modulus(),
                        len: a.len - k,
                    }),
                ]))
            }
            RuleId::Cyclic => {
                if site.width() != 1 {
                    return mismatch("Cyclic names the factor that becomes first");
                }
                let mut out = self.rotated(site.from);
                if let Some(&b) = params.first() {
                    let n = self.modulus() as i64;
                    let boundary = self
                        .factors
                        .iter()
                        .filter_map(|f| f.line())
                        .any(|l| l.start as i64 == b);
                    if b < 0 || b >= n || !boundary {
                        return mismatch(format!("new basepoint {b} is not a line endpoint"));
                    }
                    out.base = b as u32;
                }
                Ok(out)
            }
            RuleId::BraidCommute => {
                let k = param(0)?;
                if k < 1 || k as usize >= site.width() {
                    return mismatch("block split must leave both blocks non-empty");
                }
                let mid = site.from + k as usize;
                let (xs, ys) = (&f[site.from..mid], &f[mid..=site.to]);
                let (Some(x), Some(y)) = (self.block_span(xs), self.block_span(ys)) else {
                    return mismatch("blocks are not contiguous stretches of the knot");
                };
                let a = if self.start_offset(y.start) < self.start_offset(x.start) {
                    1
                } else {
                    -1
                };
                let b = if self.end_offset(y.start + y.len) < self.end_offset(x.start + x.len) {
                    -1
                } else {
                    1
                };
                let mut out = Vec::with_capacity(site.width() + 2);
                out.push(Factor::Mono(a));
                out.extend_from_slice(ys);
                out.extend_from_slice(xs);
                out.push(Factor::Mono(b));
                Ok(splice(out))
            }
            RuleId::UpCross | RuleId::UnderCross => {
                if site.width() != 4 {
                    return mismatch(format!("{rule} acts on four lines"));
                }
                let [a, b, c, d] = [0, 1, 2, 3].map(|i| line_at(site.from + i));
                let (a, b, c, d) = (a?, b?, c?, d?);
                let (ae, ce) = (self.end_of(a), self.end_of(c));
                let crossing = self.walk.partner(ae as usize) == Some(ce as usize);
                let starts_ok =
                    (b.start == ae && d.start == ce) || (b.start == ce && d.start == ae);
                if !crossing || !starts_ok {
                    return mismatch("lines do not meet at the two passages of one crossing");
                }
                let (fa, fb, fc, fd) = (
                    f[site.from],
                    f[site.from + 1],
                    f[site.from + 2],
                    f[site.from + 3],
                );
                Ok(splice(if rule == RuleId::UpCross {
                    let s = if self.start_offset(c.start) < self.start_offset(a.start) {
                        1
                    } else {
                        -1
                    };
                    alloc::vec![Factor::Mono(s), fc, fb, fa, fd]
                } else {
                    let s = if self.end_offset(d.start + d.len) < self.end_offset(b.start + b.len) {
                        -1
                    } else {
                        1
                    };
                    alloc::vec![fa, fd, fc, fb, Factor::Mono(s)]
                }))
            }
            RuleId::WindingPower => {
                if site.width() != 3 {
                    return mismatch("WindingPower acts on a line, a middle factor and a line");
                }
                let w = param(0)?;
                let (x, y) = (line_at(site.from)?, line_at(site.to)?);
                let middle = f[site.from + 1];
                let partners = |p: u32, q: u32| self.walk.partner(p as usize) == Some(q as usize);
                let front = partners(self.end_of(x), self.end_of(y));
                let back = partners(x.start, y.start);
                if front == back {
                    return mismatch("swapped lines must share exactly one crossing endpoint");
                }
                if !self.loop_attached(x) && !self.loop_attached(y) {
                    return mismatch("no loop attachment at the swapped lines");
                }
                Ok(splice(if front {
                    let s = if self.start_offset(y.start) < self.start_offset(x.start) {
                        1
                    } else {
                        -1
                    };
                    alloc::vec![Factor::Mono(s + w), f[site.to], middle, f[site.from]]
                } else {
                    let s = if self.end_offset(y.start + y.len) < self.end_offset(x.start + x.len) {
                        -1
                    } else {
                        1
                    };
                    alloc::vec![f[site.to], middle, f[site.from], Factor::Mono(s + w)]
                }))
            }
            RuleId::CollapseLoop => {
                if site.from != 0 || site.to + 1 != len {
                    return mismatch("CollapseLoop acts on the whole word");
                }
                let mut lines = f.iter().filter_map(|x| x.line());
                let (Some(line), None) = (lines.next(), lines.next()) else {
                    return mismatch("CollapseLoop needs exactly one line");
                };
                if line.len != self.modulus() {
                    return mismatch("the line is not closed");
                }
                Ok(self.with_factors(alloc::vec![
                    Factor::Mono(self.total_power()),
                    Factor::Line(line)
                ]))
            }
        }
    }
}
