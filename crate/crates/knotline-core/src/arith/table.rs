//! Inductive construction and verification of the knot classification table.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::assign::{is_jumping_over_general, rooms, step_of, ArithError, Assignment};
use super::expr::{star, times, KnotExpr, PrimeKnot};

/// Number of prime knots with each minimal crossing number, from 3 upward.
const PRIME_KNOT_COUNTS: [u32; 10] = [1, 1, 2, 3, 7, 21, 49, 165, 552, 2176];

/// Annotations carried by a table row.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    /// A prime knot introduced at this position.
    pub prime_new: bool,
    /// The position lies on a chain of transition.
    pub chain_state: bool,
    /// The entry replaces a repeated knot of the preordering layout.
    pub replacement: bool,
}

impl Flags {
    pub const NAMES: [&'static str; 3] = ["prime-new", "chain-state", "pushed-out-replacement"];

    fn bits(&self) -> [bool; 3] {
        [self.prime_new, self.chain_state, self.replacement]
    }

    /// Parses a `|`-separated flag list; the empty string has no flags.
    pub fn parse(s: &str) -> Option<Flags> {
        let mut f = Flags::default();
        for tok in s.split('|').map(str::trim).filter(|t| !t.is_empty()) {
            match tok {
                "prime-new" => f.prime_new = true,
                "chain-state" => f.chain_state = true,
                "pushed-out-replacement" => f.replacement = true,
                _ => return None,
            }
        }
        Some(f)
    }
}

impl fmt::Display for Flags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, on) in Flags::NAMES.iter().zip(self.bits()) {
            if on {
                if !first {
                    f.write_str("|")?;
                }
                f.write_str(name)?;
                first = false;
            }
        }
        Ok(())
    }
}

/// One row of the classification table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub position: u64,
    pub knot: KnotExpr,
    pub related: u64,
    pub flags: Flags,
    /// Repeated layout knots this entry replaces.
    pub replaced: Vec<KnotExpr>,
}

/// A chain of transition: positions in order, ending where the knot related
/// to the last position has been pushed out of the step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub positions: Vec<u64>,
    pub pushed_out: KnotExpr,
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                f.write_str("->")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, " pushes out {}", self.pushed_out)
    }
}

/// Outcome of one induction step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepState {
    pub n: u32,
    /// Preordering sequences in layout order, each led by its generator.
    pub preordering: Vec<(KnotExpr, Vec<KnotExpr>)>,
    /// Knots placed in the rooms before resolution, `3_1^n` last.
    pub layout: Vec<KnotExpr>,
    pub chains: Vec<Chain>,
    pub pushed_out: Vec<KnotExpr>,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("step {n} needs steps 1..{} complete", n - 1)]
    IncompletePriorStep { n: u32 },
    #[error("step {n}: preordering sequences give {got} knots for {want} rooms")]
    Coverage { n: u32, got: usize, want: usize },
    #[error("step {n}: chain failure at position {position}: {reason}")]
    Chain {
        n: u32,
        position: u64,
        reason: String,
    },
    #[error("step {n}: no unused prime knot symbol or × knot left")]
    Exhausted { n: u32 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Incrementally built table with its assignment.
#[derive(Clone, Debug)]
pub struct Table {
    pub assignment: Assignment,
    pub entries: BTreeMap<u64, TableEntry>,
    pub steps: Vec<StepState>,
}

impl Default for Table {
    fn default() -> Self {
        Table::new()
    }
}

impl Table {
    /// The initial data: `3_1` at position 1 related to 2.
    pub fn new() -> Table {
        let first = TableEntry {
            position: 1,
            knot: KnotExpr::trefoil(),
            related: 2,
            flags: Flags::default(),
            replaced: Vec::new(),
        };
        Table {
            assignment: Assignment::initial(),
            entries: BTreeMap::from([(1, first)]),
            steps: Vec::new(),
        }
    }

    /// Last completed step.
    pub fn completed(&self) -> u32 {
        self.steps.last().map_or(1, |s| s.n)
    }

    /// Builds steps until position `limit` is covered.
    pub fn build_to(limit: u64) -> Result<Table, TableError> {
        let mut t = Table::new();
        while (1u64 << t.completed()) < limit {
            let n = t.completed() + 1;
            build_step(n, &mut t)?;
        }
        Ok(t)
    }

    pub fn rows(&self, limit: u64) -> impl Iterator<Item = &TableEntry> {
        self.entries.range(..=limit).map(|(_, e)| e)
    }

    /// Entries of step `k` in position order; step 1 holds only the trefoil.
    fn step_entries(&self, k: u32) -> Vec<KnotExpr> {
        let range = if k == 1 { 1..=1 } else { rooms(k) };
        self.entries
            .range(range)
            .map(|(_, e)| e.knot.clone())
            .collect()
    }
}

/// Generator steps in layout order for step `n`.
fn generator_steps(n: u32) -> Vec<u32> {
    if n == 4 {
        alloc::vec![3, 1, 2]
    } else {
        (1..n).rev().collect()
    }
}

/// The generator of step `k` used when building step `n`: the trefoil for
/// step 1, the first prime of step `n-1`, otherwise the last prime of step `k`.
fn generator(n: u32, k: u32, a: &Assignment) -> Option<KnotExpr> {
    if k == 1 {
        return Some(KnotExpr::trefoil());
    }
    let primes = a.primes_in_step(k);
    let pick = if k == n - 1 {
        primes.first()
    } else {
        primes.last()
    };
    pick.map(|(_, p)| KnotExpr::Prime(*p))
}

/// Preordering sequences for step `n`: each generator `⋆` the entries of the
/// complementary earlier step.
pub fn preordering_sequences(
    n: u32,
    table: &Table,
) -> Result<Vec<(KnotExpr, Vec<KnotExpr>)>, TableError> {
    if n < 2 || table.completed() + 1 < n {
        return Err(TableError::IncompletePriorStep { n });
    }
    generator_steps(n)
        .into_iter()
        .map(|k| {
            let g =
                generator(n, k, &table.assignment).ok_or(TableError::IncompletePriorStep { n })?;
            let seq = table
                .step_entries(n - k)
                .into_iter()
                .map(|e| star(g.clone(), e))
                .collect();
            Ok((g, seq))
        })
        .collect()
}

fn is_composite(x: u64, a: &Assignment) -> bool {
    a.knot_for_number(x).is_some_and(|k| !k.is_prime())
}

/// Smallest `A × B` over prime knots, ordered by the numbers of `A` then `B`
/// with `A ≤ B`, not yet in the table.
fn next_times_knot(a: &Assignment) -> Option<KnotExpr> {
    let mut atoms: Vec<(u64, KnotExpr)> = a
        .primes()
        .into_iter()
        .map(|(p, k)| (if p == 2 { 1 } else { p }, KnotExpr::Prime(k)))
        .collect();
    atoms.sort();
    for (i, (_, x)) in atoms.iter().enumerate() {
        for (_, y) in &atoms[i..] {
            let t = times(x.clone(), y.clone());
            if a.position_of(&t).is_none() {
                return Some(t);
            }
        }
    }
    None
}

/// Next unused prime knot symbol in (crossings, index) order.
fn next_prime_symbol(a: &Assignment) -> Option<PrimeKnot> {
    let used: BTreeSet<PrimeKnot> = a.primes().into_iter().map(|(_, k)| k).collect();
    PRIME_KNOT_COUNTS
        .iter()
        .zip(3u32..)
        .find_map(|(&count, c)| {
            (1..=count)
                .map(|i| PrimeKnot {
                    crossings: c,
                    index: i,
                })
                .find(|k| !used.contains(k))
        })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Kept,
    TimesStart,
}

/// Fills the rooms of step `n`: lays out the preordering sequences, traces
/// the chains of transition backwards from each pushed-out number, puts `×`
/// knots at vacated chain starts and new prime knots at the other vacated
/// positions.
pub fn build_step(n: u32, table: &mut Table) -> Result<StepState, TableError> {
    let preordering = preordering_sequences(n, table)?;
    let mut layout: Vec<KnotExpr> = preordering
        .iter()
        .flat_map(|(_, s)| s.iter().cloned())
        .collect();
    layout.push(KnotExpr::trefoil_power(n as usize));
    let room = rooms(n);
    let first = *room.start();
    let want = (1usize) << (n - 1);
    if layout.len() != want {
        return Err(TableError::Coverage {
            n,
            got: layout.len(),
            want,
        });
    }
    let a = &table.assignment;
    let at = |pos: u64| &layout[(pos - first) as usize];
    let rel: Vec<u64> = layout
        .iter()
        .map(|k| a.related_number(k))
        .collect::<Result<_, _>>()?;
    let rel_at = |pos: u64| rel[(pos - first) as usize];
    let chain_err = |position: u64, reason: &str| TableError::Chain {
        n,
        position,
        reason: reason.into(),
    };

    let mut slots: BTreeMap<u64, Slot> = BTreeMap::new();
    let mut kept: BTreeMap<KnotExpr, u64> = BTreeMap::new();
    for pos in room.clone() {
        if rel_at(pos) == pos && !kept.contains_key(at(pos)) {
            slots.insert(pos, Slot::Kept);
            kept.insert(at(pos).clone(), pos);
        }
    }

    let present: BTreeSet<&KnotExpr> = layout.iter().collect();
    let mut pushed_out = Vec::new();
    let mut chains = Vec::new();
    for r in room.clone() {
        let Some(knot) = a.knot_for_number(r) else {
            continue;
        };
        if knot.is_prime() || present.contains(&knot) {
            continue;
        }
        if !is_jumping_over_general(&knot, n, a)? {
            return Err(chain_err(
                r,
                "a knot missing from the layout does not jump over",
            ));
        }
        let mut walk = alloc::vec![r];
        let mut cur = r;
        loop {
            if slots.contains_key(&cur) {
                return Err(chain_err(cur, "chain reaches a resolved position"));
            }
            let k = at(cur);
            if kept.contains_key(k) {
                slots.insert(cur, Slot::TimesStart);
                break;
            }
            slots.insert(cur, Slot::Kept);
            kept.insert(k.clone(), cur);
            let prev = rel_at(cur);
            if k.has_times() || prev < first {
                break;
            }
            if prev > *room.end() {
                return Err(chain_err(cur, "related number beyond the step"));
            }
            walk.push(prev);
            cur = prev;
        }
        walk.reverse();
        chains.push(Chain {
            positions: walk,
            pushed_out: knot.clone(),
        });
        pushed_out.push(knot);
    }

    let mut assignment = table.assignment.clone();
    let mut entries = Vec::with_capacity(want);
    let on_chain: BTreeSet<u64> = chains
        .iter()
        .flat_map(|c| c.positions.iter().copied())
        .collect();
    for pos in room.clone() {
        let layout_knot = at(pos).clone();
        let slot = match slots.get(&pos) {
            Some(s) => Some(*s),
            None if kept.contains_key(&layout_knot) => None,
            None => return Err(chain_err(pos, "repeat-free knot off its related position")),
        };
        let entry = match slot {
            Some(Slot::Kept) => TableEntry {
                position: pos,
                related: rel_at(pos),
                knot: layout_knot,
                flags: Flags {
                    chain_state: on_chain.contains(&pos),
                    ..Flags::default()
                },
                replaced: Vec::new(),
            },
            Some(Slot::TimesStart) => {
                let t = next_times_knot(&assignment).ok_or(TableError::Exhausted { n })?;
                assignment.insert(pos, t.clone());
                TableEntry {
                    position: pos,
                    knot: t,
                    related: pos,
                    flags: Flags {
                        chain_state: true,
                        replacement: true,
                        ..Flags::default()
                    },
                    replaced: alloc::vec![layout_knot],
                }
            }
            None => {
                if is_composite(pos, &assignment) {
                    return Err(chain_err(pos, "vacated composite position off every chain"));
                }
                let p = next_prime_symbol(&assignment).ok_or(TableError::Exhausted { n })?;
                assignment.insert(pos, KnotExpr::Prime(p));
                TableEntry {
                    position: pos,
                    knot: KnotExpr::Prime(p),
                    related: pos,
                    flags: Flags {
                        prime_new: true,
                        replacement: true,
                        ..Flags::default()
                    },
                    replaced: alloc::vec![layout_knot],
                }
            }
        };
        entries.push(entry);
    }

    for e in &entries {
        if !e.knot.is_prime() && !matches!(e.knot, KnotExpr::Times(_)) {
            assignment.insert(e.position, e.knot.clone());
        }
        table.entries.insert(e.position, e.clone());
    }
    table.assignment = assignment;
    let state = StepState {
        n,
        preordering,
        layout,
        chains,
        pushed_out,
        entries,
    };
    table.steps.push(state.clone());
    Ok(state)
}

/// A single finding of [`verify_table`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    TrefoilNotFirst,
    ReservedPositionFilled,
    StepPopulation {
        n: u32,
        count: usize,
    },
    PowerMisplaced {
        n: u32,
    },
    Duplicate {
        first: u64,
        second: u64,
    },
    PrimeKnotAtComposite {
        position: u64,
    },
    CompositeAtPrime {
        position: u64,
    },
    UnassignedFactor {
        position: u64,
    },
    RelatedMismatch {
        position: u64,
        recorded: u64,
        computed: u64,
    },
    PositionMismatch {
        position: u64,
        related: u64,
    },
    JumperInNominalStep {
        position: u64,
    },
    NotJumpingOver {
        position: u64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TrefoilNotFirst => f.write_str("3_1 is not at position 1"),
            Violation::ReservedPositionFilled => f.write_str("position 2 is reserved for 3_1"),
            Violation::StepPopulation { n, count } => {
                write!(f, "step {n} holds {count} knots instead of {}", 1u64 << (n - 1))
            }
            Violation::PowerMisplaced { n } => write!(f, "3_1^{n} is not at position {}", 1u64 << n),
            Violation::Duplicate { first, second } => {
                write!(f, "positions {first} and {second} hold the same knot")
            }
            Violation::PrimeKnotAtComposite { position } => {
                write!(f, "prime knot at composite position {position}")
            }
            Violation::CompositeAtPrime { position } => {
                write!(f, "composite knot at prime position {position}")
            }
            Violation::UnassignedFactor { position } => {
                write!(f, "position {position} uses an unassigned factor")
            }
            Violation::RelatedMismatch { position, recorded, computed } => write!(
                f,
                "position {position} records related number {recorded}, computed {computed}"
            ),
            Violation::PositionMismatch { position, related } => write!(
                f,
                "composite at position {position} is off its related number {related} without a chain"
            ),
            Violation::JumperInNominalStep { position } => {
                write!(f, "jumping-over knot left in its own step at position {position}")
            }
            Violation::NotJumpingOver { position } => write!(
                f,
                "knot at position {position} sits past its related step without jumping over"
            ),
        }
    }
}

fn is_prime_number(x: u64) -> bool {
    x >= 2
        && (2..)
            .take_while(|d| d * d <= x)
            .all(|d| !x.is_multiple_of(d))
}

/// Checks a table given for positions `1..=N` against the induction rules.
pub fn verify_table(entries: &[TableEntry]) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut a = Assignment::default();
    let mut seen: BTreeMap<&KnotExpr, u64> = BTreeMap::new();
    for e in entries {
        if let Some(&first) = seen.get(&e.knot) {
            out.push(Violation::Duplicate {
                first,
                second: e.position,
            });
        } else {
            seen.insert(&e.knot, e.position);
        }
        a.insert(e.position, e.knot.clone());
    }
    let limit = entries.iter().map(|e| e.position).max().unwrap_or(0);
    let at = |p: u64| entries.iter().find(|e| e.position == p);

    if at(1).map(|e| &e.knot) != Some(&KnotExpr::trefoil()) {
        out.push(Violation::TrefoilNotFirst);
    }
    if at(2).is_some() {
        out.push(Violation::ReservedPositionFilled);
    }
    for n in 2..=step_of(limit) {
        let count = entries
            .iter()
            .filter(|e| rooms(n).contains(&e.position))
            .count();
        if count != 1usize << (n - 1) {
            out.push(Violation::StepPopulation { n, count });
        }
        if (1u64 << n) <= limit
            && at(1u64 << n).map(|e| &e.knot) != Some(&KnotExpr::trefoil_power(n as usize))
        {
            out.push(Violation::PowerMisplaced { n });
        }
    }

    for e in entries {
        let position = e.position;
        if position == 1 {
            continue;
        }
        let prime_pos = is_prime_number(position);
        if e.knot.is_prime() && !prime_pos {
            out.push(Violation::PrimeKnotAtComposite { position });
        }
        if !e.knot.is_prime() && prime_pos {
            out.push(Violation::CompositeAtPrime { position });
        }
        let computed = match a.related_number(&e.knot) {
            Ok(r) => r,
            Err(_) => {
                out.push(Violation::UnassignedFactor { position });
                continue;
            }
        };
        if computed != e.related {
            out.push(Violation::RelatedMismatch {
                position,
                recorded: e.related,
                computed,
            });
        }
        if !matches!(e.knot, KnotExpr::Star(_)) {
            continue;
        }
        if !e.flags.chain_state && computed != position {
            out.push(Violation::PositionMismatch {
                position,
                related: computed,
            });
        }
        let (home, here) = (step_of(computed), step_of(position));
        let jumps = is_jumping_over_general(&e.knot, home, &a).unwrap_or(false);
        if home < here && home >= 2 && !jumps {
            out.push(Violation::NotJumpingOver { position });
        }
        if home == here && computed != 1u64 << here && jumps {
            out.push(Violation::JumperInNominalStep { position });
        }
    }
    out
}
