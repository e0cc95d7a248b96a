//! The `⋆`/`×` knot arithmetic and the classification table.

mod assign;
mod expr;
mod table;

pub use assign::{
    is_jumping_over_first, is_jumping_over_general, rooms, step_of, ArithError, Assignment, Split,
};
pub use expr::{star, star_all, times, times_all, ExprError, KnotExpr, PrimeKnot};
pub use table::{
    build_step, preordering_sequences, verify_table, Chain, Flags, StepState, Table, TableEntry,
    TableError, Violation,
};
