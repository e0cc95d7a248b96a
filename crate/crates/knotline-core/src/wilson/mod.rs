//! Trace-word calculus over Wilson lines: rules, script replay and reduction.

mod check;
mod expr;
mod reduce;
mod rules;
mod script;

pub use check::{check_derivation, replay, CheckError};
pub use expr::{encode_wilson, Factor, Line, NormalForm, WilsonExpr};
pub use reduce::{best_first, invariant_m, reduce, successors, Budget, Found, ReduceError};
pub use rules::{RuleError, RuleId, Site};
pub use script::{Derivation, ScriptError, Step};
