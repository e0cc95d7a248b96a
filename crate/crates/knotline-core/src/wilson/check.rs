//! Replay of derivation scripts.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::expr::{NormalForm, WilsonExpr};
use super::script::Derivation;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error("the starting word is not traced")]
    NotTraced,
    #[error("step {step} illegal: {reason}")]
    StepIllegal { step: usize, reason: String },
    #[error("replay ends off normal form at `{0}`")]
    NonNormalFinal(String),
}

/// Replays every step and returns the words visited, starting with `e0`.
pub fn replay(e0: &WilsonExpr, d: &Derivation) -> Result<Vec<WilsonExpr>, CheckError> {
    if !e0.is_traced() {
        return Err(CheckError::NotTraced);
    }
    let mut trail = Vec::with_capacity(d.len() + 1);
    trail.push(e0.clone());
    for (i, step) in d.steps.iter().enumerate() {
        let current = trail.last().expect("trail starts non-empty");
        let next = current
            .apply_rule(step.rule, step.site, &step.params)
            .map_err(|e| CheckError::StepIllegal {
                step: i + 1,
                reason: e.to_string(),
            })?;
        trail.push(next);
    }
    Ok(trail)
}

/// Replays a derivation and reads `m` off the final normal form.
pub fn check_derivation(e0: &WilsonExpr, d: &Derivation) -> Result<NormalForm, CheckError> {
    let trail = replay(e0, d)?;
    let last = trail.last().expect("trail starts non-empty");
    last.normal_form()
        .ok_or_else(|| CheckError::NonNormalFinal(last.to_string()))
}
