//! Derivation scripts: `STEP <n>: <RuleId> at <i>..<j> [param k]`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::rules::{RuleId, Site};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub rule: RuleId,
    pub site: Site,
    pub params: Vec<i64>,
}

impl Step {
    pub fn new(rule: RuleId, site: Site, params: &[i64]) -> Step {
        Step {
            rule,
            site,
            params: params.to_vec(),
        }
    }
}

/// An ordered list of rule applications.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("script line {line}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}

impl Derivation {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Parses a script; `#` starts a comment and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Derivation, ScriptError> {
        let mut steps = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| ScriptError { line, message };
            let rest = content
                .strip_prefix("STEP ")
                .ok_or_else(|| err("expected `STEP <n>: ...`".into()))?;
            let (number, body) = rest
                .split_once(':')
                .ok_or_else(|| err("missing `:` after step number".into()))?;
            let number: usize = number
                .trim()
                .parse()
                .map_err(|_| err(format!("bad step number `{}`", number.trim())))?;
            if number != steps.len() + 1 {
                return Err(err(format!(
                    "expected step {}, found {number}",
                    steps.len() + 1
                )));
            }
            let tok: Vec<&str> = body.split_whitespace().collect();
            if tok.len() < 3 || tok[1] != "at" {
                return Err(err("expected `<RuleId> at <i>..<j>`".into()));
            }
            let rule: RuleId = tok[0].parse().map_err(err)?;
            let (from, to) = tok[2]
                .split_once("..")
                .ok_or_else(|| err(format!("bad site `{}`", tok[2])))?;
            let site = match (from.parse(), to.parse()) {
                (Ok(from), Ok(to)) => Site::new(from, to),
                _ => return Err(err(format!("bad site `{}`", tok[2]))),
            };
            let params = match tok.get(3) {
                None => Vec::new(),
                Some(&"param") if tok.len() > 4 => tok[4..]
                    .iter()
                    .map(|t| {
                        t.parse::<i64>()
                            .map_err(|_| err(format!("bad parameter `{t}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                Some(t) => return Err(err(format!("unexpected `{t}`"))),
            };
            steps.push(Step { rule, site, params });
        }
        Ok(Derivation { steps })
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            write!(f, "STEP {}: {} at {}", i + 1, s.rule, s.site)?;
            if !s.params.is_empty() {
                let params: Vec<String> = s.params.iter().map(|p| p.to_string()).collect();
                write!(f, " param {}", params.join(" "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
