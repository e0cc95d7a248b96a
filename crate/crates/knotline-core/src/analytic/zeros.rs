//! Lists of zeta-zero ordinates.

use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ZeroError {
    #[error("line {line}: not a decimal number")]
    Format { line: usize },
    #[error("line {line}: ordinate must be positive")]
    NonPositive { line: usize },
    #[error("line {line}: ordinates must increase strictly")]
    NotIncreasing { line: usize },
}

/// Positive, strictly increasing ordinates `E_j` of zeros `1/2 + i E_j`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ZeroList {
    ordinates: Vec<f64>,
}

impl ZeroList {
    /// Parses one ordinate per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<ZeroList, ZeroError> {
        let mut ordinates: Vec<f64> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let x: f64 = body.parse().map_err(|_| ZeroError::Format { line })?;
            if !(x > 0.0 && x.is_finite()) {
                return Err(ZeroError::NonPositive { line });
            }
            if ordinates.last().is_some_and(|&prev| prev >= x) {
                return Err(ZeroError::NotIncreasing { line });
            }
            ordinates.push(x);
        }
        Ok(ZeroList { ordinates })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// The first `z` ordinates.
    pub fn truncated(&self, z: usize) -> ZeroList {
        ZeroList {
            ordinates: self.ordinates[..z.min(self.len())].to_vec(),
        }
    }

    /// Number of ordinates `≤ t`.
    pub fn count_up_to(&self, t: f64) -> usize {
        self.ordinates.partition_point(|&e| e <= t)
    }
}
