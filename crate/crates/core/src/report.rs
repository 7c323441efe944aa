//! Outcome of an exact identity or theorem check.

use std::fmt;

use crate::exact::{format_scalar, ExactScalar, InertiaTriple};
use crate::positivity::MinorIndex;

/// First observed failure of a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Matrix cell `(row, col)` (0-based) where the two sides differ.
    Cell { row: usize, col: usize, lhs: ExactScalar, rhs: ExactScalar },
    /// Two scalars that should agree.
    Value { lhs: ExactScalar, rhs: ExactScalar },
    /// A minor that is not positive (or, for a TNN check, negative).
    Minor { index: MinorIndex, value: ExactScalar },
    /// Observed and expected inertia.
    Inertia { observed: InertiaTriple, expected: InertiaTriple },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Cell { row, col, lhs, rhs } => {
                write!(f, "cell ({row},{col}): {} != {}", format_scalar(lhs), format_scalar(rhs))
            }
            Witness::Value { lhs, rhs } => write!(f, "{} != {}", format_scalar(lhs), format_scalar(rhs)),
            Witness::Minor { index, value } => {
                write!(f, "minor rows {:?} cols {:?} = {}", index.rows, index.cols, format_scalar(value))
            }
            Witness::Inertia { observed, expected } => write!(f, "inertia {observed} != {expected}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity_name: String,
    pub n: usize,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub fn pass(name: impl Into<String>, n: usize) -> Self {
        Self { identity_name: name.into(), n, holds: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, n: usize, witness: Witness) -> Self {
        Self { identity_name: name.into(), n, holds: false, witness: Some(witness) }
    }

    /// Passes iff `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, n: usize, witness: Option<Witness>) -> Self {
        match witness {
            None => Self::pass(name, n),
            Some(w) => Self::fail(name, n, w),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "PASS" } else { "FAIL" };
        write!(f, "{status} {} n={}", self.identity_name, self.n)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        Ok(())
    }
}
