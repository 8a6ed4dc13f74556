//! Results of the verification routines.

use alloc::string::String;
use alloc::vec::Vec;

use crate::scalar::Scalar;

/// `e_{row,col}^exp` with the row and column labels of its algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderedLetter {
    pub row: String,
    pub col: String,
    pub exp: u32,
}

/// One term of an element: a PBW monomial per tensor factor and a
/// coefficient. Elements of a single `U(gl)` have one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderedTerm {
    pub factors: Vec<Vec<RenderedLetter>>,
    pub coeff: Scalar,
}

/// One side of a failed identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Element(Vec<RenderedTerm>),
    Scalar(Scalar),
    Count(u64),
    Text(String),
}

/// The first failing instance of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Which instance failed, e.g. `T^(1)_{12} T^(2)_{21}`.
    pub instance: String,
    pub lhs: Payload,
    pub rhs: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail(Counterexample),
    /// Not run, e.g. over budget or not applicable.
    Skipped(String),
}

impl CheckOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail(_))
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            CheckOutcome::Fail(c) => Some(c),
            _ => None,
        }
    }

    pub fn fail(instance: impl Into<String>, lhs: Payload, rhs: Payload) -> Self {
        CheckOutcome::Fail(Counterexample {
            instance: instance.into(),
            lhs,
            rhs,
        })
    }
}

/// A named outcome with the number of instances that were compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub outcome: CheckOutcome,
    pub instances: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, outcome: CheckOutcome, instances: u64) {
        self.records.push(CheckRecord {
            name: name.into(),
            outcome,
            instances,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
    }

    /// No check failed (skips do not count as failures).
    pub fn all_pass(&self) -> bool {
        !self.records.iter().any(|r| r.outcome.is_fail())
    }

    pub fn get(&self, name: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.name == name)
    }
}
