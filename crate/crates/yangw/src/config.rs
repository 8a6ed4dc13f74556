//! Run configuration: parameter sets, check selection and budgets.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use yangw_core::{ColoredRectangle, EpsilonDeltaSequence, RectangleError};

use crate::error::ConfigError;

/// One rectangle `(m, n, l, b)`; `seq` is a `d`/`e` string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParamSet {
    pub m: usize,
    pub n: usize,
    pub ell: usize,
    pub seq: String,
}

impl ParamSet {
    pub fn new(m: usize, n: usize, ell: usize, seq: impl Into<String>) -> Self {
        ParamSet {
            m,
            n,
            ell,
            seq: seq.into(),
        }
    }

    /// `b = d^m e^n`.
    pub fn standard(m: usize, n: usize, ell: usize) -> Self {
        Self::new(m, n, ell, EpsilonDeltaSequence::standard(m, n).to_string())
    }

    pub fn rectangle(&self) -> Result<ColoredRectangle, RectangleError> {
        ColoredRectangle::from_spec(self.m, self.n, self.ell, &self.seq)
    }
}

impl fmt::Display for ParamSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.m, self.n, self.ell, self.seq)
    }
}

/// `m,n,l,seq`, e.g. `2,1,2,dde`; the sequence may be omitted.
impl FromStr for ParamSet {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let num = |x: &str| x.parse::<usize>().map_err(|_| ConfigError::BadParamSet(s.to_string()));
        match parts.as_slice() {
            [m, n, l] => Ok(ParamSet::standard(num(m)?, num(n)?, num(l)?)),
            [m, n, l, seq] => Ok(ParamSet::new(num(m)?, num(n)?, num(l)?, *seq)),
            _ => Err(ConfigError::BadParamSet(s.to_string())),
        }
    }
}

/// The verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    GoodGrading,
    Centralizer,
    KappaRtt,
    KappaRecursion,
    Etilrel,
    PathsumRdet,
    LeadingTerms,
    MInvariance,
    Crue,
    WRtt,
    Iso,
    Dims,
}

impl CheckKind {
    pub const ALL: [CheckKind; 12] = [
        CheckKind::GoodGrading,
        CheckKind::Centralizer,
        CheckKind::KappaRtt,
        CheckKind::KappaRecursion,
        CheckKind::Etilrel,
        CheckKind::PathsumRdet,
        CheckKind::LeadingTerms,
        CheckKind::MInvariance,
        CheckKind::Crue,
        CheckKind::WRtt,
        CheckKind::Iso,
        CheckKind::Dims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::GoodGrading => "good-grading",
            CheckKind::Centralizer => "centralizer",
            CheckKind::KappaRtt => "kappa-rtt",
            CheckKind::KappaRecursion => "kappa-recursion",
            CheckKind::Etilrel => "etilrel",
            CheckKind::PathsumRdet => "pathsum-rdet",
            CheckKind::LeadingTerms => "leading-terms",
            CheckKind::MInvariance => "m-invariance",
            CheckKind::Crue => "crue",
            CheckKind::WRtt => "w-rtt",
            CheckKind::Iso => "iso",
            CheckKind::Dims => "dims",
        }
    }
}

impl FromStr for CheckKind {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| ConfigError::UnknownCheck(s.to_string()))
    }
}

/// Resource limits. A check whose supermonomial count exceeds
/// `max_monomials` is reported as skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_monomials: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_monomials: 4000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub params: Vec<ParamSet>,
    /// Maximal filtration degree for the span and dimension checks.
    pub degree: usize,
    pub checks: BTreeSet<CheckKind>,
    pub out: Option<PathBuf>,
    /// Worker threads; 0 means rayon's default.
    pub jobs: usize,
    pub budget: Budget,
    /// Record wall time per check (makes reports run-dependent).
    pub timing: bool,
}

impl RunConfig {
    pub fn default_sweep() -> Vec<ParamSet> {
        vec![
            ParamSet::standard(1, 1, 1),
            ParamSet::standard(1, 1, 2),
            ParamSet::standard(2, 1, 2),
            ParamSet::standard(1, 2, 2),
            ParamSet::standard(1, 1, 3),
        ]
    }

    pub fn new(params: Vec<ParamSet>) -> Self {
        RunConfig {
            params,
            degree: 2,
            checks: CheckKind::ALL.into_iter().collect(),
            out: None,
            jobs: 0,
            budget: Budget::default(),
            timing: false,
        }
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = CheckKind>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn with_degree(mut self, d: usize) -> Self {
        self.degree = d;
        self
    }

    /// Every sequence must match its `(m, n)`.
    pub fn validate(&self) -> Result<(), ConfigError> {
        for p in &self.params {
            p.rectangle().map_err(|e| ConfigError::Rectangle(p.clone(), e))?;
        }
        Ok(())
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self::new(Self::default_sweep())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_param_sets() {
        assert_eq!("2,1,2,ded".parse::<ParamSet>().unwrap(), ParamSet::new(2, 1, 2, "ded"));
        assert_eq!("1,2,3".parse::<ParamSet>().unwrap(), ParamSet::new(1, 2, 3, "dee"));
        assert!("1,2".parse::<ParamSet>().is_err());
        assert!("a,2,3".parse::<ParamSet>().is_err());
    }

    #[test]
    fn check_names_round_trip() {
        for c in CheckKind::ALL {
            assert_eq!(c.name().parse::<CheckKind>().unwrap(), c);
        }
        assert!("nope".parse::<CheckKind>().is_err());
    }

    #[test]
    fn malformed_sequence_is_a_config_error() {
        let cfg = RunConfig::new(vec![ParamSet::new(1, 1, 2, "dd")]);
        assert!(matches!(cfg.validate(), Err(ConfigError::Rectangle(..))));
        assert!(RunConfig::default().validate().is_ok());
    }
}
