//! JSON documents written by the CLI. The layout is described in
//! `docs/schema.md`; bump [`SCHEMA_VERSION`] on incompatible changes.

use serde::{Deserialize, Serialize};
use yangw_core::rectangle::CentralizerElement;
use yangw_core::{
    CheckOutcome, ColoredRectangle, Counterexample, GlSuper, Payload, RenderedTerm, Scalar, TensorPower, Uea,
};

use crate::config::ParamSet;

pub const SCHEMA_VERSION: u32 = 1;

/// `[row_label, col_label, exponent]`.
pub type LetterJson = (String, String, u32);

/// A coefficient (`"p"` or `"p/q"`) times one PBW monomial per tensor
/// factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub factors: Vec<Vec<LetterJson>>,
}

pub fn terms_json(terms: &[RenderedTerm]) -> Vec<TermJson> {
    terms
        .iter()
        .map(|t| TermJson {
            coeff: t.coeff.to_string(),
            factors: t
                .factors
                .iter()
                .map(|f| f.iter().map(|l| (l.row.clone(), l.col.clone(), l.exp)).collect())
                .collect(),
        })
        .collect()
}

pub fn uea_json(g: &GlSuper, x: &Uea) -> Vec<TermJson> {
    terms_json(&g.render(x))
}

/// Rebuild an element of `U(g)` from single-factor terms.
pub fn uea_from_json(g: &GlSuper, terms: &[TermJson]) -> Option<Uea> {
    let mut out = Uea::zero();
    for t in terms {
        let [letters] = t.factors.as_slice() else {
            return None;
        };
        let coeff: Scalar = t.coeff.parse().ok()?;
        let mut word = Vec::new();
        for (row, col, exp) in letters {
            let b = yangw_core::BasisElement::new(g.label_position(row)?, g.label_position(col)?);
            word.extend(std::iter::repeat_n(b, *exp as usize));
        }
        out += &g.normal_form(&word).ok()?.scale(&coeff);
    }
    Some(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PayloadJson {
    Element { terms: Vec<TermJson> },
    Scalar { value: String },
    Count { value: u64 },
    Text { value: String },
}

impl From<&Payload> for PayloadJson {
    fn from(p: &Payload) -> Self {
        match p {
            Payload::Element(t) => PayloadJson::Element { terms: terms_json(t) },
            Payload::Scalar(s) => PayloadJson::Scalar { value: s.to_string() },
            Payload::Count(c) => PayloadJson::Count { value: *c },
            Payload::Text(s) => PayloadJson::Text { value: s.clone() },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleJson {
    pub instance: String,
    pub lhs: PayloadJson,
    pub rhs: PayloadJson,
}

impl From<&Counterexample> for CounterexampleJson {
    fn from(c: &Counterexample) -> Self {
        CounterexampleJson {
            instance: c.instance.clone(),
            lhs: (&c.lhs).into(),
            rhs: (&c.rhs).into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One check on one parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResultJson {
    pub params: ParamSet,
    pub check: String,
    pub status: Status,
    pub instances: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<CounterexampleJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<u64>,
}

impl CheckResultJson {
    pub fn new(params: &ParamSet, check: &str, outcome: &CheckOutcome, instances: u64, millis: Option<u64>) -> Self {
        let (status, reason, counterexample) = match outcome {
            CheckOutcome::Pass => (Status::Pass, None, None),
            CheckOutcome::Fail(c) => (Status::Fail, None, Some(c.into())),
            CheckOutcome::Skipped(r) => (Status::Skipped, Some(r.clone()), None),
        };
        CheckResultJson {
            params: params.clone(),
            check: check.to_string(),
            status,
            instances,
            reason,
            counterexample,
            millis,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub schema_version: u32,
    pub degree: usize,
    pub checks: Vec<String>,
    pub all_pass: bool,
    pub results: Vec<CheckResultJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    pub label: String,
    /// 1-based.
    pub row: usize,
    /// 1-based.
    pub col: usize,
    pub tilde_col: i64,
    pub odd: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectangleJson {
    pub schema_version: u32,
    pub params: ParamSet,
    /// Labels row by row, as drawn.
    pub grid: Vec<Vec<String>>,
    /// In J order (barred boxes first).
    pub boxes: Vec<BoxJson>,
}

pub fn rectangle_json(p: &ParamSet, r: &ColoredRectangle) -> RectangleJson {
    let grid = (0..r.height())
        .map(|i| (0..r.ell()).map(|a| r.box_label(r.box_at(i, a)).label()).collect())
        .collect();
    let boxes = (0..r.dim())
        .map(|j| BoxJson {
            label: r.box_label(j).label(),
            row: r.row(j) + 1,
            col: r.col(j) + 1,
            tilde_col: r.tilde_col(j),
            odd: r.box_parity(j).is_odd(),
        })
        .collect();
    RectangleJson {
        schema_version: SCHEMA_VERSION,
        params: p.clone(),
        grid,
        boxes,
    }
}

/// A generator-indexed element; `i`, `j` are 1-based rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedElementJson {
    pub i: usize,
    pub j: usize,
    pub r: usize,
    pub odd: bool,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDumpJson {
    pub schema_version: u32,
    pub params: ParamSet,
    pub what: String,
    pub elements: Vec<IndexedElementJson>,
}

pub fn centralizer_json(g: &GlSuper, r: &ColoredRectangle, c: &CentralizerElement) -> IndexedElementJson {
    IndexedElementJson {
        i: c.i + 1,
        j: c.j + 1,
        r: c.r,
        odd: (r.row_parity(c.i) + r.row_parity(c.j)).is_odd(),
        terms: uea_json(g, &g.from_vector(&c.vector)),
    }
}

pub fn tensor_json(t: &TensorPower, x: &yangw_core::TensorElement) -> Vec<TermJson> {
    terms_json(&t.render(x))
}

/// One row of the dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRowJson {
    pub degree: usize,
    pub pbw_count: u64,
    pub sym_dim: u64,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsJson {
    pub schema_version: u32,
    pub params: ParamSet,
    pub rows: Vec<DimsRowJson>,
}
