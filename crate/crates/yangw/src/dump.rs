//! Structured dumps of rectangles and generator families.

use std::str::FromStr;

use yangw_core::walgebra::WAlgebra;

use crate::config::ParamSet;
use crate::error::ConfigError;
use crate::json::{centralizer_json, rectangle_json, tensor_json, uea_json, ElementDumpJson, IndexedElementJson, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DumpSelector {
    Rectangle,
    WGenerators,
    KappaImages,
    Centralizer,
}

impl DumpSelector {
    pub fn name(self) -> &'static str {
        match self {
            DumpSelector::Rectangle => "rectangle",
            DumpSelector::WGenerators => "w-generators",
            DumpSelector::KappaImages => "kappa-images",
            DumpSelector::Centralizer => "centralizer",
        }
    }
}

impl FromStr for DumpSelector {
    type Err = ConfigError;
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        [
            DumpSelector::Rectangle,
            DumpSelector::WGenerators,
            DumpSelector::KappaImages,
            DumpSelector::Centralizer,
        ]
        .into_iter()
        .find(|d| d.name() == s)
        .ok_or_else(|| ConfigError::UnknownSelector(s.to_string()))
    }
}

/// The requested dump as a JSON value.
pub fn dump(params: &ParamSet, what: DumpSelector) -> Result<serde_json::Value, ConfigError> {
    let rect = params
        .rectangle()
        .map_err(|e| ConfigError::Rectangle(params.clone(), e))?;
    let elements_doc = |elements| ElementDumpJson {
        schema_version: SCHEMA_VERSION,
        params: params.clone(),
        what: what.name().to_string(),
        elements,
    };
    let value = match what {
        DumpSelector::Rectangle => serde_json::to_value(rectangle_json(params, &rect)),
        DumpSelector::Centralizer => {
            let g = rect.gl();
            let els = rect.centralizer_basis().iter().map(|c| centralizer_json(g, &rect, c)).collect();
            serde_json::to_value(elements_doc(els))
        }
        DumpSelector::WGenerators => {
            let w = WAlgebra::new(rect);
            let els = w
                .w_generators()
                .iter()
                .map(|g| IndexedElementJson {
                    i: g.i + 1,
                    j: g.j + 1,
                    r: g.r,
                    odd: (w.rectangle().row_parity(g.i) + w.rectangle().row_parity(g.j)).is_odd(),
                    terms: uea_json(w.gl(), &g.value),
                })
                .collect();
            serde_json::to_value(elements_doc(els))
        }
        DumpSelector::KappaImages => {
            let w = WAlgebra::new(rect);
            let y = w.yangian();
            let fam = y.kappa_family();
            let els = fam
                .keys()
                .map(|k| IndexedElementJson {
                    i: k.i + 1,
                    j: k.j + 1,
                    r: k.r,
                    odd: fam.parity(k).is_odd(),
                    terms: tensor_json(y.tensor(), fam.get(k).expect("in range")),
                })
                .collect();
            serde_json::to_value(elements_doc(els))
        }
    };
    Ok(value.expect("plain data serializes"))
}
