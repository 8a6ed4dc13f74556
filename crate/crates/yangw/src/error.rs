use yangw_core::RectangleError;

use crate::config::ParamSet;

/// Invalid user input.
#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot parse parameter set {0:?} (expected m,n,l[,seq])")]
    BadParamSet(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("unknown dump selector {0:?} (use rectangle, w-generators, kappa-images or centralizer)")]
    UnknownSelector(String),
    #[error("invalid rectangle {0}: {1}")]
    Rectangle(ParamSet, #[source] RectangleError),
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot serialise output: {0}")]
    Json(#[from] serde_json::Error),
    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}
