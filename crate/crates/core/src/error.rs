//! Crate-wide error type.

use crate::clifford::CliffordError;
use crate::groups::GroupParseError;
use crate::ktheory::KTheoryError;
use crate::modules::ModuleError;
use crate::series::SeriesError;
use crate::steenrod::SteenrodError;

/// Any error raised by the library, tagged by subsystem.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Steenrod(#[from] SteenrodError),
    #[error(transparent)]
    KTheory(#[from] KTheoryError),
    #[error(transparent)]
    GroupParse(#[from] GroupParseError),
}

impl Error {
    /// Stable machine-readable code, e.g. `"clifford"`.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Clifford(_) => "clifford",
            Error::Module(_) => "module",
            Error::Series(_) => "series",
            Error::Steenrod(_) => "steenrod",
            Error::KTheory(_) => "ktheory",
            Error::GroupParse(_) => "group-parse",
        }
    }
}
