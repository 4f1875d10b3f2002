use std::fmt::Display;

use hopfkit::catalog::CatalogError;
use hopfkit::census::CensusError;
use hopfkit::coalgebra::CoalgebraError;
use hopfkit::comatrix::ComatrixError;
use hopfkit::hopf::HopfError;
use hopfkit::interchange::InterchangeError;
use hopfkit::linalg::LinalgError;

pub const CHECK_FAILED: u8 = 1;
pub const BAD_PARAMETER: u8 = 2;
pub const IO: u8 = 3;
pub const PARSE: u8 = 4;
pub const NOT_SPLIT: u8 = 5;
pub const NOT_COALGEBRA_MAP: u8 = 6;
pub const OTHER: u8 = 7;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        CliError { code, message: message.into() }
    }

    pub fn bad(message: impl Into<String>) -> Self {
        Self::new(BAD_PARAMETER, message)
    }

    pub fn other(message: impl Into<String>) -> Self {
        Self::new(OTHER, message)
    }

    pub fn io(path: impl Display, e: std::io::Error) -> Self {
        Self::new(IO, format!("{path}: {e}"))
    }
}

impl From<CoalgebraError> for CliError {
    fn from(e: CoalgebraError) -> Self {
        match e {
            CoalgebraError::NotSplit { .. } => CliError::new(NOT_SPLIT, e.to_string()),
            CoalgebraError::NotCoalgebraMap(_) => CliError::new(NOT_COALGEBRA_MAP, e.to_string()),
            _ => CliError::other(e.to_string()),
        }
    }
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        match e {
            HopfError::Coalgebra(c) => c.into(),
            _ => CliError::other(e.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::BadParameter(_) | CatalogError::UnknownEntry(_) => CliError::bad(e.to_string()),
            CatalogError::Hopf(h) => h.into(),
            CatalogError::Coalgebra(c) => c.into(),
        }
    }
}

impl From<InterchangeError> for CliError {
    fn from(e: InterchangeError) -> Self {
        match e {
            InterchangeError::Parse(_) => CliError::new(PARSE, e.to_string()),
            InterchangeError::Hopf(h) => h.into(),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::Scenario(_) => CliError::new(PARSE, e.to_string()),
            _ => CliError::bad(e.to_string()),
        }
    }
}

impl From<ComatrixError> for CliError {
    fn from(e: ComatrixError) -> Self {
        match e {
            ComatrixError::NotCoalgebraMap(_) => CliError::new(NOT_COALGEBRA_MAP, e.to_string()),
            ComatrixError::Coalgebra(c) => c.into(),
            ComatrixError::Linalg(LinalgError::EigenvaluesNotInField) => {
                CliError::new(NOT_SPLIT, format!("{e}; retry with a larger --field-order"))
            }
            _ => CliError::other(e.to_string()),
        }
    }
}
