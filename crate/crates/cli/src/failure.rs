//! Uniform failure type for the command-line surface.  Every library error
//! maps to a stable error code, an explanatory detail string, and (where the
//! library produced one) a structured counterexample, so scripted callers
//! can branch on `code` without parsing prose.

use serde_json::{json, Value};
use std::path::Path;
use tropmat_core::bmod::BModError;
use tropmat_core::cone::ConeError;
use tropmat_core::groups::GroupError;
use tropmat_core::json::JsonError;
use tropmat_core::linsub::LinsubError;
use tropmat_core::matroid::MatroidError;
use tropmat_core::perm::PermError;
use tropmat_core::tropspace::TropSpaceError;
use tropmat_core::valuated::ValuatedError;

/// Exit code for data that parses but fails domain validation.
pub const EXIT_VALIDATION: u8 = 2;
/// Exit code for command-line misuse.
pub const EXIT_USAGE: u8 = 64;
/// Exit code for unreadable input files.
pub const EXIT_IO: u8 = 66;

#[derive(Debug)]
pub struct Failure {
    pub exit: u8,
    pub code: &'static str,
    pub detail: String,
    pub counterexample: Option<Value>,
}

impl Failure {
    pub fn validation(code: &'static str, detail: impl Into<String>) -> Failure {
        Failure { exit: EXIT_VALIDATION, code, detail: detail.into(), counterexample: None }
    }

    pub fn usage(detail: impl Into<String>) -> Failure {
        Failure { exit: EXIT_USAGE, code: "usage", detail: detail.into(), counterexample: None }
    }

    pub fn io(path: &Path, err: &std::io::Error) -> Failure {
        Failure {
            exit: EXIT_IO,
            code: "io",
            detail: format!("cannot read {}: {err}", path.display()),
            counterexample: None,
        }
    }

    fn with(mut self, counterexample: Value) -> Failure {
        self.counterexample = Some(counterexample);
        self
    }

    /// The structured error object emitted on exit code 2.
    pub fn object(&self) -> Value {
        let mut pairs = vec![
            ("code", json!(self.code)),
            ("detail", json!(self.detail)),
        ];
        if let Some(ce) = &self.counterexample {
            pairs.push(("counterexample", ce.clone()));
        }
        tropmat_core::json::object(pairs)
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Failure {
        Failure::validation("bad-input", e.to_string())
    }
}

impl From<MatroidError> for Failure {
    fn from(e: MatroidError) -> Failure {
        let detail = e.to_string();
        match e {
            MatroidError::ExchangeFailure { b, b_prime, u } => {
                Failure::validation("exchange-failure", detail)
                    .with(json!({ "b": b, "b_prime": b_prime, "u": u }))
            }
            _ => Failure::validation("bad-matroid", detail),
        }
    }
}

impl From<ValuatedError> for Failure {
    fn from(e: ValuatedError) -> Failure {
        let detail = e.to_string();
        match e {
            ValuatedError::SupportMismatch(_) => Failure::validation("support-mismatch", detail),
            ValuatedError::ExchangeValueFailure { b, b_prime, u } => {
                Failure::validation("value-exchange-failure", detail)
                    .with(json!({ "b": b, "b_prime": b_prime, "u": u }))
            }
            ValuatedError::BadPermutation(_) => Failure::validation("bad-permutation", detail),
            ValuatedError::NotSimple => Failure::validation("not-simple", detail),
        }
    }
}

impl From<PermError> for Failure {
    fn from(e: PermError) -> Failure {
        Failure::validation("bad-permutation", e.to_string())
    }
}

impl From<TropSpaceError> for Failure {
    fn from(e: TropSpaceError) -> Failure {
        let detail = e.to_string();
        match e {
            TropSpaceError::NotSimple => Failure::validation("not-simple", detail),
            TropSpaceError::DimensionMismatch { .. } => {
                Failure::validation("dimension-mismatch", detail)
            }
            TropSpaceError::PartitionAssertionFailure(_) => {
                Failure::validation("internal-assertion", detail)
            }
            TropSpaceError::Section(g) => g.into(),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Failure {
        let detail = e.to_string();
        match e {
            GroupError::BadGroup(_) => Failure::validation("bad-group", detail),
            GroupError::BadHom(_) => Failure::validation("bad-homomorphism", detail),
            GroupError::BadLift(_) => Failure::validation("bad-lift", detail),
            GroupError::CocycleOutsideV { sigma, rho } => {
                Failure::validation("cocycle-outside-v", detail)
                    .with(json!({ "sigma": sigma, "rho": rho }))
            }
            GroupError::Unsolvable => Failure::validation("internal-assertion", detail),
            GroupError::ImageMismatch(g) => {
                Failure::validation("image-mismatch", detail).with(json!({ "element": g }))
            }
            GroupError::NotTorsion { .. } => Failure::validation("not-torsion", detail),
        }
    }
}

impl From<LinsubError> for Failure {
    fn from(e: LinsubError) -> Failure {
        let detail = e.to_string();
        match e {
            LinsubError::DimensionMismatch { .. } => {
                Failure::validation("dimension-mismatch", detail)
            }
            LinsubError::NotAGroup => Failure::validation("not-a-group", detail),
            LinsubError::CapExceeded { .. } => Failure::validation("cap-exceeded", detail),
            LinsubError::MeetAssertionFailure => Failure::validation("internal-assertion", detail),
        }
    }
}

impl From<ConeError> for Failure {
    fn from(e: ConeError) -> Failure {
        let detail = e.to_string();
        match e {
            ConeError::RayDimensionMismatch { .. } => {
                Failure::validation("dimension-mismatch", detail)
            }
            ConeError::ZeroRay(i) => {
                Failure::validation("zero-ray", detail).with(json!({ "ray": i }))
            }
            ConeError::ContainsLine => Failure::validation("contains-line", detail),
            ConeError::NonExtremeRay(i) => {
                Failure::validation("non-extreme-ray", detail).with(json!({ "ray": i }))
            }
            ConeError::CapExceeded { .. } => Failure::validation("cap-exceeded", detail),
            ConeError::PartitionAssertionFailure(_) => {
                Failure::validation("internal-assertion", detail)
            }
        }
    }
}

impl From<BModError> for Failure {
    fn from(e: BModError) -> Failure {
        let detail = e.to_string();
        match e {
            BModError::CapExceeded { .. } => Failure::validation("cap-exceeded", detail),
            BModError::ElementOutOfRange { .. } => Failure::validation("bad-presentation", detail),
        }
    }
}
