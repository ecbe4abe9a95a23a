//! Machine-readable errors and exit codes.

use serde_json::{json, Value};
use sjf_eisenstein::EisError;
use sjf_exact::ExactError;
use sjf_fourier::FourierError;
use sjf_group::GroupError;
use sjf_hecke::HeckeError;
use sjf_lfunction::LfError;
use sjf_theta::ThetaError;
use std::fmt;
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug, PartialEq)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub violated_condition: String,
    pub exit: i32,
}

impl CliError {
    pub fn new(code: &str, message: impl Into<String>, condition: impl Into<String>, exit: i32) -> Self {
        CliError { code: code.into(), message: message.into(), violated_condition: condition.into(), exit }
    }

    pub fn usage(message: impl Into<String>, condition: impl Into<String>) -> Self {
        Self::new("usage", message, condition, EXIT_USAGE)
    }

    pub fn io(path: &Path, e: std::io::Error) -> Self {
        Self::new("io", format!("{}: {e}", path.display()), "readable and writable paths", EXIT_USAGE)
    }

    pub fn format(message: impl Into<String>) -> Self {
        Self::new("format", message, "valid expansion file", EXIT_USAGE)
    }

    /// A check that ran to completion and failed.
    pub fn assertion(message: impl Into<String>, condition: impl Into<String>) -> Self {
        Self::new("assertion_failed", message, condition, EXIT_ASSERT)
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "code": self.code, "message": self.message, "violated_condition": self.violated_condition } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

impl std::error::Error for CliError {}

fn precondition(code: &str, message: String, condition: &str) -> CliError {
    CliError::new(code, message, condition, EXIT_USAGE)
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        let cond = match &e {
            ExactError::DivisionByZero => "nonzero divisor",
            ExactError::InfiniteValuation => "nonzero argument of the valuation",
            ExactError::NotPrime(_) => "p is prime",
            ExactError::DimensionMismatch(_) => "matching dimensions",
            ExactError::Singular => "nonsingular matrix",
            ExactError::NotSquare => "square matrix",
            ExactError::NotSymmetric => "symmetric matrix",
            ExactError::ConstantTermNotOne => "constant term 1",
            ExactError::Parse(_) => "rational syntax p/q",
        };
        precondition("exact", e.to_string(), cond)
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        let cond = match &e {
            GroupError::DimensionMismatch(_) => "matching dimensions",
            GroupError::NotSymplectic => "tg J g = J",
            GroupError::KappaNotSymmetric => "kappa symmetric",
            GroupError::NotInParabolic { .. } => "element in the parabolic subgroup",
            GroupError::NearSingular(_) => "c tau + d invertible",
            GroupError::NotPositiveDefinite(_) => "Im tau positive definite",
            GroupError::InvalidIndex(_) => "valid weight and index",
            GroupError::Evaluation(_) => "evaluation succeeds",
            GroupError::Exact(x) => return x.clone().into(),
        };
        precondition("group", e.to_string(), cond)
    }
}

impl From<FourierError> for CliError {
    fn from(e: FourierError) -> Self {
        let cond = match &e {
            FourierError::Incompatible(_) => "compatible expansions",
            FourierError::InvalidKey(_) => "t symmetric positive semidefinite, r of size l x n",
            FourierError::InvalidMeta(_) => "valid weight, index and level",
            FourierError::Exact(x) => return x.clone().into(),
            FourierError::Group(x) => return x.clone().into(),
        };
        precondition("fourier", e.to_string(), cond)
    }
}

impl From<ThetaError> for CliError {
    fn from(e: ThetaError) -> Self {
        let cond = match &e {
            ThetaError::NotPositiveDefinite => "S positive definite",
            ThetaError::SingularLattice => "nonsingular lattice basis",
            ThetaError::NotContained => "second lattice contained in the first",
            ThetaError::SupportViolation { .. } => "4t >= tr S^-1 r",
            ThetaError::NotInLattice(_) => "(2S)^-1 r in the first lattice",
            ThetaError::Inconsistent { .. } => "theta-structured coefficients",
            ThetaError::Shape(_) => "matching shapes",
            ThetaError::Exact(x) => return x.clone().into(),
            ThetaError::Fourier(x) => return x.clone().into(),
        };
        precondition("theta", e.to_string(), cond)
    }
}

impl From<HeckeError> for CliError {
    fn from(e: HeckeError) -> Self {
        let cond = match &e {
            HeckeError::InvalidXi => "xi square integral nonsingular",
            HeckeError::NotPrimePower(_) => "prime-power diagonal",
            HeckeError::ParityMismatch { .. } => "psi(-1) = (-1)^k",
            HeckeError::InvalidCharacter(_) => "multiplicative character table",
            HeckeError::Unsupported(_) => "supported input",
            HeckeError::NotRational(_) => "rational coefficients",
            HeckeError::VanishingProbe => "f nonzero at a probe point",
            HeckeError::Exact(x) => return x.clone().into(),
            HeckeError::Group(x) => return x.clone().into(),
            HeckeError::Fourier(x) => return x.clone().into(),
        };
        precondition("hecke", e.to_string(), cond)
    }
}

impl From<LfError> for CliError {
    fn from(e: LfError) -> Self {
        let cond = match &e {
            LfError::ZeroSatake(_) => "nonzero Satake parameters",
            LfError::Ramified { .. } => "p does not divide the level",
            LfError::NonRegular(_) => "S regular at p",
            LfError::GammaPole(_) => "argument away from Gamma poles",
            LfError::Inadmissible { condition, .. } => condition.as_str(),
            LfError::Unsupported(_) => "supported input",
            LfError::InvalidInput(_) => "valid input",
            LfError::Exact(x) => return x.clone().into(),
            LfError::Hecke(x) => return x.clone().into(),
        };
        precondition("lfunction", e.to_string(), cond)
    }
}

impl From<EisError> for CliError {
    fn from(e: EisError) -> Self {
        let cond = match &e {
            EisError::Convergence { .. } => "Re(2s) > l + 2",
            EisError::Parity { .. } => "chi(-1) = (-1)^k",
            EisError::ThetaZero(_) => "theta nonzero at the point",
            EisError::NotThetaGroup(_) => "gamma in the theta group",
            EisError::NotEigen { .. } => {
                return CliError::new("eisenstein", e.to_string(), "eigenfunction residual below the abort limit", EXIT_ASSERT);
            }
            EisError::Unsupported(_) => "supported input",
            EisError::InvalidInput(_) => "valid input",
            EisError::Exact(x) => return x.clone().into(),
            EisError::Group(x) => return x.clone().into(),
            EisError::Hecke(x) => return x.clone().into(),
        };
        precondition("eisenstein", e.to_string(), cond)
    }
}
