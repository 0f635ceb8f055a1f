use std::fmt;
use std::path::Path;

use cohsheaf::grmod::json::ModuleJson;
use cohsheaf::grmod::GradedModule;
use cohsheaf::ring::{PolyRing, DEFAULT_PRIME};
use cohsheaf::Error;

use crate::Common;

/// Failure of a CLI job, carrying its exit status.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input: exit 2.
    Input(String),
    /// Quotient Hom did not stabilize: exit 3.
    Stabilization(String),
    /// Input is well formed but violates a precondition: exit 4.
    Precondition(String),
    /// Anything else: exit 1.
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Stabilization(_) => 3,
            CliError::Precondition(_) => 4,
            CliError::Other(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Stabilization(m) | CliError::Precondition(m) | CliError::Other(m) => {
                f.write_str(m)
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse(_) | Error::InhomogeneousInput(_) | Error::NotPrime(_) => CliError::Input(msg),
            Error::StabilizationFailure { .. } => CliError::Stabilization(msg),
            Error::ZeroModule
            | Error::AmbientMismatch(_)
            | Error::DegreeMismatch { .. }
            | Error::NotWellDefined(_)
            | Error::SourceTargetMismatch(_)
            | Error::HypothesisViolation(_)
            | Error::GroupMismatch
            | Error::RepsEquivalent
            | Error::InvalidRepresentation(_)
            | Error::InvalidCategory(_)
            | Error::TooLarge(_) => CliError::Precondition(msg),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Without any hint the ambient space is the projective line.
pub const DEFAULT_NVARS: usize = 2;

/// Ring requested by the flags alone; `None` fields are left to the input files.
pub struct RingRequest {
    pub p: Option<u64>,
    pub nvars: Option<usize>,
}

impl RingRequest {
    pub fn from_flags(c: &Common) -> CliResult<Self> {
        let nvars = match (c.nvars, c.n) {
            (Some(a), Some(n)) if a != n + 1 => {
                return Err(CliError::Precondition(format!("--nvars {a} contradicts --n {n}")));
            }
            (Some(a), _) => Some(a),
            (None, Some(n)) => Some(n + 1),
            (None, None) => None,
        };
        Ok(RingRequest { p: c.p, nvars })
    }

    /// Merges a document's ring fields into the request, rejecting conflicts.
    pub fn merge(&mut self, doc: &ModuleJson) -> CliResult<()> {
        match (self.p, doc.p) {
            (Some(a), Some(b)) if a != b => {
                return Err(CliError::Precondition(format!("characteristic {b} in input differs from {a}")))
            }
            (None, b) => self.p = b,
            _ => {}
        }
        match (self.nvars, doc.nvars) {
            (Some(a), Some(b)) if a != b => {
                return Err(CliError::Precondition(format!("{b} variables in input differ from {a}")))
            }
            (None, b) => self.nvars = b,
            _ => {}
        }
        Ok(())
    }

    pub fn ring(&self) -> CliResult<PolyRing> {
        Ok(PolyRing::new(
            self.p.unwrap_or(DEFAULT_PRIME),
            self.nvars.unwrap_or(DEFAULT_NVARS),
        )?)
    }
}

pub fn read_doc(path: &Path) -> CliResult<ModuleJson> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Loads modules that must share one ring.
pub fn load_modules(common: &Common, paths: &[&Path]) -> CliResult<(PolyRing, Vec<GradedModule>)> {
    let mut req = RingRequest::from_flags(common)?;
    let docs = paths.iter().map(|p| read_doc(p)).collect::<CliResult<Vec<_>>>()?;
    for d in &docs {
        req.merge(d)?;
    }
    let ring = req.ring()?;
    let mods = docs
        .iter()
        .map(|d| d.to_module(ring).map_err(CliError::from))
        .collect::<CliResult<Vec<_>>>()?;
    Ok((ring, mods))
}

/// Parses `a..b` (inclusive).
pub fn parse_range(s: &str) -> CliResult<(i64, i64)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| CliError::Input(format!("range `{s}` is not of the form a..b")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| CliError::Input(format!("range `{s}`: {e}")))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(CliError::Input(format!("range `{s}` is empty")));
    }
    Ok((a, b))
}
