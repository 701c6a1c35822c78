use thiserror::Error;

#[derive(Debug, Error)]
pub enum IskpError {
    #[error("unknown molecule `{0}`; known: H2, HCl, LiH")]
    UnknownMolecule(String),

    #[error("molecule database at `{path}` is invalid: {reason}")]
    BadMoleculeDb { path: String, reason: String },

    #[error("no bound states: sqrt(R) = {sqrt_r:.6} <= Omega = {omega:.6}")]
    NoBoundStates { sqrt_r: f64, omega: f64 },

    #[error("recast disagrees with the closed form at n={n}: |dE| = {diff:.3e} (relative)")]
    InconsistentRecast { n: u32, diff: f64 },

    #[error("complex error function argument out of the supported domain: |z| = {0:.3}")]
    ErfDomain(f64),

    #[error("hypergeometric series does not terminate: a = {0} is not a negative integer (within 1e-6)")]
    NonTerminating(f64),

    #[error("hypergeometric lower parameter c = {c} hits a pole at term {term}")]
    HypergeometricPole { c: f64, term: u32 },

    #[error("derivative engine failed to converge (Richardson spread {spread:.3e} at h = {h:.3e})")]
    StepCollapse { spread: f64, h: f64 },

    #[error("finite-difference grid unresolved: eigenvalue drift {drift:.3e} eV between N and 2N points")]
    UnresolvedGrid { drift: f64 },

    #[error("calibration constant `{0}` is required but not set (run `validate` or pass it explicitly)")]
    CalibrationMissing(&'static str),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, IskpError>;
