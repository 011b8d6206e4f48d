use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma has a pole at x = {0}")]
    Pole(f64),
    #[error("gamma({0}) is not representable as a finite f64")]
    Overflow(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("order {0} is not a finite real")]
    NonFiniteOrder(f64),
    #[error("order {value} outside admissible range {range}")]
    OrderRange { value: f64, range: &'static str },
    #[error("kernel is singular at x = {x} for order {alpha}")]
    Singular { alpha: f64, x: f64 },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("point {x} lies outside the grid [{lo}, {hi}]")]
    OutOfGrid { x: f64, lo: f64, hi: f64 },
    #[error("constant mode c_0 = {0} cannot be fractionally integrated on the torus")]
    ConstantMode(f64),
    #[error("binomial series diverges: |b| = {b} >= |a| = {a}")]
    Divergent { a: f64, b: f64 },
    #[error("ODE step is unstable: h * rate = {0}")]
    UnstableStep(f64),
    #[error("csv: {0}")]
    Csv(String),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}

/// Non-fatal diagnostics that accompany a computed value.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// The function does not decay to zero at the grid ends.
    SupportViolation { edge_ratio: f64 },
    /// Requested spectral truncation exceeds what the sample count resolves.
    Aliasing { requested: usize, nyquist: usize },
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::SupportViolation { edge_ratio } => write!(
                f,
                "function is not compactly supported in its grid (edge/max = {edge_ratio:.3e})"
            ),
            Warning::Aliasing { requested, nyquist } => write!(
                f,
                "N = {requested} exceeds the resolvable maximum {nyquist}; high modes alias"
            ),
        }
    }
}

/// A value together with the warnings raised while computing it.
#[derive(Debug, Clone, PartialEq)]
pub struct Checked<T> {
    pub value: T,
    pub warnings: Vec<Warning>,
}

impl<T> Checked<T> {
    pub fn clean(value: T) -> Self {
        Checked { value, warnings: Vec::new() }
    }

    pub fn is_clean(&self) -> bool {
        self.warnings.is_empty()
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Checked<U> {
        Checked { value: f(self.value), warnings: self.warnings }
    }
}
