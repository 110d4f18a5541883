use thiserror::Error;

/// Why a proposed grading was rejected. Witnesses are rendered with the
/// ring's element labels so the message can be checked by hand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("component at degree {degree} is not an additive subgroup: {detail}")]
    NotSubgroup { degree: String, detail: String },
    #[error("components do not form a direct sum: {detail}")]
    NotDirectSum { detail: String },
    #[error("{x} (degree {g}) * {y} (degree {h}) = {product}, which is not in the component of degree {gh}")]
    NotMultiplicative { x: String, g: String, y: String, h: String, product: String, gh: String },
    #[error("unity {unity} does not lie in the identity component")]
    UnityOutsideIdentity { unity: String },
    #[error("grading group element {0} is unknown")]
    UnknownDegree(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no field table for order {order} = {p}^{k}; supported orders are primes and 4, 8, 9, 16 up to 16")]
    UnsupportedField { p: u64, k: u32, order: u64 },
    #[error("order {order} exceeds the size cap {cap}")]
    SizeCap { order: usize, cap: usize },
    #[error("subset is not closed under {op}: {detail}")]
    NotClosed { op: &'static str, detail: String },
    #[error("ring axiom violated: {0}")]
    RingAxiom(String),
    #[error("group axiom violated: {0}")]
    GroupAxiom(String),
    #[error("module axiom violated: {0}")]
    ModuleAxiom(String),
    #[error("ideal is not two-sided")]
    NotTwoSided,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("operands are graded by different groups")]
    GroupMismatch,
    #[error("invalid grading: {0}")]
    Grading(Box<GradingError>),
    #[error("not a graded ideal: the degree-{degree} component {component} of {element} is missing")]
    NotGraded { element: String, degree: String, component: String },
    #[error("{0} requires a proper ideal")]
    NotProper(&'static str),
    #[error("{what} cap exceeded: {size} > {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("the grading group must be abelian: {0}")]
    NonAbelian(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<GradingError> for Error {
    fn from(e: GradingError) -> Self {
        Error::Grading(Box::new(e))
    }
}
