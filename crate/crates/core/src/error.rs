use thiserror::Error;

/// Errors raised by the library.
///
/// Variant names are stable: the command-line front end prints them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("facet {facet:?} has determinant {det}, expected +-1")]
    NotSmooth { facet: Vec<usize>, det: i64 },
    #[error("fan is not complete: {0}")]
    NotComplete(String),
    #[error("rays do not span the ambient space")]
    RaysNotSpanning,
    #[error("ray {0} is not primitive")]
    NonPrimitiveRay(usize),
    #[error("invalid fan data: {0}")]
    InvalidFan(String),
    #[error("grading matrix is not a Gale dual of the rays: {0}")]
    InvalidGrading(String),
    #[error("nef cone is not pointed")]
    NotPointed,
    #[error("nef cone is not full-dimensional")]
    NotFullDimensional,
    #[error("lattice search exhausted its bound of {0}")]
    SearchExhausted(i64),

    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,
    #[error("degree fiber exceeds the cap of {0} monomials")]
    FiberTooLarge(usize),

    #[error("leading term of the zero polynomial")]
    ZeroPolynomial,
    #[error("interpolated polynomial disagrees with sampled Hilbert function for face {0:?}")]
    InterpolationInconsistent(Vec<usize>),

    #[error("variable choice {variable} is not a proper divisor of a minimal generator")]
    StrategyInvalid { variable: usize },
    #[error("Stanley pairs {0} and {1} overlap")]
    OverlappingPairs(usize, usize),

    #[error("operation unsupported: {0}")]
    Unsupported(String),
    #[error("filtration is not a Stanley filtration of the ideal")]
    FiltrationInvalid,
    #[error("no baseline regularity region recorded for face {0:?}")]
    MissingBaseline(Vec<usize>),
    #[error("no B-saturated monomial ideal has this Hilbert polynomial")]
    NoSaturatedIdeal,
    #[error("the enumeration produced no representation of the polynomial")]
    NoRepresentation,

    #[error("not a Hilbert polynomial: {0}")]
    NotAHilbertPolynomial(String),
    #[error("polynomial is not realizable in {0} variables")]
    NotRealizable(usize),

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(usize),
    #[error("Hilbert value {value} is infeasible in degree {degree:?} (fiber size {fiber})")]
    InfeasibleHilbertValue { degree: Vec<i64>, value: String, fiber: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short stable identifier of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSmooth { .. } => "NotSmooth",
            Error::NotComplete(_) => "NotComplete",
            Error::RaysNotSpanning => "RaysNotSpanning",
            Error::NonPrimitiveRay(_) => "NonPrimitiveRay",
            Error::InvalidFan(_) => "InvalidFan",
            Error::InvalidGrading(_) => "InvalidGrading",
            Error::NotPointed => "NotPointed",
            Error::NotFullDimensional => "NotFullDimensional",
            Error::SearchExhausted(_) => "SearchExhausted",
            Error::UnitIdeal => "UnitIdeal",
            Error::FiberTooLarge(_) => "FiberTooLarge",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::InterpolationInconsistent(_) => "InterpolationInconsistent",
            Error::StrategyInvalid { .. } => "StrategyInvalid",
            Error::OverlappingPairs(..) => "OverlappingPairs",
            Error::Unsupported(_) => "Unsupported",
            Error::FiltrationInvalid => "FiltrationInvalid",
            Error::MissingBaseline(_) => "MissingBaseline",
            Error::NoSaturatedIdeal => "NoSaturatedIdeal",
            Error::NoRepresentation => "NoRepresentation",
            Error::NotAHilbertPolynomial(_) => "NotAHilbertPolynomial",
            Error::NotRealizable(_) => "NotRealizable",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::InfeasibleHilbertValue { .. } => "InfeasibleHilbertValue",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::Parse(_) => "Parse",
        }
    }

    /// Parse errors map to a different process exit status than domain errors.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
