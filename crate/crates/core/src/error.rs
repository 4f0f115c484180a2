use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the algebra layer can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("modulus is reducible over GF({p}) (factor of degree {factor_degree})")]
    ReducibleModulus { p: u32, factor_degree: u32 },
    #[error("no built-in modulus for GF({p}^{e}); supply one explicitly")]
    NoDefaultModulus { p: u32, e: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(&'static str),
    #[error("GF({p}^{e}) is outside the supported range")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("invalid field element representation")]
    InvalidElement,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to incompatible fields")]
    FieldMismatch,
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at offset {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("substitution expects {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("Groebner basis computation exceeded its limits: {0}")]
    DegreeOverflow(&'static str),
    #[error("quotient by the zero ideal")]
    ZeroDivisorIdeal,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("space has more than {limit} points")]
    SizeOverflow { limit: u64 },
    #[error("projective zero set requested for a non-homogeneous ideal")]
    NonHomogeneousProjective,
    #[error("the variety is empty")]
    EmptyVariety,
    #[error("generator {index} is not homogeneous")]
    NonHomogeneousGenerator { index: usize },
    #[error("the ideal has no nonzero generators")]
    ZeroGeneratorCount,
    #[error("emptiness classification failed: {0}")]
    ClassificationFailure(String),
    #[error("certificate check failed: {0}")]
    CertificateCheck(String),
    #[error("polynomial is not in the vanishing ideal")]
    NotInVanishingIdeal,
    #[error("generator coefficients must lie in GF({0})")]
    MixedCoefficients(u32),
    #[error("counterexample suite failed at group `{0}`")]
    SuiteFailure(String),
}
