use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("variable '{0}' is not part of the polynomial's context")]
    UnknownVariable(String),
    #[error("expected a univariate function of '{var}', found variables {found:?}")]
    NotUnivariate { var: String, found: Vec<String> },
    #[error("denominator factor of degree {degree} has no root in Q(i)")]
    IrreducibleDenominator { degree: usize },
    #[error("integration needs a logarithm: residue {residue} at {pole}")]
    LogTermRequired { pole: String, residue: String },
    #[error("antiderivative does not vanish at the base point: {0}")]
    DivergentAtBasepoint(String),
    #[error("expansion center {0} is a pole")]
    PoleAtCenter(String),
    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),
    #[error("gap sequence does not give a partition: {0}")]
    MalformedGaps(String),
    #[error("invalid curve specification: {0}")]
    InvalidCurve(String),
    #[error("residue system has {found} independent solutions, expected {expected}")]
    RankDeficient { expected: usize, found: usize },
    #[error("Rosenlicht residue condition violated: {0}")]
    ResidueCondition(String),
    #[error("elimination exceeded its budget after {reductions} reductions ({elapsed_ms} ms)")]
    EliminationTimeout { reductions: u64, elapsed_ms: u128 },
    #[error("elimination ideal is not principal: {0}")]
    NotHypersurface(String),
    #[error("strategy not applicable: {0}")]
    StrategyUnsupported(String),
    #[error("Groebner input must have real rational coefficients")]
    NonRationalInput,
    #[error("degree bound violated: {0}")]
    BoundViolated(String),
    #[error("leading term mismatch: expected {expected}, found {found}")]
    LeadingTermMismatch { expected: String, found: String },
    #[error("no real solution for the phases: {0}")]
    NoRealSolution(String),
    #[error("coefficient of {monomial} keeps imaginary part {value}")]
    ImaginaryResidue { monomial: String, value: String },
    #[error("tau has odd total degree {0} in (x, y)")]
    OddDegree(u32),
    #[error("block factors are not complex conjugates: {0}")]
    NotConjugate(String),
    #[error("certificate does not recombine to tau: {0}")]
    RecombinationMismatch(String),
    #[error("tau(0,0,0) = {0} is not positive")]
    NonpositiveConstant(String),
    #[error("no positivity certificate available: {0}")]
    Uncertified(String),
    #[error("tau is the zero polynomial")]
    ZeroTau,
    #[error("decay check failed: {0}")]
    DecayMismatch(String),
    #[error("limit diverges at epsilon = 0: {0}")]
    DivergentLimit(String),
    #[error("local model mismatch: {0}")]
    ModelMismatch(String),
}
