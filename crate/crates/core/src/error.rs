use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a group needs at least one cyclic factor")]
    NoFactors,
    #[error("cyclic factor {0} is smaller than 2")]
    FactorTooSmall(u64),
    #[error("group order overflows 64-bit signed arithmetic")]
    OrderOverflow,
    #[error("element has {found} coordinates, group has {expected} factors")]
    ArityMismatch { expected: usize, found: usize },
    #[error("coordinate {value} is out of range for factor Z_{modulus}")]
    CoordinateOutOfRange { value: u64, modulus: u64 },
    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("coefficient overflow in group-algebra arithmetic")]
    CoefficientOverflow,
    #[error("the given set is not a subgroup")]
    NotSubgroup,
    #[error("invalid set family: {0}")]
    InvalidFamily(String),
    #[error("set index {index} out of range for a family of {m} sets")]
    SetIndexOutOfRange { index: usize, m: usize },
    #[error("lambda must be positive")]
    NonPositiveLambda,
    #[error("n = {0} is outside the supported range for cyclotomic polynomials")]
    CyclotomicOutOfRange(u64),
    #[error("polynomial coefficient overflow")]
    PolynomialOverflow,
    #[error("the principal character is not allowed here")]
    PrincipalCharacter,
    #[error("the character sum does not vanish")]
    NotVanishing,
    #[error("group order {0} is not a product of two distinct primes")]
    NotTwoPrimes(u64),
    #[error("split analysis needs chi(D) != 0")]
    VanishingTotal,
    #[error("split analysis needs m > 3 (got {0})")]
    TooFewSets(usize),
    #[error("parameters ({v},{m},{k},{lambda}) violate k^2(m-1) = lambda(v-1)")]
    Inadmissible { v: u64, m: u64, k: u64, lambda: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("bound exceeded: {value} > {bound}")]
    BoundExceeded { value: u64, bound: u64 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
