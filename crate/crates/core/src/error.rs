use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("image array is not a bijection: {0}")]
    NotBijective(String),

    #[error("group of order {order} exceeds the enumeration cap of {cap} elements")]
    TooLarge { order: String, cap: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("argument must be positive")]
    Zero,

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameter {parameter} for family `{family}`: {reason}")]
    InvalidParameter {
        family: String,
        parameter: u64,
        reason: &'static str,
    },

    #[error("parameter {0} is not made of primes dividing the group order")]
    ParameterOutOfRange(String),

    #[error("element is not a member of the group")]
    NotInGroup,

    #[error("index set is not a subgroup of the group")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error(
        "no prime congruent to 1 mod {exponent} and above 2*sqrt({order}) found below {bound}"
    )]
    DixonPrimeNotFound {
        exponent: u64,
        order: u64,
        bound: u64,
    },

    #[error("eigenspace refinement stalled with {found} spaces for {expected} classes")]
    EigenspaceSplit { found: usize, expected: usize },

    #[error("degree recovery failed mod {prime}: {reason}")]
    DegreeRecovery { prime: u64, reason: &'static str },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate group name `{0}`")]
    DuplicateName(String),

    #[error("no group named `{0}`")]
    UnknownGroup(String),
}
