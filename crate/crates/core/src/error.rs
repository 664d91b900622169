use alloc::string::String;

/// Errors produced by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("gcd({q}, {n}) != 1")]
    NotCoprime { q: u64, n: u64 },
    #[error("invalid modulus pair ({n1}, {n2}): {reason}")]
    InvalidPair {
        n1: u64,
        n2: u64,
        reason: &'static str,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("{n} does not divide the multiplicative group order of the field")]
    RootOrderMismatch { n: u64 },
    #[error("element has order {found}, expected {expected}")]
    DegenerateRoot { expected: u64, found: u64 },
    #[error("exact-integer capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error("residue {a} out of range for modulus {n}")]
    OutOfRange { a: u64, n: u64 },
    #[error("coefficient {value} is not reduced modulo {q}")]
    Unreduced { value: u64, q: u64 },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("cyclotomic partition check failed: {0}")]
    Partition(String),
    #[error("q lies in D_{found}, this construction requires {required}")]
    WrongClass { found: u8, required: &'static str },
    #[error("inadmissible index triple ({0}, {1}, {2})")]
    InadmissibleTriple(u8, u8, u8),
    #[error("closed form is unverifiable: {0}")]
    UnverifiableBranch(String),
    #[error("theorem {requested} does not match the constructor of this code")]
    MismatchedTheorem { requested: u8 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
