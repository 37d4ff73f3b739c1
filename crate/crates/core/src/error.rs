use thiserror::Error;

/// Errors raised by ring construction and the search procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration or construction would exceed a configured limit.
    #[error("{what} exceeds the configured cap of {limit}")]
    CapExceeded { what: &'static str, limit: u64 },
    /// Tables or structure constants do not describe a unital ring.
    #[error("not a ring: {0}")]
    NotARing(String),
    /// The modulus polynomial of a Galois field factors over the prime field.
    #[error("polynomial {0:?} is reducible over the prime field")]
    ReduciblePolynomial(Vec<u32>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("the given set is not a subgroup")]
    NotASubgroup,
    #[error("element {0} is not a primitive idempotent")]
    NotPrimitive(u32),
    /// The ring was not constructed as a product of matrix rings over fields.
    #[error("ring is not given in Wedderburn form: {0}")]
    NotInWedderburnForm(String),
    /// Two computations that must agree did not. Always a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
