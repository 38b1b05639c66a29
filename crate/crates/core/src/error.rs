use thiserror::Error;

/// Errors raised by ring, ideal and multiplicative-set operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("divisibility is not decidable here: {0}")]
    UnsupportedDivisibility(String),
    #[error("Rt != Rt^2, so t is not associated to an idempotent")]
    NoIdempotent,
    #[error("map is not a ring homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("the set meets zero")]
    ContainsZero,
    #[error("the set is not multiplicatively closed: {0}")]
    NotMultiplicative(String),
    #[error("ideal is not prime")]
    NotPrime,
    #[error("map is not surjective")]
    NotSurjective,
    #[error("ideal meets the multiplicative set")]
    NotDisjoint,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("chain with |k| <= 1 does not descend")]
    DegenerateChain,
    #[error("variable index {index} exceeds bound {bound}")]
    IndexOutOfBound { index: u32, bound: u32 },
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("enumeration over {size} elements exceeds the bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
