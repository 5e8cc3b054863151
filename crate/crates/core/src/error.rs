use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed group spec {spec:?}: {reason}")]
    Parse { spec: String, reason: String },

    #[error("cyclic factor order must be at least 1, got {0}")]
    InvalidOrder(i128),

    #[error("element or subgroup does not belong to the ambient group {expected}")]
    AmbientMismatch { expected: String },

    #[error("group component of order {size} exceeds the enumeration cap of {cap} elements")]
    CapExceeded { size: u128, cap: u128 },

    #[error("subgroup {0} is not cocyclic")]
    NotCocyclic(String),

    #[error("subgroups have different isomorphism types: {left} vs {right}")]
    TypeMismatch { left: String, right: String },

    #[error("characteristic {q} divides the group order {order}")]
    CharacteristicDividesOrder { q: u64, order: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("map is not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A constructed object failed its own post-validation.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),

    /// A cyclic subgroup expected to split off as a direct summand does not.
    #[error("not a direct summand: {0}")]
    NotDirectSummand(String),
}
