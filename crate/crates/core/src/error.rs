use thiserror::Error;

/// Errors raised by the group engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("image list of length {degree} is not a permutation of 0..{degree}")]
    NotABijection { degree: usize },

    #[error("degree {0} exceeds the supported maximum of {max}", max = crate::perm::MAX_DEGREE)]
    DegreeTooLarge(usize),

    #[error("group order exceeds the budget of {limit} elements")]
    OrderBudget { limit: usize },

    #[error("automorphism budget exceeded: {0}")]
    AutomorphismBudget(String),

    #[error("search exceeded its budget of {0} nodes")]
    SearchBudget(usize),

    #[error("{0} is not a prime")]
    NotPrime(usize),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("invalid recipe: {0}")]
    Recipe(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
