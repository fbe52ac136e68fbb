//! Finite permutation groups: subgroup lattices, series, class predicates,
//! isomorphism, a small-group corpus and a verifier for statements about
//! ICΦ-subgroups.

pub mod classify;
pub mod corpus;
pub mod error;
pub mod format;
pub mod iso;
pub mod lattice;
pub mod numtheory;
pub mod perm;
pub mod report;
pub mod series;
pub mod verify;

pub use corpus::{build_corpus, materialize, Corpus, CorpusEntry, GroupRecipe};
pub use error::{GroupError, Result};
pub use lattice::{SubgroupLattice, View};
pub use perm::{ElemSet, FiniteGroup, Permutation, Subgroup, MAX_DEGREE, ORDER_BUDGET};
pub use report::{run_verify, GroupSummary, RunOptions, RunReport};
pub use series::{quotient, ChiefSeries, QuotientGroup};
pub use verify::{
    is_icphi_subgroup, verify, Conclusion, GroupAnalysis, Hypothesis, StatementId,
    VerificationVerdict,
};
