//! Identity fixtures, exact point checks and an exhaustive search oracle.

pub mod fixture;
pub mod search;
pub mod suite;

pub use fixture::{load_corpus, parse_fixtures, IdentityFixture, BUILTIN_CORPUS, FIXTURES_ENV};
pub use search::{
    brute_search, check_point, cross_validate, CheckOutcome, CrossReport, SearchResult,
};
pub use suite::{literal_count, perturb, run_fixture, run_identity_suite, VerifyReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("fixture file line {line}: {msg}")]
    Fixture { line: usize, msg: String },
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("unknown fixture id {0}")]
    UnknownFixture(String),
    #[error("bad point: {0}")]
    BadPoint(String),
}
