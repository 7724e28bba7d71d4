//! Exact validation and construction of generalised Reichenbachian common
//! cause systems on finite probability spaces.
//!
//! All arithmetic is over [`Rational`]. The crate covers:
//!
//! * [`space`]: probability spaces, events, partitions, correlation.
//! * [`models`]: validators for the fork, the generalised common cause and
//!   the four common cause system variants, plus the deviation identities.
//! * [`admissible`]: admissible number sets and their generators.
//! * [`extension`]: extending a space so that it hosts a system of a given size.
//! * [`search`]: exhaustive partition search and randomized falsification.
//! * [`io`]: the JSON space file.

#![allow(clippy::result_large_err)]

pub mod admissible;
pub mod bounds;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod io;
pub mod models;
pub mod rational;
pub mod report;
pub mod search;
pub mod space;

pub use admissible::{
    complete_tail, construct_admissible, construct_hr_admissible, construct_m_admissible,
    existence_condition, is_admissible, is_hr_admissible, is_m_admissible, is_quasi_admissible,
    realized_deviation, AdmissibleSet, Entry, Family, TargetProfile,
};
pub use bounds::{infeasibility_certificate, Certificate, Region};
pub use error::{Error, Result};
pub use extension::{
    cell_probabilities, extend_with_rccs, induced_event, split_ratios, verify_extension,
    ExtensionResult, SplitRatios,
};
pub use io::SpaceDocument;
pub use models::{
    check_conjunctive_common_cause, check_generalised_common_cause, check_ghr_rccs, check_gm_rccs,
    check_hr_rccs, check_m_rccs, check_system, decompose_correlation, hr_deviation_formula,
    m_deviation_formula,
};
pub use rational::Rational;
pub use report::{Clause, ConditionReport, Model, Relation};
pub use search::{
    enumerate_partitions, find_rccs, sample_admissible_search, stirling2, SearchQuery, SearchReport,
};
pub use space::{Event, Partition, ProbabilitySpace, SpaceId};
