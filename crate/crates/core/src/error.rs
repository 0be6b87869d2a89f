use thiserror::Error;

use crate::subset::GroundSubset;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of size {0} is not supported")]
    GroundSetTooLarge(usize),
    #[error("element label {label} outside ground set of size {n}")]
    ElementOutOfRange { label: usize, n: usize },
    #[error("a matroid on {0} elements needs at least one basis")]
    EmptyBasisList(usize),
    #[error("basis {basis} has {found} elements, expected {expected}")]
    UnequalCardinalities {
        basis: GroundSubset,
        expected: usize,
        found: usize,
    },
    #[error("exchange axiom fails for {b1}, {b2} removing {}", .x + 1)]
    ExchangeAxiomViolated {
        b1: GroundSubset,
        b2: GroundSubset,
        x: usize,
    },
    #[error("circuit {smaller} is contained in circuit {larger}")]
    NotAnAntichain {
        smaller: GroundSubset,
        larger: GroundSubset,
    },
    #[error("circuit family does not define a matroid: {0}")]
    InconsistentCircuits(String),
    #[error("rank {r} is invalid for a ground set of size {n}")]
    InvalidRank { r: usize, n: usize },
    #[error("minor bounds are not nested: {lower} is not a subset of {upper}")]
    SpecNotNested {
        lower: GroundSubset,
        upper: GroundSubset,
    },
    #[error("matroid is not connected ({components} components)")]
    NotConnected { components: usize },
    #[error("matroid has a loop at element {}", .0 + 1)]
    NotLoopless(usize),
    #[error("weight vector has length {found}, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("{0} is not a flat")]
    NotAFlat(GroundSubset),
    #[error("{0} is not a flacet")]
    NotAFlacet(GroundSubset),
    #[error("not a building set: the interval below {0} does not factor")]
    NotABuildingSet(GroundSubset),
    #[error("building set does not contain the top element")]
    TopMissing,
    #[error("{0} is not a member of the building set")]
    MemberNotInBuildingSet(GroundSubset),
    #[error("flats {0:?} do not form a chain")]
    NotAChain(Vec<GroundSubset>),
    #[error("direct sum of the summands does not reproduce the matroid type of {0:?}")]
    ReassemblyMismatch(Vec<GroundSubset>),
    #[error("refinement audit failed on chain {chain:?}: {reason}")]
    AuditFailure {
        chain: Vec<GroundSubset>,
        reason: String,
    },
    #[error("partition of {finer_level} does not refine {coarser_level} on chain {chain:?}")]
    RefinementViolation {
        chain: Vec<GroundSubset>,
        finer_level: &'static str,
        coarser_level: &'static str,
    },
}

impl Error {
    /// Stable machine-readable code for structured output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::GroundSetTooLarge(_) => "GroundSetTooLarge",
            Error::ElementOutOfRange { .. } => "ElementOutOfRange",
            Error::EmptyBasisList(_) => "EmptyBasisList",
            Error::UnequalCardinalities { .. } => "UnequalCardinalities",
            Error::ExchangeAxiomViolated { .. } => "ExchangeAxiomViolated",
            Error::NotAnAntichain { .. } => "NotAnAntichain",
            Error::InconsistentCircuits(_) => "InconsistentCircuits",
            Error::InvalidRank { .. } => "InvalidRank",
            Error::SpecNotNested { .. } => "SpecNotNested",
            Error::NotConnected { .. } => "NotConnected",
            Error::NotLoopless(_) => "NotLoopless",
            Error::WeightLength { .. } => "WeightLength",
            Error::NotAFlat(_) => "NotAFlat",
            Error::NotAFlacet(_) => "NotAFlacet",
            Error::NotABuildingSet(_) => "NotABuildingSet",
            Error::TopMissing => "TopMissing",
            Error::MemberNotInBuildingSet(_) => "MemberNotInBuildingSet",
            Error::NotAChain(_) => "NotAChain",
            Error::ReassemblyMismatch(_) => "ReassemblyMismatch",
            Error::AuditFailure { .. } => "AuditFailure",
            Error::RefinementViolation { .. } => "RefinementViolation",
        }
    }

    /// Subsets witnessing the failure, as 1-based label lists.
    pub fn witness(&self) -> Vec<Vec<usize>> {
        match self {
            Error::UnequalCardinalities { basis, .. } => vec![basis.labels()],
            Error::ExchangeAxiomViolated { b1, b2, x } => {
                vec![b1.labels(), b2.labels(), vec![x + 1]]
            }
            Error::NotAnAntichain { smaller, larger } => vec![smaller.labels(), larger.labels()],
            Error::SpecNotNested { lower, upper } => vec![lower.labels(), upper.labels()],
            Error::NotLoopless(x) => vec![vec![x + 1]],
            Error::NotAFlat(s)
            | Error::NotAFlacet(s)
            | Error::NotABuildingSet(s)
            | Error::MemberNotInBuildingSet(s) => {
                vec![s.labels()]
            }
            Error::ElementOutOfRange { label, .. } => vec![vec![*label]],
            Error::ReassemblyMismatch(sets)
            | Error::NotAChain(sets)
            | Error::AuditFailure { chain: sets, .. }
            | Error::RefinementViolation { chain: sets, .. } => {
                sets.iter().map(|s| s.labels()).collect()
            }
            _ => Vec::new(),
        }
    }
}
