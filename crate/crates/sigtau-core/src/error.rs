use alloc::string::String;
use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("order {n} is below the supported minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("not a permutation of 1..={n}: {reason}")]
    NotAPermutation { n: usize, reason: &'static str },
    #[error("cannot parse `{0}` as an element")]
    Parse(String),
    #[error("invalid seed: {0}")]
    InvalidSeed(&'static str),
    #[error("element {element} is outside the domain of the cyclic order")]
    OutOfDomain { element: u32 },
    #[error("son index {index} is outside 1..={max}")]
    SonIndex { index: usize, max: usize },
    #[error("seed has height 1 and no sons")]
    NoSons,
    #[error("operation is undefined for hub seeds")]
    HubSeed,
    #[error("permutation is not visited inside the package traversal of this seed")]
    NotInPackage,
    #[error("not a hub permutation")]
    NotHubPermutation,
    #[error("rank {rank} is outside [0, {n}!)")]
    RankOutOfRange { rank: BigUint, n: usize },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("duplicate element {0}")]
    DuplicateElement(u32),
    #[error("position {k} is outside 1..={max}")]
    PositionOutOfRange { k: usize, max: usize },
    #[error("value is outside the indexed range")]
    LocateOutOfRange,
    #[error("sequence is not stably increasing at index {index}")]
    NotStablyIncreasing { index: usize },
    #[error("inconsistent route: {0}")]
    InconsistentRoute(&'static str),
    #[error("invalid program: {0}")]
    InvalidProgram(&'static str),
    #[error("order {n} exceeds the enumeration limit {max}")]
    EnumerationLimit { n: usize, max: usize },
    #[error("switch redirection at order {n} closes after {covered} permutations; no Hamiltonian cycle")]
    NoHamiltonianCycle { n: usize, covered: BigUint },
}
