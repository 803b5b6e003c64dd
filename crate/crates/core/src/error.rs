use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or transforming the models.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be at least 1")]
    ZeroOrder,

    #[error("order {order} is larger than the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("expected {expected} entries, found {found}")]
    Size { expected: usize, found: usize },

    #[error("entry {value} out of range at ({row}, {col}) for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("symbol {symbol} out of range for order {order}")]
    SymbolOutOfRange { symbol: usize, order: usize },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("not a permutation of 0..{order}: {reason}")]
    NotPermutation { order: usize, reason: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("block {block} is not a transversal of its companion partition: {reason}")]
    NotTransversal { block: usize, reason: String },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),

    #[error("invalid mapping: {0}")]
    InvalidMapping(String),

    #[error("node pair ({from}, {to}) has {count} red-green paths, expected exactly 1")]
    PathCount { from: usize, to: usize, count: u32 },

    #[error("node pair ({from}, {to}) has {count} green-red paths, expected exactly 1")]
    GreenRedPathCount { from: usize, to: usize, count: u32 },

    #[error("not a congruence: {a} ~ {a2} and {b} ~ {b2}, but {a}*{b} and {a2}*{b2} lie in different blocks")]
    NotCongruence {
        a: usize,
        a2: usize,
        b: usize,
        b2: usize,
    },

    #[error("subset must be nonempty")]
    EmptySubset,

    #[error("groupoid is not rectangular")]
    NotRectangular,

    #[error("element {element} is not idempotent")]
    NotIdempotentElement { element: usize },

    #[error("not an exact factorization: {reason}")]
    NotExactFactorization { reason: String },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("not a set of left coset representatives: {0}")]
    NotCosetTransversal(String),

    #[error("order {order} exceeds the search bound {bound}")]
    Capacity { order: usize, bound: usize },

    #[error("cannot start worker pool: {0}")]
    WorkerPool(String),
}
