use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,

    #[error("empty pattern block")]
    EmptyPattern,

    #[error("symbol {symbol} out of range for alphabet size {alphabet_size}")]
    SymbolOutOfRange { symbol: u16, alphabet_size: usize },

    #[error("block size {block} exceeds sequence length {len}")]
    BlockTooLarge { block: usize, len: usize },

    #[error("sequence length {len} exceeds exact-search limit {limit}; use heuristic")]
    ExactLimitExceeded { len: usize, limit: usize },

    #[error("budget: exact search exhausted its node budget of {budget}")]
    BudgetExhausted { budget: u64 },

    #[error("corrupt parse: codeword {id} has no dictionary entry")]
    CorruptParse { id: u32 },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("insufficient data: need at least {needed}, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("family/domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("machine space of {machines} machines exceeds the enumeration limit of {limit}")]
    MachineSpaceTooLarge { machines: u128, limit: u128 },

    #[error("fallback required: block {block:?} is not covered by the CTM table")]
    UncoveredBlock { block: Vec<u16> },

    #[error("single-class input")]
    SingleClass,

    #[error("missing column {0:?} in CSV header")]
    MissingColumn(String),

    #[error("invalid column map: {0}")]
    InvalidColumnMap(String),

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
