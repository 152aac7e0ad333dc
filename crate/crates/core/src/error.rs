use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("display symbols are not injective: {0:?} appears twice")]
    DuplicateSymbol(String),
    #[error("letter {letter} is outside the alphabet 1..={size}")]
    LetterOutOfRange { letter: u64, size: usize },
    #[error("split {split} is outside 0..={len}")]
    SplitOutOfRange { split: usize, len: usize },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("alphabet mismatch: expected size {expected}, found {found}")]
    AlphabetMismatch { expected: usize, found: usize },
    #[error("k = {k} is outside the admissible range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("factor range [{i}, {j}] is invalid for a word of length {len}")]
    RangeViolation { i: usize, j: usize, len: usize },
    #[error("letter {0} of the alphabet never occurs, so the target is unreachable")]
    MissingLetter(u32),
    #[error("the word is not a palindrome")]
    NotAPalindrome,
    #[error("target universality {target} must be below the universality index {iota}")]
    TargetTooLarge { target: usize, iota: usize },
    #[error("oracle input too large: {what} = {value} exceeds the limit {limit}")]
    OracleLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("alphabet size {size} exceeds the subset-DP cap {cap}")]
    AlphabetTooLarge { size: usize, cap: usize },
    #[error("the word set is empty")]
    EmptyWordSet,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
