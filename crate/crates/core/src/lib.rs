//! Scattered-factor (subsequence) universality toolkit.
//!
//! * [`word`]: words over integer alphabets, reversal, conjugates, morphic
//!   permutations.
//! * [`arch`]: arch factorization, ι, ζ and per-suffix universality tables.
//! * [`simon`]: linear-time shortlex normal forms for Simon's congruence `~_k`.
//! * [`powers`]: universality of repetitions, palindromes and `wπ(w)`.
//! * [`concat`]: fewest concatenations from a word set reaching k-universality.
//! * [`trim`]: shortest prefix/suffix deletion reaching a target index.
//! * [`oracle`]: exponential brute-force references used by the tests.

pub mod arch;
pub mod concat;
pub mod error;
pub mod oracle;
pub mod powers;
pub mod simon;
pub mod trim;
pub mod word;

pub use arch::{arch_factorize, build_tables, iota, zeta, ArchFactorization, UniversalityTables};
pub use concat::{
    min_concat, min_concat_all_universal, min_concat_binary, min_concat_general, Mode, WordSet,
};
pub use error::{Error, Result};
pub use powers::{iota_of_power, min_power_for_k, BigCount};
pub use simon::{
    equiv_k, normal_form, shortlex_normal_form, smallest_distinguishing_k, NormalForm,
};
pub use trim::{shortest_deletion, Deletion, Side};
pub use word::{normalize, Alphabet, Letter, MorphicPermutation, Word};
