//! Fewest words from a set whose concatenation is k-universal.
//!
//! Three exact solvers:
//! * [`min_concat_general`]: max-plus doubling over the letters of the
//!   current unfinished arch (exponential in σ, guarded by a cap);
//! * [`min_concat_all_universal`]: when every word contains every letter the
//!   unfinished arch always starts inside the last word, so states are
//!   `(word, offset)` pairs and the cost is polynomial;
//! * [`min_concat_binary`]: over two letters at most nine words matter; the
//!   general solver runs on those.
//!
//! All three double the concatenation length until the target is reached and
//! then binary search inside the last doubling step.

mod binary;
mod crossing;
mod subset;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::powers::BigCount;
use crate::word::{check_same_alphabet, Alphabet, Word};

pub use binary::{binary_candidates, min_concat_binary};
pub use crossing::min_concat_all_universal;
pub use subset::{min_concat_general, min_concat_general_with, DEFAULT_SIGMA_CAP};

/// A nonempty list of words over one alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSet {
    words: Vec<Word>,
    alphabet: Alphabet,
}

impl WordSet {
    pub fn new(words: Vec<Word>) -> Result<Self> {
        let alphabet = words.first().ok_or(Error::EmptyWordSet)?.alphabet().clone();
        for w in &words[1..] {
            check_same_alphabet(&alphabet, w.alphabet())?;
        }
        Ok(WordSet { words, alphabet })
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    /// Total length of all words.
    pub fn total_len(&self) -> usize {
        self.words.iter().map(Word::len).sum()
    }

    /// Every letter occurs in some word, i.e. some concatenation is universal.
    pub fn check_solvable(&self) -> Result<()> {
        let mut seen = vec![false; self.sigma() + 1];
        for w in &self.words {
            for &a in w.letters() {
                seen[a as usize] = true;
            }
        }
        match self.alphabet.letters().find(|&a| !seen[a as usize]) {
            Some(a) => Err(Error::MissingLetter(a)),
            None => Ok(()),
        }
    }

    pub fn all_universal(&self) -> bool {
        self.words.iter().all(Word::covers_alphabet)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Auto,
    General,
    Universal,
    Binary,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Mode::Auto),
            "general" => Ok(Mode::General),
            "universal" => Ok(Mode::Universal),
            "binary" => Ok(Mode::Binary),
            other => Err(Error::Precondition(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Auto => "auto",
            Mode::General => "general",
            Mode::Universal => "universal",
            Mode::Binary => "binary",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatAnswer {
    pub ell: BigCount,
    /// Solver that produced the answer (never `Auto`).
    pub mode: Mode,
}

impl ConcatAnswer {
    /// `f` with `2^(f-1) < ℓ <= 2^f`; `None` for `ℓ = 0`.
    pub fn witness_bound(&self) -> Option<u64> {
        witness_bound(&self.ell.0)
    }
}

pub fn witness_bound(ell: &BigUint) -> Option<u64> {
    if ell == &BigUint::from(0u32) {
        return None;
    }
    let below = ell - 1u32;
    Some(below.bits())
}

/// Runs the solver for `mode`; `Auto` tries binary, then all-universal, then
/// general, by their preconditions.
pub fn min_concat(
    ws: &WordSet,
    k: &BigCount,
    mode: Mode,
    sigma_cap: usize,
) -> Result<ConcatAnswer> {
    let mode = match mode {
        Mode::Auto if ws.sigma() == 2 => Mode::Binary,
        Mode::Auto if ws.all_universal() => Mode::Universal,
        Mode::Auto => Mode::General,
        m => m,
    };
    let ell = match mode {
        Mode::Binary => min_concat_binary(ws, k)?,
        Mode::Universal => min_concat_all_universal(ws, k)?,
        Mode::General | Mode::Auto => min_concat_general_with(ws, k, sigma_cap)?,
    };
    Ok(ConcatAnswer { ell, mode })
}

/// Binary search inside `(2^(f-1), 2^f]` given the doubled layers.
///
/// `layers[e]` describes blocks of `2^e` words; `start` is the accumulated
/// state after `2^(f-1)` words, `compose` appends a layer and `reaches`
/// checks the target. Returns the least length reaching it.
pub(crate) fn search_last_doubling<S, L>(
    layers: &[L],
    mut acc: S,
    compose: impl Fn(&S, &L) -> S,
    reaches: impl Fn(&S) -> bool,
) -> BigUint {
    let f = layers.len() - 1;
    // acc covers 2^(f-1) words and misses the target.
    let mut len = BigUint::from(1u32) << (f - 1);
    for e in (0..f - 1).rev() {
        let cand = compose(&acc, &layers[e]);
        if !reaches(&cand) {
            acc = cand;
            len += BigUint::from(1u32) << e;
        }
    }
    len + 1u32
}
