//! Words over integer alphabets and the elementary transforms on them.
//!
//! Letters are the ids `1..=σ`. Positions in the public API are 1-based
//! wherever they describe a position of a word (arch ends, table values);
//! slices returned by [`Word::letters`] are ordinary 0-based Rust slices.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A letter id in `1..=σ`.
pub type Letter = u32;

/// A finite ordered alphabet `{1 < 2 < … < σ}` with optional printable names.
#[derive(Clone, Debug)]
pub struct Alphabet {
    size: usize,
    symbols: Option<Arc<[String]>>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet {
            size,
            symbols: None,
        })
    }

    /// Alphabet whose letter `i` prints as `symbols[i - 1]`.
    pub fn with_symbols(symbols: Vec<String>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut seen = std::collections::HashSet::new();
        for s in &symbols {
            if !seen.insert(s.as_str()) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet {
            size: symbols.len(),
            symbols: Some(symbols.into()),
        })
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        1..=self.size as Letter
    }

    pub fn symbols(&self) -> Option<&[String]> {
        self.symbols.as_deref()
    }

    pub fn contains(&self, a: Letter) -> bool {
        a >= 1 && (a as usize) <= self.size
    }

    /// Printable form of a letter.
    pub fn symbol(&self, a: Letter) -> String {
        match &self.symbols {
            Some(s) => s[a as usize - 1].clone(),
            None if self.size <= 26 => char::from(b'a' + (a - 1) as u8).to_string(),
            None => a.to_string(),
        }
    }

    fn compact_display(&self) -> bool {
        match &self.symbols {
            Some(s) => s.iter().all(|x| x.chars().count() == 1),
            None => self.size <= 26,
        }
    }
}

/// Immutable sequence of letter ids over a declared alphabet.
///
/// The declared alphabet is the Σ that universality is measured against.
/// Words produced by [`normalize`] or [`Word::from_ascii`] are declared over
/// exactly the letters they contain; [`Word::with_alphabet`] re-declares a
/// word over a larger alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    letters: Vec<Letter>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(letters: Vec<Letter>, alphabet: Alphabet) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| !alphabet.contains(a)) {
            return Err(Error::LetterOutOfRange {
                letter: bad as u64,
                size: alphabet.size(),
            });
        }
        Ok(Word { letters, alphabet })
    }

    /// Builds a word over `{1..=σ}` where σ is the largest letter present
    /// (1 for the empty word).
    pub fn from_letters(letters: Vec<Letter>) -> Result<Self> {
        let sigma = letters.iter().copied().max().unwrap_or(1).max(1) as usize;
        Word::new(letters, Alphabet::new(sigma)?)
    }

    pub(crate) fn from_parts_unchecked(letters: Vec<Letter>, alphabet: Alphabet) -> Self {
        debug_assert!(letters.iter().all(|&a| alphabet.contains(a)));
        Word { letters, alphabet }
    }

    /// Parses an ASCII token, ranking its distinct bytes (`a < b < …`).
    pub fn from_ascii(token: &str) -> Self {
        normalize_bytes(&[token])
            .pop()
            .expect("one word in, one word out")
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            letters: Vec::new(),
            alphabet,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[inline]
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    #[inline]
    pub fn sigma(&self) -> usize {
        self.alphabet.size()
    }

    /// Same letters, declared over another alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self> {
        Word::new(self.letters.clone(), alphabet)
    }

    /// Membership mask of `alph(w)`, indexed by letter (index 0 unused).
    pub fn alph_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.sigma() + 1];
        for &a in &self.letters {
            mask[a as usize] = true;
        }
        mask
    }

    /// Number of distinct letters occurring in the word.
    pub fn alph_size(&self) -> usize {
        self.alph_mask().iter().filter(|&&b| b).count()
    }

    /// True iff every letter of the declared alphabet occurs.
    pub fn covers_alphabet(&self) -> bool {
        self.alph_size() == self.sigma()
    }

    pub fn reverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_parts_unchecked(letters, self.alphabet.clone())
    }

    /// `w[split+1..n] · w[1..split]`.
    pub fn conjugate(&self, split: usize) -> Result<Word> {
        if split > self.len() {
            return Err(Error::SplitOutOfRange {
                split,
                len: self.len(),
            });
        }
        let mut letters = Vec::with_capacity(self.len());
        letters.extend_from_slice(&self.letters[split..]);
        letters.extend_from_slice(&self.letters[..split]);
        Ok(Word::from_parts_unchecked(letters, self.alphabet.clone()))
    }

    /// Concatenation; the alphabets must agree.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        check_same_alphabet(&self.alphabet, &other.alphabet)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_parts_unchecked(letters, self.alphabet.clone()))
    }

    pub fn power(&self, s: usize) -> Word {
        Word::from_parts_unchecked(self.letters.repeat(s), self.alphabet.clone())
    }

    /// The factor `w[i..=j]` in 1-based coordinates; `i = j + 1` yields ε.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if i == 0 || j > self.len() || i > j + 1 {
            return Err(Error::RangeViolation {
                i,
                j,
                len: self.len(),
            });
        }
        Ok(Word::from_parts_unchecked(
            self.letters[i - 1..j].to_vec(),
            self.alphabet.clone(),
        ))
    }

    pub fn is_palindrome(&self) -> bool {
        self.letters.iter().eq(self.letters.iter().rev())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.compact_display() {
            for &a in &self.letters {
                f.write_str(&self.alphabet.symbol(a))?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self
                .letters
                .iter()
                .map(|&a| self.alphabet.symbol(a))
                .collect();
            f.write_str(&parts.join(","))
        }
    }
}

pub(crate) fn check_same_alphabet(a: &Alphabet, b: &Alphabet) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::AlphabetMismatch {
            expected: a.size(),
            found: b.size(),
        });
    }
    Ok(())
}

/// Relabels arbitrary ordered symbols by rank.
///
/// Returns the word over `{1..=σ}` (σ = number of distinct symbols, or 1 for
/// empty input) together with the sorted symbol table: letter `i` stands for
/// `table[i - 1]`.
pub fn normalize<T: Ord + Clone>(raw: &[T]) -> (Word, Vec<T>) {
    let (mut words, table) = normalize_many(&[raw]);
    (words.pop().expect("one input"), table)
}

/// Jointly relabels several sequences against one shared symbol table.
pub fn normalize_many<T: Ord + Clone>(raws: &[&[T]]) -> (Vec<Word>, Vec<T>) {
    let mut ranks: BTreeMap<T, Letter> = BTreeMap::new();
    for raw in raws {
        for s in raw.iter() {
            ranks.entry(s.clone()).or_insert(0);
        }
    }
    for (rank, v) in ranks.values_mut().enumerate() {
        *v = rank as Letter + 1;
    }
    let sigma = ranks.len().max(1);
    let alphabet = Alphabet::new(sigma).expect("sigma >= 1");
    let words = raws
        .iter()
        .map(|raw| {
            let letters = raw.iter().map(|s| ranks[s]).collect();
            Word::from_parts_unchecked(letters, alphabet.clone())
        })
        .collect();
    (words, ranks.into_keys().collect())
}

/// Parses ASCII tokens against one shared rank-ordered byte alphabet.
pub fn normalize_bytes(tokens: &[&str]) -> Vec<Word> {
    let raws: Vec<&[u8]> = tokens.iter().map(|t| t.as_bytes()).collect();
    let (words, table) = normalize_many(&raws);
    if table.is_empty() {
        return words;
    }
    let symbols = table.iter().map(|&b| char::from(b).to_string()).collect();
    let alphabet = Alphabet::with_symbols(symbols).expect("bytes are distinct");
    words
        .into_iter()
        .map(|w| Word::from_parts_unchecked(w.letters, alphabet.clone()))
        .collect()
}

/// A bijection on `{1..=σ}`, extended letterwise to words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphicPermutation {
    // map[a - 1] = π(a)
    map: Vec<Letter>,
}

impl MorphicPermutation {
    pub fn new(map: Vec<Letter>) -> Result<Self> {
        let sigma = map.len();
        let mut seen = vec![false; sigma + 1];
        for &a in &map {
            if a == 0 || a as usize > sigma || seen[a as usize] {
                return Err(Error::NotAPermutation(sigma));
            }
            seen[a as usize] = true;
        }
        if sigma == 0 {
            return Err(Error::NotAPermutation(0));
        }
        Ok(MorphicPermutation { map })
    }

    pub fn identity(sigma: usize) -> Self {
        MorphicPermutation {
            map: (1..=sigma as Letter).collect(),
        }
    }

    pub fn sigma(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn image(&self, a: Letter) -> Letter {
        self.map[a as usize - 1]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.sigma() != self.sigma() {
            return Err(Error::AlphabetMismatch {
                expected: self.sigma(),
                found: w.sigma(),
            });
        }
        let letters = w.letters().iter().map(|&a| self.image(a)).collect();
        Ok(Word::from_parts_unchecked(letters, w.alphabet().clone()))
    }
}

/// Letterwise image `π(w)`.
pub fn apply_permutation(pi: &MorphicPermutation, w: &Word) -> Result<Word> {
    pi.apply(w)
}
