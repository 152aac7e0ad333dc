//! Brute-force reference implementations.
//!
//! Everything here materializes spectra as explicit sets, so the cost is
//! exponential in `k`. These functions exist to check the fast algorithms
//! and are never called by them. Input sizes are guarded by
//! [`OracleLimits`]; the `SCATLIB_ORACLE_LIMIT` environment variable
//! (`LEN` or `LEN,K`) relaxes the defaults.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{check_same_alphabet, Letter, Word};

pub const ORACLE_LIMIT_ENV: &str = "SCATLIB_ORACLE_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_len: usize,
    pub max_k: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_len: 20,
            max_k: 10,
        }
    }
}

impl OracleLimits {
    pub fn unlimited() -> Self {
        OracleLimits {
            max_len: usize::MAX,
            max_k: usize::MAX,
        }
    }

    /// Defaults, overridden by `SCATLIB_ORACLE_LIMIT` when it parses.
    pub fn from_env() -> Self {
        std::env::var(ORACLE_LIMIT_ENV)
            .ok()
            .and_then(|v| Self::parse(&v))
            .unwrap_or_default()
    }

    pub fn parse(spec: &str) -> Option<Self> {
        let mut parts = spec.split(',').map(|p| p.trim().parse::<usize>());
        let max_len = parts.next()?.ok()?;
        let max_k = match parts.next() {
            Some(k) => k.ok()?,
            None => OracleLimits::default().max_k.max(max_len),
        };
        if parts.next().is_some() {
            return None;
        }
        Some(OracleLimits { max_len, max_k })
    }

    fn check_len(&self, w: &Word) -> Result<()> {
        if w.len() > self.max_len {
            return Err(Error::OracleLimit {
                what: "|w|",
                value: w.len(),
                limit: self.max_len,
            });
        }
        Ok(())
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.max_k {
            return Err(Error::OracleLimit {
                what: "k",
                value: k,
                limit: self.max_k,
            });
        }
        Ok(())
    }
}

/// The set of scattered factors of one fixed length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Spectrum {
    pub k: usize,
    pub members: BTreeSet<Vec<Letter>>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &[Letter]) -> bool {
        self.members.contains(v)
    }
}

/// All scattered factors of length `0..=k`, layer `j` holding length `j`.
///
/// Dynamic programming over prefixes: after reading `w[1..i]`, `layers[j]`
/// is exactly `ScatFact_j(w[1..i])`.
fn layers_unguarded(w: &[Letter], k: usize) -> Vec<BTreeSet<Vec<Letter>>> {
    let mut layers: Vec<BTreeSet<Vec<Letter>>> = vec![BTreeSet::new(); k + 1];
    layers[0].insert(Vec::new());
    for &a in w {
        for j in (1..=k).rev() {
            let extended: Vec<Vec<Letter>> = layers[j - 1]
                .iter()
                .map(|v| {
                    let mut v = v.clone();
                    v.push(a);
                    v
                })
                .collect();
            layers[j].extend(extended);
        }
    }
    layers
}

/// `ScatFact_k(w)` with the default limits.
pub fn scatfact_k(w: &Word, k: usize) -> Result<Spectrum> {
    scatfact_k_with(w, k, &OracleLimits::from_env())
}

pub fn scatfact_k_with(w: &Word, k: usize, limits: &OracleLimits) -> Result<Spectrum> {
    limits.check_len(w)?;
    limits.check_k(k)?;
    let members = layers_unguarded(w.letters(), k).pop().unwrap_or_default();
    Ok(Spectrum { k, members })
}

/// Full spectrum `ScatFact_{≤k}(w)` as one spectrum per length.
pub fn full_spectrum_with(w: &Word, k: usize, limits: &OracleLimits) -> Result<Vec<Spectrum>> {
    limits.check_len(w)?;
    limits.check_k(k)?;
    Ok(layers_unguarded(w.letters(), k)
        .into_iter()
        .enumerate()
        .map(|(k, members)| Spectrum { k, members })
        .collect())
}

/// `w1 ~_k w2` decided by comparing full spectra.
pub fn equiv_oracle(w1: &Word, w2: &Word, k: usize) -> Result<bool> {
    equiv_oracle_with(w1, w2, k, &OracleLimits::from_env())
}

pub fn equiv_oracle_with(w1: &Word, w2: &Word, k: usize, limits: &OracleLimits) -> Result<bool> {
    Ok(full_spectrum_with(w1, k, limits)? == full_spectrum_with(w2, k, limits)?)
}

/// Largest `k` with `ScatFact_k(w) = Σ^k`, Σ being the declared alphabet.
pub fn iota_oracle(w: &Word) -> Result<usize> {
    iota_oracle_with(w, &OracleLimits::from_env())
}

pub fn iota_oracle_with(w: &Word, limits: &OracleLimits) -> Result<usize> {
    limits.check_len(w)?;
    let sigma = w.sigma() as u128;
    let mut k = 0usize;
    loop {
        let next = k + 1;
        // |Σ^next| members need at least next·σ letters.
        if next * w.sigma() > w.len() {
            return Ok(k);
        }
        let layer = layers_unguarded(w.letters(), next)
            .pop()
            .unwrap_or_default();
        if (layer.len() as u128) != sigma.pow(next as u32) {
            return Ok(k);
        }
        k = next;
    }
}

/// A shortest word that is a scattered factor of exactly one of the inputs.
///
/// Lengths are tried in increasing order up to `max(|w1|, |w2|) + 1`; among
/// the distinguishing words of minimal length the lexicographically smallest
/// is returned. `None` means the words have identical spectra up to that
/// bound (which happens only for equal words).
pub fn shortest_uncommon_oracle(w1: &Word, w2: &Word) -> Result<Option<Word>> {
    shortest_uncommon_oracle_with(w1, w2, &OracleLimits::from_env())
}

pub fn shortest_uncommon_oracle_with(
    w1: &Word,
    w2: &Word,
    limits: &OracleLimits,
) -> Result<Option<Word>> {
    check_same_alphabet(w1.alphabet(), w2.alphabet())?;
    limits.check_len(w1)?;
    limits.check_len(w2)?;
    let bound = w1.len().max(w2.len()) + 1;
    for len in 1..=bound {
        limits.check_k(len)?;
        let s1 = layers_unguarded(w1.letters(), len)
            .pop()
            .unwrap_or_default();
        let s2 = layers_unguarded(w2.letters(), len)
            .pop()
            .unwrap_or_default();
        if let Some(v) = s1.symmetric_difference(&s2).min() {
            return Ok(Some(Word::new(v.clone(), w1.alphabet().clone())?));
        }
    }
    Ok(None)
}

/// Plain two-pointer subsequence test.
pub fn is_scattered_factor(v: &[Letter], w: &[Letter]) -> bool {
    let mut it = w.iter();
    v.iter().all(|a| it.any(|b| b == a))
}
