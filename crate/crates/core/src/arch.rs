//! Arch factorization, universality index ι, circular universality ζ and
//! the per-suffix universality tables.
//!
//! An arch is a shortest factor, read greedily from the left, that contains
//! every letter of the alphabet. The number of arches is ι(w); what is left
//! after the last arch is the rest r(w), and the last letters of the arches
//! spell the marker word m(w).

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Greedy decomposition `w = ar(1) ⋯ ar(ℓ) · r(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArchFactorization {
    word: Word,
    /// 1-based end positions `m_1 < … < m_ℓ`.
    arch_ends: Vec<usize>,
}

impl ArchFactorization {
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// 1-based end positions of the arches.
    pub fn arch_ends(&self) -> &[usize] {
        &self.arch_ends
    }

    /// ι(w), the number of arches.
    pub fn iota(&self) -> usize {
        self.arch_ends.len()
    }

    /// 0-based slice ranges of the arches.
    pub fn arches(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        let starts = std::iter::once(0).chain(self.arch_ends.iter().copied());
        starts
            .zip(self.arch_ends.iter().copied())
            .map(|(s, e)| s..e)
    }

    /// 1-based position where the rest begins (`m_ℓ + 1`).
    pub fn rest_start(&self) -> usize {
        self.arch_ends.last().copied().unwrap_or(0) + 1
    }

    /// 0-based slice range of the rest; empty when the last arch ends the word.
    pub fn rest_range(&self) -> Range<usize> {
        self.rest_start() - 1..self.word.len()
    }

    pub fn rest(&self) -> &[Letter] {
        &self.word.letters()[self.rest_range()]
    }

    /// Membership mask of `alph(r(w))`, indexed by letter.
    pub fn rest_alph_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.word.sigma() + 1];
        for &a in self.rest() {
            mask[a as usize] = true;
        }
        mask
    }

    /// The marker word m(w): last letter of every arch.
    pub fn marker(&self) -> Word {
        let letters = self
            .arch_ends
            .iter()
            .map(|&e| self.word.letters()[e - 1])
            .collect();
        Word::new(letters, self.word.alphabet().clone()).expect("letters come from the word")
    }

    /// Arches and rest as separate words.
    pub fn pieces(&self) -> (Vec<Word>, Word) {
        let arches = self
            .arches()
            .map(|r| self.word.factor(r.start + 1, r.end).expect("arch in range"))
            .collect();
        let rest = self
            .word
            .factor(self.rest_start(), self.word.len())
            .expect("rest in range");
        (arches, rest)
    }
}

/// Dot-separated rendering, e.g. `aab.ba.ab.b`.
impl fmt::Display for ArchFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (arches, rest) = self.pieces();
        let mut parts: Vec<String> = arches.iter().map(|a| a.to_string()).collect();
        if !rest.is_empty() {
            parts.push(rest.to_string());
        }
        f.write_str(&parts.join("."))
    }
}

/// End positions (1-based) of the greedy arches of `letters` over `{1..=sigma}`.
pub(crate) fn arch_ends_of(letters: &[Letter], sigma: usize) -> Vec<usize> {
    let mut seen = vec![false; sigma + 1];
    let mut missing = sigma;
    let mut ends = Vec::new();
    for (j, &a) in letters.iter().enumerate() {
        if !seen[a as usize] {
            seen[a as usize] = true;
            missing -= 1;
            if missing == 0 {
                ends.push(j + 1);
                // Only reached after at least σ letters, so the reset is paid for.
                seen.iter_mut().for_each(|s| *s = false);
                missing = sigma;
            }
        }
    }
    ends
}

/// Arch factorization with respect to the word's declared alphabet.
pub fn arch_factorize(w: &Word) -> ArchFactorization {
    ArchFactorization {
        arch_ends: arch_ends_of(w.letters(), w.sigma()),
        word: w.clone(),
    }
}

/// ι(w) with respect to the word's declared alphabet.
pub fn iota(w: &Word) -> usize {
    iota_of(w.letters(), w.sigma())
}

pub(crate) fn iota_of(letters: &[Letter], sigma: usize) -> usize {
    let mut seen = vec![false; sigma + 1];
    let mut missing = sigma;
    let mut count = 0;
    for &a in letters {
        if !seen[a as usize] {
            seen[a as usize] = true;
            missing -= 1;
            if missing == 0 {
                count += 1;
                seen.iter_mut().for_each(|s| *s = false);
                missing = sigma;
            }
        }
    }
    count
}

/// m(w) of a factorization.
pub fn marker_word(f: &ArchFactorization) -> Word {
    f.marker()
}

/// Per-suffix universality data of a word `x` of length `n`.
///
/// For every 1-based start `j` (and the empty suffix `j = n + 1`):
/// * `u(j)`: end of the shortest universal prefix of `x[j..n]`, if any;
/// * `t(j)`: ι(x[j..n]);
/// * `m(j)`: end of the shortest prefix of `x[j..n]` that is `t(j)`-universal
///   (`j - 1`, the empty prefix, when `t(j) = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalityTables {
    n: usize,
    // Indexed by 1-based position; slot 0 unused, slot n + 1 is the empty suffix.
    // `n + 1` in `u` encodes "no universal prefix".
    u: Vec<usize>,
    t: Vec<usize>,
    m: Vec<usize>,
}

impl UniversalityTables {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn u(&self, j: usize) -> Option<usize> {
        let v = self.u[j];
        (v <= self.n).then_some(v)
    }

    /// Raw `u` value where `n + 1` stands for +∞.
    #[inline]
    pub(crate) fn u_raw(&self, j: usize) -> usize {
        self.u[j]
    }

    #[inline]
    pub fn t(&self, j: usize) -> usize {
        self.t[j]
    }

    #[inline]
    pub fn m(&self, j: usize) -> usize {
        self.m[j]
    }

    /// `u` over positions `1..=n`, `None` for +∞.
    pub fn u_values(&self) -> Vec<Option<usize>> {
        (1..=self.n).map(|j| self.u(j)).collect()
    }

    pub fn t_values(&self) -> Vec<usize> {
        self.t[1..=self.n].to_vec()
    }

    pub fn m_values(&self) -> Vec<usize> {
        self.m[1..=self.n].to_vec()
    }

    /// Is `x[i..=j]` universal (1-based, inclusive)?
    pub fn factor_is_universal(&self, i: usize, j: usize) -> Result<bool> {
        if i == 0 || i > j || j > self.n {
            return Err(Error::RangeViolation { i, j, len: self.n });
        }
        Ok(j >= self.u[i])
    }
}

/// Builds the tables in `O(|x| + σ)` with the word's declared alphabet.
pub fn build_tables(x: &Word) -> UniversalityTables {
    build_tables_of(x.letters(), x.sigma())
}

pub(crate) fn build_tables_of(x: &[Letter], sigma: usize) -> UniversalityTables {
    let n = x.len();
    let inf = n + 1;
    let mut u = vec![inf; n + 2];
    // letter -> leftmost occurrence in the current suffix, 0 if absent
    let mut first = vec![0usize; sigma + 1];
    let mut missing = sigma;
    let mut j = n;
    while j >= 1 {
        let a = x[j - 1] as usize;
        if first[a] == 0 {
            missing -= 1;
        }
        first[a] = j;
        if missing == 0 {
            break;
        }
        j -= 1;
    }
    if missing == 0 {
        // x[j..n] is the shortest universal suffix.
        let mut max = first[1..].iter().copied().max().unwrap_or(0);
        u[j] = max;
        for i in (1..j).rev() {
            let a = x[i - 1] as usize;
            let was_max = first[a] == max;
            first[a] = i;
            if was_max {
                while first[x[max - 1] as usize] != max {
                    max -= 1;
                }
            }
            u[i] = max;
        }
    }

    let mut t = vec![0usize; n + 2];
    let mut m = vec![0usize; n + 2];
    m[n + 1] = n;
    for j in (1..=n).rev() {
        if u[j] == inf {
            t[j] = 0;
            m[j] = j - 1;
        } else {
            let next = u[j] + 1;
            t[j] = 1 + t[next];
            m[j] = m[next];
        }
    }
    UniversalityTables { n, u, t, m }
}

/// Check a range for [`UniversalityTables::factor_is_universal`].
pub fn factor_is_universal(tables: &UniversalityTables, i: usize, j: usize) -> Result<bool> {
    tables.factor_is_universal(i, j)
}

/// ζ(w) together with the smallest split whose conjugate attains it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircularUniversality {
    pub zeta: usize,
    /// `conjugate(w, split)` is ζ-universal.
    pub split: usize,
}

/// Circular universality index.
///
/// ι of the conjugate starting at position `j` is the number of arch jumps
/// from `j` that stay inside the window `[j, j + n - 1]` of `ww`; jumps are
/// answered with a binary-lifted table over `u_{ww}`, `O(n log n)` overall.
pub fn zeta(w: &Word) -> CircularUniversality {
    let n = w.len();
    if n == 0 {
        return CircularUniversality { zeta: 0, split: 0 };
    }
    let ww = [w.letters(), w.letters()].concat();
    let tables = build_tables_of(&ww, w.sigma());
    let len = 2 * n;
    // Jump target after one arch from position p; `len + 2` means impossible.
    let dead = (len + 2) as u32;
    let mut levels: Vec<Vec<u32>> = Vec::new();
    let base: Vec<u32> = (0..=len + 2)
        .map(|p| {
            if p == 0 || p > len {
                dead
            } else {
                let u = tables.u_raw(p);
                if u > len {
                    dead
                } else {
                    (u + 1) as u32
                }
            }
        })
        .collect();
    levels.push(base);
    let mut span = 1usize;
    while span * 2 <= n {
        let prev = levels.last().expect("nonempty");
        let next: Vec<u32> = prev.iter().map(|&p| prev[p as usize]).collect();
        levels.push(next);
        span *= 2;
    }

    let mut best = CircularUniversality { zeta: 0, split: 0 };
    for j in 1..=n {
        let limit = (j + n) as u32;
        let mut pos = j as u32;
        let mut count = 0usize;
        for (e, level) in levels.iter().enumerate().rev() {
            let to = level[pos as usize];
            if to <= limit {
                pos = to;
                count += 1 << e;
            }
        }
        if count > best.zeta {
            best = CircularUniversality {
                zeta: count,
                split: j - 1,
            };
        }
    }
    debug_assert!({
        let k = iota(w);
        best.zeta == k || best.zeta == k + 1
    });
    best
}
