//! Universality of repetitions `w^s`, palindromes and doublings `wπ(w)`.
//!
//! The repetition queries run on the universality tables of `x = ww`. The
//! state after `p` copies is the end `s_p` (inside copy `p`) of the shortest
//! prefix of `w^p` carrying all its complete arches; the next copy only
//! depends on `s_p`, so the sequence is eventually periodic and big `k` or `s`
//! are reached arithmetically.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::arch::{arch_ends_of, build_tables_of, iota, iota_of, zeta, UniversalityTables};
use crate::error::{Error, Result};
use crate::simon::equiv_k;
use crate::word::{Letter, MorphicPermutation, Word};

/// Arbitrary-precision nonnegative counter.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_usize(&self) -> Option<usize> {
        self.0.to_usize()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<usize> for BigCount {
    fn from(v: usize) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl FromStr for BigCount {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.trim().parse::<BigUint>().map(BigCount)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn require_full_alphabet(w: &Word) -> Result<()> {
    let mask = w.alph_mask();
    match w.alphabet().letters().find(|&a| !mask[a as usize]) {
        Some(a) => Err(Error::MissingLetter(a)),
        None => Ok(()),
    }
}

/// Step-by-step view of the repetition sequence.
#[derive(Clone, Debug)]
pub struct PowerCursor {
    n: usize,
    tables: UniversalityTables,
    /// Copies read so far.
    pub p: usize,
    /// End of the last complete arch inside copy `p` (`n` before any copy).
    pub s: usize,
    /// ι(w^p).
    pub i: BigCount,
}

impl PowerCursor {
    pub fn new(w: &Word) -> Result<Self> {
        require_full_alphabet(w)?;
        let ww = [w.letters(), w.letters()].concat();
        Ok(PowerCursor {
            n: w.len(),
            tables: build_tables_of(&ww, w.sigma()),
            p: 0,
            s: w.len(),
            i: BigCount::zero(),
        })
    }

    /// Appends one copy; returns the number of arches it completed.
    pub fn step(&mut self) -> usize {
        let (gain, s) = advance(&self.tables, self.n, self.s);
        self.p += 1;
        self.s = s;
        self.i.0 += gain;
        gain
    }
}

/// One copy from carry `s`: gained arches and the new carry.
#[inline]
fn advance(tables: &UniversalityTables, n: usize, s: usize) -> (usize, usize) {
    let j = s + 1;
    (tables.t(j), tables.m(j) - n)
}

/// Prefix of the sequence up to the first repeated carry.
struct Orbit {
    /// `iotas[p] = ι(w^p)` for `p <= p2`.
    iotas: Vec<usize>,
    p1: usize,
    p2: usize,
}

impl Orbit {
    fn period(&self) -> usize {
        self.p2 - self.p1
    }

    fn gain(&self) -> usize {
        self.iotas[self.p2] - self.iotas[self.p1]
    }

    /// ι(w^p) for any `p`.
    fn iota_at(&self, p: &BigUint) -> BigUint {
        if let Some(p) = p.to_usize().filter(|&p| p <= self.p2) {
            return BigUint::from(self.iotas[p]);
        }
        let delta = BigUint::from(self.period());
        let beyond = p - BigUint::from(self.p1);
        let cycles = &beyond / &delta;
        let r = (&beyond % &delta)
            .to_usize()
            .expect("remainder below the period");
        BigUint::from(self.iotas[self.p1 + r]) + cycles * BigUint::from(self.gain())
    }
}

fn orbit(w: &Word) -> Result<Orbit> {
    let cursor = PowerCursor::new(w)?;
    let n = cursor.n;
    let tables = cursor.tables;
    // first_seen[s] = first p with s_p = s
    let mut first_seen: Vec<Option<usize>> = vec![None; n + 1];
    let mut iotas = vec![0usize];
    let mut s = n;
    first_seen[s] = Some(0);
    let mut p = 0;
    loop {
        let (gain, next) = advance(&tables, n, s);
        debug_assert!(gain >= 1, "every copy completes an arch");
        p += 1;
        s = next;
        iotas.push(iotas[p - 1] + gain);
        if let Some(p1) = first_seen[s] {
            return Ok(Orbit { iotas, p1, p2: p });
        }
        first_seen[s] = Some(p);
    }
}

/// Least `ℓ` with `w^ℓ` k-universal, in `O(n)` steps plus a few big-number
/// operations.
pub fn min_power_for_k(w: &Word, k: &BigCount) -> Result<BigCount> {
    require_full_alphabet(w)?;
    if k.is_zero() {
        return Ok(BigCount::zero());
    }
    let orbit = orbit(w)?;
    let k = &k.0;
    if let Some(p) = orbit.iotas.iter().position(|&i| BigUint::from(i) >= *k) {
        return Ok(BigCount::from(p));
    }
    // Every index up to p2 is below k. Jump whole periods, then walk.
    let (p1, delta, d) = (orbit.p1, orbit.period(), orbit.gain());
    let base = BigUint::from(orbit.iotas[p1]);
    let g = (k - &base) / BigUint::from(d);
    let reached = &base + &g * BigUint::from(d);
    let z = (k - &reached)
        .to_usize()
        .expect("remainder below one period gain");
    let p3 = BigUint::from(p1) + &g * BigUint::from(delta);
    if z == 0 {
        return Ok(BigCount(p3));
    }
    for r in 1..=delta {
        if orbit.iotas[p1 + r] - orbit.iotas[p1] >= z {
            return Ok(BigCount(p3 + BigUint::from(r)));
        }
    }
    unreachable!("one more period gains d > z arches")
}

/// ι(w^s).
///
/// Also evaluates the closed forms where they apply: with ι(w) = k and
/// ζ(w) = k + 1 the answer is `sk + s - 1`, and over two letters it is `sk`
/// whenever ζ(w) = k. Both are asserted.
pub fn iota_of_power(w: &Word, s: &BigCount) -> Result<BigCount> {
    require_full_alphabet(w)?;
    if s.is_zero() {
        return Ok(BigCount::zero());
    }
    let orbit = orbit(w)?;
    let value = orbit.iota_at(&s.0);
    if let Some(closed) = closed_form_iota_of_power(w, s) {
        assert_eq!(
            value, closed.0,
            "ι(w^s) disagrees with the circular closed form"
        );
    }
    Ok(BigCount(value))
}

/// Closed form for ι(w^s) (`s >= 1`) when one is known: `sk + s - 1` if
/// ζ(w) = k + 1, and `sk` if ζ(w) = k over a binary alphabet.
pub fn closed_form_iota_of_power(w: &Word, s: &BigCount) -> Option<BigCount> {
    if s.is_zero() || !w.covers_alphabet() {
        return None;
    }
    let k = BigUint::from(iota(w));
    let z = zeta(w).zeta;
    let s = &s.0;
    if BigUint::from(z) == &k + 1u32 {
        Some(BigCount(s * &k + s - 1u32))
    } else if w.sigma() == 2 {
        Some(BigCount(s * &k))
    } else {
        None
    }
}

/// `ScatFact_k(w) = ScatFact_k(w·w)`, decided as ι(w) ≥ k with ι taken over
/// the letters occurring in `w` (spectra do not see unused letters of Σ).
pub fn spectra_stable_under_square(w: &Word, k: usize) -> bool {
    iota_over_own_letters(w.letters()) >= k
}

/// ι of a palindrome from its first half.
///
/// With `u` the first `⌊n/2⌋` letters and `k = ι(u)`: even length gives `2k`;
/// odd length gives `2k + 1` exactly when the middle letter together with the
/// rest of `u` covers the alphabet, else `2k`. Checked against `iota(w)`.
pub fn palindrome_iota(w: &Word) -> Result<usize> {
    if !w.is_palindrome() {
        return Err(Error::NotAPalindrome);
    }
    let n = w.len();
    let half = &w.letters()[..n / 2];
    let sigma = w.sigma();
    let ends = arch_ends_of(half, sigma);
    let k = ends.len();
    let value = if n.is_multiple_of(2) {
        2 * k
    } else {
        let mut seen = vec![false; sigma + 1];
        seen[w.letters()[n / 2] as usize] = true;
        let rest_start = ends.last().copied().unwrap_or(0);
        for &a in &half[rest_start..] {
            seen[a as usize] = true;
        }
        if seen[1..].iter().all(|&b| b) {
            2 * k + 1
        } else {
            2 * k
        }
    };
    assert_eq!(value, iota(w), "palindrome rule disagrees with ι");
    Ok(value)
}

/// Both sides of "w is k-universal iff `w ~_k w·w^R`".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WwrCheck {
    /// ι(w) ≥ k, measured over the letters occurring in `w`.
    pub by_index: bool,
    /// `w ~_k w·w^R`.
    pub by_congruence: bool,
}

impl WwrCheck {
    pub fn holds(&self) -> bool {
        self.by_index && self.by_congruence
    }
}

/// Evaluates both sides independently and asserts they agree.
///
/// Universality is taken over `alph(w)`: with a larger declared alphabet a
/// word missing a letter is never 1-universal although appending its
/// reversal can still add nothing (`a ~_1 aa`). The empty word is vacuously
/// universal over the empty alphabet.
pub fn check_wwr_universality(w: &Word, k: usize) -> WwrCheck {
    let by_index = iota_over_own_letters(w.letters()) >= k;
    let wwr = Word::new(
        [w.letters(), w.reverse().letters()].concat(),
        w.alphabet().clone(),
    )
    .expect("same letters");
    let by_congruence = equiv_k(w, &wwr, k);
    let check = WwrCheck {
        by_index,
        by_congruence,
    };
    assert_eq!(
        by_index, by_congruence,
        "wwR characterization failed for {w}, k = {k}"
    );
    check
}

fn iota_over_own_letters(letters: &[Letter]) -> usize {
    if letters.is_empty() {
        return usize::MAX;
    }
    let max = letters.iter().copied().max().unwrap_or(0) as usize;
    let mut rank = vec![0 as Letter; max + 1];
    for &a in letters {
        rank[a as usize] = 1;
    }
    let mut next = 0;
    for r in rank.iter_mut().skip(1) {
        if *r != 0 {
            next += 1;
            *r = next;
        }
    }
    let dense: Vec<Letter> = letters.iter().map(|&a| rank[a as usize]).collect();
    iota_of(&dense, next as usize)
}

/// ι(wπ(w)) with the data that determines it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationDouble {
    pub iota_w: usize,
    /// The rests of `w` and of `π(w)^R` together contain every letter.
    pub rests_cover: bool,
    /// `2ι(w) + [rests_cover]`.
    pub value: usize,
    /// ι(wπ(w)) computed directly.
    pub direct: usize,
}

/// ι(wπ(w)) = 2ι(w) + 1 exactly when `alph(r(w) r(π(w)^R)) = Σ`.
pub fn permutation_double_iota(w: &Word, pi: &MorphicPermutation) -> Result<PermutationDouble> {
    require_full_alphabet(w)?;
    let image = pi.apply(w)?;
    let sigma = w.sigma();
    let ends = arch_ends_of(w.letters(), sigma);
    let image_ends = arch_ends_of(image.letters(), sigma);
    assert_eq!(ends, image_ends, "π must map arches onto arches");
    let k = ends.len();

    let mut seen = vec![false; sigma + 1];
    let rest_start = ends.last().copied().unwrap_or(0);
    for &a in &w.letters()[rest_start..] {
        seen[a as usize] = true;
    }
    let reversed = image.reverse();
    let rev_ends = arch_ends_of(reversed.letters(), sigma);
    let rev_rest = rev_ends.last().copied().unwrap_or(0);
    for &a in &reversed.letters()[rev_rest..] {
        seen[a as usize] = true;
    }
    let rests_cover = seen[1..].iter().all(|&b| b);
    let value = 2 * k + usize::from(rests_cover);

    let direct = iota(&w.concat(&image)?);
    assert!(
        2 * k <= direct && direct <= 2 * k + 1,
        "ι(wπ(w)) outside [2ι, 2ι+1]"
    );
    assert_eq!(value, direct, "rest criterion disagrees with ι(wπ(w))");
    Ok(PermutationDouble {
        iota_w: k,
        rests_cover,
        value,
        direct,
    })
}
