//! Shortlex normal forms for Simon's congruence in linear time.
//!
//! Two words are `~_k`-congruent when they have the same scattered factors of
//! length at most `k`. The normal form is computed in three passes:
//!
//! 1. x-coordinates, left to right, with a monotone stack;
//! 2. y-coordinates, right to left, deleting every position whose coordinate
//!    sum exceeds `k + 1`; minima over the surviving suffix are answered by an
//!    [`IntervalUnionFind`] whose classes are the stack's intervals;
//! 3. maximal runs of surviving positions with equal coordinates summing to
//!    `k + 1` are sorted by letter (radix sort over all runs at once).

mod radix;
mod union_find;

pub use radix::{sort_triples, Triple};
pub use union_find::IntervalUnionFind;

use crate::arch::arch_factorize;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

const INF: u32 = u32::MAX;

/// x/y coordinates of every position of a word for a fixed `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimonCoordinates {
    k: usize,
    x: Vec<u32>,
    // INF marks a deleted position.
    y: Vec<u32>,
}

impl SimonCoordinates {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// x-coordinate of 1-based position `i`.
    pub fn x(&self, i: usize) -> usize {
        self.x[i - 1] as usize
    }

    /// y-coordinate of 1-based position `i`, `None` if it was deleted.
    pub fn y(&self, i: usize) -> Option<usize> {
        let y = self.y[i - 1];
        (y != INF).then_some(y as usize)
    }

    pub fn alive(&self, i: usize) -> bool {
        self.y[i - 1] != INF
    }

    pub fn x_values(&self) -> Vec<usize> {
        self.x.iter().map(|&v| v as usize).collect()
    }

    pub fn y_values(&self) -> Vec<Option<usize>> {
        (1..=self.len()).map(|i| self.y(i)).collect()
    }

    /// 1-based positions that survive the deletion pass.
    pub fn alive_positions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.alive(i)).collect()
    }
}

fn check_len(n: usize) {
    assert!(
        n < (u32::MAX - 1) as usize,
        "word too long for 32-bit coordinates"
    );
}

/// x-coordinates (index `i - 1` holds `x_i`).
///
/// `x_i = 1` at the first occurrence of a letter, otherwise
/// `x_i = min(x[last(i)..i-1]) + 1` where `last(i)` is the previous occurrence
/// of the same letter. The stack holds positions with strictly increasing x;
/// every position between two stack entries has x at least the right one's.
pub fn x_coordinates(w: &Word) -> Vec<usize> {
    x_coords_raw(w.letters(), w.sigma())
        .into_iter()
        .map(|v| v as usize)
        .collect()
}

fn x_coords_raw(letters: &[Letter], sigma: usize) -> Vec<u32> {
    let n = letters.len();
    check_len(n);
    let mut x = vec![0u32; n + 1]; // x[0] = 0 sentinel
    let mut last = vec![0u32; sigma + 1];
    let mut stack: Vec<u32> = vec![0];
    for i in 1..=n {
        let a = letters[i - 1] as usize;
        let prev = last[a];
        // Keep the leftmost stack entry >= prev; drop everything after it.
        while stack.len() > 1 && stack[stack.len() - 2] >= prev {
            stack.pop();
        }
        let anchor = if prev == 0 {
            0
        } else {
            *stack.last().expect("sentinel")
        };
        if prev == 0 {
            stack.truncate(1);
        }
        x[i] = x[anchor as usize] + 1;
        stack.push(i as u32);
        last[a] = i as u32;
    }
    x.remove(0);
    x
}

/// Computes y-coordinates right to left, deleting positions with
/// `x_i + y_i > k + 1`.
pub fn y_coordinates(w: &Word, k: usize, x: &[usize]) -> SimonCoordinates {
    let x: Vec<u32> = x.iter().map(|&v| v as u32).collect();
    coordinates_from_x(w.letters(), w.sigma(), k, x)
}

/// Both coordinate passes.
pub fn simon_coordinates(w: &Word, k: usize) -> SimonCoordinates {
    let x = x_coords_raw(w.letters(), w.sigma());
    coordinates_from_x(w.letters(), w.sigma(), k, x)
}

fn coordinates_from_x(letters: &[Letter], sigma: usize, k: usize, x: Vec<u32>) -> SimonCoordinates {
    let n = letters.len();
    assert_eq!(x.len(), n, "one x-coordinate per position");
    let bound = k.saturating_add(1);
    let mut y = vec![INF; n + 2];
    y[n + 1] = 0;
    // Classes are intervals of 1..=n+1; `min_y[root]` is the least y inside.
    let mut uf = IntervalUnionFind::new(n + 2);
    let mut min_y = vec![INF; n + 2];
    min_y[n + 1] = 0;
    // nearest surviving occurrence to the right, n + 1 if none
    let mut next_occ = vec![(n + 1) as u32; sigma + 1];

    for i in (1..=n).rev() {
        let a = letters[i - 1] as usize;
        let target = uf.find(next_occ[a] as usize);
        let candidate = min_y[target] + 1;
        if (x[i - 1] as usize).saturating_add(candidate as usize) <= bound {
            y[i] = candidate;
            next_occ[a] = i as u32;
            // Absorb every interval strictly between i and the target's interval.
            let mut root = uf.find(i);
            loop {
                let (_, hi) = uf.bounds(root);
                let right = uf.find(hi + 1);
                if right == target {
                    break;
                }
                root = uf.union(root, right);
            }
            min_y[root] = candidate;
        } else {
            // Deleted: joins its right neighbour without changing that minimum.
            let right = uf.find(i + 1);
            let keep = min_y[right];
            let root = uf.union(i, right);
            min_y[root] = keep;
        }
    }
    y.truncate(n + 1);
    y.remove(0);
    SimonCoordinates { k, x, y }
}

/// A shortlex normal form together with its congruence level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub word: Word,
    pub k: usize,
}

/// Normal form for any `k`. For `k = 0` every word is congruent to ε; for
/// `k >= |w|` nothing is deleted and the word is returned unchanged.
pub fn normal_form(w: &Word, k: usize) -> NormalForm {
    if k == 0 {
        return NormalForm {
            word: Word::empty(w.alphabet().clone()),
            k,
        };
    }
    let coords = simon_coordinates(w, k);
    let letters = reorder_blocks(w.letters(), w.sigma(), &coords);
    NormalForm {
        word: Word::new(letters, w.alphabet().clone()).expect("letters come from w"),
        k,
    }
}

/// Normal form for `1 <= k <= |w|`, the range in which the construction is
/// stated; other values are rejected.
pub fn shortlex_normal_form(w: &Word, k: usize) -> Result<NormalForm> {
    if k == 0 || k > w.len() {
        return Err(Error::KOutOfRange { k, max: w.len() });
    }
    Ok(normal_form(w, k))
}

fn reorder_blocks(letters: &[Letter], sigma: usize, coords: &SimonCoordinates) -> Vec<Letter> {
    let target = coords.k.saturating_add(1);
    let alive: Vec<usize> = coords.alive_positions();
    let is_block = |i: usize| {
        let (x, y) = (coords.x[i - 1] as usize, coords.y[i - 1] as usize);
        x + y == target
    };

    // Block id per alive index, or None for positions outside every block.
    let mut block_of: Vec<Option<u32>> = vec![None; alive.len()];
    let mut blocks = 0u32;
    for (idx, &i) in alive.iter().enumerate() {
        if !is_block(i) {
            continue;
        }
        let continues = idx > 0 && {
            let p = alive[idx - 1];
            block_of[idx - 1].is_some()
                && coords.x[p - 1] == coords.x[i - 1]
                && coords.y[p - 1] == coords.y[i - 1]
        };
        if !continues {
            blocks += 1;
        }
        block_of[idx] = Some(blocks - 1);
    }

    let triples: Vec<Triple> = alive
        .iter()
        .zip(&block_of)
        .filter_map(|(&i, b)| {
            b.map(|block| Triple {
                block,
                letter: letters[i - 1],
                position: i as u32,
            })
        })
        .collect();
    let sorted = sort_triples(triples, blocks as usize, sigma, letters.len() + 1);

    let mut out = Vec::with_capacity(alive.len());
    let mut sorted_iter = sorted.iter();
    for (idx, &i) in alive.iter().enumerate() {
        match block_of[idx] {
            // Each block slot is filled by the next entry of the sorted list,
            // which is grouped by block in the same left-to-right order.
            Some(_) => out.push(sorted_iter.next().expect("one triple per slot").letter),
            None => out.push(letters[i - 1]),
        }
    }
    out
}

/// `w1 ~_k w2`, by comparing normal forms.
pub fn equiv_k(w1: &Word, w2: &Word, k: usize) -> bool {
    normal_form(w1, k).word.letters() == normal_form(w2, k).word.letters()
}

/// Least `k` with `w1 ≁_k w2`, by binary search over `1..=max(|w1|, |w2|)`.
///
/// Distinct words always differ at `k = max(|w1|, |w2|)` (the longer word is
/// not a scattered factor of the other), and `~_k` only gets finer as `k`
/// grows, so the predicate is monotone. `None` for identical words.
pub fn smallest_distinguishing_k(w1: &Word, w2: &Word) -> Option<usize> {
    if w1.letters() == w2.letters() {
        return None;
    }
    let (mut lo, mut hi) = (1usize, w1.len().max(w2.len()));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if equiv_k(w1, w2, mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}

/// A shortest scattered factor of `ww` that is not one of `w`.
///
/// With ι(w) = k the answer has length k + 1: the marker word m(w) embeds
/// greedily exactly at the arch ends, so appending a letter missing from the
/// rest leaves `w`, while `ww` is (k + 1)-universal.
pub fn uncommon_square_witness(w: &Word) -> Result<Word> {
    if w.is_empty() || !w.covers_alphabet() {
        let missing = w
            .alphabet()
            .letters()
            .find(|&a| !w.alph_mask()[a as usize])
            .unwrap_or(1);
        return Err(Error::MissingLetter(missing));
    }
    let f = arch_factorize(w);
    let rest = f.rest_alph_mask();
    let extra = w
        .alphabet()
        .letters()
        .find(|&a| !rest[a as usize])
        .expect("the rest never covers the alphabet");
    let mut letters = f.marker().letters().to_vec();
    letters.push(extra);
    Word::new(letters, w.alphabet().clone())
}
