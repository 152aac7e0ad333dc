//! General solver: states are the letter sets of the unfinished arch.
//!
//! Reading a word from state `S` is deterministic: it completes some number
//! of arches and leaves a new unfinished set `S'`. The best gain over exactly
//! `ℓ` words from `S` to `S'` is then a max-plus matrix power, and
//! `N_{a+b}[S][S'] = max_{S''} N_a[S][S''] + N_b[S''][S']`.

use std::collections::HashMap;

use num_bigint::BigUint;

use super::{search_last_doubling, WordSet};
use crate::error::{Error, Result};
use crate::powers::BigCount;

pub const DEFAULT_SIGMA_CAP: usize = 12;

type Entry = Option<BigUint>;

/// Square max-plus matrix over the reachable states.
#[derive(Clone, Debug)]
struct Layer {
    cells: Vec<Entry>,
    dim: usize,
}

impl Layer {
    fn get(&self, a: usize, b: usize) -> &Entry {
        &self.cells[a * self.dim + b]
    }

    fn product(&self, other: &Layer) -> Layer {
        let dim = self.dim;
        let mut cells = vec![None; dim * dim];
        for a in 0..dim {
            for mid in 0..dim {
                let Some(left) = self.get(a, mid) else {
                    continue;
                };
                for b in 0..dim {
                    if let Some(right) = other.get(mid, b) {
                        let total = left + right;
                        let cell = &mut cells[a * dim + b];
                        if cell.as_ref().is_none_or(|c| *c < total) {
                            *cell = Some(total);
                        }
                    }
                }
            }
        }
        Layer { cells, dim }
    }

    fn row(&self, a: usize) -> Vec<Entry> {
        self.cells[a * self.dim..(a + 1) * self.dim].to_vec()
    }
}

fn row_times(row: &[Entry], layer: &Layer) -> Vec<Entry> {
    let mut out: Vec<Entry> = vec![None; layer.dim];
    for (mid, left) in row.iter().enumerate() {
        let Some(left) = left else { continue };
        for (b, cell) in out.iter_mut().enumerate() {
            if let Some(right) = layer.get(mid, b) {
                let total = left + right;
                if cell.as_ref().is_none_or(|c| *c < total) {
                    *cell = Some(total);
                }
            }
        }
    }
    out
}

fn row_max(row: &[Entry]) -> Option<&BigUint> {
    row.iter().flatten().max()
}

/// Arches completed and the unfinished set after reading `letters` from `state`.
pub(crate) fn read_word(state: u32, letters: &[crate::word::Letter], full: u32) -> (usize, u32) {
    let mut cur = state;
    let mut gain = 0;
    for &a in letters {
        cur |= 1 << (a - 1);
        if cur == full {
            gain += 1;
            cur = 0;
        }
    }
    (gain, cur)
}

/// One-word transition matrix restricted to the states reachable from ∅.
fn base_layer(ws: &WordSet) -> Layer {
    let full: u32 = if ws.sigma() == 32 {
        u32::MAX
    } else {
        (1u32 << ws.sigma()) - 1
    };
    let mut index: HashMap<u32, usize> = HashMap::new();
    let mut states = vec![0u32];
    index.insert(0, 0);
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let s = states[next];
        for w in ws.words() {
            let (gain, t) = read_word(s, w.letters(), full);
            let id = *index.entry(t).or_insert_with(|| {
                states.push(t);
                states.len() - 1
            });
            edges.push((next, id, gain));
        }
        next += 1;
    }
    let dim = states.len();
    let mut cells: Vec<Entry> = vec![None; dim * dim];
    for (a, b, gain) in edges {
        let cell = &mut cells[a * dim + b];
        let gain = BigUint::from(gain);
        if cell.as_ref().is_none_or(|c| *c < gain) {
            *cell = Some(gain);
        }
    }
    Layer { cells, dim }
}

/// Least `ℓ` such that some concatenation of `ℓ` words is k-universal, with
/// the default σ cap.
pub fn min_concat_general(ws: &WordSet, k: &BigCount) -> Result<BigCount> {
    min_concat_general_with(ws, k, DEFAULT_SIGMA_CAP)
}

/// As [`min_concat_general`] with an explicit cap on σ (at most 31).
pub fn min_concat_general_with(ws: &WordSet, k: &BigCount, sigma_cap: usize) -> Result<BigCount> {
    let cap = sigma_cap.min(31);
    if ws.sigma() > cap {
        return Err(Error::AlphabetTooLarge {
            size: ws.sigma(),
            cap,
        });
    }
    ws.check_solvable()?;
    if k.is_zero() {
        return Ok(BigCount::zero());
    }
    let k = &k.0;
    let reaches = |row: &Vec<Entry>| row_max(row).is_some_and(|m| m >= k);

    let mut layers = vec![base_layer(ws)];
    while !reaches(&layers.last().expect("nonempty").row(0)) {
        let last = layers.last().expect("nonempty");
        let squared = last.product(last);
        layers.push(squared);
    }
    let f = layers.len() - 1;
    if f == 0 {
        return Ok(BigCount::from(1usize));
    }
    let start = layers[f - 1].row(0);
    let ell = search_last_doubling(&layers, start, |row, layer| row_times(row, layer), reaches);
    Ok(BigCount(ell))
}
