//! Solver for sets whose words each contain every letter.
//!
//! In any concatenation of such words the unfinished arch starts inside the
//! last word, so a block of words is summarized per `(first word i, start
//! offset c in w_i, last word j)` by the most useful pair `(t, d)`: `t`
//! arches read from `w_i[c..]`, the last one ending at `d` in `w_j`. A larger
//! `t` always wins (the longer leftover can add at most one arch), and among
//! equal `t` the smaller `d` leaves a longer leftover.
//!
//! Joining two blocks reads one crossing arch: the leftover of `w_j` after
//! `d` lacks some letters, and the arch ends in the next word `w_q` at the
//! last first-occurrence of those letters. The next block then starts right
//! after it, so only `1 + σ` offsets per word ever occur.

use num_bigint::BigUint;

use super::{search_last_doubling, WordSet};
use crate::arch::{build_tables_of, UniversalityTables};
use crate::error::{Error, Result};
use crate::powers::BigCount;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Pair {
    t: BigUint,
    d: usize,
}

fn more_useful(a: &Pair, b: &Pair) -> bool {
    a.t > b.t || (a.t == b.t && a.d < b.d)
}

fn keep_best(slot: &mut Option<Pair>, cand: Pair) {
    if slot.as_ref().is_none_or(|cur| more_useful(&cand, cur)) {
        *slot = Some(cand);
    }
}

/// Per-word preprocessing.
struct Prepared {
    tables: Vec<UniversalityTables>,
    /// Possible block start positions (1-based, ascending, first is 1).
    offsets: Vec<Vec<usize>>,
    /// `rest_letters[j][d]`: letters occurring in `w_j[d+1..]`, as a count
    /// of the latest-last-occurring letters.
    rest_letters: Vec<Vec<usize>>,
    /// `cross_end[j][q][g]`: where the crossing arch ends in `w_q` when the
    /// leftover of `w_j` holds its `g` latest-last-occurring letters.
    cross_end: Vec<Vec<Vec<usize>>>,
}

impl Prepared {
    fn new(ws: &WordSet) -> Self {
        let sigma = ws.sigma();
        let p = ws.len();
        let mut tables = Vec::with_capacity(p);
        let mut offsets = Vec::with_capacity(p);
        let mut first = Vec::with_capacity(p);
        let mut last_order = Vec::with_capacity(p);
        let mut rest_letters = Vec::with_capacity(p);
        for w in ws.words() {
            let x = w.letters();
            let n = x.len();
            tables.push(build_tables_of(x, sigma));
            let mut f = vec![0usize; sigma + 1];
            let mut l = vec![0usize; sigma + 1];
            for (pos, &a) in x.iter().enumerate() {
                if f[a as usize] == 0 {
                    f[a as usize] = pos + 1;
                }
                l[a as usize] = pos + 1;
            }
            let mut offs: Vec<usize> = std::iter::once(1)
                .chain(f[1..].iter().map(|&v| v + 1))
                .collect();
            offs.sort_unstable();
            offs.dedup();
            offsets.push(offs);

            let mut order: Vec<usize> = (1..=sigma).collect();
            order.sort_by(|&a, &b| l[b].cmp(&l[a]));
            last_order.push(order);

            let mut later = vec![0usize; n + 2];
            for &pos in &l[1..] {
                later[pos] += 1;
            }
            let mut counts = vec![0usize; n + 1];
            let mut acc = 0;
            for d in (0..=n).rev() {
                counts[d] = acc;
                acc += later[d];
            }
            rest_letters.push(counts);
            first.push(f);
        }

        let mut cross_end = vec![vec![vec![0usize; sigma]; p]; p];
        for j in 0..p {
            for q in 0..p {
                let row = &mut cross_end[j][q];
                let mut acc = 0;
                for g in (0..sigma).rev() {
                    acc = acc.max(first[q][last_order[j][g]]);
                    row[g] = acc;
                }
            }
        }
        Prepared {
            tables,
            offsets,
            rest_letters,
            cross_end,
        }
    }

    fn offset_index(&self, q: usize, pos: usize) -> usize {
        self.offsets[q]
            .binary_search(&pos)
            .expect("crossing ends on a first occurrence")
    }
}

/// `cells[i][c][j]`, `c` indexing `offsets[i]`.
#[derive(Clone, Debug)]
struct Layer {
    cells: Vec<Vec<Vec<Option<Pair>>>>,
}

impl Layer {
    fn single_words(prep: &Prepared) -> Self {
        let p = prep.tables.len();
        let cells = (0..p)
            .map(|i| {
                prep.offsets[i]
                    .iter()
                    .map(|&pos| {
                        let mut row = vec![None; p];
                        row[i] = Some(Pair {
                            t: BigUint::from(prep.tables[i].t(pos)),
                            d: prep.tables[i].m(pos),
                        });
                        row
                    })
                    .collect()
            })
            .collect();
        Layer { cells }
    }

    /// Keeps only blocks starting at the beginning of a word.
    fn word_starts_only(&self) -> Self {
        let cells = self
            .cells
            .iter()
            .map(|rows| {
                rows.iter()
                    .enumerate()
                    .map(|(c, row)| {
                        if c == 0 {
                            row.clone()
                        } else {
                            vec![None; row.len()]
                        }
                    })
                    .collect()
            })
            .collect();
        Layer { cells }
    }

    fn compose(&self, next: &Layer, prep: &Prepared) -> Layer {
        let p = self.cells.len();
        let mut cells = Vec::with_capacity(p);
        for rows in &self.cells {
            let mut out_rows = Vec::with_capacity(rows.len());
            for row in rows {
                // Best way to have crossed into each next word q.
                let mut crossed: Vec<Option<Pair>> = vec![None; p];
                for (j1, pair) in row.iter().enumerate() {
                    let Some(pair) = pair else { continue };
                    let g = prep.rest_letters[j1][pair.d];
                    for (q, slot) in crossed.iter_mut().enumerate() {
                        let end = prep.cross_end[j1][q][g];
                        keep_best(
                            slot,
                            Pair {
                                t: &pair.t + 1u32,
                                d: end + 1,
                            },
                        );
                    }
                }
                let mut out = vec![None; p];
                for (q, c) in crossed.iter().enumerate() {
                    let Some(c) = c else { continue };
                    let idx = prep.offset_index(q, c.d);
                    for (j, slot) in out.iter_mut().enumerate() {
                        if let Some(b) = &next.cells[q][idx][j] {
                            keep_best(
                                slot,
                                Pair {
                                    t: &c.t + &b.t,
                                    d: b.d,
                                },
                            );
                        }
                    }
                }
                out_rows.push(out);
            }
            cells.push(out_rows);
        }
        Layer { cells }
    }

    fn best_from_word_start(&self) -> Option<&BigUint> {
        self.cells
            .iter()
            .flat_map(|rows| rows[0].iter())
            .flatten()
            .map(|pair| &pair.t)
            .max()
    }
}

/// Least `ℓ` for sets of words that each contain every letter; polynomial in
/// σ and the number of words.
pub fn min_concat_all_universal(ws: &WordSet, k: &BigCount) -> Result<BigCount> {
    if !ws.all_universal() {
        return Err(Error::Precondition(
            "every word must contain every letter of the alphabet".into(),
        ));
    }
    if k.is_zero() {
        return Ok(BigCount::zero());
    }
    let prep = Prepared::new(ws);
    let k = &k.0;
    let reaches = |layer: &Layer| layer.best_from_word_start().is_some_and(|t| t >= k);

    let mut layers = vec![Layer::single_words(&prep)];
    while !reaches(layers.last().expect("nonempty")) {
        let last = layers.last().expect("nonempty");
        let doubled = last.compose(last, &prep);
        layers.push(doubled);
    }
    let f = layers.len() - 1;
    if f == 0 {
        return Ok(BigCount::from(1usize));
    }
    let start = layers[f - 1].word_starts_only();
    let ell = search_last_doubling(
        &layers,
        start,
        |acc, layer| acc.compose(layer, &prep),
        reaches,
    );
    Ok(BigCount(ell))
}
