//! LSD radix sort for `(block, letter, position)` triples.

/// One entry of the block list: positions of one block, tagged with letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Triple {
    pub block: u32,
    pub letter: u32,
    pub position: u32,
}

/// Stable counting sort on `key`, where every key is `< buckets`.
fn counting_pass(items: &[Triple], buckets: usize, key: impl Fn(&Triple) -> usize) -> Vec<Triple> {
    let mut count = vec![0usize; buckets + 1];
    for t in items {
        count[key(t) + 1] += 1;
    }
    for b in 1..=buckets {
        count[b] += count[b - 1];
    }
    let mut out = vec![
        Triple {
            block: 0,
            letter: 0,
            position: 0
        };
        items.len()
    ];
    for t in items {
        let slot = &mut count[key(t)];
        out[*slot] = *t;
        *slot += 1;
    }
    out
}

/// Sorts lexicographically by `(block, letter, position)` in linear time.
///
/// Keys must satisfy `block < blocks`, `letter <= sigma`, `position < positions`.
pub fn sort_triples(
    items: Vec<Triple>,
    blocks: usize,
    sigma: usize,
    positions: usize,
) -> Vec<Triple> {
    let by_pos = counting_pass(&items, positions, |t| t.position as usize);
    let by_letter = counting_pass(&by_pos, sigma + 1, |t| t.letter as usize);
    counting_pass(&by_letter, blocks, |t| t.block as usize)
}
