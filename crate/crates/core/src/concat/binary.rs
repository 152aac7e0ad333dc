//! Two-letter alphabets: at most nine words can matter.
//!
//! Over `{a, b}` an arch is a run of one letter closed by the other letter.
//! A word in a concatenation interacts with its neighbours only through
//! whether its first letter closes an arch begun before it and whether its
//! last letter begins one that closes after it. So it can be exchanged for
//! the word with the same boundary letters whose inner part carries the most
//! arches:
//! * `u0`: most arches overall;
//! * `u_x`: starts with `x`, most arches after the first letter;
//! * `v_x`: ends with `x`, most arches before the last letter;
//! * `u_{x,y}`: at least two letters, starts with `x`, ends with `y`, most
//!   arches strictly inside. A one-letter word cannot play both boundary
//!   roles at once, so it is not eligible here.
//!
//! Ties go to the lowest index.

use super::{min_concat_general, WordSet};
use crate::arch::iota_of;
use crate::error::{Error, Result};
use crate::powers::BigCount;
use crate::word::Letter;

/// Indices (into `ws.words()`, ascending, deduplicated) of the reduced set.
pub fn binary_candidates(ws: &WordSet) -> Result<Vec<usize>> {
    if ws.sigma() != 2 {
        return Err(Error::Precondition(format!(
            "binary reduction needs a two-letter alphabet, got {}",
            ws.sigma()
        )));
    }
    let inner = |x: &[Letter]| iota_of(x, 2);
    let mut picks: Vec<usize> = Vec::new();
    let mut pick = |score: &dyn Fn(&[Letter]) -> Option<usize>| {
        let best = ws
            .words()
            .iter()
            .enumerate()
            .filter_map(|(i, w)| score(w.letters()).map(|s| (s, i)))
            // max score, lowest index on ties
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        if let Some((_, i)) = best {
            picks.push(i);
        }
    };

    pick(&|x| Some(inner(x)));
    for c in [1 as Letter, 2] {
        pick(&|x| (x.first() == Some(&c)).then(|| inner(&x[1..])));
        pick(&|x| (x.last() == Some(&c)).then(|| inner(&x[..x.len() - 1])));
        for d in [1 as Letter, 2] {
            pick(&|x| {
                (x.len() >= 2 && x[0] == c && x[x.len() - 1] == d)
                    .then(|| inner(&x[1..x.len() - 1]))
            });
        }
    }
    picks.sort_unstable();
    picks.dedup();
    Ok(picks)
}

/// Least `ℓ` over a two-letter alphabet: reduce to the candidate words, then
/// run the general solver on them.
pub fn min_concat_binary(ws: &WordSet, k: &BigCount) -> Result<BigCount> {
    let picks = binary_candidates(ws)?;
    ws.check_solvable()?;
    let reduced = WordSet::new(picks.iter().map(|&i| ws.words()[i].clone()).collect())?;
    min_concat_general(&reduced, k)
}
