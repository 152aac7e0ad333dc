//! Shortest prefix or suffix deletion that leaves a given universality index.

use std::fmt;
use std::str::FromStr;

use crate::arch::{build_tables_of, UniversalityTables};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Prefix,
    Suffix,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prefix" => Ok(Side::Prefix),
            "suffix" => Ok(Side::Suffix),
            other => Err(Error::Precondition(format!("unknown side {other:?}"))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Prefix => "prefix",
            Side::Suffix => "suffix",
        })
    }
}

/// Result of [`shortest_deletion`]. The kept factor is `w[kept_start..=kept_end]`
/// (1-based; `kept_start = kept_end + 1` when nothing is kept).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Deletion {
    pub side: Side,
    pub deleted: usize,
    pub kept_start: usize,
    pub kept_end: usize,
}

/// End of the shortest `(ell + 1)`-universal prefix, by `ell + 1` jumps along `u`.
fn end_of_arch(tables: &UniversalityTables, ell: usize) -> Option<usize> {
    let mut j = 1;
    let mut end = 0;
    for _ in 0..=ell {
        end = tables.u(j)?;
        j = end + 1;
    }
    Some(end)
}

fn deleted_suffix(letters: &[Letter], sigma: usize, ell: usize) -> Option<usize> {
    let tables = build_tables_of(letters, sigma);
    end_of_arch(&tables, ell).map(|t| letters.len() - (t - 1))
}

/// Shortest deletion on `side` so that the rest has ι exactly `ell`.
///
/// The longest prefix with ι = `ell` stops one letter before the end of arch
/// `ell + 1`; prefixes are handled on the reversal (ι(w) = ι(w^R)).
pub fn shortest_deletion(w: &Word, ell: usize, side: Side) -> Result<Deletion> {
    let n = w.len();
    let deleted = match side {
        Side::Suffix => deleted_suffix(w.letters(), w.sigma(), ell),
        Side::Prefix => deleted_suffix(w.reverse().letters(), w.sigma(), ell),
    };
    let deleted = deleted.ok_or_else(|| Error::TargetTooLarge {
        target: ell,
        iota: crate::arch::iota(w),
    })?;
    let (kept_start, kept_end) = match side {
        Side::Suffix => (1, n - deleted),
        Side::Prefix => (deleted + 1, n),
    };
    Ok(Deletion {
        side,
        deleted,
        kept_start,
        kept_end,
    })
}
