//! Text word formats: ASCII tokens or comma-separated integers.
//!
//! All words of one invocation (or one batch line) are relabeled against a
//! single rank-ordered symbol table so that they share an alphabet.

use scatlib::word::normalize_many;
use scatlib::{Alphabet, Letter, Word};

use crate::CliError;

#[derive(Clone, Debug)]
enum Table {
    Bytes(Vec<u8>),
    Ints(Vec<u64>),
}

#[derive(Clone, Debug)]
pub struct Codec {
    table: Table,
}

fn parse_ascii(token: &str) -> Result<Vec<u8>, CliError> {
    if let Some(c) = token.chars().find(|c| !c.is_ascii_graphic()) {
        return Err(CliError::input(format!(
            "malformed word {token:?}: {c:?} is not a printable ASCII letter (use --ints for integer letters)"
        )));
    }
    Ok(token.as_bytes().to_vec())
}

fn parse_ints(token: &str) -> Result<Vec<u64>, CliError> {
    let token = token.trim();
    if token.is_empty() {
        return Ok(Vec::new());
    }
    token
        .split(',')
        .map(|part| match part.trim().parse::<u64>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(CliError::input(format!(
                "malformed word {token:?}: {part:?} is not a positive integer"
            ))),
        })
        .collect()
}

impl Codec {
    /// Parses `tokens` plus optional extra alphabet symbols (same format).
    pub fn parse(
        tokens: &[&str],
        ints: bool,
        extra: Option<&str>,
    ) -> Result<(Vec<Word>, Codec), CliError> {
        if ints {
            let mut raws = tokens
                .iter()
                .map(|t| parse_ints(t))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(extra) = extra {
                raws.push(parse_ints(extra)?);
            }
            let refs: Vec<&[u64]> = raws.iter().map(Vec::as_slice).collect();
            let (words, table) = normalize_many(&refs);
            let codec = Codec {
                table: Table::Ints(table),
            };
            Ok((codec.finish(words, tokens.len())?, codec))
        } else {
            let mut raws = tokens
                .iter()
                .map(|t| parse_ascii(t))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(extra) = extra {
                raws.push(parse_ascii(extra)?);
            }
            let refs: Vec<&[u8]> = raws.iter().map(Vec::as_slice).collect();
            let (words, table) = normalize_many(&refs);
            let codec = Codec {
                table: Table::Bytes(table),
            };
            Ok((codec.finish(words, tokens.len())?, codec))
        }
    }

    fn symbols(&self) -> Vec<String> {
        match &self.table {
            Table::Bytes(t) => t.iter().map(|&b| char::from(b).to_string()).collect(),
            Table::Ints(t) => t.iter().map(u64::to_string).collect(),
        }
    }

    fn finish(&self, mut words: Vec<Word>, keep: usize) -> Result<Vec<Word>, CliError> {
        words.truncate(keep);
        let symbols = self.symbols();
        if symbols.is_empty() {
            return Ok(words);
        }
        let alphabet = Alphabet::with_symbols(symbols)?;
        words
            .into_iter()
            .map(|w| Ok(Word::new(w.letters().to_vec(), alphabet.clone())?))
            .collect()
    }

    pub fn symbol(&self, a: Letter) -> String {
        match &self.table {
            Table::Bytes(t) => t
                .get(a as usize - 1)
                .map_or_else(|| a.to_string(), |&b| char::from(b).to_string()),
            Table::Ints(t) => t
                .get(a as usize - 1)
                .map_or_else(|| a.to_string(), u64::to_string),
        }
    }

    pub fn render(&self, letters: &[Letter]) -> String {
        match &self.table {
            Table::Bytes(_) => letters.iter().map(|&a| self.symbol(a)).collect(),
            Table::Ints(_) => letters
                .iter()
                .map(|&a| self.symbol(a))
                .collect::<Vec<_>>()
                .join(","),
        }
    }

    /// Letter id of one symbol written in the input format.
    pub fn letter_of(&self, symbol: &str) -> Result<Letter, CliError> {
        let pos = match &self.table {
            Table::Bytes(t) => {
                let bytes = symbol.trim().as_bytes();
                if bytes.len() == 1 {
                    t.iter().position(|&b| b == bytes[0])
                } else {
                    None
                }
            }
            Table::Ints(t) => symbol
                .trim()
                .parse::<u64>()
                .ok()
                .and_then(|v| t.iter().position(|&x| x == v)),
        };
        pos.map(|p| p as Letter + 1)
            .ok_or_else(|| CliError::input(format!("symbol {symbol:?} is not in the alphabet")))
    }
}
