//! Desk-scale bound tables seeded from the corpus.

use std::ops::RangeInclusive;
use std::path::Path;

use circuit_core::bounds::{
    BoundEntry, BoundTable, Provenance, Rule, DEFAULT_K_RANGE, DEFAULT_N_RANGE,
};
use circuit_core::{construct7, klee_padding, CircuitCode, CodeParams};
use serde::Deserialize;

use crate::corpus::{corpus, lookup};
use crate::error::CliError;

/// Grid bounds, read from a TOML file such as
///
/// ```toml
/// n = [2, 30]
/// k = [1, 10]
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRange {
    pub n: [usize; 2],
    pub k: [usize; 2],
}

impl Default for TableRange {
    fn default() -> Self {
        TableRange {
            n: [*DEFAULT_N_RANGE.start(), *DEFAULT_N_RANGE.end()],
            k: [*DEFAULT_K_RANGE.start(), *DEFAULT_K_RANGE.end()],
        }
    }
}

impl TableRange {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn n_range(&self) -> RangeInclusive<usize> {
        self.n[0]..=self.n[1]
    }

    pub fn k_range(&self) -> RangeInclusive<usize> {
        self.k[0]..=self.k[1]
    }
}

/// `(id, params)` of every corpus code, for seeding.
pub fn corpus_seeds() -> Vec<(String, CodeParams)> {
    corpus()
        .into_iter()
        .map(|e| (e.id.to_string(), CodeParams::of(&e.code)))
        .collect()
}

/// Table seeded from exact values, closed-form bounds and the corpus.
pub fn seeded_table(range: &TableRange) -> BoundTable {
    BoundTable::seeded(range.n_range(), range.k_range(), &corpus_seeds())
}

/// Builds the actual code behind an entry whose derivation uses only corpus
/// codes, construct7, demotion and padding. Returns `None` for any other
/// derivation.
pub fn materialize(entry: &BoundEntry) -> Option<Result<CircuitCode, CliError>> {
    if !entry.is_sequence_level() {
        return None;
    }
    Some(build(entry))
}

fn build(entry: &BoundEntry) -> Result<CircuitCode, CliError> {
    match &entry.provenance {
        Provenance::Corpus(id) => Ok(lookup(id)?.code),
        Provenance::Derived { rule, parents } => {
            let parent = build(&parents[0])?;
            match rule {
                Rule::C7 => Ok(construct7(&parent)?.output),
                Rule::Padding => Ok(klee_padding(&parent)?.output),
                Rule::Demotion => Ok(parent.with_spread(entry.k)),
                other => unreachable!("{other:?} is not a sequence-level rule"),
            }
        }
        _ => unreachable!("checked by is_sequence_level"),
    }
}
