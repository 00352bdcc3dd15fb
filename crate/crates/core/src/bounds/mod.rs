//! Lower bounds on `K(n,k)`, the maximum length of an `(n,k)` circuit code.
//!
//! A [`BoundTable`] is seeded from exact values, closed-form bounds and
//! explicit codes, then [`propagate`] applies the length transformations of
//! the known constructions until no entry improves. Every entry carries the
//! derivation that produced it.

mod k4;
mod propagate;
mod seed;
mod transform;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

pub use k4::{lemma4_length, singleton_k4_baseline, theorem2_bound, theorem2_crossover};
pub use propagate::{propagate, PropagationStats};
pub use seed::{seed_exact, seed_formula};
pub use transform::{transformations, Rule, Transformation};

use crate::construct::CodeParams;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundError {
    RangeTooSmall,
    NoEntry { n: usize, k: usize },
    DomainError { n: usize },
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::RangeTooSmall => write!(f, "the (n,k) ranges are empty"),
            BoundError::NoEntry { n, k } => write!(f, "no bound recorded for K({n},{k})"),
            BoundError::DomainError { n } => write!(f, "formula does not apply to n = {n}"),
        }
    }
}

impl core::error::Error for BoundError {}

/// Exact-value rows for `K(n,k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactRule {
    /// `2n` for `n < floor(3k/2) + 2`.
    Small,
    /// `4k + 6` at `n = floor(3k/2) + 2`, `k` even.
    ThresholdEven,
    /// `4k + 4` at `n = floor(3k/2) + 2`, `k` odd.
    ThresholdOdd,
    /// `4k + 8` at `n = floor(3k/2) + 3`, `k` odd and at least 9.
    ThresholdOddShifted,
}

impl ExactRule {
    pub fn name(self) -> &'static str {
        match self {
            ExactRule::Small => "exact 2n",
            ExactRule::ThresholdEven => "exact 4k+6",
            ExactRule::ThresholdOdd => "exact 4k+4",
            ExactRule::ThresholdOddShifted => "exact 4k+8",
        }
    }
}

/// Closed-form lower bounds used as seeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaRule {
    /// `K(n,1) = 2^n`.
    GrayCode,
    /// `K(n,2) >= (77/256) 2^n`.
    Snake,
    /// Explicit spread-3 family: 16, 24, 32 times `3^p` for `n = 6, 7, 8 + 3p`.
    SpreadThreeLadder,
    /// `(k+1) 2^(floor(2n/(k+1)) - 1)` for odd `k`.
    OddSpread,
}

impl FormulaRule {
    pub fn name(self) -> &'static str {
        match self {
            FormulaRule::GrayCode => "formula 2^n",
            FormulaRule::Snake => "formula 77/256*2^n",
            FormulaRule::SpreadThreeLadder => "formula spread-3 ladder",
            FormulaRule::OddSpread => "formula (k+1)2^(floor(2n/(k+1))-1)",
        }
    }
}

/// A fraction recorded when a bound was rounded up to an even integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawValue {
    pub numerator: u64,
    pub denominator: u64,
}

/// How an entry was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Exact(ExactRule),
    Formula(FormulaRule),
    /// An explicit code, identified by corpus id.
    Corpus(String),
    /// A transformation applied to parent entries (two parents for C6).
    Derived {
        rule: Rule,
        parents: Vec<Arc<BoundEntry>>,
    },
}

/// A lower bound `K(n,k) >= value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub n: usize,
    pub k: usize,
    /// Always even.
    pub value: u64,
    /// Set when `value` is a rounded-up fraction or odd integer.
    pub raw: Option<RawValue>,
    pub exact: bool,
    pub provenance: Provenance,
}

impl BoundEntry {
    pub fn params(&self) -> CodeParams {
        CodeParams::new(self.n, self.k, self.value as usize)
    }

    pub fn from_corpus(id: impl Into<String>, params: CodeParams) -> Self {
        BoundEntry {
            n: params.n,
            k: params.k,
            value: params.len as u64,
            raw: None,
            exact: false,
            provenance: Provenance::Corpus(id.into()),
        }
    }

    /// Recomputes the value from the provenance tree. Corpus leaves keep
    /// their recorded length.
    pub fn replay(&self) -> Option<u64> {
        match &self.provenance {
            Provenance::Exact(_) => seed_exact(self.n, self.k).map(|e| e.value),
            Provenance::Formula(_) => seed_formula(self.n, self.k).map(|e| e.value),
            Provenance::Corpus(_) => Some(self.value),
            Provenance::Derived { rule, parents } => {
                let mut inputs = Vec::with_capacity(parents.len());
                for parent in parents {
                    let value = parent.replay()?;
                    inputs.push(CodeParams::new(parent.n, parent.k, value as usize));
                }
                let out = match inputs.as_slice() {
                    [single] => rule.apply(*single)?,
                    [first, second] => rule.apply_pair(*first, *second)?,
                    _ => return None,
                };
                (out.params.n == self.n && out.params.k == self.k).then_some(out.params.len as u64)
            }
        }
    }

    /// True when every node of the tree is a corpus code or a rule that
    /// rewrites transition sequences directly.
    pub fn is_sequence_level(&self) -> bool {
        match &self.provenance {
            Provenance::Corpus(_) => true,
            Provenance::Derived { rule, parents } => {
                rule.is_sequence_level() && parents.iter().all(|p| p.is_sequence_level())
            }
            _ => false,
        }
    }

    /// One-line derivation chain, e.g. `C1 ← C7 ← corpus fig1-(3,2,6)`.
    pub fn chain(&self) -> String {
        let mut out = String::new();
        self.write_chain(&mut out);
        out
    }

    fn write_chain(&self, out: &mut String) {
        match &self.provenance {
            Provenance::Exact(rule) => out.push_str(rule.name()),
            Provenance::Formula(rule) => out.push_str(rule.name()),
            Provenance::Corpus(id) => {
                out.push_str("corpus ");
                out.push_str(id);
            }
            Provenance::Derived { rule, parents } => {
                out.push_str(rule.label());
                out.push_str(" ← ");
                if let [parent] = parents.as_slice() {
                    parent.write_chain(out);
                } else {
                    out.push('[');
                    for (i, parent) in parents.iter().enumerate() {
                        if i > 0 {
                            out.push_str(" ; ");
                        }
                        parent.write_chain(out);
                    }
                    out.push(']');
                }
            }
        }
    }

    /// Indented derivation tree with the parameters at every node.
    pub fn tree(&self) -> String {
        let mut out = String::new();
        self.write_tree(&mut out, 0);
        out
    }

    fn write_tree(&self, out: &mut String, depth: usize) {
        use core::fmt::Write;
        for _ in 0..depth {
            out.push_str("  ");
        }
        let label = match &self.provenance {
            Provenance::Exact(rule) => String::from(rule.name()),
            Provenance::Formula(rule) => String::from(rule.name()),
            Provenance::Corpus(id) => alloc::format!("corpus {id}"),
            Provenance::Derived { rule, .. } => String::from(rule.label()),
        };
        let _ = write!(
            out,
            "K({},{}) >= {}  [{}]",
            self.n, self.k, self.value, label
        );
        if let Some(raw) = self.raw {
            let _ = write!(out, " raw {}/{}", raw.numerator, raw.denominator);
        }
        out.push('\n');
        if let Provenance::Derived { parents, .. } = &self.provenance {
            for parent in parents {
                parent.write_tree(out, depth + 1);
            }
        }
    }
}

/// Grid of lower bounds over inclusive `n` and `k` ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTable {
    n_range: RangeInclusive<usize>,
    k_range: RangeInclusive<usize>,
    // Keyed by (k, n) so iteration follows the propagation scan order.
    entries: BTreeMap<(usize, usize), Arc<BoundEntry>>,
}

/// Default grid: `2 <= n <= 30`, `1 <= k <= 10`.
pub const DEFAULT_N_RANGE: RangeInclusive<usize> = 2..=30;
pub const DEFAULT_K_RANGE: RangeInclusive<usize> = 1..=10;

impl BoundTable {
    pub fn new(n_range: RangeInclusive<usize>, k_range: RangeInclusive<usize>) -> Self {
        BoundTable {
            n_range,
            k_range,
            entries: BTreeMap::new(),
        }
    }

    /// Seeds every cell from [`seed_exact`] or [`seed_formula`], then adds
    /// the given explicit codes where they improve a cell.
    pub fn seeded(
        n_range: RangeInclusive<usize>,
        k_range: RangeInclusive<usize>,
        codes: &[(String, CodeParams)],
    ) -> Self {
        let mut table = BoundTable::new(n_range.clone(), k_range.clone());
        for k in k_range {
            for n in n_range.clone() {
                if let Some(entry) = seed_exact(n, k).or_else(|| seed_formula(n, k)) {
                    table.offer(entry);
                }
            }
        }
        for (id, params) in codes {
            table.offer(BoundEntry::from_corpus(id.clone(), *params));
        }
        table
    }

    pub fn n_range(&self) -> RangeInclusive<usize> {
        self.n_range.clone()
    }

    pub fn k_range(&self) -> RangeInclusive<usize> {
        self.k_range.clone()
    }

    pub fn contains(&self, n: usize, k: usize) -> bool {
        self.n_range.contains(&n) && self.k_range.contains(&k)
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BoundEntry> {
        self.entries.get(&(k, n)).map(|e| e.as_ref())
    }

    pub fn value(&self, n: usize, k: usize) -> Option<u64> {
        self.get(n, k).map(|e| e.value)
    }

    pub(crate) fn get_shared(&self, n: usize, k: usize) -> Option<&Arc<BoundEntry>> {
        self.entries.get(&(k, n))
    }

    /// Entries in `(k, n)` order.
    pub fn entries(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.values().map(|e| e.as_ref())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stores `entry` if it lies in the grid and strictly improves the cell.
    /// Exact cells are never replaced. Returns whether the table changed.
    pub fn offer(&mut self, entry: BoundEntry) -> bool {
        if !self.contains(entry.n, entry.k) {
            return false;
        }
        match self.entries.get(&(entry.k, entry.n)) {
            Some(current) if current.exact || current.value >= entry.value => false,
            _ => {
                self.entries.insert((entry.k, entry.n), Arc::new(entry));
                true
            }
        }
    }

    /// Derivation chain of the `(n, k)` entry.
    pub fn explain(&self, n: usize, k: usize) -> Result<String, BoundError> {
        self.get(n, k)
            .map(|e| e.chain())
            .ok_or(BoundError::NoEntry { n, k })
    }
}
