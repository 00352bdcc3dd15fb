use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::transform::{Applied, Rule, ROUND_ORDER};
use super::{BoundEntry, BoundError, BoundTable, Provenance};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropagationStats {
    /// Rounds that improved at least one entry.
    pub rounds: usize,
    pub improvements: usize,
    /// Candidates that would have exceeded an exact cell, as `(n, k, value)`.
    /// Non-empty only if some transformation is unsound.
    pub exact_conflicts: Vec<(usize, usize, u64)>,
}

fn derived(applied: Applied, rule: Rule, parents: Vec<Arc<BoundEntry>>) -> BoundEntry {
    BoundEntry {
        n: applied.params.n,
        k: applied.params.k,
        value: applied.params.len as u64,
        raw: applied.raw,
        exact: false,
        provenance: Provenance::Derived { rule, parents },
    }
}

struct Worker {
    table: BoundTable,
    stats: PropagationStats,
}

impl Worker {
    fn offer(&mut self, entry: BoundEntry) -> bool {
        if let Some(current) = self.table.get(entry.n, entry.k) {
            if current.exact && entry.value > current.value {
                let conflict = (entry.n, entry.k, entry.value);
                if !self.stats.exact_conflicts.contains(&conflict) {
                    self.stats.exact_conflicts.push(conflict);
                }
                return false;
            }
        }
        let changed = self.table.offer(entry);
        if changed {
            self.stats.improvements += 1;
        }
        changed
    }

    fn keys(&self) -> Vec<(usize, usize)> {
        self.table.entries().map(|e| (e.n, e.k)).collect()
    }

    fn unary_pass(&mut self, rule: Rule) -> bool {
        let mut changed = false;
        for (n, k) in self.keys() {
            let parent = match self.table.get_shared(n, k) {
                Some(p) => Arc::clone(p),
                None => continue,
            };
            if let Some(applied) = rule.apply(parent.params()) {
                changed |= self.offer(derived(applied, rule, vec![parent]));
            }
        }
        changed
    }

    /// First C6 operand for spread `k`: the `(n, k-1)` entry itself when its
    /// length is divisible by `k`, otherwise its padded version.
    fn c6_operand(&self, n: usize, k: usize) -> Option<Arc<BoundEntry>> {
        let entry = Arc::clone(self.table.get_shared(n, k - 1)?);
        if (entry.value as usize).is_multiple_of(k) {
            return Some(entry);
        }
        let applied = Rule::Padding.apply(entry.params())?;
        Some(Arc::new(derived(applied, Rule::Padding, vec![entry])))
    }

    fn pair_pass(&mut self) -> bool {
        let mut changed = false;
        let ks: Vec<usize> = self.table.k_range().filter(|k| k % 2 == 0).collect();
        let ns: Vec<usize> = self.table.n_range().collect();
        for k in ks {
            for &n1 in &ns {
                let Some(first) = self.c6_operand(n1, k) else {
                    continue;
                };
                for &n2 in &ns {
                    let Some(second) = self.table.get_shared(n2, k).map(Arc::clone) else {
                        continue;
                    };
                    let applied = Rule::C6.apply_pair(first.params(), second.params());
                    if let Some(applied) = applied {
                        let parents = vec![Arc::clone(&first), second];
                        changed |= self.offer(derived(applied, Rule::C6, parents));
                    }
                }
            }
        }
        changed
    }
}

/// Applies every transformation to every entry until no entry improves.
///
/// Each round runs the rules in the order C1, C2, C3, C4, C5, C6, C7,
/// demotion; each rule scans entries in `(k, n)` order and sees the updates
/// made earlier in the same round. Only strictly larger values replace an
/// entry, and exact entries are never replaced.
pub fn propagate(table: &BoundTable) -> Result<(BoundTable, PropagationStats), BoundError> {
    if table.n_range().is_empty() || table.k_range().is_empty() {
        return Err(BoundError::RangeTooSmall);
    }
    let mut worker = Worker {
        table: table.clone(),
        stats: PropagationStats::default(),
    };
    loop {
        let mut changed = false;
        for rule in ROUND_ORDER {
            changed |= if rule.is_pairwise() {
                worker.pair_pass()
            } else {
                worker.unary_pass(rule)
            };
        }
        if !changed {
            break;
        }
        worker.stats.rounds += 1;
    }
    Ok((worker.table, worker.stats))
}
