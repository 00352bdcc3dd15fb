use std::collections::BTreeSet;
use std::fmt::Write;

use circuit_core::bounds::BoundTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Csv,
    Text,
}

/// Renders a bound table.
///
/// CSV has one row per dimension `n` and one column per spread `k` that has
/// at least one entry; missing cells are empty. The text form lists every
/// entry with its derivation.
pub fn export_table(table: &BoundTable, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => to_csv(table),
        TableFormat::Text => to_text(table),
    }
}

fn to_csv(table: &BoundTable) -> String {
    let ks: BTreeSet<usize> = table.entries().map(|e| e.k).collect();
    let ns: BTreeSet<usize> = table.entries().map(|e| e.n).collect();
    let mut out = String::from("n");
    for k in &ks {
        write!(out, ", {k}").unwrap();
    }
    out.push('\n');
    for n in &ns {
        write!(out, "{n}").unwrap();
        for &k in &ks {
            match table.value(*n, k) {
                Some(v) => write!(out, ", {v}").unwrap(),
                None => out.push_str(", "),
            }
        }
        out.push('\n');
    }
    out
}

fn to_text(table: &BoundTable) -> String {
    let mut out = String::new();
    let mut entries: Vec<_> = table.entries().collect();
    entries.sort_by_key(|e| (e.n, e.k));
    for e in entries {
        write!(out, "K({},{}) >= {}", e.n, e.k, e.value).unwrap();
        if e.exact {
            out.push_str(" (exact)");
        }
        if let Some(raw) = e.raw {
            write!(out, " (raw {}/{})", raw.numerator, raw.denominator).unwrap();
        }
        writeln!(out, "  {}", e.chain()).unwrap();
    }
    out
}
