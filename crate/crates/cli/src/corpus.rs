//! Every transition sequence shipped with the tool, checked at compile time.

use circuit_core::CircuitCode;

use crate::error::CliError;

const HEXAGON: [u8; 6] = [2, 1, 3, 2, 1, 3];

const OCTAGON: [u8; 8] = [2, 1, 3, 4, 2, 1, 3, 4];

const SPREAD3_N6: [u8; 16] = [1, 5, 2, 6, 3, 5, 4, 6, 1, 5, 2, 6, 3, 5, 4, 6];

const SPREAD3_N7: [u8; 24] = [
    5, 2, 6, 1, 7, 2, 5, 3, 6, 2, 7, 4, 5, 2, 6, 1, 7, 2, 5, 3, 6, 2, 7, 4,
];

const SPREAD3_N8: [u8; 32] = [
    5, 2, 6, 8, 1, 7, 2, 8, 5, 3, 6, 8, 2, 7, 4, 8, 5, 2, 6, 8, 1, 7, 2, 8, 5, 3, 6, 8, 2, 7, 4, 8,
];

const SNAKE_6_24: [u8; 24] = [
    1, 2, 6, 4, 5, 6, 1, 3, 5, 4, 6, 5, 1, 2, 6, 4, 5, 6, 1, 3, 5, 4, 6, 5,
];

// Row-wise, 30 elements per row.
#[rustfmt::skip]
const CODE_22_7_234: [u8; 234] = [
    6, 12, 4, 3, 16, 8, 9, 18, 17, 13, 4, 12, 15, 16, 5, 19, 14, 13, 9, 1, 2, 10, 6, 18, 14, 5, 8, 9, 15, 7,
    6, 20, 2, 11, 12, 3, 16, 7, 15, 18, 1, 2, 8, 17, 16, 12, 4, 19, 5, 13, 9, 17, 8, 11, 12, 18, 1, 10, 9, 5,
    14, 15, 6, 21, 2, 10, 1, 4, 5, 11, 3, 18, 2, 15, 7, 8, 16, 12, 3, 19, 11, 14, 15, 4, 13, 12, 8, 18, 17, 1,
    9, 5, 13, 4, 7, 20, 8, 14, 6, 5, 1, 10, 11, 18, 2, 15, 6, 14, 17, 1, 7, 19, 16, 15, 11, 3, 22, 4, 12, 8,
    16, 7, 10, 11, 18, 17, 9, 8, 4, 13, 14, 5, 19, 1, 9, 17, 3, 4, 10, 2, 18, 1, 14, 6, 7, 15, 11, 2, 20, 10,
    13, 14, 3, 12, 11, 7, 18, 16, 17, 8, 4, 12, 3, 6, 19, 7, 13, 5, 4, 17, 9, 10, 18, 1, 14, 5, 13, 16, 17, 6,
    21, 15, 14, 10, 2, 3, 11, 7, 18, 15, 6, 9, 10, 16, 8, 7, 19, 3, 12, 13, 4, 17, 8, 16, 18, 2, 3, 9, 1, 17,
    13, 5, 20, 6, 14, 10, 1, 9, 12, 13, 18, 2, 11, 10, 6, 15, 16, 7, 19, 3, 11, 2, 5, 22,
];

const MAX_CHECKED_LEN: usize = 256;

/// Compile-time guard against transcription errors: elements in range, walk
/// closed and simple, and spread `k` by the pairwise test.
const fn is_valid_code(seq: &[u8], n: usize, k: usize) -> bool {
    let len = seq.len();
    if len < 4 || !len.is_multiple_of(2) || len > MAX_CHECKED_LEN || n == 0 || n > 32 {
        return false;
    }
    let mut vertices = [0u32; MAX_CHECKED_LEN];
    let mut current = 0u32;
    let mut i = 0;
    while i < len {
        let e = seq[i] as usize;
        if e == 0 || e > n {
            return false;
        }
        vertices[i] = current;
        current ^= 1 << (e - 1);
        i += 1;
    }
    if current != 0 {
        return false;
    }
    let mut i = 0;
    while i < len {
        let mut j = i + 1;
        while j < len {
            let dh = (vertices[i] ^ vertices[j]).count_ones() as usize;
            let gap = j - i;
            let dc = if gap < len - gap { gap } else { len - gap };
            if dh == 0 {
                return false;
            }
            if len >= 2 * k {
                if dc >= k && dh < k {
                    return false;
                }
            } else if dh < k && dc != dh {
                return false;
            }
            j += 1;
        }
        i += 1;
    }
    true
}

const _: () = assert!(is_valid_code(&HEXAGON, 3, 2));
const _: () = assert!(is_valid_code(&OCTAGON, 4, 3));
const _: () = assert!(is_valid_code(&SPREAD3_N6, 6, 3));
const _: () = assert!(is_valid_code(&SPREAD3_N7, 7, 3));
const _: () = assert!(is_valid_code(&SPREAD3_N8, 8, 3));
const _: () = assert!(is_valid_code(&SNAKE_6_24, 6, 2));
const _: () = assert!(is_valid_code(&CODE_22_7_234, 22, 7));

struct RawEntry {
    id: &'static str,
    n: usize,
    k: usize,
    elements: &'static [u8],
    source: &'static str,
}

const ENTRIES: [RawEntry; 7] = [
    RawEntry {
        id: "fig1-(3,2,6)",
        n: 3,
        k: 2,
        elements: &HEXAGON,
        source: "hexagon in I(3)",
    },
    RawEntry {
        id: "fig1-(4,3,8)",
        n: 4,
        k: 3,
        elements: &OCTAGON,
        source: "hexagon raised to spread 3 by construct7",
    },
    RawEntry {
        id: "lemma4-T6",
        n: 6,
        k: 3,
        elements: &SPREAD3_N6,
        source: "spread-3 family base, n = 6",
    },
    RawEntry {
        id: "lemma4-T7",
        n: 7,
        k: 3,
        elements: &SPREAD3_N7,
        source: "spread-3 family base, n = 7",
    },
    RawEntry {
        id: "lemma4-T8",
        n: 8,
        k: 3,
        elements: &SPREAD3_N8,
        source: "spread-3 family base, n = 8",
    },
    RawEntry {
        id: "appendixA-(6,2,24)",
        n: 6,
        k: 2,
        elements: &SNAKE_6_24,
        source: "snake whose naive spread-3 extensions all fail",
    },
    RawEntry {
        id: "appendixB-(22,7,234)",
        n: 22,
        k: 7,
        elements: &CODE_22_7_234,
        source: "(22,7) code of length 234 built by construct7 from a (17,6,204) code",
    },
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub id: &'static str,
    pub code: CircuitCode,
    pub source: &'static str,
}

impl RawEntry {
    fn build(&self) -> CorpusEntry {
        let code = CircuitCode::from_elements(self.n, self.k, self.elements.to_vec())
            .expect("corpus sequences are checked at compile time");
        CorpusEntry {
            id: self.id,
            code,
            source: self.source,
        }
    }
}

/// All embedded codes.
pub fn corpus() -> Vec<CorpusEntry> {
    ENTRIES.iter().map(RawEntry::build).collect()
}

pub fn corpus_ids() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.id)
}

pub fn lookup(id: &str) -> Result<CorpusEntry, CliError> {
    ENTRIES
        .iter()
        .find(|e| e.id == id)
        .map(RawEntry::build)
        .ok_or_else(|| CliError::NoEntry(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let b = lookup("appendixB-(22,7,234)").unwrap();
        assert_eq!(b.code.len(), 234);
        assert_eq!(*b.code.sequence().elements().last().unwrap(), 22);
        let t6 = lookup("lemma4-T6").unwrap();
        assert_eq!(t6.code.sequence().elements(), &SPREAD3_N6);
        assert!(matches!(lookup("nope"), Err(CliError::NoEntry(_))));
    }

    #[test]
    fn exactly_seven_entries() {
        let ids: Vec<_> = corpus_ids().collect();
        assert_eq!(
            ids,
            [
                "fig1-(3,2,6)",
                "fig1-(4,3,8)",
                "lemma4-T6",
                "lemma4-T7",
                "lemma4-T8",
                "appendixA-(6,2,24)",
                "appendixB-(22,7,234)"
            ]
        );
    }

    #[test]
    fn guard_rejects_bad_sequences() {
        assert!(!is_valid_code(&[1, 2, 1, 3], 3, 1));
        assert!(!is_valid_code(&[1, 2, 1, 2, 1, 2, 1, 2], 2, 1));
        assert!(!is_valid_code(&CODE_22_7_234, 22, 8));
        assert!(!is_valid_code(&CODE_22_7_234, 21, 7));
    }
}
