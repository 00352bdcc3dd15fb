//! Brute-force spread oracles.
//!
//! Every check here is an exhaustive scan over vertex pairs (or transition
//! windows) in the order `i < j`, so the first violation found is the
//! lexicographically smallest one.

use crate::code::{ring_distance, CircuitCode};
use crate::error::CodeError;

/// A pair of vertex positions (0-indexed, `first < second`) that violates
/// the checked condition, with both distances between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub first: usize,
    pub second: usize,
    pub cycle_distance: usize,
    pub hypercube_distance: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpreadVerdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl SpreadVerdict {
    pub fn holds() -> Self {
        SpreadVerdict {
            holds: true,
            witness: None,
        }
    }

    pub fn violated(witness: Witness) -> Self {
        SpreadVerdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

fn scan(code: &CircuitCode, mut violates: impl FnMut(usize, usize) -> bool) -> SpreadVerdict {
    let vertices = code.vertices();
    let len = vertices.len();
    for (i, x) in vertices.iter().enumerate() {
        for (j, y) in vertices.iter().enumerate().skip(i + 1) {
            let dh = (x.bits() ^ y.bits()).count_ones() as usize;
            let dc = ring_distance(len, i, j);
            if violates(dc, dh) {
                return SpreadVerdict::violated(Witness {
                    first: i,
                    second: j,
                    cycle_distance: dc,
                    hypercube_distance: dh,
                });
            }
        }
    }
    SpreadVerdict::holds()
}

/// Checks whether `code` has spread `k`.
///
/// With `N >= 2k` the test is the pairwise characterization
/// `d_C >= k => d_H >= k`; for shorter cycles every pair with `d_H < k`
/// must satisfy `d_C = d_H`. `k = 0` is treated as `k = 1`.
pub fn has_spread(code: &CircuitCode, k: usize) -> SpreadVerdict {
    let k = k.max(1);
    if code.len() >= 2 * k {
        scan(code, |dc, dh| dc >= k && dh < k)
    } else {
        scan(code, |dc, dh| dh < k && dc != dh)
    }
}

/// True when hypercube and cycle distances agree for every pair. Such a
/// cycle has every spread.
pub fn is_isometric(code: &CircuitCode) -> bool {
    scan(code, |dc, dh| dc != dh).holds
}

/// Largest spread of `code`, capped at `N/2`.
///
/// Any spread above `N/2` only adds the requirement that the cycle be
/// isometric, which is already implied by spread `N/2 + 1`; a result of
/// `N/2` together with [`is_isometric`] means every spread holds.
pub fn max_spread(code: &CircuitCode) -> usize {
    let cap = code.len() / 2;
    let mut k = 1;
    while k < cap && has_spread(code, k + 1).holds {
        k += 1;
    }
    k
}

/// Checks that every `k + 1` cyclically consecutive transitions are distinct.
///
/// A repeat between transitions at positions `a < b` is reported as the
/// vertex pair `(a, b + 1)`, whose hypercube distance is below its cycle
/// distance.
pub fn check_consecutive_distinct(
    code: &CircuitCode,
    k: usize,
) -> Result<SpreadVerdict, CodeError> {
    let len = code.len();
    let required = 2 * (k + 1);
    if len < required {
        return Err(CodeError::LengthTooShort { len, required });
    }
    let seq = code.sequence();
    let vertices = code.vertices();
    let mut best: Option<(usize, usize)> = None;
    for start in 0..len {
        for offset in 1..=k {
            if seq.at(start) == seq.at(start + offset) {
                let a = start;
                let b = (start + offset + 1) % len;
                let pair = if a < b { (a, b) } else { (b, a) };
                if best.is_none_or(|p| pair < p) {
                    best = Some(pair);
                }
            }
        }
    }
    Ok(match best {
        None => SpreadVerdict::holds(),
        Some((first, second)) => SpreadVerdict::violated(Witness {
            first,
            second,
            cycle_distance: ring_distance(len, first, second),
            hypercube_distance: (vertices[first].bits() ^ vertices[second].bits()).count_ones()
                as usize,
        }),
    })
}

/// Number of chords: vertex pairs adjacent in the cube but not on the cycle.
///
/// Spread 2 and above forbid chords; spread 1 does not.
pub fn chord_count(code: &CircuitCode) -> usize {
    let vertices = code.vertices();
    let len = vertices.len();
    let mut chords = 0;
    for i in 0..len {
        for j in i + 1..len {
            let dh = (vertices[i].bits() ^ vertices[j].bits()).count_ones();
            if dh == 1 && ring_distance(len, i, j) != 1 {
                chords += 1;
            }
        }
    }
    chords
}
