//! Independent spread oracle for tests.
//!
//! Vertices are plain boolean vectors and the spread condition is checked
//! straight from its definition (`d_H < k  =>  d_C = d_H`) for every pair,
//! never through the `d_C >= k => d_H >= k` shortcut the library uses.

#![allow(dead_code)]

pub fn walk(elements: &[u8], n: usize) -> Option<Vec<Vec<bool>>> {
    let mut current = vec![false; n];
    let mut out = Vec::with_capacity(elements.len());
    for &e in elements {
        let e = e as usize;
        if e == 0 || e > n {
            return None;
        }
        out.push(current.clone());
        current[e - 1] = !current[e - 1];
    }
    current.iter().all(|b| !b).then_some(out)
}

pub fn hamming(a: &[bool], b: &[bool]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn cyclic(len: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(len - d)
}

/// First pair `(i, j)` breaking the definition, or `None` if the sequence is
/// a closed simple cycle with spread `k`. Open or non-simple walks report
/// `Some((usize::MAX, usize::MAX))`.
pub fn definition_violation(elements: &[u8], n: usize, k: usize) -> Option<(usize, usize)> {
    let Some(vs) = walk(elements, n) else {
        return Some((usize::MAX, usize::MAX));
    };
    let len = vs.len();
    for i in 0..len {
        for j in i + 1..len {
            let dh = hamming(&vs[i], &vs[j]);
            if dh == 0 {
                return Some((usize::MAX, usize::MAX));
            }
            if dh < k && cyclic(len, i, j) != dh {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn has_spread(elements: &[u8], n: usize, k: usize) -> bool {
    definition_violation(elements, n, k).is_none()
}

/// Smallest pair `(i, j)` with `i < j`, cycle distance at least `k` and
/// Hamming distance below `k`, scanning pairs in lexicographic order.
pub fn first_short_chord(
    elements: &[u8],
    n: usize,
    k: usize,
) -> Option<(usize, usize, usize, usize)> {
    let vs = walk(elements, n)?;
    let len = vs.len();
    for i in 0..len {
        for j in i + 1..len {
            let dc = cyclic(len, i, j);
            let dh = hamming(&vs[i], &vs[j]);
            if dc >= k && dh < k {
                return Some((i, j, dc, dh));
            }
        }
    }
    None
}
