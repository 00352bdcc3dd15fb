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

/// Reference codes used across the suites: (n, k, elements).
pub fn reference_codes() -> Vec<(usize, usize, Vec<u8>)> {
    vec![
        (3, 2, vec![2, 1, 3, 2, 1, 3]),
        (2, 2, vec![1, 2, 1, 2]),
        (4, 3, vec![2, 1, 3, 4, 2, 1, 3, 4]),
        (6, 3, vec![1, 5, 2, 6, 3, 5, 4, 6, 1, 5, 2, 6, 3, 5, 4, 6]),
        (
            7,
            3,
            vec![
                5, 2, 6, 1, 7, 2, 5, 3, 6, 2, 7, 4, 5, 2, 6, 1, 7, 2, 5, 3, 6, 2, 7, 4,
            ],
        ),
        (
            8,
            3,
            vec![
                5, 2, 6, 8, 1, 7, 2, 8, 5, 3, 6, 8, 2, 7, 4, 8, 5, 2, 6, 8, 1, 7, 2, 8, 5, 3, 6, 8,
                2, 7, 4, 8,
            ],
        ),
        (
            6,
            2,
            vec![
                1, 2, 6, 4, 5, 6, 1, 3, 5, 4, 6, 5, 1, 2, 6, 4, 5, 6, 1, 3, 5, 4, 6, 5,
            ],
        ),
        // Reflected Gray code of I(4).
        (4, 1, vec![1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 4]),
    ]
}
