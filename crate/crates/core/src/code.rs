use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::error::CodeError;
use crate::spread::{SpreadVerdict, Witness};
use crate::vertex::Vertex;

/// Cyclic list of 1-indexed coordinate flips.
///
/// Construction only checks the shape (nonzero elements, even length of at
/// least four). Range against a dimension and closure are checked when
/// vertices are derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionSequence {
    elements: Vec<u8>,
}

impl TransitionSequence {
    pub fn new(elements: Vec<u8>) -> Result<Self, CodeError> {
        if elements.len() < 4 || !elements.len().is_multiple_of(2) {
            return Err(CodeError::InvalidLength(elements.len()));
        }
        if let Some(position) = elements.iter().position(|&e| e == 0) {
            return Err(CodeError::ElementOutOfRange {
                position,
                element: 0,
                dimension: crate::MAX_DIMENSION,
            });
        }
        Ok(TransitionSequence { elements })
    }

    pub fn elements(&self) -> &[u8] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Element at a cyclic position.
    pub fn at(&self, position: usize) -> u8 {
        self.elements[position % self.elements.len()]
    }

    /// Largest coordinate used.
    pub fn max_element(&self) -> u8 {
        self.elements.iter().copied().max().unwrap_or(0)
    }

    pub fn into_elements(self) -> Vec<u8> {
        self.elements
    }

    fn check_range(&self, n: usize) -> Result<(), CodeError> {
        if n == 0 || n > crate::MAX_DIMENSION {
            return Err(CodeError::DimensionOutOfRange(n));
        }
        match self.elements.iter().position(|&e| e as usize > n) {
            Some(position) => Err(CodeError::ElementOutOfRange {
                position,
                element: self.elements[position],
                dimension: n,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for TransitionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// Walks `seq` from the all-zeros vertex. Vertex `i + 1` is vertex `i` with
/// coordinate `seq[i]` flipped, and the last transition must lead back to
/// the start.
pub fn vertices_of(seq: &TransitionSequence, n: usize) -> Result<Vec<Vertex>, CodeError> {
    let (vertices, end) = walk(seq, n)?;
    if end.bits() != 0 {
        return Err(CodeError::NotClosed);
    }
    Ok(vertices)
}

fn walk(seq: &TransitionSequence, n: usize) -> Result<(Vec<Vertex>, Vertex), CodeError> {
    seq.check_range(n)?;
    let mut current = Vertex::zero(n)?;
    let mut vertices = Vec::with_capacity(seq.len());
    for &e in seq.elements() {
        vertices.push(current);
        current = current.flip(e as usize);
    }
    Ok((vertices, current))
}

/// Lexicographically smallest pair `(i, j)`, `i < j`, with equal vertices.
fn first_repeat(vertices: &[Vertex]) -> Option<(usize, usize)> {
    let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (j, v) in vertices.iter().enumerate() {
        match seen.get(&v.bits()) {
            // Only the first repeat of each vertex value can be minimal.
            Some(&i) => {
                if best.is_none_or(|b| (i, j) < b) {
                    best = Some((i, j));
                }
            }
            None => {
                seen.insert(v.bits(), j);
            }
        }
    }
    best
}

/// Checks that the walk described by `seq` visits pairwise distinct vertices.
///
/// A repeated vertex is reported as a failing verdict even when the walk does
/// not close; a repeat-free walk that does not close is an error.
pub fn is_simple_cycle(seq: &TransitionSequence, n: usize) -> Result<SpreadVerdict, CodeError> {
    let (vertices, end) = walk(seq, n)?;
    let len = vertices.len();
    if let Some((i, j)) = first_repeat(&vertices) {
        return Ok(SpreadVerdict::violated(Witness {
            first: i,
            second: j,
            cycle_distance: ring_distance(len, i, j),
            hypercube_distance: 0,
        }));
    }
    if end.bits() != 0 {
        return Err(CodeError::NotClosed);
    }
    Ok(SpreadVerdict::holds())
}

pub(crate) fn ring_distance(len: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(len - d)
}

/// A closed simple cycle in `I(n)` together with its claimed spread.
///
/// The claimed spread is not verified on construction; use
/// [`crate::has_spread`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitCode {
    n: usize,
    k: usize,
    seq: TransitionSequence,
    vertices: Vec<Vertex>,
}

impl CircuitCode {
    pub fn new(n: usize, k: usize, seq: TransitionSequence) -> Result<Self, CodeError> {
        let vertices = vertices_of(&seq, n)?;
        if let Some((first, second)) = first_repeat(&vertices) {
            return Err(CodeError::NotSimple { first, second });
        }
        Ok(CircuitCode {
            n,
            k,
            seq,
            vertices,
        })
    }

    /// Convenience constructor from raw elements.
    pub fn from_elements(n: usize, k: usize, elements: Vec<u8>) -> Result<Self, CodeError> {
        CircuitCode::new(n, k, TransitionSequence::new(elements)?)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// The claimed spread.
    pub fn spread(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn sequence(&self) -> &TransitionSequence {
        &self.seq
    }

    /// Vertices in cycle order; `vertices()[0]` is all-zeros.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// The same cycle with a different claimed spread.
    pub fn with_spread(&self, k: usize) -> CircuitCode {
        CircuitCode { k, ..self.clone() }
    }

    /// The same transition sequence in a cube of dimension `n`.
    pub fn in_dimension(&self, n: usize) -> Result<CircuitCode, CodeError> {
        CircuitCode::new(n, self.k, self.seq.clone())
    }
}

/// Distance along the cycle between vertex positions `i` and `j`.
pub fn cycle_distance(code: &CircuitCode, i: usize, j: usize) -> Result<usize, CodeError> {
    let len = code.len();
    for index in [i, j] {
        if index >= len {
            return Err(CodeError::IndexOutOfRange { index, len });
        }
    }
    Ok(ring_distance(len, i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::{String, ToString};
    use alloc::vec;

    fn seq(e: &[u8]) -> TransitionSequence {
        TransitionSequence::new(e.to_vec()).unwrap()
    }

    fn render(vs: &[Vertex]) -> Vec<String> {
        vs.iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn hexagon_vertices() {
        let vs = vertices_of(&seq(&[2, 1, 3, 2, 1, 3]), 3).unwrap();
        assert_eq!(render(&vs), ["000", "010", "110", "111", "101", "001"]);
    }

    #[test]
    fn square_vertices() {
        let vs = vertices_of(&seq(&[1, 2, 1, 2]), 2).unwrap();
        assert_eq!(render(&vs), ["00", "10", "11", "01"]);
    }

    #[test]
    fn vertices_errors() {
        assert_eq!(
            vertices_of(&seq(&[1, 2, 1, 3]), 3),
            Err(CodeError::NotClosed)
        );
        assert_eq!(
            vertices_of(&seq(&[1, 2, 1, 3]), 2),
            Err(CodeError::ElementOutOfRange {
                position: 3,
                element: 3,
                dimension: 2
            })
        );
        assert_eq!(
            TransitionSequence::new(vec![1, 2]),
            Err(CodeError::InvalidLength(2))
        );
        assert_eq!(
            TransitionSequence::new(vec![1, 2, 1, 2, 1]),
            Err(CodeError::InvalidLength(5))
        );
        assert!(TransitionSequence::new(vec![1, 0, 1, 0]).is_err());
    }

    #[test]
    fn simple_cycle_checks() {
        assert!(is_simple_cycle(&seq(&[2, 1, 3, 2, 1, 3]), 3).unwrap().holds);
        let verdict = is_simple_cycle(&seq(&[1, 2, 1, 2, 1, 2]), 2).unwrap();
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert_eq!((w.first, w.second), (0, 4));
        assert_eq!(w.hypercube_distance, 0);
        // Repeat-free but open walk.
        assert_eq!(
            is_simple_cycle(&seq(&[1, 2, 3, 4]), 4),
            Err(CodeError::NotClosed)
        );
    }

    #[test]
    fn circuit_code_rejects_repeats() {
        assert_eq!(
            CircuitCode::from_elements(2, 1, vec![1, 2, 1, 2, 1, 2, 1, 2]),
            Err(CodeError::NotSimple {
                first: 0,
                second: 4
            })
        );
    }

    #[test]
    fn cycle_distance_examples() {
        let hex = CircuitCode::from_elements(3, 2, vec![2, 1, 3, 2, 1, 3]).unwrap();
        // 1-indexed positions 1 and 4 are 0-indexed 0 and 3.
        assert_eq!(cycle_distance(&hex, 0, 3).unwrap(), 3);
        let oct = CircuitCode::from_elements(4, 3, vec![2, 1, 3, 4, 2, 1, 3, 4]).unwrap();
        assert_eq!(cycle_distance(&oct, 1, 7).unwrap(), 2);
        assert_eq!(cycle_distance(&oct, 3, 3).unwrap(), 0);
        assert_eq!(
            cycle_distance(&oct, 0, 8),
            Err(CodeError::IndexOutOfRange { index: 8, len: 8 })
        );
    }
}
