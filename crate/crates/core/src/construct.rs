//! Transition-sequence rewrites that add coordinates to a circuit code.
//!
//! Both [`construct7`] and [`klee_padding`] cut each half of the sequence
//! into `q = ceil(N / (2(k+1)))` segments of `k + 1` transitions (the last
//! one may be shorter) and append new coordinates at segment ends.

use alloc::vec::Vec;

use crate::code::{CircuitCode, TransitionSequence};
use crate::error::CodeError;
use crate::spread::has_spread;

/// `(n, k, N)` of a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub len: usize,
}

impl CodeParams {
    pub const fn new(n: usize, k: usize, len: usize) -> Self {
        CodeParams { n, k, len }
    }

    pub fn of(code: &CircuitCode) -> Self {
        CodeParams::new(code.dimension(), code.spread(), code.len())
    }
}

impl core::fmt::Display for CodeParams {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.len)
    }
}

/// A block of one half of a transition sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment<'a> {
    /// 1 or 2.
    pub half: usize,
    /// 1-based segment index within the half.
    pub index: usize,
    pub elements: &'a [u8],
}

/// Splits `seq` into halves and each half into blocks of `k + 1`.
pub fn segments(seq: &TransitionSequence, k: usize) -> Vec<Segment<'_>> {
    let elements = seq.elements();
    let (first, second) = elements.split_at(elements.len() / 2);
    let mut out = Vec::new();
    for (h, half) in [first, second].into_iter().enumerate() {
        for (j, chunk) in half.chunks(k + 1).enumerate() {
            out.push(Segment {
                half: h + 1,
                index: j + 1,
                elements: chunk,
            });
        }
    }
    out
}

/// A new coordinate appended at the end of a segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Insertion {
    pub half: usize,
    pub segment: usize,
    /// Subscript of the new element (`s_l`), 1-based.
    pub label: usize,
    /// Coordinate the element maps to.
    pub element: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub output: CircuitCode,
    /// Segments per half.
    pub q: usize,
    /// Number of new coordinates.
    pub r: usize,
    pub insertions: Vec<Insertion>,
    pub input_params: CodeParams,
    pub output_params: CodeParams,
}

impl ConstructionReport {
    pub fn insertions_per_half(&self) -> usize {
        self.insertions.iter().filter(|ins| ins.half == 1).count()
    }
}

/// Parameter arithmetic of the spread-raising construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Construct7Plan {
    pub q: usize,
    pub r: usize,
    pub output: CodeParams,
}

fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// Segments per half: `ceil(N / (2(k+1)))`.
pub fn segment_count(len: usize, k: usize) -> usize {
    len.div_ceil(2 * (k + 1))
}

/// Subscript of the new element appended to segment `j` out of `q`: the
/// 2-adic valuation of `j` plus one for `j < q`, and `r` for the last one.
pub fn ruler_label(j: usize, q: usize) -> usize {
    debug_assert!(j >= 1 && j <= q);
    if j == q {
        ceil_log2(q) + 1
    } else {
        j.trailing_zeros() as usize + 1
    }
}

/// `(n, k, N) -> (n + r, k + 1, N + 2q)` with `q = ceil(N / (2(k+1)))` and
/// `r = ceil(log2 q) + 1`.
pub fn construct7_plan(input: CodeParams) -> Result<Construct7Plan, CodeError> {
    let CodeParams { n, k, len } = input;
    let required = 2 * (k + 1);
    if len < required {
        return Err(CodeError::LengthTooShort { len, required });
    }
    if len % 2 != 0 {
        return Err(CodeError::OddLength(len));
    }
    let q = segment_count(len, k);
    let r = ceil_log2(q) + 1;
    // r as ceil(log2(N / (2(k+1)))) + 1, computed without the inner ceiling.
    let mut m = 0;
    while (required << m) < len {
        m += 1;
    }
    assert_eq!(r, m + 1, "segment-level and length-level r disagree");
    Ok(Construct7Plan {
        q,
        r,
        output: CodeParams::new(n + r, k + 1, len + 2 * q),
    })
}

fn check_output_dimension(n: usize) -> Result<(), CodeError> {
    if n > crate::MAX_DIMENSION {
        return Err(CodeError::DimensionOutOfRange(n));
    }
    Ok(())
}

fn require_spread(code: &CircuitCode) -> Result<(), CodeError> {
    if !has_spread(code, code.spread()).holds {
        return Err(CodeError::InputNotVerified {
            spread: code.spread(),
        });
    }
    Ok(())
}

fn rebuild(
    code: &CircuitCode,
    mut append: impl FnMut(&Segment<'_>) -> Option<Insertion>,
) -> (Vec<u8>, Vec<Insertion>) {
    let mut elements = Vec::with_capacity(code.len() + code.len() / 2);
    let mut insertions = Vec::new();
    for segment in segments(code.sequence(), code.spread()) {
        elements.extend_from_slice(segment.elements);
        if let Some(ins) = append(&segment) {
            elements.push(ins.element);
            insertions.push(ins);
        }
    }
    (elements, insertions)
}

/// Builds an `(n + r, k + 1)` code from an `(n, k)` code of length at least
/// `2(k+1)`.
///
/// New element `s_l` is coordinate `n + l`. Segment `j < q` of each half gets
/// `s_l` where `2^(l-1)` is the largest power of two dividing `j`; segment
/// `q` gets `s_r` (so a single segment gets `s_1`). The input is checked for
/// spread `k` first and the output for spread `k + 1` afterwards.
pub fn construct7(code: &CircuitCode) -> Result<ConstructionReport, CodeError> {
    let input = CodeParams::of(code);
    let plan = construct7_plan(input)?;
    check_output_dimension(plan.output.n)?;
    require_spread(code)?;

    let n = code.dimension();
    let q = plan.q;
    let (elements, insertions) = rebuild(code, |segment| {
        let label = ruler_label(segment.index, q);
        Some(Insertion {
            half: segment.half,
            segment: segment.index,
            label,
            element: (n + label) as u8,
        })
    });

    let output = CircuitCode::new(
        plan.output.n,
        plan.output.k,
        TransitionSequence::new(elements)?,
    )?;
    debug_assert_eq!(output.len(), plan.output.len);
    if !has_spread(&output, output.spread()).holds {
        return Err(CodeError::PostVerificationFailed {
            spread: output.spread(),
        });
    }
    Ok(ConstructionReport {
        q,
        r: plan.r,
        insertions,
        input_params: input,
        output_params: CodeParams::of(&output),
        output,
    })
}

/// Parameters of the padding step: `(n, k, N) -> (n + 1, k, 2(k+1)q)` with
/// `p = (k+1)q - N/2` insertions per half. Requires `N > 2(k+1)^2`.
pub fn klee_padding_plan(input: CodeParams) -> Result<(usize, CodeParams), CodeError> {
    let CodeParams { n, k, len } = input;
    let threshold = 2 * (k + 1) * (k + 1);
    if len <= threshold {
        return Err(CodeError::LengthTooShort {
            len,
            required: threshold + 1,
        });
    }
    if len % 2 != 0 {
        return Err(CodeError::OddLength(len));
    }
    let q = segment_count(len, k);
    let p = (k + 1) * q - len / 2;
    Ok((p, CodeParams::new(n + 1, k, 2 * (k + 1) * q)))
}

/// Appends the new coordinate `n + 1` to the first `p` segments of each half
/// so that the length becomes a multiple of `2(k+1)`. The spread stays `k`.
pub fn klee_padding(code: &CircuitCode) -> Result<ConstructionReport, CodeError> {
    let input = CodeParams::of(code);
    let (p, planned) = klee_padding_plan(input)?;
    check_output_dimension(planned.n)?;
    require_spread(code)?;

    let element = (code.dimension() + 1) as u8;
    let (elements, insertions) = rebuild(code, |segment| {
        (segment.index <= p).then_some(Insertion {
            half: segment.half,
            segment: segment.index,
            label: 1,
            element,
        })
    });

    let output = CircuitCode::new(planned.n, planned.k, TransitionSequence::new(elements)?)?;
    debug_assert_eq!(output.len(), planned.len);
    if !has_spread(&output, output.spread()).holds {
        return Err(CodeError::PostVerificationFailed {
            spread: output.spread(),
        });
    }
    Ok(ConstructionReport {
        q: segment_count(code.len(), code.spread()),
        r: 1,
        insertions,
        input_params: input,
        output_params: CodeParams::of(&output),
        output,
    })
}

/// Phase of the naive insertion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NaiveOffset {
    Zero,
    One,
    Two,
}

impl NaiveOffset {
    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            0 => Some(NaiveOffset::Zero),
            1 => Some(NaiveOffset::One),
            2 => Some(NaiveOffset::Two),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Inserts the new coordinate `n + 1` before every old position `p` with
/// `p mod (k + 1) == offset`, i.e. after every block of `k + 1` old elements
/// at the given phase. The result carries no spread guarantee.
pub fn naive_insertion(
    code: &CircuitCode,
    offset: NaiveOffset,
) -> Result<TransitionSequence, CodeError> {
    let n = code.dimension() + 1;
    check_output_dimension(n)?;
    let period = code.spread() + 1;
    let mut elements = Vec::with_capacity(code.len() + code.len() / period + 1);
    for (p, &e) in code.sequence().elements().iter().enumerate() {
        if p % period == offset.index() {
            elements.push(n as u8);
        }
        elements.push(e);
    }
    TransitionSequence::new(elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn ruler_for_ten_segments() {
        let labels: Vec<usize> = (1..=10).map(|j| ruler_label(j, 10)).collect();
        assert_eq!(labels, [1, 2, 1, 3, 1, 2, 1, 4, 1, 5]);
        assert_eq!(ruler_label(1, 1), 1);
    }

    #[test]
    fn plan_arithmetic() {
        let plan = construct7_plan(CodeParams::new(17, 6, 204)).unwrap();
        assert_eq!(plan.q, 15);
        assert_eq!(plan.r, 5);
        assert_eq!(plan.output, CodeParams::new(22, 7, 234));
        let hex = construct7_plan(CodeParams::new(3, 2, 6)).unwrap();
        assert_eq!((hex.q, hex.r, hex.output), (1, 1, CodeParams::new(4, 3, 8)));
        assert_eq!(
            construct7_plan(CodeParams::new(3, 3, 6)),
            Err(CodeError::LengthTooShort {
                len: 6,
                required: 8
            })
        );
        assert_eq!(
            construct7_plan(CodeParams::new(3, 1, 7)),
            Err(CodeError::OddLength(7))
        );
    }

    #[test]
    fn plan_r_matches_length_formula() {
        for k in 1..12 {
            for half in (k + 1)..400 {
                let plan = construct7_plan(CodeParams::new(10, k, 2 * half)).unwrap();
                assert!(plan.r >= 1);
            }
        }
    }

    #[test]
    fn hexagon_to_octagon() {
        let hex = CircuitCode::from_elements(3, 2, vec![2, 1, 3, 2, 1, 3]).unwrap();
        let report = construct7(&hex).unwrap();
        assert_eq!(
            report.output.sequence().elements(),
            &[2, 1, 3, 4, 2, 1, 3, 4]
        );
        assert_eq!(report.output_params, CodeParams::new(4, 3, 8));
        assert_eq!((report.q, report.r), (1, 1));
        assert_eq!(report.insertions.len(), 2);
    }

    #[test]
    fn unverified_input_is_rejected() {
        let gray = CircuitCode::from_elements(3, 2, vec![1, 2, 1, 3, 1, 2, 1, 3]).unwrap();
        assert_eq!(
            construct7(&gray),
            Err(CodeError::InputNotVerified { spread: 2 })
        );
    }

    #[test]
    fn padding_plan() {
        let (p, out) = klee_padding_plan(CodeParams::new(22, 7, 234)).unwrap();
        assert_eq!(p, 3);
        assert_eq!(out, CodeParams::new(23, 7, 240));
        assert_eq!(
            klee_padding_plan(CodeParams::new(6, 3, 32)),
            Err(CodeError::LengthTooShort {
                len: 32,
                required: 33
            })
        );
    }

    #[test]
    fn segments_cover_halves() {
        let seq = TransitionSequence::new((1..=14).map(|x| (x % 5 + 1) as u8).collect()).unwrap();
        let segs = segments(&seq, 2);
        assert_eq!(segs.len(), 6);
        assert_eq!(segs[2].elements.len(), 1);
        let joined: Vec<u8> = segs
            .iter()
            .flat_map(|s| s.elements.iter().copied())
            .collect();
        assert_eq!(joined, seq.elements());
    }
}
