use core::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use super::seed::spread_three_ladder;
use super::BoundError;

/// Length of the explicit spread-3 code in dimension `n >= 6`.
pub fn lemma4_length(n: usize) -> Option<u64> {
    spread_three_ladder(n)
}

/// `ceil(40 * 3^((floor(0.6535 n) - 8) / 3))`, rounded up to even, for
/// `floor(0.6535 n) >= 8`.
///
/// `40 * 3^(a/3)` is the real cube root of `64000 * 3^a`, so the ceiling is
/// taken on an exact integer cube root and no floating point is involved.
pub fn theorem2_bound(n: usize) -> Option<BigUint> {
    let scaled = 6535 * n / 10000;
    if scaled < 8 {
        return None;
    }
    let cube = BigUint::from(64000u32) * Pow::pow(BigUint::from(3u32), (scaled - 8) as u32);
    let mut root = cube.cbrt();
    if &root * &root * &root != cube {
        root += 1u32;
    }
    if root.bit(0) {
        root += 1u32;
    }
    Some(root)
}

/// `6 * 2^(floor(2n/6) - 1)`, the spread-4 bound obtained by demoting the
/// odd-spread formula at `k = 5`.
pub fn singleton_k4_baseline(n: usize) -> Result<BigUint, BoundError> {
    let e = 2 * n / 6;
    if e < 2 {
        return Err(BoundError::DomainError { n });
    }
    Ok(BigUint::from(6u32) * (BigUint::one() << (e - 1)))
}

/// Smallest `n0` in `range` such that [`theorem2_bound`] strictly exceeds
/// [`singleton_k4_baseline`] for every `n` in `n0..=range.end()`.
pub fn theorem2_crossover(range: RangeInclusive<usize>) -> Option<usize> {
    let beats = |n: usize| match (theorem2_bound(n), singleton_k4_baseline(n)) {
        (Some(t), Ok(b)) => t > b,
        _ => false,
    };
    let mut crossover = None;
    for n in range.rev() {
        if !beats(n) {
            break;
        }
        crossover = Some(n);
    }
    crossover
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn baseline_values() {
        assert_eq!(singleton_k4_baseline(6).unwrap(), BigUint::from(12u32));
        assert_eq!(singleton_k4_baseline(12).unwrap(), BigUint::from(48u32));
        assert_eq!(
            singleton_k4_baseline(86).unwrap(),
            BigUint::from(805_306_368u64)
        );
        assert_eq!(
            singleton_k4_baseline(5),
            Err(BoundError::DomainError { n: 5 })
        );
    }

    #[test]
    fn theorem2_small_n() {
        assert_eq!(theorem2_bound(12), None);
        assert_eq!(theorem2_bound(13), Some(BigUint::from(40u32)));
    }

    #[test]
    fn theorem2_at_86() {
        assert_eq!(theorem2_bound(86), Some(BigUint::from(1_721_868_840u64)));
    }

    #[test]
    fn ladder() {
        assert_eq!(lemma4_length(5), None);
        assert_eq!(lemma4_length(6), Some(16));
        assert_eq!(lemma4_length(7), Some(24));
        assert_eq!(lemma4_length(8), Some(32));
        assert_eq!(lemma4_length(9), Some(48));
    }
}
