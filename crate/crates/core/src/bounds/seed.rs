use super::{BoundEntry, ExactRule, FormulaRule, Provenance, RawValue};

/// Exact value of `K(n,k)` when one of the known exact rows applies.
pub fn seed_exact(n: usize, k: usize) -> Option<BoundEntry> {
    if n < 2 || k < 1 {
        return None;
    }
    let threshold = 3 * k / 2 + 2;
    let k64 = k as u64;
    let (rule, value) = if n < threshold {
        (ExactRule::Small, 2 * n as u64)
    } else if n == threshold && k.is_multiple_of(2) {
        (ExactRule::ThresholdEven, 4 * k64 + 6)
    } else if n == threshold {
        (ExactRule::ThresholdOdd, 4 * k64 + 4)
    } else if n == threshold + 1 && k % 2 == 1 && k >= 9 {
        (ExactRule::ThresholdOddShifted, 4 * k64 + 8)
    } else {
        return None;
    };
    Some(BoundEntry {
        n,
        k,
        value,
        raw: None,
        exact: true,
        provenance: Provenance::Exact(rule),
    })
}

fn pow2(e: usize) -> Option<u64> {
    1u64.checked_shl(e as u32).filter(|_| e < 64)
}

/// Length of the explicit spread-3 code family in dimension `n >= 6`:
/// `16 * 3^p`, `24 * 3^p` or `32 * 3^p` for `n = 6 + 3p`, `7 + 3p`, `8 + 3p`.
pub(crate) fn spread_three_ladder(n: usize) -> Option<u64> {
    if n < 6 {
        return None;
    }
    let p = (n - 6) / 3;
    let base = [16u64, 24, 32][(n - 6) % 3];
    3u64.checked_pow(p as u32)?.checked_mul(base)
}

/// Rounds `numerator / denominator` up to the next even integer.
fn ceil_even(numerator: u64, denominator: u64) -> u64 {
    let v = numerator.div_ceil(denominator);
    v + v % 2
}

/// Best closed-form lower bound for `K(n,k)`, if any formula applies.
pub fn seed_formula(n: usize, k: usize) -> Option<BoundEntry> {
    if n < 2 || k < 1 {
        return None;
    }
    let mut best: Option<(u64, FormulaRule, Option<RawValue>)> = None;
    let mut consider = |value: u64, rule: FormulaRule, raw: Option<RawValue>| {
        if best.is_none_or(|(v, _, _)| value > v) {
            best = Some((value, rule, raw));
        }
    };

    if k == 1 {
        if let Some(v) = pow2(n) {
            consider(v, FormulaRule::GrayCode, None);
        }
    }
    if k == 2 {
        if let Some(numerator) = pow2(n).and_then(|p| p.checked_mul(77)) {
            let value = ceil_even(numerator, 256);
            let raw = (value * 256 != numerator).then_some(RawValue {
                numerator,
                denominator: 256,
            });
            consider(value, FormulaRule::Snake, raw);
        }
    }
    if k == 3 {
        if let Some(v) = spread_three_ladder(n) {
            consider(v, FormulaRule::SpreadThreeLadder, None);
        }
    }
    if k % 2 == 1 {
        let e = 2 * n / (k + 1);
        if e >= 2 {
            if let Some(v) = pow2(e - 1).and_then(|p| p.checked_mul(k as u64 + 1)) {
                consider(v, FormulaRule::OddSpread, None);
            }
        }
    }

    best.map(|(value, rule, raw)| BoundEntry {
        n,
        k,
        value,
        raw,
        exact: false,
        provenance: Provenance::Formula(rule),
    })
}
