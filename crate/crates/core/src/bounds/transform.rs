use crate::construct::{construct7_plan, klee_padding_plan, CodeParams};

use super::RawValue;

/// Length transformations between circuit-code parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    /// `(n,k,N) -> (n+1, k, N + 2 floor(N/2k))`.
    C1,
    /// `(n,k,N) -> (n+2, k, N + 4 floor(N/(2(k-1))))`, `k >= 3`.
    C2,
    /// `(n,k,N) -> (n + (k+1)/2, k, N + (k+1) floor(N/(k+1)))`, `k >= 3` odd.
    C3,
    /// `(n,k,N) -> (n + (k+2)/2, k, N + (k+2) floor(N/(k+1)))`, `k >= 2` even.
    C4,
    /// `(n+1,k+1,N) -> (n, k, N - floor(N/(n+1)))`.
    C5,
    /// Product of an `(n1,k-1,N1)` and an `(n2,k,N2)` code, `k` even.
    C6,
    /// `(n,k,N) -> (n+r, k+1, N + 2q)`, `N >= 2(k+1)`.
    C7,
    /// `(n,k+1,N) -> (n,k,N)`.
    Demotion,
    /// `(n,k,N) -> (n+1, k, 2(k+1)q)` for `N > 2(k+1)^2`; only used to make
    /// the first C6 operand divisible by its spread plus one.
    Padding,
}

/// Propagation order within one round.
pub(crate) const ROUND_ORDER: [Rule; 8] = [
    Rule::C1,
    Rule::C2,
    Rule::C3,
    Rule::C4,
    Rule::C5,
    Rule::C6,
    Rule::C7,
    Rule::Demotion,
];

/// Result of applying a rule: output parameters and, when the raw length was
/// odd and got rounded up, the raw value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Applied {
    pub params: CodeParams,
    pub raw: Option<RawValue>,
}

fn exact(n: usize, k: usize, len: usize) -> Option<Applied> {
    Some(Applied {
        params: CodeParams::new(n, k, len),
        raw: None,
    })
}

impl Rule {
    pub fn label(self) -> &'static str {
        match self {
            Rule::C1 => "C1",
            Rule::C2 => "C2",
            Rule::C3 => "C3",
            Rule::C4 => "C4",
            Rule::C5 => "C5",
            Rule::C6 => "C6",
            Rule::C7 => "C7",
            Rule::Demotion => "demote",
            Rule::Padding => "pad",
        }
    }

    /// Rules with an explicit transition-sequence implementation here.
    pub fn is_sequence_level(self) -> bool {
        matches!(self, Rule::C7 | Rule::Demotion | Rule::Padding)
    }

    pub fn is_pairwise(self) -> bool {
        self == Rule::C6
    }

    /// Applies a single-input rule. Returns `None` when the rule does not
    /// apply, overflows, or is the pairwise C6.
    pub fn apply(self, input: CodeParams) -> Option<Applied> {
        let CodeParams { n, k, len } = input;
        if k == 0 || len < 4 {
            return None;
        }
        match self {
            Rule::C1 => exact(n + 1, k, len.checked_add(2 * (len / (2 * k)))?),
            Rule::C2 if k >= 3 => exact(n + 2, k, len.checked_add(4 * (len / (2 * (k - 1))))?),
            Rule::C3 if k >= 3 && k % 2 == 1 => exact(
                n + k.div_ceil(2),
                k,
                len.checked_add((k + 1) * (len / (k + 1)))?,
            ),
            Rule::C4 if k >= 2 && k % 2 == 0 => exact(
                n + (k + 2) / 2,
                k,
                len.checked_add((k + 2) * (len / (k + 1)))?,
            ),
            Rule::C5 if k >= 2 && n >= 2 => {
                let raw = len - len / n;
                let rounded = raw + raw % 2;
                Some(Applied {
                    params: CodeParams::new(n - 1, k - 1, rounded),
                    raw: (rounded != raw).then_some(RawValue {
                        numerator: raw as u64,
                        denominator: 1,
                    }),
                })
            }
            Rule::C7 => construct7_plan(input).ok().map(|plan| Applied {
                params: plan.output,
                raw: None,
            }),
            Rule::Demotion if k >= 2 => exact(n, k - 1, len),
            Rule::Padding => klee_padding_plan(input)
                .ok()
                .map(|(_, params)| Applied { params, raw: None }),
            _ => None,
        }
    }

    /// Applies C6 to an `(n1, k-1, N1)` code and an `(n2, k, N2)` code with
    /// `k` even, `2 <= n1 <= n2`, `N1, N2 >= 2k` and `k | N1`.
    pub fn apply_pair(self, first: CodeParams, second: CodeParams) -> Option<Applied> {
        if self != Rule::C6 {
            return None;
        }
        let k = second.k;
        if k < 2 || !k.is_multiple_of(2) || first.k + 1 != k {
            return None;
        }
        if first.n < 2 || first.n > second.n || first.len < 2 * k || second.len < 2 * k {
            return None;
        }
        if !first.len.is_multiple_of(k) {
            return None;
        }
        if k == 2 {
            exact(
                first.n + second.n,
                k,
                first.len.checked_mul(second.len)? / k,
            )
        } else {
            exact(
                first.n + second.n + 1,
                k,
                first.len.checked_mul(second.len + 2)? / k,
            )
        }
    }
}

/// A construction viewed as a parameter transformation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transformation {
    pub rule: Rule,
    pub applies_to: &'static str,
    pub formula: &'static str,
}

impl Transformation {
    pub fn apply(&self, input: CodeParams) -> Option<CodeParams> {
        self.rule.apply(input).map(|a| a.params)
    }
}

/// The seven constructions plus spread demotion, in propagation order.
pub fn transformations() -> [Transformation; 8] {
    [
        Transformation {
            rule: Rule::C1,
            applies_to: "any (n,k,N)",
            formula: "(n+1, k, N + 2*floor(N/(2k)))",
        },
        Transformation {
            rule: Rule::C2,
            applies_to: "k >= 3",
            formula: "(n+2, k, N + 4*floor(N/(2(k-1))))",
        },
        Transformation {
            rule: Rule::C3,
            applies_to: "k >= 3, k odd",
            formula: "(n+(k+1)/2, k, N + (k+1)*floor(N/(k+1)))",
        },
        Transformation {
            rule: Rule::C4,
            applies_to: "k >= 2, k even",
            formula: "(n+(k+2)/2, k, N + (k+2)*floor(N/(k+1)))",
        },
        Transformation {
            rule: Rule::C5,
            applies_to: "(n+1, k+1, N) with k >= 1",
            formula: "(n, k, N - floor(N/(n+1))), rounded up to even",
        },
        Transformation {
            rule: Rule::C6,
            applies_to: "k even; (n1,k-1,N1), (n2,k,N2), 2 <= n1 <= n2, N1,N2 >= 2k, k | N1",
            formula: "k = 2: (n1+n2, 2, N1*N2/2); k >= 4: (n1+n2+1, k, N1*(N2+2)/k)",
        },
        Transformation {
            rule: Rule::C7,
            applies_to: "N >= 2(k+1)",
            formula: "(n+r, k+1, N + 2*ceil(N/(2(k+1)))), r = ceil(log2(N/(2(k+1)))) + 1",
        },
        Transformation {
            rule: Rule::Demotion,
            applies_to: "(n, k+1, N)",
            formula: "(n, k, N)",
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, k: usize, len: usize) -> CodeParams {
        CodeParams::new(n, k, len)
    }

    fn out(rule: Rule, n: usize, k: usize, len: usize) -> Option<CodeParams> {
        rule.apply(p(n, k, len)).map(|a| a.params)
    }

    #[test]
    fn construction_examples() {
        assert_eq!(out(Rule::C7, 3, 2, 6), Some(p(4, 3, 8)));
        assert_eq!(out(Rule::C7, 17, 6, 204), Some(p(22, 7, 234)));
        assert_eq!(out(Rule::C1, 22, 7, 234), Some(p(23, 7, 266)));
        assert_eq!(out(Rule::Demotion, 22, 8, 250), Some(p(22, 7, 250)));
        assert_eq!(out(Rule::Demotion, 22, 1, 250), None);
    }

    #[test]
    fn applicability() {
        assert_eq!(out(Rule::C2, 4, 2, 8), None);
        assert_eq!(out(Rule::C2, 4, 3, 8), Some(p(6, 3, 16)));
        assert_eq!(out(Rule::C3, 4, 4, 8), None);
        assert_eq!(out(Rule::C3, 6, 3, 16), Some(p(8, 3, 32)));
        assert_eq!(out(Rule::C4, 3, 3, 6), None);
        assert_eq!(out(Rule::C4, 3, 2, 6), Some(p(5, 2, 14)));
        assert_eq!(out(Rule::C7, 3, 3, 6), None);
        assert_eq!(out(Rule::C6, 3, 3, 6), None);
    }

    #[test]
    fn c5_rounds_odd_lengths() {
        // (6,3,16) -> (5,2,16 - 2) = 14.
        assert_eq!(out(Rule::C5, 6, 3, 16), Some(p(5, 2, 14)));
        // (5,3,10) -> 10 - 2 = 8; (4,3,8) -> 8 - 2 = 6.
        assert_eq!(out(Rule::C5, 4, 3, 8), Some(p(3, 2, 6)));
        // (7,3,24) -> 24 - 3 = 21 -> 22.
        let a = Rule::C5.apply(p(7, 3, 24)).unwrap();
        assert_eq!(a.params, p(6, 2, 22));
        assert_eq!(
            a.raw,
            Some(RawValue {
                numerator: 21,
                denominator: 1
            })
        );
    }

    #[test]
    fn c6_pairs() {
        let c6 = |a, b| Rule::C6.apply_pair(a, b).map(|x| x.params);
        assert_eq!(c6(p(2, 1, 4), p(3, 2, 6)), Some(p(5, 2, 12)));
        assert_eq!(c6(p(4, 3, 8), p(4, 4, 8)), Some(p(9, 4, 20)));
        // N1 not divisible by k.
        assert_eq!(c6(p(5, 3, 10), p(5, 4, 10)), None);
        // n1 > n2.
        assert_eq!(c6(p(5, 3, 12), p(4, 4, 8)), None);
        // odd k.
        assert_eq!(c6(p(4, 2, 8), p(4, 3, 8)), None);
    }

    #[test]
    fn padding_arithmetic() {
        assert_eq!(out(Rule::Padding, 22, 7, 234), Some(p(23, 7, 240)));
        assert_eq!(out(Rule::Padding, 8, 3, 32), None);
    }

    #[test]
    fn table_lists_eight_rules_in_order() {
        let rules: [Rule; 8] = transformations().map(|t| t.rule);
        assert_eq!(rules, ROUND_ORDER);
    }
}
