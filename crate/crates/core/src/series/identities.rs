use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::class::{count_class, ClassSpec, CountTable};
use crate::perm::Permutation;

/// Result of checking a counting identity term by term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    /// Largest index checked.
    pub checked_to: usize,
    /// First index where the two sides differ, with (left, right).
    pub first_failure: Option<(usize, u64, u64)>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn check(identity: &str, range: std::ops::RangeInclusive<usize>, f: impl Fn(usize) -> (u64, u64)) -> IdentityReport {
    let checked_to = *range.end();
    let first_failure = range.map(|n| (n, f(n))).find(|(_, (l, r))| l != r).map(|(n, (l, r))| (n, l, r));
    IdentityReport { identity: identity.into(), checked_to, first_failure }
}

/// b_n = a_n + Σ_{k=1}^n a_{n-k} d_k for every n the table covers.
pub fn check_convolution(table: &CountTable) -> IdentityReport {
    check("b_n = a_n + sum_k a_(n-k) d_k", 0..=table.b_even.len() - 1, |n| {
        let rhs = table.a[n] + (1..=n).map(|k| table.a[n - k] * table.d[k]).sum::<u64>();
        (table.b_even[n], rhs)
    })
}

/// a_n = Σ_{k=1}^n c_k a_{n-k} for n ≥ 1, i.e. A(1 - C) = 1.
pub fn check_sum_closure_identity(table: &CountTable) -> IdentityReport {
    check("a_n = sum_k c_k a_(n-k)", 1..=table.max_n, |n| {
        let rhs = (1..=n).map(|k| table.c[k] * table.a[n - k]).sum::<u64>();
        (table.a[n], rhs)
    })
}

/// |Av_m(j…1)|, memoized across calls.
fn monotone_count(j: usize, m: usize) -> BigInt {
    static MEMO: OnceLock<Mutex<HashMap<(usize, usize), u64>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Mutex::default);
    if let Some(&v) = memo.lock().expect("memo poisoned").get(&(j, m)) {
        return BigInt::from(v);
    }
    let v = if j == 0 {
        0
    } else {
        count_class(&ClassSpec::avoid([Permutation::decreasing(j)]), m) as u64
    };
    memo.lock().expect("memo poisoned").insert((j, m), v);
    BigInt::from(v)
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// |Av^rc_{2n}(k…1)| = Σ_i C(n,i)² (a_i^p)(a_{n-i}^q) with
/// p = ⌈(k+1)/2⌉, q = ⌊(k+1)/2⌋ and a_m^j = |Av_m(j…1)|.
pub fn centro_monotone_count(k: usize, n: usize) -> BigInt {
    let p = (k + 2) / 2;
    let q = (k + 1) / 2;
    (0..=n)
        .map(|i| {
            let c = binomial(n, i);
            &c * &c * monotone_count(p, i) * monotone_count(q, n - i)
        })
        .fold(BigInt::zero(), |acc, t| acc + t)
}

/// Finite-prefix growth diagnostics. Nothing here is a limit claim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalGrowth {
    /// `nth_roots[i]` is a_{i+1}^{1/(i+1)}.
    pub nth_roots: Vec<f64>,
    /// `ratios[i]` is a_{i+1}/a_i, or `None` when a_i = 0.
    pub ratios: Vec<Option<f64>>,
}

pub fn empirical_growth(seq: &[u64]) -> EmpiricalGrowth {
    EmpiricalGrowth {
        nth_roots: seq.iter().enumerate().skip(1).map(|(n, &a)| (a as f64).powf(1.0 / n as f64)).collect(),
        ratios: seq
            .windows(2)
            .map(|w| (w[0] > 0).then(|| w[1] as f64 / w[0] as f64))
            .collect(),
    }
}

/// One of the upper envelopes for indecomposable counts of sum closed
/// classes with growth rate at most ξ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Envelope {
    /// (1, 1, 3, 5, 5, 5, 4, 4, …)
    First,
    /// (1, 1, 2, 3, 4^fours, 5, 4, 4, …)
    Second { fours: usize },
    /// (1, 1, 2, 3, 4, 4, …)
    Fours,
}

impl Envelope {
    /// Entry for size n ≥ 1.
    pub fn at(self, n: usize) -> u64 {
        const HEAD: [u64; 4] = [1, 1, 2, 3];
        match self {
            Envelope::First => [1, 1, 3, 5, 5, 5].get(n - 1).copied().unwrap_or(4),
            Envelope::Second { fours } if n == 5 + fours => 5,
            Envelope::Second { .. } | Envelope::Fours => HEAD.get(n - 1).copied().unwrap_or(4),
        }
    }

    /// First size (1-based) where `c` exceeds the envelope.
    fn first_violation(self, c: &[u64]) -> Option<usize> {
        c.iter().enumerate().find(|&(i, &v)| v > self.at(i + 1)).map(|(i, _)| i + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PvReport {
    pub pass: bool,
    /// An envelope bounding the whole prefix, preferring ones that do not
    /// rely on a single 4 before the 5.
    pub envelope: Option<Envelope>,
    /// Set when only the single-4 branch bounds the prefix.
    pub single_four_branch: bool,
    /// When failing, the first size at which every envelope is exceeded.
    pub fails_at: Option<usize>,
}

/// Checks c_1, c_2, … (given from size 1) against the envelopes. The number
/// of 4s before the 5 may be even or exactly one; candidates place the 5
/// inside the prefix, and [`Envelope::Fours`] covers a 5 beyond it.
pub fn pv_bound_check(c: &[u64]) -> PvReport {
    let mut candidates = vec![Envelope::First, Envelope::Fours];
    candidates.extend(
        (0..=c.len().saturating_sub(5))
            .filter(|j| j % 2 == 0)
            .map(|fours| Envelope::Second { fours }),
    );
    let single = Envelope::Second { fours: 1 };
    let violations: Vec<(Envelope, Option<usize>)> =
        candidates.iter().map(|&e| (e, e.first_violation(c))).collect();
    if let Some(&(e, _)) = violations.iter().find(|(_, v)| v.is_none()) {
        return PvReport { pass: true, envelope: Some(e), single_four_branch: false, fails_at: None };
    }
    let single_violation = single.first_violation(c);
    if single_violation.is_none() {
        return PvReport { pass: true, envelope: Some(single), single_four_branch: true, fails_at: None };
    }
    let fails_at = violations
        .iter()
        .filter_map(|(_, v)| *v)
        .chain(single_violation)
        .max();
    PvReport { pass: false, envelope: None, single_four_branch: false, fails_at }
}
