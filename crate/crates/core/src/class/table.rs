use serde::{Deserialize, Serialize};

use super::{enumerate_centrosymmetric, enumerate_class, ClassSpec};

/// Exact per-size counts for one class, all derived from enumeration.
///
/// Every sequence is indexed so that the underlying permutations have size
/// at most `max_n`:
/// `a[n] = |C_n|` and `c[n] = |ind C_n|` for n ≤ max_n;
/// `b_even[n] = |C^rc_{2n}|` and `d[n]` (centrosymmetric indecomposables of
/// size 2n) for 2n ≤ max_n; `b_odd[n] = |C^rc_{2n+1}|` for 2n+1 ≤ max_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub max_n: usize,
    pub a: Vec<u64>,
    pub b_even: Vec<u64>,
    pub b_odd: Vec<u64>,
    pub c: Vec<u64>,
    pub d: Vec<u64>,
}

/// A count that exceeds one of the proven upper bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundViolation {
    pub bound: String,
    pub n: usize,
    pub value: u64,
    pub limit: u64,
}

pub fn count_table(spec: &ClassSpec, max_n: usize) -> CountTable {
    let mut a = Vec::with_capacity(max_n + 1);
    let mut c = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let members = enumerate_class(spec, n);
        a.push(members.len() as u64);
        c.push(if n == 0 { 0 } else { members.iter().filter(|q| q.sum_block_count() == 1).count() as u64 });
    }
    let mut b_even = Vec::new();
    let mut d = Vec::new();
    for n in 0..=max_n / 2 {
        let centro = enumerate_centrosymmetric(spec, 2 * n);
        b_even.push(centro.len() as u64);
        d.push(if n == 0 { 0 } else { centro.iter().filter(|q| q.sum_block_count() == 1).count() as u64 });
    }
    let b_odd = (0..)
        .take_while(|n| 2 * n + 1 <= max_n)
        .map(|n| enumerate_centrosymmetric(spec, 2 * n + 1).len() as u64)
        .collect();
    CountTable { max_n, a, b_even, b_odd, c, d }
}

impl CountTable {
    /// Centrosymmetric counts interleaved by size: |C^rc_0|, |C^rc_1|, |C^rc_2|, …
    pub fn centro_by_size(&self) -> Vec<u64> {
        (0..=self.max_n)
            .map(|m| if m % 2 == 0 { self.b_even[m / 2] } else { self.b_odd[m / 2] })
            .collect()
    }

    /// Checks `b_n ≤ a_{2n}`, `b_n ≤ 2^n a_n`, `d_n ≤ b_n` and `c_n ≤ a_n`
    /// wherever the table has the entries.
    pub fn bound_violations(&self) -> Vec<BoundViolation> {
        let mut out = Vec::new();
        for (n, &b) in self.b_even.iter().enumerate() {
            if let Some(&a2n) = self.a.get(2 * n) {
                if b > a2n {
                    out.push(BoundViolation { bound: "b_n <= a_2n".into(), n, value: b, limit: a2n });
                }
            }
            let cap = (1u64 << n).saturating_mul(self.a[n]);
            if b > cap {
                out.push(BoundViolation { bound: "b_n <= 2^n a_n".into(), n, value: b, limit: cap });
            }
            if self.d[n] > b {
                out.push(BoundViolation { bound: "d_n <= b_n".into(), n, value: self.d[n], limit: b });
            }
        }
        for (n, (&c, &a)) in self.c.iter().zip(&self.a).enumerate() {
            if c > a {
                out.push(BoundViolation { bound: "c_n <= a_n".into(), n, value: c, limit: a });
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_row() {
        let t = count_table(&ClassSpec::av(&["321", "312", "231"]), 12);
        // f_{k+2} with f_1 = f_2 = 1
        assert_eq!(t.b_even, vec![1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(t.b_odd, vec![1, 1, 2, 3, 5, 8]);
        assert_eq!(t.centro_by_size(), vec![1, 1, 2, 1, 3, 2, 5, 3, 8, 5, 13, 8, 21]);
    }

    #[test]
    fn examples() {
        let t = count_table(&ClassSpec::av(&["321", "3412"]), 10);
        assert_eq!(t.b_even, vec![1, 2, 5, 13, 34, 89]);
        let t = count_table(&ClassSpec::av(&["231", "312"]), 8);
        assert_eq!(&t.c[1..], &[1, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(t.c[0], 0);
        assert!(t.bound_violations().is_empty());
    }

    #[test]
    fn serde_round_trip() {
        let t = count_table(&ClassSpec::av(&["321"]), 6);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<CountTable>(&json).unwrap(), t);
    }
}
