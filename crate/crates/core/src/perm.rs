//! Permutations in one-line notation and the basic operations on them:
//! symmetries, pattern containment, direct and skew sums, and sum
//! decomposition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation π = π(1) … π(n) of `1..=n`, stored 1-based.
///
/// The empty permutation ε (n = 0) is a valid value.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Builds a permutation, checking that `values` is a bijection onto `1..=n`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let idx = v as usize;
            if v == 0 || idx > n {
                return Err(Error::format(v.to_string(), format!("entry out of range 1..={n}")));
            }
            if seen[idx] {
                return Err(Error::format(v.to_string(), "duplicate entry"));
            }
            seen[idx] = true;
        }
        Ok(Permutation(values))
    }

    /// Wraps values already known to be a permutation.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    /// The increasing permutation 1 2 … n.
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    /// The decreasing permutation n … 2 1.
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    /// Relative order of an arbitrary sequence of distinct keys.
    pub fn standardize<T: Ord>(keys: &[T]) -> Self {
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut values = vec![0u32; keys.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank as u32 + 1;
        }
        Permutation(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    /// π(i) for 1-based `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n1 = self.0.len() as u32 + 1;
        Permutation(self.0.iter().map(|&v| n1 - v).collect())
    }

    /// Half-turn rotation of the diagram: entry i becomes n+1-π(n+1-i).
    pub fn reverse_complement(&self) -> Self {
        let n1 = self.0.len() as u32 + 1;
        Permutation(self.0.iter().rev().map(|&v| n1 - v).collect())
    }

    pub fn is_centrosymmetric(&self) -> bool {
        let n = self.0.len();
        let n1 = n as u32 + 1;
        (0..n / 2).all(|i| self.0[i] + self.0[n - 1 - i] == n1)
            && (n % 2 == 0 || self.0[n / 2] == n1 / 2)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(inv)
    }

    /// The pattern formed by the entries at the given (0-based, increasing) positions.
    pub fn pattern_at(&self, positions: &[usize]) -> Self {
        let keys: Vec<u32> = positions.iter().map(|&i| self.0[i]).collect();
        Permutation::standardize(&keys)
    }

    /// The permutation obtained by deleting the entry at 0-based position `i`.
    pub fn delete_at(&self, i: usize) -> Self {
        let removed = self.0[i];
        Permutation(
            self.0
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| if v > removed { v - 1 } else { v })
                .collect(),
        )
    }

    /// Inserts a new maximum entry n+1 before 0-based position `i`.
    pub fn insert_max(&self, i: usize) -> Self {
        let mut values = Vec::with_capacity(self.0.len() + 1);
        values.extend_from_slice(&self.0[..i]);
        values.push(self.0.len() as u32 + 1);
        values.extend_from_slice(&self.0[i..]);
        Permutation(values)
    }

    pub fn contains(&self, pattern: &Permutation) -> bool {
        self.find_occurrence(pattern).is_some()
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    /// Lexicographically least sequence of 0-based positions at which
    /// `pattern` occurs in `self`.
    pub fn find_occurrence(&self, pattern: &Permutation) -> Option<Vec<usize>> {
        let k = pattern.len();
        let n = self.len();
        if k > n {
            return None;
        }
        let mut chosen = Vec::with_capacity(k);
        if occurrence_dfs(&self.0, &pattern.0, 0, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let shift = self.0.len() as u32;
        let mut values = self.0.clone();
        values.extend(other.0.iter().map(|&v| v + shift));
        Permutation(values)
    }

    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let shift = other.0.len() as u32;
        let mut values: Vec<u32> = self.0.iter().map(|&v| v + shift).collect();
        values.extend_from_slice(&other.0);
        Permutation(values)
    }

    /// Splits into the unique sequence of sum-indecomposable blocks.
    ///
    /// A block ends after position i exactly when the first i values are {1..i}.
    pub fn sum_decompose(&self) -> Vec<Permutation> {
        let mut blocks = Vec::new();
        let mut start = 0usize;
        let mut max = 0u32;
        for (i, &v) in self.0.iter().enumerate() {
            max = max.max(v);
            if max as usize == i + 1 {
                let offset = start as u32;
                blocks.push(Permutation(self.0[start..=i].iter().map(|&x| x - offset).collect()));
                start = i + 1;
            }
        }
        blocks
    }

    /// Errors on ε, for which indecomposability is undefined.
    pub fn is_sum_indecomposable(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::Domain("indecomposability is undefined for the empty permutation".into()));
        }
        Ok(self.sum_block_count() == 1)
    }

    pub(crate) fn sum_block_count(&self) -> usize {
        let mut max = 0u32;
        let mut blocks = 0;
        for (i, &v) in self.0.iter().enumerate() {
            max = max.max(v);
            if max as usize == i + 1 {
                blocks += 1;
            }
        }
        blocks
    }
}

fn occurrence_dfs(host: &[u32], pattern: &[u32], from: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - j;
    let pj = pattern[j];
    for pos in from..=host.len() - remaining {
        let v = host[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&q, &pt)| (pt < pj) == (host[q] < v));
        if consistent {
            chosen.push(pos);
            if occurrence_dfs(host, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Folds blocks back together with ⊕.
pub fn direct_sum_all<'a, I: IntoIterator<Item = &'a Permutation>>(blocks: I) -> Permutation {
    blocks
        .into_iter()
        .fold(Permutation::empty(), |acc, b| acc.direct_sum(b))
}

/// All permutations of size n in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, current: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if current.len() == n {
            out.push(Permutation(current.clone()));
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                current.push(v as u32);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

pub fn parse_permutation(text: &str) -> Result<Permutation> {
    text.parse()
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts comma/space separated entries, or a compact digit string
    /// such as `2413` when every entry is at most 9.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "e" || trimmed == "ε" {
            return Ok(Permutation::empty());
        }
        let separated = trimmed.contains(|c: char| c == ',' || c.is_whitespace());
        let values: Vec<u32> = if separated {
            trimmed
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::format(t, "not a positive integer"))
                })
                .collect::<Result<_>>()?
        } else {
            if trimmed.len() > 9 && trimmed.chars().all(|c| c.is_ascii_digit()) {
                return Err(Error::format(
                    trimmed,
                    "compact digit form is only allowed for sizes up to 9",
                ));
            }
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::format(c.to_string(), "not a digit"))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Permutation {
    /// Canonical output: space-separated entries; ε prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Permutation {
    /// Digit string when all entries are at most 9, canonical form otherwise.
    pub fn compact(&self) -> String {
        if self.0.is_empty() {
            "e".into()
        } else if self.0.len() <= 9 {
            self.0.iter().map(|v| char::from(b'0' + *v as u8)).collect()
        } else {
            self.to_string()
        }
    }
}

#[cfg(test)]
pub(crate) fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(p("1").values(), &[1]);
        assert_eq!(p("4 9 3 1 2 5 8 7 6").values(), &[4, 9, 3, 1, 2, 5, 8, 7, 6]);
        assert_eq!(p("231").values(), &[2, 3, 1]);
        assert_eq!(p("2,3,1"), p("231"));
        assert_eq!(p("1 2 10 3 4 5 6 7 8 9").len(), 10);
    }

    #[test]
    fn parse_errors_name_token() {
        match "1 2 2".parse::<Permutation>() {
            Err(Error::Format { token, .. }) => assert_eq!(token, "2"),
            other => panic!("{other:?}"),
        }
        match "1 4".parse::<Permutation>() {
            Err(Error::Format { token, .. }) => assert_eq!(token, "4"),
            other => panic!("{other:?}"),
        }
        match "1 x".parse::<Permutation>() {
            Err(Error::Format { token, .. }) => assert_eq!(token, "x"),
            other => panic!("{other:?}"),
        }
        assert!("0".parse::<Permutation>().is_err());
        assert!("1234567891".parse::<Permutation>().is_err());
    }

    #[test]
    fn reverse_complement_examples() {
        assert_eq!(p("123").reverse_complement(), p("123"));
        assert_eq!(p("312").reverse_complement(), p("231"));
        assert_eq!(p("2413").reverse_complement(), p("2413"));
        assert_eq!(Permutation::empty().reverse_complement(), Permutation::empty());
    }

    #[test]
    fn centrosymmetry_examples() {
        assert!(p("123").is_centrosymmetric());
        assert!(p("3412").is_centrosymmetric());
        assert!(!p("312").is_centrosymmetric());
        assert!(Permutation::empty().is_centrosymmetric());
        // odd size forces the centre point
        assert!(!p("213").is_centrosymmetric());
        assert!(p("321").is_centrosymmetric());
    }

    #[test]
    fn containment_examples() {
        let host = p("493125876");
        let occ = host.find_occurrence(&p("4123")).unwrap();
        let vals: Vec<u32> = occ.iter().map(|&i| host.values()[i]).collect();
        // 9356 is an occurrence, but 9358 comes first in position order
        assert_eq!(host.pattern_at(&[1, 2, 5, 8]), p("4123"));
        assert_eq!(vals, vec![9, 3, 5, 8]);
        assert!(!host.contains(&p("3142")));
        assert!(host.contains(&Permutation::empty()));
        assert!(Permutation::empty().contains(&Permutation::empty()));
        assert!(!p("12").contains(&p("123")));
    }

    #[test]
    fn sums() {
        assert_eq!(p("21").direct_sum(&p("1")), p("213"));
        assert_eq!(p("12").skew_sum(&p("12")), p("3412"));
        assert_eq!(Permutation::empty().direct_sum(&p("2413")), p("2413"));
    }

    #[test]
    fn decomposition() {
        assert_eq!(p("123").sum_decompose(), vec![p("1"), p("1"), p("1")]);
        assert_eq!(p("2134").sum_decompose(), vec![p("21"), p("1"), p("1")]);
        assert_eq!(p("3142").sum_decompose(), vec![p("3142")]);
        assert!(Permutation::empty().sum_decompose().is_empty());
    }

    #[test]
    fn indecomposability() {
        assert!(p("1").is_sum_indecomposable().unwrap());
        assert!(!p("12").is_sum_indecomposable().unwrap());
        assert!(p("2413").is_sum_indecomposable().unwrap());
        assert!(matches!(
            Permutation::empty().is_sum_indecomposable(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn all_permutations_are_lex_and_complete() {
        let s4 = all_permutations(4);
        assert_eq!(s4.len(), 24);
        assert!(s4.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_permutations(0), vec![Permutation::empty()]);
    }

    #[test]
    fn rc_involution_exhaustive() {
        for n in 0..=7 {
            for q in all_permutations(n) {
                assert_eq!(q.reverse_complement().reverse_complement(), q);
            }
        }
    }

    #[test]
    fn rc_preserves_containment_exhaustive() {
        let patterns: Vec<Permutation> = (0..=4).flat_map(all_permutations).collect();
        for n in 0..=7 {
            for host in all_permutations(n) {
                let rc_host = host.reverse_complement();
                for pat in &patterns {
                    if host.contains(pat) {
                        assert!(rc_host.contains(&pat.reverse_complement()), "{host} {pat}");
                    }
                }
            }
        }
    }

    #[test]
    fn rc_reverses_direct_sum() {
        let small: Vec<Permutation> = (0..=4).flat_map(all_permutations).collect();
        for a in &small {
            for b in &small {
                assert_eq!(
                    a.direct_sum(b).reverse_complement(),
                    b.reverse_complement().direct_sum(&a.reverse_complement())
                );
            }
        }
    }

    #[test]
    fn decomposition_round_trips_exhaustive() {
        for n in 0..=8 {
            for q in all_permutations(n) {
                let blocks = q.sum_decompose();
                assert!(blocks.iter().all(|b| b.is_sum_indecomposable().unwrap()));
                assert_eq!(direct_sum_all(&blocks), q);
                // block boundary rule
                let mut max = 0;
                let boundaries = q
                    .values()
                    .iter()
                    .enumerate()
                    .filter(|&(i, &v)| {
                        max = max.max(v);
                        max as usize == i + 1
                    })
                    .count();
                assert_eq!(boundaries, blocks.len());
            }
        }
    }

    #[test]
    fn witness_is_brute_force_least() {
        // lexicographically least occurrence, compared with a scan over all position subsets
        let host = p("3517246");
        for k in 0..=4 {
            for pat in all_permutations(k) {
                let brute = position_subsets(host.len(), k)
                    .into_iter()
                    .find(|s| host.pattern_at(s) == pat);
                assert_eq!(host.find_occurrence(&pat), brute, "{pat}");
            }
        }
    }

    fn position_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, n, k, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn delete_and_insert() {
        assert_eq!(p("3142").delete_at(0), p("132"));
        assert_eq!(p("132").insert_max(0), p("4132"));
        assert_eq!(p("132").insert_max(3), p("1324"));
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(p("312").to_string(), "3 1 2");
        assert_eq!(p("312").compact(), "312");
        let json = serde_json::to_string(&p("312")).unwrap();
        assert_eq!(json, "[3,1,2]");
        assert!(serde_json::from_str::<Permutation>("[1,1]").is_err());
    }
}
