use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ClassSpec;
use crate::perm::{all_permutations, Permutation};

/// Members of size n, in lexicographic order.
///
/// Grows the class level by level: every member of size k+1 arises exactly
/// once by inserting a new maximum into a member of size k, and classes are
/// down-sets, so non-members are pruned as soon as they appear.
pub fn enumerate_class(spec: &ClassSpec, n: usize) -> Vec<Permutation> {
    let empty = Permutation::empty();
    if !spec.member(&empty) {
        return Vec::new();
    }
    let mut level = vec![empty];
    for k in 0..n {
        level = level
            .par_iter()
            .flat_map_iter(|q| (0..=k).map(move |i| q.insert_max(i)))
            .filter(|child| spec.member(child))
            .collect();
        if level.is_empty() {
            break;
        }
    }
    level.par_sort_unstable();
    level
}

pub fn count_class(spec: &ClassSpec, n: usize) -> usize {
    enumerate_class(spec, n).len()
}

/// Filter of all n! permutations; the oracle for [`enumerate_class`].
pub fn brute_force_class(spec: &ClassSpec, n: usize) -> Vec<Permutation> {
    all_permutations(n).into_iter().filter(|q| spec.member(q)).collect()
}

/// Centrosymmetric members of size m, in lexicographic order.
///
/// Positions 1..⌊m/2⌋ are filled left to right; choosing π(i) = v forces
/// π(m+1-i) = m+1-v, and odd m forces the centre entry. After each step the
/// points placed so far form a pattern of the final permutation, so the
/// branch is cut as soon as that pattern leaves the class.
pub fn enumerate_centrosymmetric(spec: &ClassSpec, m: usize) -> Vec<Permutation> {
    let half = m / 2;
    let state = CentroState::new(m);
    if !spec.member(&state.partial_pattern(0)) {
        return Vec::new();
    }
    if half == 0 {
        return vec![Permutation::from_vec_unchecked(state.values)];
    }
    let firsts: Vec<u32> = state.candidates().collect();
    firsts
        .par_iter()
        .map(|&v| {
            let mut local = state.clone();
            let mut out = Vec::new();
            local.place(0, v);
            if spec.member(&local.partial_pattern(1)) {
                local.search(spec, 1, &mut out);
            }
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[derive(Clone)]
struct CentroState {
    m: usize,
    values: Vec<u32>,
    used: Vec<bool>,
}

impl CentroState {
    fn new(m: usize) -> Self {
        let mut values = vec![0u32; m];
        let mut used = vec![false; m + 2];
        if m % 2 == 1 {
            let c = (m as u32 + 1) / 2;
            values[m / 2] = c;
            used[c as usize] = true;
        }
        CentroState { m, values, used }
    }

    fn candidates(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.m as u32).filter(move |&v| !self.used[v as usize])
    }

    fn place(&mut self, i: usize, v: u32) {
        let mirror = self.m as u32 + 1 - v;
        self.values[i] = v;
        self.values[self.m - 1 - i] = mirror;
        self.used[v as usize] = true;
        self.used[mirror as usize] = true;
    }

    fn unplace(&mut self, i: usize) {
        let v = self.values[i];
        let mirror = self.m as u32 + 1 - v;
        self.values[i] = 0;
        self.values[self.m - 1 - i] = 0;
        self.used[v as usize] = false;
        self.used[mirror as usize] = false;
    }

    /// Pattern of the first `filled` positions, their mirrors, and the centre.
    fn partial_pattern(&self, filled: usize) -> Permutation {
        let m = self.m;
        let mut keys: Vec<u32> = Vec::with_capacity(2 * filled + 1);
        keys.extend_from_slice(&self.values[..filled]);
        if m % 2 == 1 {
            keys.push(self.values[m / 2]);
        }
        keys.extend_from_slice(&self.values[m - filled..]);
        Permutation::standardize(&keys)
    }

    fn search(&mut self, spec: &ClassSpec, i: usize, out: &mut Vec<Permutation>) {
        if i == self.m / 2 {
            out.push(Permutation::from_vec_unchecked(self.values.clone()));
            return;
        }
        for v in 1..=self.m as u32 {
            if self.used[v as usize] {
                continue;
            }
            self.place(i, v);
            if spec.member(&self.partial_pattern(i + 1)) {
                self.search(spec, i + 1, out);
            }
            self.unplace(i);
        }
    }
}

/// Outcome of comparing two classes size by size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Agreement {
    AgreeTo(usize),
    /// Least permutation in the symmetric difference at the first size where
    /// the classes differ; `in_first` says which side contains it.
    Disagree {
        n: usize,
        witness: Permutation,
        in_first: bool,
    },
}

pub fn classes_agree(a: &ClassSpec, b: &ClassSpec, max_n: usize) -> Agreement {
    for n in 0..=max_n {
        let left = enumerate_class(a, n);
        let right = enumerate_class(b, n);
        if left != right {
            let only_left = left.iter().find(|q| right.binary_search(q).is_err());
            let only_right = right.iter().find(|q| left.binary_search(q).is_err());
            let (witness, in_first) = match (only_left, only_right) {
                (Some(l), Some(r)) if r < l => (r.clone(), false),
                (Some(l), _) => (l.clone(), true),
                (None, Some(r)) => (r.clone(), false),
                (None, None) => unreachable!("sorted lists differ"),
            };
            return Agreement::Disagree { n, witness, in_first };
        }
    }
    Agreement::AgreeTo(max_n)
}
