use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::perm::{all_permutations, Permutation};

type BlockTest = Arc<dyn Fn(&Permutation) -> bool + Send + Sync>;

/// User-supplied family of sum-indecomposable generators.
#[derive(Clone)]
pub struct CustomFamily {
    name: String,
    test: BlockTest,
    ind_closed: bool,
}

impl CustomFamily {
    /// `ind_closed` declares whether the family contains every
    /// sum-indecomposable pattern of its members.
    pub fn new(
        name: impl Into<String>,
        test: impl Fn(&Permutation) -> bool + Send + Sync + 'static,
        ind_closed: bool,
    ) -> Self {
        CustomFamily {
            name: name.into(),
            test: Arc::new(test),
            ind_closed,
        }
    }
}

impl fmt::Debug for CustomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomFamily")
            .field("name", &self.name)
            .field("ind_closed", &self.ind_closed)
            .finish()
    }
}

impl PartialEq for CustomFamily {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.ind_closed == other.ind_closed
    }
}

/// Set of sum-indecomposable permutations whose ⊕-closure is a class.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorFamily {
    /// {1} ∪ {(1…i) ⊖ (1…j) : i, j ≥ 1}
    MonotoneSkewMonotone,
    /// {σ ⊖ 1 : σ ∈ ⊕{1, 21}}
    LayeredSkewOne,
    /// All sum-indecomposable patterns of the listed permutations.
    FiniteSet(Vec<Permutation>),
    Custom(CustomFamily),
}

impl GeneratorFamily {
    pub fn finite(generators: impl IntoIterator<Item = Permutation>) -> Self {
        let mut gens: Vec<Permutation> = generators.into_iter().collect();
        gens.sort();
        gens.dedup();
        GeneratorFamily::FiniteSet(gens)
    }

    pub fn name(&self) -> String {
        match self {
            GeneratorFamily::MonotoneSkewMonotone => "monotone-skew-monotone".into(),
            GeneratorFamily::LayeredSkewOne => "layered-skew-one".into(),
            GeneratorFamily::FiniteSet(gens) => {
                let parts: Vec<String> = gens.iter().map(Permutation::compact).collect();
                format!("set({})", parts.join(","))
            }
            GeneratorFamily::Custom(c) => c.name.clone(),
        }
    }

    pub fn is_ind_closed(&self) -> bool {
        match self {
            GeneratorFamily::Custom(c) => c.ind_closed,
            _ => true,
        }
    }

    /// Whether the family is closed under rc (so its ⊕-closure is rc-invariant).
    pub fn is_rc_closed(&self) -> bool {
        match self {
            GeneratorFamily::MonotoneSkewMonotone => true,
            GeneratorFamily::LayeredSkewOne => false,
            GeneratorFamily::FiniteSet(gens) => gens
                .iter()
                .all(|g| {
                    let r = g.reverse_complement();
                    gens.iter().any(|h| h.contains(&r))
                }),
            GeneratorFamily::Custom(_) => false,
        }
    }

    /// Membership of a sum-indecomposable permutation.
    pub fn contains_block(&self, q: &Permutation) -> bool {
        match self {
            GeneratorFamily::MonotoneSkewMonotone => is_monotone_skew_monotone(q),
            GeneratorFamily::LayeredSkewOne => is_layered_skew_one(q),
            GeneratorFamily::FiniteSet(gens) => gens.iter().any(|g| g.contains(q)),
            GeneratorFamily::Custom(c) => (c.test)(q),
        }
    }

    /// Members of size n in lexicographic order.
    pub fn members(&self, n: usize) -> Vec<Permutation> {
        match self {
            GeneratorFamily::MonotoneSkewMonotone => {
                if n == 0 {
                    return Vec::new();
                }
                if n == 1 {
                    return vec![Permutation::identity(1)];
                }
                (1..n)
                    .map(|j| Permutation::identity(n - j).skew_sum(&Permutation::identity(j)))
                    .collect()
            }
            GeneratorFamily::LayeredSkewOne => {
                if n == 0 {
                    return Vec::new();
                }
                let mut out: Vec<Permutation> = layered_ones_twos(n - 1)
                    .into_iter()
                    .map(|s| s.skew_sum(&Permutation::identity(1)))
                    .collect();
                out.sort();
                out
            }
            GeneratorFamily::FiniteSet(gens) => {
                let mut found = BTreeSet::new();
                for g in gens.iter().filter(|g| g.len() >= n) {
                    for q in subpatterns_of_size(g, n) {
                        if q.sum_block_count() == 1 {
                            found.insert(q);
                        }
                    }
                }
                found.into_iter().collect()
            }
            GeneratorFamily::Custom(c) => all_permutations(n)
                .into_iter()
                .filter(|q| q.sum_block_count() == 1 && (c.test)(q))
                .collect(),
        }
    }
}

fn is_monotone_skew_monotone(q: &Permutation) -> bool {
    let n = q.len();
    if n == 1 {
        return true;
    }
    if n < 2 {
        return false;
    }
    let j = q.at(1) as usize - 1;
    if j == 0 || j >= n {
        return false;
    }
    Permutation::identity(n - j).skew_sum(&Permutation::identity(j)) == *q
}

fn is_layered_skew_one(q: &Permutation) -> bool {
    let n = q.len();
    if n == 0 || q.at(n) != 1 {
        return false;
    }
    let sigma: Vec<u32> = q.values()[..n - 1].iter().map(|v| v - 1).collect();
    let mut i = 0;
    while i < sigma.len() {
        if sigma[i] as usize == i + 1 {
            i += 1;
        } else if sigma[i] as usize == i + 2 && i + 1 < sigma.len() && sigma[i + 1] as usize == i + 1 {
            i += 2;
        } else {
            return false;
        }
    }
    true
}

/// Direct sums of 1s and 21s of total size n.
fn layered_ones_twos(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return vec![Permutation::empty()];
    }
    let one = Permutation::identity(1);
    let two = Permutation::decreasing(2);
    let mut out: Vec<Permutation> = layered_ones_twos(n - 1).iter().map(|s| s.direct_sum(&one)).collect();
    if n >= 2 {
        out.extend(layered_ones_twos(n - 2).iter().map(|s| s.direct_sum(&two)));
    }
    out
}

pub(crate) fn subpatterns_of_size(p: &Permutation, k: usize) -> BTreeSet<Permutation> {
    fn rec(p: &Permutation, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<Permutation>) {
        if cur.len() == k {
            out.insert(p.pattern_at(cur));
            return;
        }
        let need = k - cur.len();
        for i in start..=p.len() - need {
            cur.push(i);
            rec(p, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    if k <= p.len() {
        rec(p, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Checks, for members up to size `max_n`, that every sum-indecomposable
/// pattern of a member is again a member. Returns the first offending
/// `(member, pattern)` pair.
pub fn check_ind_closed(
    family: &GeneratorFamily,
    max_n: usize,
) -> Result<(), (Permutation, Permutation)> {
    for n in 1..=max_n {
        for q in family.members(n) {
            for k in 1..n {
                for r in subpatterns_of_size(&q, k) {
                    if r.sum_block_count() == 1 && !family.contains_block(&r) {
                        return Err((q, r));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::p;

    fn filtered(family: &GeneratorFamily, n: usize) -> Vec<Permutation> {
        all_permutations(n)
            .into_iter()
            .filter(|q| q.sum_block_count() == 1 && family.contains_block(q))
            .collect()
    }

    #[test]
    fn builtin_members_match_membership_test() {
        for fam in [GeneratorFamily::MonotoneSkewMonotone, GeneratorFamily::LayeredSkewOne] {
            for n in 1..=8 {
                assert_eq!(fam.members(n), filtered(&fam, n), "{} n={n}", fam.name());
            }
        }
    }

    #[test]
    fn builtin_families_are_ind_closed() {
        assert_eq!(check_ind_closed(&GeneratorFamily::MonotoneSkewMonotone, 8), Ok(()));
        assert_eq!(check_ind_closed(&GeneratorFamily::LayeredSkewOne, 8), Ok(()));
        assert_eq!(check_ind_closed(&GeneratorFamily::finite([p("2413"), p("321")]), 4), Ok(()));
    }

    #[test]
    fn family_sizes() {
        let msm: Vec<usize> = (1..=7).map(|n| GeneratorFamily::MonotoneSkewMonotone.members(n).len()).collect();
        assert_eq!(msm, vec![1, 1, 2, 3, 4, 5, 6]);
        // Fibonacci counts for σ ⊖ 1 with σ layered in 1s and 2s
        let lso: Vec<usize> = (1..=7).map(|n| GeneratorFamily::LayeredSkewOne.members(n).len()).collect();
        assert_eq!(lso, vec![1, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn examples_of_members() {
        let msm = GeneratorFamily::MonotoneSkewMonotone;
        assert!(msm.contains_block(&p("1")));
        assert!(msm.contains_block(&p("3412")));
        assert!(msm.contains_block(&p("2341")));
        assert!(!msm.contains_block(&p("3142")));
        let lso = GeneratorFamily::LayeredSkewOne;
        assert!(lso.contains_block(&p("1")));
        assert!(lso.contains_block(&p("21")));
        assert!(lso.contains_block(&p("3241")));
        assert!(!lso.contains_block(&p("312")));
    }

    #[test]
    fn finite_set_rc_closure() {
        assert!(GeneratorFamily::finite([p("231"), p("312")]).is_rc_closed());
        assert!(!GeneratorFamily::finite([p("231")]).is_rc_closed());
        assert_eq!(GeneratorFamily::finite([p("2413")]).members(2), vec![p("21")]);
    }
}
