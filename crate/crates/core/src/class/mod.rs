//! Permutation classes described by combinator trees, with membership,
//! pruned enumeration and count tables.

mod dsl;
mod enumerate;
mod family;
mod table;

use std::fmt;

use log::warn;

use crate::error::{Error, Result};
use crate::grid::{GeomClass, GridMatrix};
use crate::perm::Permutation;

pub use enumerate::{
    brute_force_class, classes_agree, count_class, enumerate_centrosymmetric, enumerate_class,
    Agreement,
};
pub use family::{check_ind_closed, CustomFamily, GeneratorFamily};
pub use table::{count_table, BoundViolation, CountTable};

/// A finite avoidance basis kept as an antichain, sorted by size then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Basis(Vec<Permutation>);

impl Basis {
    /// Drops redundant elements (those containing another basis element),
    /// logging a warning when anything was removed.
    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Self {
        let mut all: Vec<Permutation> = patterns.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Permutation> = Vec::with_capacity(all.len());
        for q in all {
            if let Some(smaller) = kept.iter().find(|k| q.contains(k)) {
                warn!(
                    "basis element {} contains {} and is redundant; dropping it",
                    q.compact(),
                    smaller.compact()
                );
                continue;
            }
            kept.push(q);
        }
        Basis(kept)
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.0
    }

    fn rc(&self) -> Basis {
        Basis::new(self.0.iter().map(Permutation::reverse_complement))
    }
}

/// Combinator tree describing a downward-closed set of permutations.
#[derive(Clone, Debug, PartialEq)]
pub enum ClassSpec {
    Avoid(Basis),
    RcImage(Box<ClassSpec>),
    Union(Box<ClassSpec>, Box<ClassSpec>),
    Intersect(Box<ClassSpec>, Box<ClassSpec>),
    SumClosure(GeneratorFamily),
    GeomGrid(GeomClass),
}

impl ClassSpec {
    pub fn avoid(basis: impl IntoIterator<Item = Permutation>) -> Self {
        ClassSpec::Avoid(Basis::new(basis))
    }

    /// `Av(basis)` from compact strings; panics on malformed input, so meant
    /// for literals.
    pub fn av(basis: &[&str]) -> Self {
        ClassSpec::avoid(basis.iter().map(|s| s.parse::<Permutation>().expect("basis literal")))
    }

    pub fn rc(child: ClassSpec) -> Self {
        ClassSpec::RcImage(Box::new(child))
    }

    pub fn union(a: ClassSpec, b: ClassSpec) -> Self {
        ClassSpec::Union(Box::new(a), Box::new(b))
    }

    pub fn inter(a: ClassSpec, b: ClassSpec) -> Self {
        ClassSpec::Intersect(Box::new(a), Box::new(b))
    }

    /// `D ∪ rc(D)`.
    pub fn union_with_rc(d: ClassSpec) -> Self {
        ClassSpec::union(d.clone(), ClassSpec::rc(d))
    }

    /// `D ∩ rc(D)`.
    pub fn inter_with_rc(d: ClassSpec) -> Self {
        ClassSpec::inter(d.clone(), ClassSpec::rc(d))
    }

    /// Sum closure of a generator family. Only families closed under taking
    /// sum-indecomposable subpatterns are accepted, since membership tests
    /// each sum block against the family directly.
    pub fn sum_closure(family: GeneratorFamily) -> Result<Self> {
        if !family.is_ind_closed() {
            return Err(Error::Capability(format!(
                "sum closure of `{}` needs a family closed under indecomposable subpatterns",
                family.name()
            )));
        }
        Ok(ClassSpec::SumClosure(family))
    }

    pub fn geom(matrix: GridMatrix) -> Self {
        ClassSpec::GeomGrid(GeomClass::new(matrix))
    }

    pub fn member(&self, p: &Permutation) -> bool {
        match self {
            ClassSpec::Avoid(basis) => basis.patterns().iter().all(|b| p.avoids(b)),
            ClassSpec::RcImage(child) => child.member(&p.reverse_complement()),
            ClassSpec::Union(a, b) => a.member(p) || b.member(p),
            ClassSpec::Intersect(a, b) => a.member(p) && b.member(p),
            ClassSpec::SumClosure(family) => {
                p.sum_decompose().iter().all(|block| family.contains_block(block))
            }
            ClassSpec::GeomGrid(geom) => geom.contains(p),
        }
    }

    /// A spec for rc of this class, with `RcImage` pushed to the leaves
    /// where possible.
    pub fn rc_image(&self) -> ClassSpec {
        match self {
            ClassSpec::Avoid(basis) => ClassSpec::Avoid(basis.rc()),
            ClassSpec::RcImage(child) => child.normalized(),
            ClassSpec::Union(a, b) => ClassSpec::union(a.rc_image(), b.rc_image()),
            ClassSpec::Intersect(a, b) => ClassSpec::inter(a.rc_image(), b.rc_image()),
            ClassSpec::SumClosure(family) if family.is_rc_closed() => self.clone(),
            ClassSpec::SumClosure(_) => ClassSpec::rc(self.clone()),
            ClassSpec::GeomGrid(g) => ClassSpec::geom(g.matrix().rc()),
        }
    }

    /// Same class, with every `RcImage` node pushed down as far as it goes.
    pub fn normalized(&self) -> ClassSpec {
        match self {
            ClassSpec::RcImage(child) => child.rc_image(),
            ClassSpec::Union(a, b) => ClassSpec::union(a.normalized(), b.normalized()),
            ClassSpec::Intersect(a, b) => ClassSpec::inter(a.normalized(), b.normalized()),
            other => other.clone(),
        }
    }

    /// Conservative syntactic test for rc-invariance: true only when the
    /// tree shape guarantees it.
    pub fn is_rc_invariant(&self) -> bool {
        match self {
            ClassSpec::Avoid(basis) => basis.rc() == *basis,
            ClassSpec::RcImage(child) => child.is_rc_invariant(),
            ClassSpec::Union(a, b) | ClassSpec::Intersect(a, b) => {
                (a.is_rc_invariant() && b.is_rc_invariant()) || a.rc_image().normalized() == b.normalized()
            }
            ClassSpec::SumClosure(family) => family.is_rc_closed(),
            ClassSpec::GeomGrid(g) => g.matrix().is_rc(),
        }
    }

    /// Conservative syntactic test for closure under ⊕. `Av(B)` is sum
    /// closed exactly when every element of B is sum-indecomposable.
    pub fn is_sum_closed(&self) -> bool {
        match self {
            ClassSpec::Avoid(basis) => basis.patterns().iter().all(|b| b.sum_block_count() == 1),
            ClassSpec::RcImage(child) => child.is_sum_closed(),
            ClassSpec::Intersect(a, b) => a.is_sum_closed() && b.is_sum_closed(),
            ClassSpec::Union(_, _) => false,
            ClassSpec::SumClosure(_) => true,
            ClassSpec::GeomGrid(_) => false,
        }
    }
}

impl fmt::Display for ClassSpec {
    /// Renders the class in the DSL accepted by [`str::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassSpec::Avoid(basis) => {
                write!(f, "av:")?;
                let parts: Vec<String> = basis.patterns().iter().map(Permutation::compact).collect();
                write!(f, "{}", parts.join(","))
            }
            ClassSpec::RcImage(child) => write!(f, "rc({child})"),
            ClassSpec::Union(a, b) => write!(f, "union({a},{b})"),
            ClassSpec::Intersect(a, b) => write!(f, "inter({a},{b})"),
            ClassSpec::SumClosure(family) => write!(f, "sumclosure:{}", family.name()),
            ClassSpec::GeomGrid(g) => write!(f, "geom:[{}]", g.matrix()),
        }
    }
}
