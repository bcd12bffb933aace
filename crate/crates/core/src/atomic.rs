//! Bounded witness searches for rc-atomicity and for generation by
//! centrosymmetric elements.
//!
//! Only one direction is certifiable by finite search: a witness proves the
//! condition for that σ, while a failed search says nothing beyond its
//! bound. Reports are labelled accordingly.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::class::{enumerate_centrosymmetric, enumerate_class, ClassSpec};
use crate::error::{Error, Result};
use crate::grid::double_drawing;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessStatus {
    Found { witness: Permutation, via: Construction },
    NoneUpTo { bound: usize },
}

/// How a witness was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// σ ⊕ rc(σ) or rc(σ) ⊕ σ in a sum closed class.
    DirectSum,
    /// A drawing of σ together with its half-turn image.
    Doubling,
    /// Least by size, then lexicographically.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub sigma: Permutation,
    pub status: WitnessStatus,
    /// Sizes examined by the search, inclusive; empty when a construction
    /// answered directly.
    pub searched_sizes: Option<(usize, usize)>,
}

impl WitnessReport {
    pub fn witness(&self) -> Option<&Permutation> {
        match &self.status {
            WitnessStatus::Found { witness, .. } => Some(witness),
            WitnessStatus::NoneUpTo { .. } => None,
        }
    }

    pub fn found(&self) -> bool {
        self.witness().is_some()
    }
}

fn valid_rc_witness(spec: &ClassSpec, sigma: &Permutation, pi: &Permutation) -> bool {
    spec.member(pi) && pi.contains(sigma) && pi.contains(&sigma.reverse_complement())
}

fn valid_centro_witness(spec: &ClassSpec, sigma: &Permutation, rho: &Permutation) -> bool {
    rho.len() % 2 == 0 && rho.is_centrosymmetric() && spec.member(rho) && rho.contains(sigma)
}

fn constructible_by_sum(spec: &ClassSpec) -> bool {
    spec.is_sum_closed() && spec.is_rc_invariant()
}

/// A permutation in the class containing both σ and rc(σ).
pub fn rc_witness(spec: &ClassSpec, sigma: &Permutation, max_n: usize) -> Result<WitnessReport> {
    rc_witness_with(spec, sigma, max_n, &mut |m| enumerate_class(spec, m))
}

fn rc_witness_with(
    spec: &ClassSpec,
    sigma: &Permutation,
    max_n: usize,
    level: &mut dyn FnMut(usize) -> Vec<Permutation>,
) -> Result<WitnessReport> {
    if !spec.member(sigma) {
        return Err(Error::Domain(format!("{sigma} is not in {spec}")));
    }
    if constructible_by_sum(spec) && 2 * sigma.len() <= max_n {
        let pi = sigma.direct_sum(&sigma.reverse_complement());
        assert!(valid_rc_witness(spec, sigma, &pi), "{pi} fails the witness checks for {sigma} in {spec}");
        return Ok(WitnessReport {
            sigma: sigma.clone(),
            status: WitnessStatus::Found { witness: pi, via: Construction::DirectSum },
            searched_sizes: None,
        });
    }
    let rc = sigma.reverse_complement();
    for m in sigma.len()..=max_n {
        if let Some(pi) = level(m).into_iter().find(|pi| pi.contains(sigma) && pi.contains(&rc)) {
            assert!(valid_rc_witness(spec, sigma, &pi));
            return Ok(WitnessReport {
                sigma: sigma.clone(),
                status: WitnessStatus::Found { witness: pi, via: Construction::Search },
                searched_sizes: Some((sigma.len(), m)),
            });
        }
    }
    Ok(WitnessReport {
        sigma: sigma.clone(),
        status: WitnessStatus::NoneUpTo { bound: max_n },
        searched_sizes: Some((sigma.len(), max_n)),
    })
}

/// Per-σ results of a bounded search over every member σ with |σ| ≤ max_sigma.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundedReport {
    pub spec: String,
    pub max_sigma: usize,
    pub bound: usize,
    pub results: Vec<WitnessReport>,
    /// σ for which no witness exists up to `bound`.
    pub failures: Vec<Permutation>,
    pub note: String,
}

impl BoundedReport {
    pub fn all_found(&self) -> bool {
        self.failures.is_empty()
    }
}

fn require_rc_invariant(spec: &ClassSpec) -> Result<()> {
    if spec.is_rc_invariant() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{spec} is not (syntactically) rc-invariant")))
    }
}

fn members_up_to(spec: &ClassSpec, max: usize) -> Vec<Permutation> {
    (0..=max).flat_map(|m| enumerate_class(spec, m)).collect()
}

fn bounded_report(spec: &ClassSpec, max_sigma: usize, bound: usize, results: Vec<WitnessReport>, what: &str) -> BoundedReport {
    let failures: Vec<Permutation> = results.iter().filter(|r| !r.found()).map(|r| r.sigma.clone()).collect();
    let note = if failures.is_empty() {
        format!("every member of size <= {max_sigma} has {what} of size <= {bound}")
    } else {
        format!(
            "{} member(s) have no {what} of size <= {bound}; this is evidence only up to that bound",
            failures.len()
        )
    };
    BoundedReport { spec: spec.to_string(), max_sigma, bound, results, failures, note }
}

pub fn is_rc_atomic_up_to(spec: &ClassSpec, max_sigma: usize, max_n: usize) -> Result<BoundedReport> {
    require_rc_invariant(spec)?;
    let sigmas = members_up_to(spec, max_sigma);
    let levels: Vec<Vec<Permutation>> = if constructible_by_sum(spec) && 2 * max_sigma <= max_n {
        Vec::new()
    } else {
        (0..=max_n).map(|m| enumerate_class(spec, m)).collect()
    };
    let results = sigmas
        .par_iter()
        .map(|sigma| {
            rc_witness_with(spec, sigma, max_n, &mut |m| levels.get(m).cloned().unwrap_or_else(|| enumerate_class(spec, m)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(bounded_report(spec, max_sigma, max_n, results, "rc-witness"))
}

/// An even-size centrosymmetric member containing σ.
pub fn centro_witness(spec: &ClassSpec, sigma: &Permutation, max_even: usize) -> Result<WitnessReport> {
    centro_witness_with(spec, sigma, max_even, &mut |m| enumerate_centrosymmetric(spec, m))
}

fn centro_witness_with(
    spec: &ClassSpec,
    sigma: &Permutation,
    max_even: usize,
    level: &mut dyn FnMut(usize) -> Vec<Permutation>,
) -> Result<WitnessReport> {
    if !spec.member(sigma) {
        return Err(Error::Domain(format!("{sigma} is not in {spec}")));
    }
    let constructed = if constructible_by_sum(spec) {
        Some((sigma.reverse_complement().direct_sum(sigma), Construction::DirectSum))
    } else if let ClassSpec::GeomGrid(g) = spec {
        double_drawing(g.matrix(), sigma).map(|rho| (rho, Construction::Doubling))
    } else {
        None
    };
    if let Some((rho, via)) = constructed.filter(|(rho, _)| rho.len() <= max_even) {
        assert!(valid_centro_witness(spec, sigma, &rho), "{rho} fails the witness checks for {sigma} in {spec}");
        return Ok(WitnessReport {
            sigma: sigma.clone(),
            status: WitnessStatus::Found { witness: rho, via },
            searched_sizes: None,
        });
    }
    let start = sigma.len() + sigma.len() % 2;
    for m in (start..=max_even).step_by(2) {
        if let Some(rho) = level(m).into_iter().find(|rho| rho.contains(sigma)) {
            assert!(valid_centro_witness(spec, sigma, &rho));
            return Ok(WitnessReport {
                sigma: sigma.clone(),
                status: WitnessStatus::Found { witness: rho, via: Construction::Search },
                searched_sizes: Some((start, m)),
            });
        }
    }
    Ok(WitnessReport {
        sigma: sigma.clone(),
        status: WitnessStatus::NoneUpTo { bound: max_even },
        searched_sizes: Some((start, max_even)),
    })
}

pub fn generated_by_centro_up_to(spec: &ClassSpec, max_sigma: usize, max_even: usize) -> Result<BoundedReport> {
    require_rc_invariant(spec)?;
    let sigmas = members_up_to(spec, max_sigma);
    let levels: Vec<Vec<Permutation>> = (0..=max_even)
        .map(|m| if m % 2 == 0 { enumerate_centrosymmetric(spec, m) } else { Vec::new() })
        .collect();
    let results = sigmas
        .par_iter()
        .map(|sigma| centro_witness_with(spec, sigma, max_even, &mut |m| levels[m].clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(bounded_report(spec, max_sigma, max_even, results, "centrosymmetric witness"))
}

/// One size of the comparison between the centrosymmetric members of
/// D ∪ rc(D) and of D ∩ rc(D).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionCentroRow {
    pub m: usize,
    pub union_count: usize,
    pub inter_count: usize,
    pub same_sets: bool,
}

/// Centrosymmetric members of D ∪ rc(D) and D ∩ rc(D) for m ≤ max_m.
pub fn union_centro_identity(d: &ClassSpec, max_m: usize) -> Vec<UnionCentroRow> {
    let union = ClassSpec::union_with_rc(d.clone());
    let inter = ClassSpec::inter_with_rc(d.clone());
    (0..=max_m)
        .map(|m| {
            let u = enumerate_centrosymmetric(&union, m);
            let i = enumerate_centrosymmetric(&inter, m);
            UnionCentroRow { m, union_count: u.len(), inter_count: i.len(), same_sets: u == i }
        })
        .collect()
}
