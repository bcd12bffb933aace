//! Exact generating-function algebra for class counts, the counting
//! identities for sum closed classes, and growth rates from denominators.

mod gf;
mod identities;
mod poly;
mod roots;

pub use gf::{expand, gf_from_eventually_periodic, rc_gf, sum_closure_gf, RationalGF, Series};
pub use identities::{
    check_convolution, check_sum_closure_identity, centro_monotone_count, empirical_growth, pv_bound_check,
    EmpiricalGrowth, Envelope, IdentityReport, PvReport,
};
pub use poly::Polynomial;
pub use roots::{growth_rate_rational, positive_root, positive_roots, Growth, ROOT_TOLERANCE};
