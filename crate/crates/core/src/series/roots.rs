//! Exact isolation of positive real roots, then bisection to a tolerance.
//!
//! Isolation works on the squarefree part with rational interval endpoints.
//! For an interval (a, b) the polynomial is mapped to (0, 1), then to
//! (0, ∞) by y ↦ 1/(1+y); the number of sign variations in the resulting
//! coefficients bounds the root count in (a, b) and is exact when it is 0
//! or 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::gf::RationalGF;
use super::poly::{qpoly, Polynomial};
use crate::error::{Error, Result};

/// Bisection stops once the bracket is narrower than this.
pub const ROOT_TOLERANCE: f64 = 1e-12;

fn squarefree(p: &[BigRational]) -> Vec<BigRational> {
    let dp: Vec<BigRational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    let g = qpoly::gcd(p, &dp);
    qpoly::divrem(p, &g).0
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// p(x + s)
fn taylor_shift(p: &[BigRational], s: &BigRational) -> Vec<BigRational> {
    let mut q = p.to_vec();
    let n = q.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let t = &q[j + 1] * s;
            q[j] += t;
        }
    }
    q
}

/// p(k x)
fn scale(p: &[BigRational], k: &BigRational) -> Vec<BigRational> {
    let mut pow = BigRational::one();
    p.iter()
        .map(|c| {
            let out = c * &pow;
            pow *= k;
            out
        })
        .collect()
}

fn sign_variations(p: &[BigRational]) -> usize {
    let signs: Vec<bool> = p.iter().filter(|c| !c.is_zero()).map(Signed::is_positive).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Upper bound on the number of roots in (a, b), exact when 0 or 1.
fn descartes(p: &[BigRational], a: &BigRational, b: &BigRational) -> usize {
    let mut r = scale(&taylor_shift(p, a), &(b - a));
    qpoly::trim(&mut r);
    r.reverse();
    sign_variations(&taylor_shift(&r, &BigRational::one()))
}

#[derive(Clone, Debug)]
enum Isolated {
    Exact(BigRational),
    /// One root inside, with the polynomial (exact roots already divided
    /// out) to bisect on.
    Open(Vec<BigRational>, BigRational, BigRational),
}

fn isolate(p: Vec<BigRational>, a: BigRational, b: BigRational, depth: usize, out: &mut Vec<Isolated>) {
    match descartes(&p, &a, &b) {
        0 => {}
        1 => out.push(Isolated::Open(p, a, b)),
        _ => {
            assert!(depth < 4096, "root isolation failed to separate roots");
            let two = BigRational::from_integer(BigInt::from(2));
            let mid = (&a + &b) / two;
            let mut p = p;
            if eval(&p, &mid).is_zero() {
                out.push(Isolated::Exact(mid.clone()));
                let linear = vec![-mid.clone(), BigRational::one()];
                p = qpoly::divrem(&p, &linear).0;
            }
            isolate(p.clone(), a, mid.clone(), depth + 1, out);
            isolate(p, mid, b, depth + 1, out);
        }
    }
}

fn refine(p: &[BigRational], mut a: BigRational, mut b: BigRational) -> f64 {
    let tol = BigRational::from_float(ROOT_TOLERANCE).expect("finite");
    let two = BigRational::from_integer(BigInt::from(2));
    let sign_a = eval(p, &a).is_positive();
    while &b - &a > tol {
        let mid = (&a + &b) / &two;
        let v = eval(p, &mid);
        if v.is_zero() {
            return mid.to_f64().unwrap_or(f64::NAN);
        }
        if v.is_positive() == sign_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    ((a + b) / two).to_f64().unwrap_or(f64::NAN)
}

/// All distinct positive real roots, ascending, each to within
/// [`ROOT_TOLERANCE`].
pub fn positive_roots(p: &Polynomial) -> Result<Vec<f64>> {
    if p.is_zero() {
        return Err(Error::Domain("the zero polynomial has every number as a root".into()));
    }
    let mut q = squarefree(&p.to_rational());
    // roots at 0 are not positive
    while q.first().is_some_and(Zero::is_zero) {
        q.remove(0);
    }
    if q.len() <= 1 {
        return Ok(Vec::new());
    }
    let lead = q.last().unwrap().abs();
    let bound = q.iter().map(|c| c.abs() / &lead).fold(BigRational::zero(), |m, c| m.max(c))
        + BigRational::from_integer(BigInt::from(2));
    let mut found = Vec::new();
    isolate(q, BigRational::zero(), bound, 0, &mut found);
    let mut roots: Vec<f64> = found
        .into_iter()
        .map(|iso| match iso {
            Isolated::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            Isolated::Open(p, a, b) => refine(&p, a, b),
        })
        .collect();
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// The unique positive root; errors when there is none or more than one.
pub fn positive_root(p: &Polynomial) -> Result<f64> {
    let roots = positive_roots(p)?;
    match roots.as_slice() {
        [r] => Ok(*r),
        [] => Err(Error::Domain(format!("{p} has no positive root"))),
        _ => Err(Error::Domain(format!("{p} has {} positive roots", roots.len()))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Growth {
    Rate(f64),
    /// Coefficients grow slower than any exponential > 1.
    Subexponential,
}

impl Growth {
    pub fn rate(self) -> Option<f64> {
        match self {
            Growth::Rate(r) => Some(r),
            Growth::Subexponential => None,
        }
    }
}

/// Exponential growth of the coefficients: 1/r for the smallest positive
/// root r of the denominator, when r ≤ 1.
pub fn growth_rate_rational(gf: &RationalGF) -> Result<Growth> {
    let roots = positive_roots(gf.den())?;
    Ok(match roots.first() {
        Some(&r) if r <= 1.0 + ROOT_TOLERANCE => Growth::Rate(1.0 / r),
        _ => Growth::Subexponential,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    const TOL: f64 = 1e-9;

    #[test]
    fn growth_thresholds() {
        let xi = positive_root(&poly("x^5-2x^4-x^2-x-1")).unwrap();
        assert!((xi - 2.30522).abs() < 1e-5, "{xi}");
        let tau = positive_root(&poly("x^3-3x^2+2x-1")).unwrap();
        assert!((tau - 2.32472).abs() < 1e-5, "{tau}");
        let silver = positive_root(&poly("x^2-2x-1")).unwrap();
        assert!((silver - (1.0 + 2f64.sqrt())).abs() < TOL);
    }

    #[test]
    fn roots_evaluate_to_zero() {
        for s in ["x^5-2x^4-x^2-x-1", "x^3-3x^2+2x-1", "x^2-2x-1", "(x-3)^2*(x+1)"] {
            let p = poly(s);
            for r in positive_roots(&p).unwrap() {
                assert!(p.eval_f64(r).abs() < 1e-7, "{s} at {r}");
            }
        }
    }

    #[test]
    fn root_counts() {
        assert!(positive_root(&poly("x^2+1")).is_err());
        assert!(positive_root(&poly("(x-1)*(x-2)")).is_err());
        assert!(positive_root(&poly("0")).is_err());
        // a double root counts once
        assert!((positive_root(&poly("(x-3)^2*(x+1)")).unwrap() - 3.0).abs() < TOL);
        let rs = positive_roots(&poly("(x-1)*(2x-1)*(x-5)*(x+7)*x")).unwrap();
        assert_eq!(rs.len(), 3);
        assert!((rs[0] - 0.5).abs() < TOL && (rs[1] - 1.0).abs() < TOL && (rs[2] - 5.0).abs() < TOL);
        // close roots
        let rs = positive_roots(&poly("(1000x-1001)*(1000x-1002)")).unwrap();
        assert_eq!(rs.len(), 2);
    }

    #[test]
    fn growth_examples() {
        let g = |s: &str| growth_rate_rational(&s.parse().unwrap()).unwrap();
        assert!((g("1/(1-2x)").rate().unwrap() - 2.0).abs() < TOL);
        assert!((g("(1-x)^2/(1-3x+2x^2-x^3)").rate().unwrap() - 2.32472).abs() < 1e-5);
        assert!((g("(1-x-x^2)/(1-2x-x^2)").rate().unwrap() - 2.41421).abs() < 1e-5);
        assert!((g("1/(1-x)^2").rate().unwrap() - 1.0).abs() < TOL);
        assert_eq!(g("1+x+x^2"), Growth::Subexponential);
        assert_eq!(g("1/(1+x^2)"), Growth::Subexponential);
        assert_eq!(g("1/(2-x)"), Growth::Subexponential);
    }
}
