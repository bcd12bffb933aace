use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{qpoly, Polynomial};
use crate::error::{Error, Result};

/// A rational power series num/den, kept in lowest terms with integer
/// coefficients and den(0) > 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalGF {
    num: Polynomial,
    den: Polynomial,
}

impl RationalGF {
    /// Errors when `den` is zero or, after cancelling common factors, has a
    /// zero constant term.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RationalGF::from_poly(Polynomial::zero()));
        }
        let nq = num.to_rational();
        let dq = den.to_rational();
        let g = qpoly::gcd(&nq, &dq);
        let (nq, _) = qpoly::divrem(&nq, &g);
        let (dq, _) = qpoly::divrem(&dq, &g);
        // clear denominators with one common scale, then drop the content
        let lcm = nq.iter().chain(&dq).fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let to_int = |p: &[BigRational]| -> Vec<BigInt> {
            p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
        };
        let (ni, di) = (to_int(&nq), to_int(&dq));
        let g = ni.iter().chain(&di).fold(BigInt::zero(), |g, c| g.gcd(c));
        let mut num = Polynomial::new(ni.iter().map(|c| c / &g).collect());
        let mut den = Polynomial::new(di.iter().map(|c| c / &g).collect());
        if den.coeff(0).is_zero() {
            return Err(Error::Domain(format!("{num}/{den} is not a power series (den(0) = 0)")));
        }
        if den.coeff(0).is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RationalGF { num, den })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalGF { num: p, den: Polynomial::one() }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn constant_term(&self) -> BigRational {
        BigRational::new(self.num.coeff(0), self.den.coeff(0))
    }

    pub fn add(&self, other: &RationalGF) -> RationalGF {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        RationalGF::new(num, &self.den * &other.den).expect("den(0) stays nonzero")
    }

    pub fn sub(&self, other: &RationalGF) -> RationalGF {
        let num = &(&self.num * &other.den) - &(&other.num * &self.den);
        RationalGF::new(num, &self.den * &other.den).expect("den(0) stays nonzero")
    }

    pub fn mul(&self, other: &RationalGF) -> RationalGF {
        RationalGF::new(&self.num * &other.num, &self.den * &other.den).expect("den(0) stays nonzero")
    }

    /// First `terms` coefficients, from the recurrence den · f = num.
    pub fn expand(&self, terms: usize) -> Series {
        let d0 = BigRational::from_integer(self.den.coeff(0));
        let den = self.den.to_rational();
        let mut out: Vec<BigRational> = Vec::with_capacity(terms);
        for n in 0..terms {
            let mut acc = BigRational::from_integer(self.num.coeff(n));
            for (k, dk) in den.iter().enumerate().skip(1).take(n) {
                acc -= dk * &out[n - k];
            }
            out.push(acc / &d0);
        }
        Series::new(out)
    }
}

pub fn expand(gf: &RationalGF, terms: usize) -> Series {
    gf.expand(terms)
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &Polynomial| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl FromStr for RationalGF {
    type Err = Error;

    /// `num/den`, e.g. `(1-x)^2/(1-3x+2x^2-x^3)`; a bare polynomial has
    /// denominator 1.
    fn from_str(s: &str) -> Result<Self> {
        let mut depth = 0i32;
        let mut split = None;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => {
                    if split.is_some() {
                        return Err(Error::format(&s[i..], "more than one `/`"));
                    }
                    split = Some(i);
                }
                _ => {}
            }
        }
        match split {
            Some(i) => RationalGF::new(s[..i].parse()?, s[i + 1..].parse()?),
            None => Ok(RationalGF::from_poly(s.parse()?)),
        }
    }
}

impl Serialize for RationalGF {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RationalGF {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Truncated power series with exact rational coefficients; known up to
/// (but excluding) x^order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Series { coeffs }
    }

    pub fn from_integers<T: Into<BigInt> + Clone>(values: &[T]) -> Self {
        Series::new(values.iter().map(|v| BigRational::from_integer(v.clone().into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` at or beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&BigRational> {
        self.coeffs.get(n)
    }

    /// The coefficients as integers, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Truncates to the smaller of the two orders.
    pub fn add(&self, other: &Series) -> Series {
        Series::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    /// Truncates to the smaller of the two orders.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series::new(
            (0..order)
                .map(|n| (0..=n).map(|k| &self.coeffs[k] * &other.coeffs[n - k]).sum())
                .collect(),
        )
    }
}

/// A(x) = 1/(1 - C(x)) for the generating function C of the indecomposables.
pub fn sum_closure_gf(c: &RationalGF) -> Result<RationalGF> {
    if !c.num().coeff(0).is_zero() {
        return Err(Error::Domain(format!(
            "C(x) = {c} has a nonzero constant term; indecomposables have size at least 1"
        )));
    }
    RationalGF::new(c.den().clone(), c.den() - c.num())
}

/// B(x) = (1 + D(x)) A(x).
pub fn rc_gf(d: &RationalGF, a: &RationalGF) -> Result<RationalGF> {
    if !d.num().coeff(0).is_zero() {
        return Err(Error::Domain(format!("D(x) = {d} has a nonzero constant term")));
    }
    Ok(RationalGF::from_poly(Polynomial::one()).add(d).mul(a))
}

/// The generating function of head_0, head_1, …, then period repeated forever.
pub fn gf_from_eventually_periodic(head: &[i64], period: &[i64]) -> Result<RationalGF> {
    if period.is_empty() {
        return Err(Error::Domain("period must be nonempty".into()));
    }
    let h = Polynomial::from_i64(head);
    let p = Polynomial::from_i64(period);
    let cycle = &Polynomial::one() - &Polynomial::monomial(1, period.len());
    let num = &(&h * &cycle) + &(&Polynomial::monomial(1, head.len()) * &p);
    RationalGF::new(num, cycle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(s: &str) -> RationalGF {
        s.parse().unwrap()
    }

    fn ints(s: &Series) -> Vec<i64> {
        s.to_integers().unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn lowest_terms() {
        let g = gf("(1-x)^2/((1-x)*(1-2x))");
        assert_eq!(g.num(), &"1-x".parse().unwrap());
        assert_eq!(g.den(), &"1-2x".parse().unwrap());
        let g = gf("(-2+2x)/(-4+8x)");
        assert_eq!(g.to_string(), "(1-x)/(2-4x)");
        assert_eq!(g, gf("(1-x)/(2-4x)"));
        assert!(gf("1/(2-4x)").den().coeff(0) > BigInt::zero());
        assert!("1/x".parse::<RationalGF>().is_err());
        assert!("1/0".parse::<RationalGF>().is_err());
        assert_eq!(gf("x/x"), gf("1"));
    }

    #[test]
    fn half_coefficients_survive() {
        let g = gf("1/(2-x)");
        let s = g.expand(3);
        assert_eq!(s.coeff(0), Some(&BigRational::new(1.into(), 2.into())));
        assert_eq!(s.coeff(2), Some(&BigRational::new(1.into(), 8.into())));
        assert_eq!(s.coeff(3), None);
        assert!(s.to_integers().is_none());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(ints(&gf("1/(1-2x)").expand(5)), vec![1, 2, 4, 8, 16]);
        assert_eq!(ints(&gf("x/(1-x-x^2)").expand(8)), vec![0, 1, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn sum_closure_examples() {
        assert_eq!(sum_closure_gf(&gf("x")).unwrap(), gf("1/(1-x)"));
        assert_eq!(
            sum_closure_gf(&gf("(x-x^2+x^3)/(1-x)^2")).unwrap(),
            gf("(1-x)^2/(1-3x+2x^2-x^3)")
        );
        assert_eq!(sum_closure_gf(&gf("x/(1-x-x^2)")).unwrap(), gf("(1-x-x^2)/(1-2x-x^2)"));
        assert!(sum_closure_gf(&gf("1+x")).is_err());
    }

    #[test]
    fn rc_gf_examples() {
        let a = gf("(1-x)/(1-2x)");
        assert_eq!(rc_gf(&gf("0"), &a).unwrap(), a);
        assert_eq!(rc_gf(&gf("x/(1-x)"), &a).unwrap(), gf("1/(1-2x)"));
        assert!(rc_gf(&gf("1"), &a).is_err());
    }

    #[test]
    fn eventually_periodic() {
        assert_eq!(gf_from_eventually_periodic(&[], &[1]).unwrap(), gf("1/(1-x)"));
        let finite = gf_from_eventually_periodic(&[1, 1, 2, 4, 3, 3, 2, 1], &[0]).unwrap();
        assert_eq!(finite.den(), &Polynomial::one());
        assert_eq!(ints(&finite.expand(10)), vec![1, 1, 2, 4, 3, 3, 2, 1, 0, 0]);
        let g = gf_from_eventually_periodic(&[1, 1, 2, 3], &[4]).unwrap();
        assert_eq!(ints(&g.expand(9)), vec![1, 1, 2, 3, 4, 4, 4, 4, 4]);
        let g = gf_from_eventually_periodic(&[7], &[1, 2, 3]).unwrap();
        assert_eq!(ints(&g.expand(8)), vec![7, 1, 2, 3, 1, 2, 3, 1]);
        assert!(gf_from_eventually_periodic(&[1], &[]).is_err());
    }

    #[test]
    fn series_arithmetic_keeps_order() {
        let a = Series::from_integers(&[1, 1, 1, 1]);
        let b = Series::from_integers(&[1, -1, 0]);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(ints(&a.mul(&b)), vec![1, 0, 0]);
        assert_eq!(a.add(&b).order(), 3);
    }

    #[test]
    fn display_and_serde() {
        let g = gf("(1-x)^2/(1-3x+2x^2-x^3)");
        assert_eq!(g.to_string(), "(1-2x+x^2)/(1-3x+2x^2-x^3)");
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<RationalGF>(&json).unwrap(), g);
    }
}
