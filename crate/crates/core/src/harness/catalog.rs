//! The classes the harness knows about, with their reference sequences and
//! claimed growth rates.

use serde::{Deserialize, Serialize};

use crate::class::ClassSpec;

/// Closed-form sequence generators. `values(len)` returns terms 0..len.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    /// C(2k, k)
    CentralBinomial,
    /// C(2k, k)/(k+1)
    Catalan,
    /// F_{a k + b} with F_0 = 0, F_1 = 1, extended to F_{-1} = 1.
    Fibonacci { a: i64, b: i64 },
    /// 2^k
    PowersOfTwo,
}

impl Generator {
    pub fn term(self, k: usize) -> u64 {
        match self {
            Generator::CentralBinomial => binomial(2 * k as u64, k as u64),
            Generator::Catalan => binomial(2 * k as u64, k as u64) / (k as u64 + 1),
            Generator::Fibonacci { a, b } => fibonacci(a * k as i64 + b),
            Generator::PowersOfTwo => 1 << k,
        }
    }

    pub fn values(self, len: usize) -> Vec<u64> {
        (0..len).map(|k| self.term(k)).collect()
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// F_n for n ≥ -1.
pub fn fibonacci(n: i64) -> u64 {
    assert!(n >= -1, "F_{n} is outside the supported range");
    if n == -1 {
        return 1;
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// A growth rate as an exact expression together with its decimal value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Growth {
    pub expr: String,
    pub decimal: f64,
}

impl Growth {
    fn new(expr: &str, decimal: f64) -> Self {
        Growth { expr: expr.into(), decimal }
    }
}

fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

/// A row of the centrosymmetric-count table: closed forms for even and odd
/// sizes and the printed sequence for sizes 0, 1, 2, ….
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentroRow {
    pub id: String,
    pub spec: String,
    pub even: Generator,
    pub odd: Generator,
    /// The closed forms as printed, when they differ from `even`/`odd`
    /// under the standard indexing.
    pub printed_forms: Option<(Generator, Generator)>,
    pub fixture: String,
}

impl CentroRow {
    pub fn class(&self) -> ClassSpec {
        self.spec.parse().expect("catalog spec")
    }

    /// |C^rc_m| from the closed forms.
    pub fn closed_form(&self, m: usize) -> u64 {
        if m % 2 == 0 {
            self.even.term(m / 2)
        } else {
            self.odd.term(m / 2)
        }
    }
}

pub fn centro_table() -> Vec<CentroRow> {
    let fib = |a, b| Generator::Fibonacci { a, b };
    vec![
        CentroRow {
            id: "av321".into(),
            spec: "av:321".into(),
            even: Generator::CentralBinomial,
            odd: Generator::Catalan,
            printed_forms: None,
            fixture: "centro.av321".into(),
        },
        CentroRow {
            id: "av321_3412".into(),
            spec: "av:321,3412".into(),
            even: fib(2, 1),
            odd: fib(2, -1),
            printed_forms: Some((fib(2, 2), fib(2, 0))),
            fixture: "centro.av321_3412".into(),
        },
        CentroRow {
            id: "av312_231".into(),
            spec: "av:312,231".into(),
            even: Generator::PowersOfTwo,
            odd: Generator::PowersOfTwo,
            printed_forms: None,
            fixture: "centro.av312_231".into(),
        },
        CentroRow {
            id: "av321_312_231".into(),
            spec: "av:321,312,231".into(),
            even: fib(1, 2),
            odd: fib(1, 1),
            printed_forms: None,
            fixture: "centro.av321_312_231".into(),
        },
    ]
}

/// A small-basis rc-invariant class with its claimed growth and rc-growth.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisRow {
    pub id: String,
    pub spec: String,
    pub sum_closed: bool,
    pub rc_growth_equal: bool,
    pub growth: Growth,
    pub rc_growth: Growth,
}

impl BasisRow {
    pub fn class(&self) -> ClassSpec {
        self.spec.parse().expect("catalog spec")
    }
}

pub fn basis_table() -> Vec<BasisRow> {
    let golden = (3.0 + sqrt(5.0)) / 2.0;
    let rows: [(&str, bool, bool, (&str, f64), (&str, f64)); 13] = [
        ("321", true, true, ("4", 4.0), ("4", 4.0)),
        ("4321", true, true, ("9", 9.0), ("9", 9.0)),
        ("231,312", true, true, ("2", 2.0), ("2", 2.0)),
        ("321,3412", true, true, ("(3+sqrt5)/2", golden), ("(3+sqrt5)/2", golden)),
        ("321,3142", true, true, ("(3+sqrt5)/2", golden), ("(3+sqrt5)/2", golden)),
        ("321,231,312", true, true, ("(1+sqrt5)/2", (1.0 + sqrt(5.0)) / 2.0), ("(1+sqrt5)/2", (1.0 + sqrt(5.0)) / 2.0)),
        ("2413,3142", true, true, ("3+2sqrt2", 3.0 + 2.0 * sqrt(2.0)), ("3+2sqrt2", 3.0 + 2.0 * sqrt(2.0))),
        ("4321,3412", true, true, ("4", 4.0), ("4", 4.0)),
        ("4321,3142", true, true, ("2+sqrt3", 2.0 + sqrt(3.0)), ("2+sqrt3", 2.0 + sqrt(3.0))),
        ("321,2143", false, true, ("2", 2.0), ("2", 2.0)),
        ("3412,2143", false, true, ("4", 4.0), ("4", 4.0)),
        ("4231,1324", false, false, ("2+sqrt2", 2.0 + sqrt(2.0)), ("2", 2.0)),
        ("4321,2143", false, false, ("(3+sqrt5)/2", golden), ("2", 2.0)),
    ];
    rows.iter()
        .map(|&(basis, sum_closed, eq, (ge, gd), (re, rd))| BasisRow {
            id: format!("av{}", basis.replace(',', "_")),
            spec: format!("av:{basis}"),
            sum_closed,
            rc_growth_equal: eq,
            growth: Growth::new(ge, gd),
            rc_growth: Growth::new(re, rd),
        })
        .collect()
}

/// A class of the form D ∪ rc(D).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnionRow {
    pub id: String,
    pub d: String,
    pub growth: Growth,
    pub rc_growth: Growth,
}

impl UnionRow {
    pub fn d_class(&self) -> ClassSpec {
        self.d.parse().expect("catalog spec")
    }
}

pub fn union_table() -> Vec<UnionRow> {
    [
        ("312", ("4", 4.0), ("2", 2.0)),
        ("4123", ("9", 9.0), ("4", 4.0)),
        ("4312", ("9", 9.0), ("2+sqrt5", 2.0 + sqrt(5.0))),
    ]
    .iter()
    .map(|&(d, (ge, gd), (re, rd))| UnionRow {
        id: format!("union_av{d}"),
        d: format!("av:{d}"),
        growth: Growth::new(ge, gd),
        rc_growth: Growth::new(re, rd),
    })
    .collect()
}

/// Sum closed classes given both by generators and by a basis, with the
/// generating functions of the class and of its indecomposables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SumClosedExample {
    pub id: String,
    pub generated: String,
    pub basis: String,
    pub class_gf: String,
    pub ind_gf: String,
    /// Polynomial whose unique positive root is the growth rate.
    pub growth_poly: String,
    pub growth: Growth,
}

pub fn sum_closed_examples() -> Vec<SumClosedExample> {
    vec![
        SumClosedExample {
            id: "tau".into(),
            generated: "sumclosure:monotone-skew-monotone".into(),
            basis: "av:321,3142,2413".into(),
            class_gf: "(1-x)^2/(1-3x+2x^2-x^3)".into(),
            ind_gf: "(x-x^2+x^3)/(1-x)^2".into(),
            growth_poly: "x^3-3x^2+2x-1".into(),
            growth: Growth::new("tau", 2.32472),
        },
        SumClosedExample {
            id: "silver".into(),
            generated: "sumclosure:layered-skew-one".into(),
            basis: "av:312,4321,3421".into(),
            class_gf: "(1-x-x^2)/(1-2x-x^2)".into(),
            ind_gf: "x/(1-x-x^2)".into(),
            growth_poly: "x^2-2x-1".into(),
            growth: Growth::new("1+sqrt2", 2.41421),
        },
    ]
}

/// The threshold ξ: unique positive root of x^5 - 2x^4 - x^2 - x - 1.
pub const XI_POLY: &str = "x^5-2x^4-x^2-x-1";
pub const XI_DECIMAL: f64 = 2.30522;

pub const X_MATRIX: &str = "-1,1;1,-1";

pub fn x_class() -> ClassSpec {
    format!("geom:[{X_MATRIX}]").parse().expect("catalog spec")
}

/// Every catalog class, by id.
pub fn all_classes() -> Vec<(String, ClassSpec)> {
    let mut out: Vec<(String, ClassSpec)> = Vec::new();
    for r in centro_table() {
        out.push((r.id.clone(), r.class()));
    }
    for r in basis_table() {
        if !out.iter().any(|(id, _)| *id == r.id) {
            out.push((r.id.clone(), r.class()));
        }
    }
    for r in union_table() {
        out.push((r.id.clone(), ClassSpec::union_with_rc(r.d_class())));
        out.push((format!("inter_av{}", &r.d[3..]), ClassSpec::inter_with_rc(r.d_class())));
    }
    for e in sum_closed_examples() {
        out.push((format!("{}_generated", e.id), e.generated.parse().expect("catalog spec")));
        out.push((format!("{}_basis", e.id), e.basis.parse().expect("catalog spec")));
    }
    out.push(("x_class".into(), x_class()));
    out
}
