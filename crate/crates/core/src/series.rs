//! The ring `Z + xQ[[x]]` of rational power series with integer constant
//! term, truncated at a fixed order. It is a 2-fir that is not atomic: `x`
//! factors as `2^n · (x / 2^n)` for every `n`.
//!
//! Every nonzero `f` is `a_m x^m u` with `u` a unit, and the principal
//! ideals are `a x^m R` with `a > 0` (integer when `m = 0`), so ideal
//! arithmetic only ever needs the pair `(m, a)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::text::{evaluate, Algebra};

pub const DEFAULT_TRUNCATION: usize = 16;

/// Coefficients `a_0..=a_N` of an element of `Z + xQ[[x]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
    /// Set when nonzero terms of degree above `N` were dropped.
    tail: bool,
}

impl TruncatedSeries {
    /// Checks that `a_0` is an integer; pads or truncates to order `n`.
    pub fn new(mut coeffs: Vec<BigRational>, n: usize) -> Result<Self> {
        if coeffs.first().is_some_and(|a| !a.is_integer()) {
            return Err(Error::NotInSeriesRing(format!("constant term {} is not an integer", coeffs[0])));
        }
        let tail = coeffs.iter().skip(n + 1).any(|c| !c.is_zero());
        coeffs.resize(n + 1, BigRational::zero());
        Ok(TruncatedSeries { coeffs, tail })
    }

    pub fn from_integer(c: i64, n: usize) -> Self {
        Self::from_integer_big(c.into(), n)
    }

    pub fn from_integer_big(c: BigInt, n: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[0] = BigRational::from_integer(c);
        TruncatedSeries { coeffs, tail: false }
    }

    /// `c x^m`.
    pub fn monomial(c: BigRational, m: usize, n: usize) -> Result<Self> {
        let mut coeffs = vec![BigRational::zero(); m + 1];
        coeffs[m] = c;
        Self::new(coeffs, n)
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let v = evaluate(&SeriesAlgebra, s)?;
        Self::new(v, n)
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.order().is_none()
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs[0].abs().is_one()
    }

    /// Order `0` with `|a_0|` prime. Anything of positive order splits off a
    /// factor `2`, and integer constant terms must multiply out to `a_0`.
    pub fn is_atom(&self) -> bool {
        self.order() == Some(0) && is_prime(&self.coeffs[0].numer().abs())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.truncation().min(other.truncation());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries {
            coeffs,
            tail: self.tail || other.tail,
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.truncation().min(other.truncation());
        TruncatedSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
            tail: self.tail || other.tail,
        }
    }

    pub fn scale(&self, c: &BigRational) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            tail: self.tail,
        }
    }

    /// Equality of the coefficients both sides know.
    pub fn agrees_with(&self, other: &TruncatedSeries) -> bool {
        let n = self.truncation().min(other.truncation());
        self.coeffs[..=n] == other.coeffs[..=n]
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let a = c.abs();
            let x = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            out.push_str(&match (a.is_one(), x.is_empty()) {
                (_, true) => a.to_string(),
                (true, false) => x,
                (false, false) => format!("{a}*{x}"),
            });
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

/// `f = lead · x^m · unit` with `unit` of constant term `1`, known to order
/// `N - m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub order: usize,
    pub lead: BigRational,
    pub unit: TruncatedSeries,
}

pub fn normal_form(f: &TruncatedSeries) -> Result<NormalForm> {
    let Some(m) = f.order() else {
        return Err(if f.tail {
            Error::OrderExceedsTruncation(f.truncation())
        } else {
            Error::ZeroInput("normal_form")
        });
    };
    let lead = f.coeffs[m].clone();
    let inv = lead.recip();
    let unit = TruncatedSeries {
        coeffs: f.coeffs[m..].iter().map(|c| c * &inv).collect(),
        tail: f.tail,
    };
    Ok(NormalForm { order: m, lead, unit })
}

/// The ideal `a x^m R`, stored with `a > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PrincipalIdeal {
    pub order: usize,
    #[serde(serialize_with = "ser_rational")]
    pub scale: BigRational,
}

fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl PrincipalIdeal {
    pub fn new(scale: BigRational, order: usize) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::ZeroInput("principal_ideal"));
        }
        if order == 0 && !scale.is_integer() {
            return Err(Error::NotInSeriesRing(format!("{scale} is not an integer")));
        }
        Ok(PrincipalIdeal {
            order,
            scale: scale.abs(),
        })
    }

    pub fn generated_by(f: &TruncatedSeries) -> Result<Self> {
        let nf = normal_form(f)?;
        Self::new(nf.lead, nf.order)
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        Self::generated_by(&TruncatedSeries::parse(s, n)?)
    }

    /// `scale · x^order` as a series.
    pub fn generator(&self, n: usize) -> TruncatedSeries {
        TruncatedSeries::monomial(self.scale.clone(), self.order, n).expect("valid generator")
    }

    /// Whether `g` lies in this ideal: `g / (a x^m)` has nonnegative order
    /// and an integer constant term.
    pub fn contains(&self, g: &TruncatedSeries) -> bool {
        match normal_form(g) {
            Err(_) => g.is_zero(),
            Ok(nf) => nf.order > self.order || (nf.order == self.order && (&nf.lead / &self.scale).is_integer()),
        }
    }

    pub fn contains_ideal(&self, other: &PrincipalIdeal) -> bool {
        other.order > self.order || (other.order == self.order && (&other.scale / &self.scale).is_integer())
    }
}

impl fmt::Display for PrincipalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = match self.order {
            0 => String::new(),
            1 => "x".to_string(),
            m => format!("x^{m}"),
        };
        match (self.scale.is_one(), x.is_empty()) {
            (true, false) => write!(f, "{x}R"),
            (_, true) => write!(f, "{}R", self.scale),
            (false, false) if self.scale.is_integer() => write!(f, "{}{x}R", self.scale),
            _ => write!(f, "({}){x}R", self.scale),
        }
    }
}

/// Which of the three shapes a pair of principal ideals falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesCase {
    /// Both of order zero: integer gcd and lcm.
    IntegerConstants,
    /// Different orders: the ideals are nested.
    Nested,
    /// Equal positive order: gcd and lcm of numerators over a common
    /// denominator.
    CommonOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealResult {
    pub ideal: PrincipalIdeal,
    pub case: SeriesCase,
}

fn classify(a: &PrincipalIdeal, b: &PrincipalIdeal) -> SeriesCase {
    match (a.order, b.order) {
        (0, 0) => SeriesCase::IntegerConstants,
        (m, l) if m != l => SeriesCase::Nested,
        _ => SeriesCase::CommonOrder,
    }
}

/// `(c, d, e)` with `a = c/e`, `b = d/e`.
fn common_denominator(a: &BigRational, b: &BigRational) -> (BigInt, BigInt, BigInt) {
    let e = a.denom().lcm(b.denom());
    let c = a.numer() * (&e / a.denom());
    let d = b.numer() * (&e / b.denom());
    (c, d, e)
}

pub fn ideal_sum(a: &PrincipalIdeal, b: &PrincipalIdeal) -> IdealResult {
    let case = classify(a, b);
    let ideal = match case {
        SeriesCase::Nested => {
            if a.order < b.order {
                a.clone()
            } else {
                b.clone()
            }
        }
        SeriesCase::IntegerConstants | SeriesCase::CommonOrder => {
            let (c, d, e) = common_denominator(&a.scale, &b.scale);
            PrincipalIdeal {
                order: a.order,
                scale: BigRational::new(c.gcd(&d), e),
            }
        }
    };
    IdealResult { ideal, case }
}

pub fn ideal_intersection(a: &PrincipalIdeal, b: &PrincipalIdeal) -> IdealResult {
    let case = classify(a, b);
    let ideal = match case {
        SeriesCase::Nested => {
            if a.order < b.order {
                b.clone()
            } else {
                a.clone()
            }
        }
        SeriesCase::IntegerConstants | SeriesCase::CommonOrder => {
            let (c, d, e) = common_denominator(&a.scale, &b.scale);
            PrincipalIdeal {
                order: a.order,
                scale: BigRational::new(c.lcm(&d), e),
            }
        }
    };
    IdealResult { ideal, case }
}

/// Double inclusion for `A + B = S` at truncation `n`: `A, B ⊆ S`, and the
/// generator of `S` is `u·gen(A) + v·gen(B)` for explicit `u, v ∈ R`.
pub fn verify_sum(a: &PrincipalIdeal, b: &PrincipalIdeal, s: &PrincipalIdeal, n: usize) -> bool {
    if !s.contains_ideal(a) || !s.contains_ideal(b) {
        return false;
    }
    if a.order != b.order {
        return s == if a.order < b.order { a } else { b };
    }
    // integer Bezout: gcd(c, d) = u c + v d, so gen(S) = u gen(A) + v gen(B)
    let (c, d, _) = common_denominator(&a.scale, &b.scale);
    let g = c.extended_gcd(&d);
    let u = TruncatedSeries::from_integer_big(g.x, n);
    let v = TruncatedSeries::from_integer_big(g.y, n);
    let combo = u.mul(&a.generator(n)).add(&v.mul(&b.generator(n)));
    let combo = if g.gcd.is_negative() { combo.scale(&-BigRational::one()) } else { combo };
    combo.agrees_with(&s.generator(n))
}

/// `A ∩ B = I` at truncation `n`: `I ⊆ A, B` and `gen(A)·gen(B)` is an
/// associate of `gen(A+B)·gen(I)`, as in any gcd domain.
pub fn verify_intersection(a: &PrincipalIdeal, b: &PrincipalIdeal, i: &PrincipalIdeal, n: usize) -> bool {
    if !a.contains_ideal(i) || !b.contains_ideal(i) {
        return false;
    }
    let s = ideal_sum(a, b).ideal;
    let lhs = PrincipalIdeal::generated_by(&a.generator(2 * n).mul(&b.generator(2 * n)));
    let rhs = PrincipalIdeal::generated_by(&s.generator(2 * n).mul(&i.generator(2 * n)));
    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
}

/// `x = 2^n · (x / 2^n)`: a factorization of `x` with `n` atomic factors
/// `2` and a non-unit cofactor, for every `n`.
pub fn nonatomic_witness(n: u32, trunc: usize) -> (TruncatedSeries, TruncatedSeries) {
    let two_n = BigInt::from(2).pow(n);
    let factor = TruncatedSeries::monomial(BigRational::from_integer(two_n.clone()), 0, trunc).unwrap();
    let cofactor = TruncatedSeries::monomial(BigRational::new(BigInt::one(), two_n), 1, trunc).unwrap();
    (factor, cofactor)
}

struct SeriesAlgebra;

impl Algebra for SeriesAlgebra {
    type Value = Vec<BigRational>;

    fn integer(&self, n: &BigInt) -> Result<Self::Value> {
        Ok(vec![BigRational::from_integer(n.clone())])
    }

    fn symbol(&self, name: &str) -> Option<Self::Value> {
        (name == "x").then(|| vec![BigRational::zero(), BigRational::one()])
    }

    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        let n = a.len().max(b.len());
        (0..n)
            .map(|i| {
                let z = BigRational::zero();
                a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)
            })
            .collect()
    }

    fn neg(&self, a: &Self::Value) -> Self::Value {
        a.iter().map(|c| -c).collect()
    }

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Option<Self::Value>> {
        let nz: Vec<usize> = (0..b.len()).filter(|&i| !b[i].is_zero()).collect();
        match nz.as_slice() {
            [0] => Ok(Some(a.iter().map(|c| c / &b[0]).collect())),
            _ => Ok(None),
        }
    }

    fn one(&self) -> Self::Value {
        vec![BigRational::one()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: usize = DEFAULT_TRUNCATION;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ideal(s: &str) -> PrincipalIdeal {
        PrincipalIdeal::parse(s, N).unwrap()
    }

    #[test]
    fn normal_forms() {
        let f = TruncatedSeries::parse("2 + 3*x", N).unwrap();
        let nf = normal_form(&f).unwrap();
        assert_eq!((nf.order, nf.lead.clone()), (0, q(2, 1)));
        assert_eq!(nf.unit.coeffs()[..2], [q(1, 1), q(3, 2)]);

        let nf = normal_form(&TruncatedSeries::parse("x", N).unwrap()).unwrap();
        assert_eq!((nf.order, nf.lead), (1, q(1, 1)));
        assert!(nf.unit.is_unit());

        let nf = normal_form(&TruncatedSeries::parse("1/2*x^2 + x^3", N).unwrap()).unwrap();
        assert_eq!((nf.order, nf.lead), (2, q(1, 2)));
        assert_eq!(nf.unit.coeffs()[..2], [q(1, 1), q(2, 1)]);
    }

    #[test]
    fn normal_form_errors() {
        let zero = TruncatedSeries::parse("0", N).unwrap();
        assert_eq!(normal_form(&zero), Err(Error::ZeroInput("normal_form")));
        let far = TruncatedSeries::parse("x^20", N).unwrap();
        assert_eq!(normal_form(&far), Err(Error::OrderExceedsTruncation(N)));
        assert!(matches!(TruncatedSeries::parse("1/2 + x", N), Err(Error::NotInSeriesRing(_))));
    }

    #[test]
    fn sums() {
        let r = ideal_sum(&ideal("4"), &ideal("6"));
        assert_eq!((r.ideal.clone(), r.case), (ideal("2"), SeriesCase::IntegerConstants));
        let r = ideal_sum(&ideal("3"), &ideal("1/5*x"));
        assert_eq!((r.ideal, r.case), (ideal("3"), SeriesCase::Nested));
        let r = ideal_sum(&ideal("1/2*x"), &ideal("1/3*x"));
        assert_eq!((r.ideal.clone(), r.case), (ideal("1/6*x"), SeriesCase::CommonOrder));
        assert!(verify_sum(&ideal("1/2*x"), &ideal("1/3*x"), &r.ideal, N));
        assert!(!verify_sum(&ideal("1/2*x"), &ideal("1/3*x"), &ideal("x"), N));
    }

    #[test]
    fn intersections() {
        assert_eq!(ideal_intersection(&ideal("4"), &ideal("6")).ideal, ideal("12"));
        let r = ideal_intersection(&ideal("1/2*x"), &ideal("1/3*x"));
        assert_eq!(r.ideal, ideal("x"));
        assert!(verify_intersection(&ideal("1/2*x"), &ideal("1/3*x"), &r.ideal, N));
        let r = ideal_intersection(&ideal("3"), &ideal("1/5*x"));
        assert_eq!(r.ideal, ideal("1/5*x"));
        assert!(!verify_intersection(&ideal("4"), &ideal("6"), &ideal("24"), N));
    }

    #[test]
    fn witnesses_and_atoms() {
        let x = TruncatedSeries::parse("x", N).unwrap();
        for n in 0..=10 {
            let (f, c) = nonatomic_witness(n, N);
            assert_eq!(f.mul(&c), x);
            assert!(!c.is_unit());
        }
        let (f, c) = nonatomic_witness(3, N);
        assert_eq!(f.to_string(), "8");
        assert_eq!(c.to_string(), "1/8*x");
        assert!(TruncatedSeries::from_integer(2, N).is_atom());
        assert!(!TruncatedSeries::from_integer(4, N).is_atom());
        assert!(!x.is_atom());
    }

    #[test]
    fn display_round_trip() {
        for s in ["2 + 3/2*x + x^2", "1/8*x", "-1 - x^3"] {
            let f = TruncatedSeries::parse(s, N).unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert_eq!(ideal("1/6*x").to_string(), "(1/6)xR");
        assert_eq!(ideal("4").to_string(), "4R");
    }
}
