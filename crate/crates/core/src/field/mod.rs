//! Coefficient fields `K` together with an endomorphism `S` and an
//! `S`-derivation `D`, which fix the commutation rule `t a = S(a) t + D(a)`.
//!
//! Three backends are provided:
//!
//! * `GF(p^e)` with `S` a power of Frobenius (`frob=0` is the commutative case),
//! * `F_p(x)` with `S(x) = x^2`, injective but not surjective,
//! * the rationals `Q` with `S = id`.
//!
//! Derivations are either zero or inner, `D_c(a) = c a - S(a) c`.

pub mod finite;
pub mod fp_poly;
pub mod ratfun;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use finite::GaloisField;
use ratfun::RatFun;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Finite(u32),
    RatFun(RatFun),
    Rational(BigRational),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BackendKind {
    Finite,
    RationalFunction,
    RationalNumber,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endomorphism {
    /// `a -> a^(p^k)`.
    Frobenius(u32),
    /// `x -> x^2` on `F_p(x)`.
    SquareVariable,
    Identity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Zero,
    /// `D_c(a) = c a - S(a) c`.
    Inner(FieldElement),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Inv,
}

#[derive(Debug)]
struct FiniteTwist {
    gf: GaloisField,
    endo: Vec<u32>,
    endo_inv: Vec<u32>,
    derivation: Option<Vec<u32>>,
}

#[derive(Debug, Clone)]
enum Backend {
    Finite(Arc<FiniteTwist>),
    RationalFunction { p: u32 },
    Rational,
}

/// A coefficient field with its twist data. Cheap to clone and immutable.
#[derive(Debug, Clone)]
pub struct TwistedField {
    backend: Backend,
    endo: Endomorphism,
    derivation: Derivation,
    descriptor: String,
}

impl PartialEq for TwistedField {
    fn eq(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor
    }
}

impl Eq for TwistedField {}

impl TwistedField {
    /// `GF(p^e)` with `S(a) = a^(p^frob)`, zero derivation.
    pub fn finite(p: u32, e: u32, frob: u32) -> Result<Self> {
        Self::finite_with(p, e, frob, None, None)
    }

    /// `GF(p^e)` with a custom modulus and an optional inner derivation given
    /// by its coordinate vector.
    pub fn finite_with(
        p: u32,
        e: u32,
        frob: u32,
        modulus: Option<Vec<u32>>,
        inner: Option<u32>,
    ) -> Result<Self> {
        let gf = GaloisField::new(p, e, modulus)?;
        let frob = frob % e;
        let q = gf.size();
        let endo: Vec<u32> = (0..q).map(|a| gf.frobenius(a, frob)).collect();
        let mut endo_inv = vec![0u32; q as usize];
        for (a, &s) in endo.iter().enumerate() {
            endo_inv[s as usize] = a as u32;
        }
        let derivation = match inner {
            Some(c) if c != 0 => {
                if c >= q {
                    return Err(Error::InvalidField(format!("derivation constant {c} is not in GF({q})")));
                }
                Some(
                    (0..q)
                        .map(|a| gf.add(gf.mul(c, a), gf.neg(gf.mul(endo[a as usize], c))))
                        .collect(),
                )
            }
            _ => None,
        };
        let der = match inner {
            Some(c) if c != 0 => Derivation::Inner(FieldElement::Finite(c)),
            _ => Derivation::Zero,
        };
        let twist = FiniteTwist {
            gf,
            endo,
            endo_inv,
            derivation,
        };
        let mut field = TwistedField {
            backend: Backend::Finite(Arc::new(twist)),
            endo: Endomorphism::Frobenius(frob),
            derivation: der,
            descriptor: String::new(),
        };
        field.descriptor = field.canonical_descriptor();
        Ok(field)
    }

    /// `F_p(x)` with `S(x) = x^2`, zero derivation.
    pub fn rational_function(p: u32) -> Result<Self> {
        Self::rational_function_with(p, None)
    }

    pub fn rational_function_with(p: u32, inner: Option<RatFun>) -> Result<Self> {
        if !finite::is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        let derivation = match inner {
            Some(c) if !c.is_zero() => Derivation::Inner(FieldElement::RatFun(c)),
            _ => Derivation::Zero,
        };
        let mut field = TwistedField {
            backend: Backend::RationalFunction { p },
            endo: Endomorphism::SquareVariable,
            derivation,
            descriptor: String::new(),
        };
        field.descriptor = field.canonical_descriptor();
        Ok(field)
    }

    /// The rationals with trivial twist.
    pub fn rationals() -> Self {
        TwistedField {
            backend: Backend::Rational,
            endo: Endomorphism::Identity,
            derivation: Derivation::Zero,
            descriptor: "rationals".to_string(),
        }
    }

    fn canonical_descriptor(&self) -> String {
        let der = match &self.derivation {
            Derivation::Zero => String::new(),
            Derivation::Inner(c) => format!(",der={}", self.format(c)),
        };
        match (&self.backend, self.endo) {
            (Backend::Finite(t), Endomorphism::Frobenius(k)) => {
                format!("gf({},{},frob={}{})", t.gf.characteristic(), t.gf.degree(), k, der)
            }
            (Backend::RationalFunction { p }, _) => format!("funfield({p}{der})"),
            _ => "rationals".to_string(),
        }
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn kind(&self) -> BackendKind {
        match self.backend {
            Backend::Finite(_) => BackendKind::Finite,
            Backend::RationalFunction { .. } => BackendKind::RationalFunction,
            Backend::Rational => BackendKind::RationalNumber,
        }
    }

    pub fn endomorphism(&self) -> Endomorphism {
        self.endo
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    pub fn characteristic(&self) -> u32 {
        match &self.backend {
            Backend::Finite(t) => t.gf.characteristic(),
            Backend::RationalFunction { p } => *p,
            Backend::Rational => 0,
        }
    }

    /// Extension degree over the prime field (finite backend only).
    pub fn prime_degree(&self) -> Option<u32> {
        match &self.backend {
            Backend::Finite(t) => Some(t.gf.degree()),
            _ => None,
        }
    }

    pub fn size(&self) -> Option<u32> {
        match &self.backend {
            Backend::Finite(t) => Some(t.gf.size()),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.backend, Backend::Finite(_))
    }

    /// Whether `S` is onto, which is what right division needs.
    pub fn endo_is_bijective(&self) -> bool {
        !matches!(self.backend, Backend::RationalFunction { .. })
    }

    pub fn has_derivation(&self) -> bool {
        !matches!(self.derivation, Derivation::Zero)
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        match (&self.backend, a) {
            (Backend::Finite(t), FieldElement::Finite(i)) => *i < t.gf.size(),
            (Backend::RationalFunction { .. }, FieldElement::RatFun(_)) => true,
            (Backend::Rational, FieldElement::Rational(_)) => true,
            _ => false,
        }
    }

    fn gf(&self) -> Option<&GaloisField> {
        match &self.backend {
            Backend::Finite(t) => Some(&t.gf),
            _ => None,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self.backend {
            Backend::Finite(_) => FieldElement::Finite(0),
            Backend::RationalFunction { .. } => FieldElement::RatFun(RatFun::zero()),
            Backend::Rational => FieldElement::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        match &self.backend {
            Backend::Finite(t) => {
                let p = t.gf.characteristic() as i64;
                FieldElement::Finite(n.rem_euclid(p) as u32)
            }
            Backend::RationalFunction { p } => {
                FieldElement::RatFun(RatFun::constant(n.rem_euclid(*p as i64) as u32, *p))
            }
            Backend::Rational => FieldElement::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// The field generator `w` (finite, `e > 1`) or `x` (rational functions).
    pub fn generator(&self) -> Option<FieldElement> {
        match &self.backend {
            Backend::Finite(t) if t.gf.degree() > 1 => Some(FieldElement::Finite(t.gf.characteristic())),
            Backend::RationalFunction { .. } => Some(FieldElement::RatFun(RatFun::x())),
            _ => None,
        }
    }

    pub fn rational(&self, r: BigRational) -> Result<FieldElement> {
        match &self.backend {
            Backend::Rational => Ok(FieldElement::Rational(r)),
            _ => {
                let num = self.from_bigint(r.numer());
                let den = self.from_bigint(r.denom());
                let inv = self.inv(&den).ok_or(Error::DivisionByZero)?;
                Ok(self.mul(&num, &inv))
            }
        }
    }

    fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match &self.backend {
            Backend::Rational => FieldElement::Rational(BigRational::from_integer(n.clone())),
            _ => {
                let p = BigInt::from(self.characteristic());
                let r: BigInt = ((n % &p) + &p) % &p;
                let small: i64 = r.try_into().expect("residue fits");
                self.from_int(small)
            }
        }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        match a {
            FieldElement::Finite(i) => *i == 0,
            FieldElement::RatFun(r) => r.is_zero(),
            FieldElement::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &FieldElement) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (&self.backend, a, b) {
            (Backend::Finite(t), FieldElement::Finite(x), FieldElement::Finite(y)) => {
                FieldElement::Finite(t.gf.add(*x, *y))
            }
            (Backend::RationalFunction { p }, FieldElement::RatFun(x), FieldElement::RatFun(y)) => {
                FieldElement::RatFun(x.add(y, *p))
            }
            (Backend::Rational, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x + y)
            }
            _ => panic!("backend mismatch in field addition"),
        }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match (&self.backend, a) {
            (Backend::Finite(t), FieldElement::Finite(x)) => FieldElement::Finite(t.gf.neg(*x)),
            (Backend::RationalFunction { p }, FieldElement::RatFun(x)) => FieldElement::RatFun(x.neg(*p)),
            (Backend::Rational, FieldElement::Rational(x)) => FieldElement::Rational(-x),
            _ => panic!("backend mismatch in field negation"),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (&self.backend, a, b) {
            (Backend::Finite(t), FieldElement::Finite(x), FieldElement::Finite(y)) => {
                FieldElement::Finite(t.gf.mul(*x, *y))
            }
            (Backend::RationalFunction { p }, FieldElement::RatFun(x), FieldElement::RatFun(y)) => {
                FieldElement::RatFun(x.mul(y, *p))
            }
            (Backend::Rational, FieldElement::Rational(x), FieldElement::Rational(y)) => {
                FieldElement::Rational(x * y)
            }
            _ => panic!("backend mismatch in field multiplication"),
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Option<FieldElement> {
        match (&self.backend, a) {
            (Backend::Finite(t), FieldElement::Finite(x)) => t.gf.inv(*x).map(FieldElement::Finite),
            (Backend::RationalFunction { p }, FieldElement::RatFun(x)) => x.inv(*p).map(FieldElement::RatFun),
            (Backend::Rational, FieldElement::Rational(x)) => {
                (!x.is_zero()).then(|| FieldElement::Rational(x.recip()))
            }
            _ => panic!("backend mismatch in field inversion"),
        }
    }

    /// Checked arithmetic entry point: rejects foreign operands and zero
    /// divisors with distinct errors.
    pub fn arith(&self, op: ArithOp, a: &FieldElement, b: Option<&FieldElement>) -> Result<FieldElement> {
        if !self.contains(a) || b.is_some_and(|b| !self.contains(b)) {
            return Err(Error::BackendMismatch);
        }
        let need_b = || b.ok_or_else(|| Error::Invariant(format!("{op:?} needs two operands")));
        match op {
            ArithOp::Add => Ok(self.add(a, need_b()?)),
            ArithOp::Sub => Ok(self.sub(a, need_b()?)),
            ArithOp::Mul => Ok(self.mul(a, need_b()?)),
            ArithOp::Neg => Ok(self.neg(a)),
            ArithOp::Inv => self.inv(a).ok_or(Error::DivisionByZero),
        }
    }

    /// `S(a)`.
    pub fn endo(&self, a: &FieldElement) -> FieldElement {
        match (&self.backend, a) {
            (Backend::Finite(t), FieldElement::Finite(x)) => FieldElement::Finite(t.endo[*x as usize]),
            (Backend::RationalFunction { .. }, FieldElement::RatFun(x)) => FieldElement::RatFun(x.inflate(2)),
            (Backend::Rational, FieldElement::Rational(_)) => a.clone(),
            _ => panic!("backend mismatch in endomorphism"),
        }
    }

    /// `S^n(a)`.
    pub fn apply_endo(&self, a: &FieldElement, n: u32) -> FieldElement {
        match (&self.backend, a, self.endo) {
            (Backend::Finite(t), FieldElement::Finite(x), Endomorphism::Frobenius(k)) => {
                let e = t.gf.degree();
                let kn = ((k as u64 * n as u64) % e as u64) as u32;
                FieldElement::Finite(t.gf.frobenius(*x, kn))
            }
            (Backend::RationalFunction { .. }, FieldElement::RatFun(x), _) => {
                FieldElement::RatFun(x.inflate(1usize << n))
            }
            _ => {
                let mut out = a.clone();
                for _ in 0..n {
                    out = self.endo(&out);
                }
                out
            }
        }
    }

    /// Some `b` with `S(b) = a`, or `None` when `a` is not in the image of `S`.
    pub fn endo_preimage(&self, a: &FieldElement) -> Option<FieldElement> {
        match (&self.backend, a) {
            (Backend::Finite(t), FieldElement::Finite(x)) => Some(FieldElement::Finite(t.endo_inv[*x as usize])),
            (Backend::RationalFunction { .. }, FieldElement::RatFun(x)) => x.deflate(2).map(FieldElement::RatFun),
            (Backend::Rational, FieldElement::Rational(_)) => Some(a.clone()),
            _ => panic!("backend mismatch in endomorphism preimage"),
        }
    }

    /// `D(a)`.
    pub fn derive(&self, a: &FieldElement) -> FieldElement {
        match (&self.backend, &self.derivation) {
            (_, Derivation::Zero) => self.zero(),
            (Backend::Finite(t), Derivation::Inner(_)) => match a {
                FieldElement::Finite(x) => {
                    FieldElement::Finite(t.derivation.as_ref().expect("table built")[*x as usize])
                }
                _ => panic!("backend mismatch in derivation"),
            },
            (_, Derivation::Inner(c)) => self.sub(&self.mul(c, a), &self.mul(&self.endo(a), c)),
        }
    }

    /// All field elements in index order (finite backend only).
    pub fn elements(&self) -> Result<Vec<FieldElement>> {
        let gf = self.gf().ok_or(Error::InfiniteBackend("enumerate_field"))?;
        Ok((0..gf.size()).map(FieldElement::Finite).collect())
    }

    /// Position of an element in [`elements`](Self::elements).
    pub fn index_of(&self, a: &FieldElement) -> Option<u32> {
        match a {
            FieldElement::Finite(i) if self.is_finite() => Some(*i),
            _ => None,
        }
    }

    pub fn element_at(&self, idx: u32) -> FieldElement {
        FieldElement::Finite(idx)
    }

    /// Prime-subfield coordinates of `a` (finite backend).
    pub fn prime_coords(&self, a: &FieldElement) -> Vec<u32> {
        match (self.gf(), a) {
            (Some(gf), FieldElement::Finite(x)) => gf.coords(*x),
            _ => panic!("prime coordinates need a finite field element"),
        }
    }

    pub fn from_prime_coords(&self, c: &[u32]) -> FieldElement {
        FieldElement::Finite(self.gf().expect("finite field").from_coords(c))
    }

    /// Human-readable form: `w`-polynomials, `x`-fractions or rationals.
    pub fn format(&self, a: &FieldElement) -> String {
        match (&self.backend, a) {
            (Backend::Finite(t), FieldElement::Finite(x)) => format_fp_poly(&t.gf.to_poly(*x), "w"),
            (Backend::RationalFunction { .. }, FieldElement::RatFun(r)) => {
                let num = format_fp_poly(r.numerator(), "x");
                if r.is_polynomial() {
                    num
                } else {
                    let den = format_fp_poly(r.denominator(), "x");
                    let wrap = |s: String, poly: &[u32]| {
                        if poly.iter().filter(|&&c| c != 0).count() > 1 {
                            format!("({s})")
                        } else {
                            s
                        }
                    };
                    format!("{}/{}", wrap(num, r.numerator()), wrap(den, r.denominator()))
                }
            }
            (_, FieldElement::Rational(r)) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else if r.is_negative() {
                    format!("-{}/{}", r.numer().abs(), r.denom())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            _ => "<foreign>".to_string(),
        }
    }

    /// Whether the printed form of `a` needs parentheses when used as a factor.
    pub fn is_compound(&self, a: &FieldElement) -> bool {
        let s = self.format(a);
        s.contains('+') || s.contains('/') || s.starts_with('-')
    }

    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        crate::text::parse_field_element(self, s)
    }
}

fn format_fp_poly(c: &[u32], var: &str) -> String {
    if c.is_empty() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (i, &a) in c.iter().enumerate().rev() {
        if a == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let term = match (a, i) {
            (_, 0) => a.to_string(),
            (1, _) => mono,
            _ => format!("{a}*{mono}"),
        };
        terms.push(term);
    }
    terms.join("+")
}

impl fmt::Display for TwistedField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor)
    }
}

impl FromStr for TwistedField {
    type Err = Error;

    /// Parses `gf(p,e)`, `gf(p,e,frob=k)`, `gf(p,e,frob=k,der=<elem>)`,
    /// `funfield(p)`, `funfield(p,der=<elem>)` and `rationals`.
    ///
    /// The Frobenius exponent defaults to 1, so `gf(2,2)` twists by squaring.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::InvalidField(format!("{msg}: `{s}`"));
        if s == "rationals" || s == "q" || s == "Q" {
            return Ok(TwistedField::rationals());
        }
        let open = s.find('(').ok_or_else(|| bad("expected `name(...)`"))?;
        if !s.ends_with(')') {
            return Err(bad("missing closing parenthesis"));
        }
        let name = &s[..open];
        let args: Vec<&str> = s[open + 1..s.len() - 1].split(',').collect();
        let mut positional = Vec::new();
        let mut frob = None;
        let mut der = None;
        for a in args {
            if let Some(v) = a.strip_prefix("frob=") {
                frob = Some(v.parse::<u32>().map_err(|_| bad("frob must be a non-negative integer"))?);
            } else if let Some(v) = a.strip_prefix("der=") {
                der = Some(v.to_string());
            } else {
                positional.push(a.parse::<u32>().map_err(|_| bad("expected an integer argument"))?);
            }
        }
        match (name, positional.as_slice()) {
            ("gf", [p, e]) => {
                let base = TwistedField::finite(*p, *e, frob.unwrap_or(1))?;
                match der {
                    None => Ok(base),
                    Some(d) => {
                        let c = base.parse_element(&d)?;
                        let idx = base.index_of(&c).expect("finite element");
                        TwistedField::finite_with(*p, *e, frob.unwrap_or(1), None, Some(idx))
                    }
                }
            }
            ("funfield", [p]) => {
                if frob.is_some() {
                    return Err(bad("funfield has the fixed twist x -> x^2"));
                }
                let base = TwistedField::rational_function(*p)?;
                match der {
                    None => Ok(base),
                    Some(d) => match base.parse_element(&d)? {
                        FieldElement::RatFun(c) => TwistedField::rational_function_with(*p, Some(c)),
                        _ => unreachable!(),
                    },
                }
            }
            _ => Err(bad("unknown field descriptor")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> TwistedField {
        "gf(2,2)".parse().unwrap()
    }

    #[test]
    fn gf4_products() {
        let k = gf4();
        let w = k.generator().unwrap();
        let w2 = k.mul(&w, &w);
        assert_eq!(k.format(&w2), "w+1");
        assert_eq!(k.mul(&w2, &w), k.one());
    }

    #[test]
    fn additive_identity_on_every_backend() {
        for k in [gf4(), TwistedField::rational_function(2).unwrap(), TwistedField::rationals()] {
            let a = k.add(&k.from_int(3), &k.one());
            assert_eq!(k.add(&a, &k.zero()), a);
        }
    }

    #[test]
    fn inverse_in_rational_functions() {
        let k = TwistedField::rational_function(2).unwrap();
        let a = k.parse_element("x^2+x").unwrap();
        let inv = k.arith(ArithOp::Inv, &a, None).unwrap();
        assert_eq!(k.format(&inv), "1/(x^2+x)");
        assert_eq!(k.arith(ArithOp::Inv, &k.zero(), None), Err(Error::DivisionByZero));
    }

    #[test]
    fn foreign_operands_are_rejected() {
        let k = gf4();
        let l = TwistedField::rationals();
        assert_eq!(
            k.arith(ArithOp::Add, &k.one(), Some(&l.one())),
            Err(Error::BackendMismatch)
        );
        let gf8: TwistedField = "gf(2,3)".parse().unwrap();
        assert_eq!(
            k.arith(ArithOp::Mul, &k.one(), Some(&gf8.element_at(7))),
            Err(Error::BackendMismatch)
        );
    }

    #[test]
    fn endomorphism_examples() {
        let k = gf4();
        let w = k.generator().unwrap();
        assert_eq!(k.apply_endo(&w, 1), k.mul(&w, &w));
        assert_eq!(k.apply_endo(&w, 2), w);
        assert_eq!(k.apply_endo(&w, 0), w);
        let f = TwistedField::rational_function(2).unwrap();
        let a = f.parse_element("x+1").unwrap();
        assert_eq!(f.format(&f.apply_endo(&a, 1)), "x^2+1");
    }

    #[test]
    fn preimage_examples() {
        let k = gf4();
        let w = k.generator().unwrap();
        assert_eq!(k.endo_preimage(&k.mul(&w, &w)), Some(w));
        let f = TwistedField::rational_function(2).unwrap();
        let a = f.parse_element("x^4+x^2").unwrap();
        assert_eq!(f.format(&f.endo_preimage(&a).unwrap()), "x^2+x");
        assert_eq!(f.endo_preimage(&f.generator().unwrap()), None);
    }

    #[test]
    fn enumeration_order() {
        let k: TwistedField = "gf(2,1)".parse().unwrap();
        assert_eq!(k.elements().unwrap().len(), 2);
        let k = gf4();
        let names: Vec<String> = k.elements().unwrap().iter().map(|a| k.format(a)).collect();
        assert_eq!(names, ["0", "1", "w", "w+1"]);
        let k: TwistedField = "gf(5,1)".parse().unwrap();
        let names: Vec<String> = k.elements().unwrap().iter().map(|a| k.format(a)).collect();
        assert_eq!(names, ["0", "1", "2", "3", "4"]);
        assert_eq!(
            TwistedField::rational_function(3).unwrap().elements(),
            Err(Error::InfiniteBackend("enumerate_field"))
        );
    }

    #[test]
    fn twist_laws_hold_on_enumerated_pairs() {
        for desc in ["gf(2,2)", "gf(2,2,der=w)", "gf(3,2,frob=1,der=w+2)", "gf(2,3,frob=2,der=w^2)"] {
            let k: TwistedField = desc.parse().unwrap();
            let elems = k.elements().unwrap();
            for a in &elems {
                assert_eq!(k.endo_preimage(&k.endo(a)).as_ref(), Some(a));
                for b in &elems {
                    let ab = k.mul(a, b);
                    assert_eq!(k.endo(&k.add(a, b)), k.add(&k.endo(a), &k.endo(b)));
                    assert_eq!(k.endo(&ab), k.mul(&k.endo(a), &k.endo(b)));
                    let rhs = k.add(&k.mul(&k.endo(a), &k.derive(b)), &k.mul(&k.derive(a), b));
                    assert_eq!(k.derive(&ab), rhs, "{desc}");
                }
            }
        }
    }

    #[test]
    fn descriptor_round_trip() {
        for desc in ["gf(2,2,frob=1)", "gf(3,2,frob=0)", "funfield(2)", "gf(2,2,frob=1,der=w)", "rationals"] {
            let k: TwistedField = desc.parse().unwrap();
            assert_eq!(k.descriptor(), desc);
        }
        assert!("gf(4,1)".parse::<TwistedField>().is_err());
        assert!("ff(2)".parse::<TwistedField>().is_err());
    }
}
