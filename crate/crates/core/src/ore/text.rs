//! `t^2 + (w+1)*t + w` style literals.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{SkewPoly, SkewRing};
use crate::error::Result;
use crate::field::BackendKind;
use crate::text::{evaluate, Algebra};

impl Algebra for SkewRing {
    type Value = SkewPoly;

    fn integer(&self, n: &BigInt) -> Result<SkewPoly> {
        Ok(self.constant(self.field.rational(BigRational::from_integer(n.clone()))?))
    }

    fn symbol(&self, name: &str) -> Option<SkewPoly> {
        let field_symbol = match self.field.kind() {
            BackendKind::Finite => "w",
            _ => "x",
        };
        if name == "t" {
            Some(self.t())
        } else if name == field_symbol {
            self.field.generator().map(|g| self.constant(g))
        } else {
            None
        }
    }

    fn add(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        SkewRing::add(self, a, b)
    }

    fn neg(&self, a: &SkewPoly) -> SkewPoly {
        SkewRing::neg(self, a)
    }

    fn mul(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        SkewRing::mul(self, a, b)
    }

    /// Only division by a nonzero constant, on the right.
    fn div(&self, a: &SkewPoly, b: &SkewPoly) -> Result<Option<SkewPoly>> {
        if b.degree() != Some(0) {
            return Ok(None);
        }
        let inv = self.field.inv(&b.coeffs[0]).expect("nonzero constant");
        Ok(Some(SkewRing::mul(self, a, &self.constant(inv))))
    }

    fn one(&self) -> SkewPoly {
        SkewRing::one(self)
    }
}

impl SkewRing {
    /// Parses a polynomial literal; `t*a` is evaluated with the commutation rule.
    pub fn parse(&self, s: &str) -> Result<SkewPoly> {
        evaluate(self, s)
    }

    /// Canonical text form, e.g. `t^2 + (w+1)*t + w`.
    pub fn format(&self, f: &SkewPoly) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let k = &self.field;
        let nterms = f.coeffs.iter().filter(|c| !k.is_zero(c)).count();
        let mut terms = Vec::new();
        for (i, c) in f.coeffs.iter().enumerate().rev() {
            if k.is_zero(c) {
                continue;
            }
            let coeff = k.format(c);
            let coeff = if k.is_compound(c) && (i > 0 || nterms > 1) {
                format!("({coeff})")
            } else {
                coeff
            };
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            terms.push(match (i, k.is_one(c)) {
                (0, _) => coeff,
                (_, true) => mono,
                _ => format!("{coeff}*{mono}"),
            });
        }
        terms.join(" + ")
    }
}
