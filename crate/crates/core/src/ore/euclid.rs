//! Extended Euclid on both sides. The cofactors at the vanishing remainder
//! give the least common multiple: if `s a + u b = 0` is the final syzygy,
//! then `R a ∩ R b = R s a`.

use super::{SkewPoly, SkewRing};
use crate::error::{Error, Result};

/// `d = u a + v b` with `R d = R a + R b` and `d` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bezout {
    pub d: SkewPoly,
    pub u: SkewPoly,
    pub v: SkewPoly,
}

struct Run {
    last: (SkewPoly, SkewPoly, SkewPoly),
    syzygy: (SkewPoly, SkewPoly),
}

impl SkewRing {
    fn euclid_right(&self, a: &SkewPoly, b: &SkewPoly) -> Result<Run> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut u0, mut u1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.right_divmod(&r0, &r1)?;
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let u2 = self.sub(&u0, &self.mul(&q, &u1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (u0, u1) = (u1, u2);
        }
        Ok(Run {
            last: (r0, s0, u0),
            syzygy: (s1, u1),
        })
    }

    fn euclid_left(&self, a: &SkewPoly, b: &SkewPoly) -> Result<Run> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut u0, mut u1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.left_divmod(&r0, &r1)?;
            let s2 = self.sub(&s0, &self.mul(&s1, &q));
            let u2 = self.sub(&u0, &self.mul(&u1, &q));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (u0, u1) = (u1, u2);
        }
        Ok(Run {
            last: (r0, s0, u0),
            syzygy: (s1, u1),
        })
    }

    /// Right gcd `(a, b)_r` with Bezout cofactors.
    pub fn rgcd(&self, a: &SkewPoly, b: &SkewPoly) -> Result<Bezout> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroInput("rgcd"));
        }
        let (d, u, v) = self.euclid_right(a, b)?.last;
        let c = self.field.inv(d.lead().unwrap()).unwrap();
        Ok(Bezout {
            d: self.scale_left(&c, &d),
            u: self.scale_left(&c, &u),
            v: self.scale_left(&c, &v),
        })
    }

    /// Left lcm `[a, b]_l`, the monic generator of `R a ∩ R b`.
    pub fn llcm(&self, a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroInput("llcm"));
        }
        let (s, _) = self.euclid_right(a, b)?.syzygy;
        Ok(self.monic(&self.mul(&s, a)))
    }

    /// Monic generator of `∩ R δ`; the empty intersection is `R = R·1`.
    pub fn llcm_all<'a>(&self, elems: impl IntoIterator<Item = &'a SkewPoly>) -> Result<SkewPoly> {
        let mut acc = self.one();
        for e in elems {
            acc = self.llcm(&acc, e)?;
        }
        Ok(acc)
    }

    /// `a^b`: the monic element with `R a ∩ R b = R a^b b`.
    pub fn conj(&self, a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroInput("conj"));
        }
        let m = self.llcm(a, b)?;
        let (q, r) = self.right_divmod(&m, b)?;
        if !r.is_zero() {
            return Err(Error::Invariant("llcm is not a left multiple of b".into()));
        }
        Ok(self.monic(&q))
    }

    /// `(g, m)` with `a R + b R = g R` and `a R ∩ b R = m R`, both monic.
    /// Only available when `S` is onto.
    pub fn lgcd_rlcm(&self, a: &SkewPoly, b: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroInput("lgcd_rlcm"));
        }
        if !self.field.endo_is_bijective() {
            return Err(Error::NotComputable {
                op: "lgcd_rlcm",
                reason: "right ideals are not principal when S is not onto".into(),
            });
        }
        let run = self.euclid_left(a, b)?;
        let g = self.right_monic(&run.last.0)?;
        let m = self.right_monic(&self.mul(a, &run.syzygy.0))?;
        Ok((g, m))
    }

    /// Monic generator of `∩ δ R` (S onto only).
    pub fn rlcm_all<'a>(&self, elems: impl IntoIterator<Item = &'a SkewPoly>) -> Result<SkewPoly> {
        let mut acc = self.one();
        for e in elems {
            acc = self.lgcd_rlcm(&acc, e)?.1;
        }
        Ok(acc)
    }
}
