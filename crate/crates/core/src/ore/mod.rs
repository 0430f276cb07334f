//! The skew polynomial ring `R = K[t; S, D]` with coefficients written on the
//! left, `f = a_0 + a_1 t + ... + a_n t^n`, and `t a = S(a) t + D(a)`.
//!
//! Polynomials are plain coefficient vectors; every operation goes through a
//! [`SkewRing`], which owns the coefficient field, the enumeration limits and
//! the atom caches.

mod euclid;
mod factor;
mod text;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, TwistedField};
use crate::linalg::FpMatrix;

pub use factor::Factorization;

/// Default cap on enumeration degree.
pub const DEFAULT_MAX_DEGREE: usize = 6;
/// Default cap on the number of candidates any exhaustive search may visit.
pub const DEFAULT_SEARCH_LIMIT: u128 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewPoly {
    coeffs: Vec<FieldElement>,
}

impl SkewPoly {
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&FieldElement> {
        self.coeffs.get(i)
    }
}

#[derive(Debug, Default)]
pub(crate) struct Caches {
    atoms: RwLock<HashMap<usize, Arc<Vec<SkewPoly>>>>,
    atomic: RwLock<HashMap<SkewPoly, bool>>,
    pub(crate) reducible: RwLock<HashMap<SkewPoly, bool>>,
}

/// A skew polynomial ring over a [`TwistedField`].
///
/// Cloning is cheap and clones share the atom caches.
#[derive(Debug, Clone)]
pub struct SkewRing {
    field: TwistedField,
    max_degree: usize,
    search_limit: u128,
    pub(crate) caches: Arc<Caches>,
}

impl SkewRing {
    pub fn new(field: TwistedField) -> Self {
        SkewRing {
            field,
            max_degree: DEFAULT_MAX_DEGREE,
            search_limit: DEFAULT_SEARCH_LIMIT,
            caches: Arc::default(),
        }
    }

    pub fn with_max_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }

    pub fn with_search_limit(mut self, limit: u128) -> Self {
        self.search_limit = limit;
        self
    }

    pub fn field(&self) -> &TwistedField {
        &self.field
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn search_limit(&self) -> u128 {
        self.search_limit
    }

    pub(crate) fn check_search(&self, size: u128) -> Result<()> {
        if size > self.search_limit {
            return Err(Error::SearchCap {
                size,
                limit: self.search_limit,
            });
        }
        Ok(())
    }

    /// The prime characteristic, or an error naming `op` on infinite backends.
    pub fn require_finite(&self, op: &'static str) -> Result<u32> {
        self.field.size().ok_or(Error::InfiniteBackend(op))
    }

    // ---- construction -------------------------------------------------

    pub fn from_coeffs(&self, mut coeffs: Vec<FieldElement>) -> SkewPoly {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero(&self) -> SkewPoly {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> SkewPoly {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: FieldElement) -> SkewPoly {
        self.from_coeffs(vec![c])
    }

    /// `c t^k`.
    pub fn monomial(&self, c: FieldElement, k: usize) -> SkewPoly {
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    pub fn t(&self) -> SkewPoly {
        self.monomial(self.field.one(), 1)
    }

    /// `t - a`.
    pub fn linear(&self, a: &FieldElement) -> SkewPoly {
        self.from_coeffs(vec![self.field.neg(a), self.field.one()])
    }

    pub fn contains(&self, f: &SkewPoly) -> bool {
        f.coeffs.iter().all(|c| self.field.contains(c))
    }

    pub fn is_unit(&self, f: &SkewPoly) -> bool {
        f.degree() == Some(0)
    }

    pub fn is_monic(&self, f: &SkewPoly) -> bool {
        f.lead().is_some_and(|c| self.field.is_one(c))
    }

    // ---- additive structure -------------------------------------------

    pub fn add(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        let k = &self.field;
        let n = f.coeffs.len().max(g.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (f.coeffs.get(i), g.coeffs.get(i)) {
                (Some(a), Some(b)) => k.add(a, b),
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        self.from_coeffs(coeffs)
    }

    pub fn neg(&self, f: &SkewPoly) -> SkewPoly {
        SkewPoly {
            coeffs: f.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        self.add(f, &self.neg(g))
    }

    /// `c f`, scaling every coefficient on the left.
    pub fn scale_left(&self, c: &FieldElement, f: &SkewPoly) -> SkewPoly {
        self.from_coeffs(f.coeffs.iter().map(|a| self.field.mul(c, a)).collect())
    }

    /// `f t^k`.
    pub fn shift(&self, f: &SkewPoly, k: usize) -> SkewPoly {
        if f.is_zero() {
            return f.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(f.coeffs.iter().cloned());
        SkewPoly { coeffs }
    }

    // ---- multiplication -----------------------------------------------

    /// `t g`.
    fn t_times(&self, g: &SkewPoly) -> SkewPoly {
        let k = &self.field;
        let mut coeffs = vec![k.zero(); g.coeffs.len() + 1];
        for (j, b) in g.coeffs.iter().enumerate() {
            coeffs[j + 1] = k.add(&coeffs[j + 1], &k.endo(b));
            if k.has_derivation() {
                coeffs[j] = k.add(&coeffs[j], &k.derive(b));
            }
        }
        self.from_coeffs(coeffs)
    }

    /// `c t^k g`.
    pub fn mul_monomial(&self, c: &FieldElement, k: usize, g: &SkewPoly) -> SkewPoly {
        let field = &self.field;
        if !field.has_derivation() {
            let mut coeffs = vec![field.zero(); k];
            coeffs.extend(g.coeffs.iter().map(|b| field.mul(c, &field.apply_endo(b, k as u32))));
            return self.from_coeffs(coeffs);
        }
        let mut h = g.clone();
        for _ in 0..k {
            h = self.t_times(&h);
        }
        self.scale_left(c, &h)
    }

    pub fn mul(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        let k = &self.field;
        let mut out = vec![k.zero(); f.coeffs.len() + g.coeffs.len() - 1];
        if !k.has_derivation() {
            for (i, a) in f.coeffs.iter().enumerate() {
                if k.is_zero(a) {
                    continue;
                }
                for (j, b) in g.coeffs.iter().enumerate() {
                    let term = k.mul(a, &k.apply_endo(b, i as u32));
                    out[i + j] = k.add(&out[i + j], &term);
                }
            }
            return self.from_coeffs(out);
        }
        let mut ti_g = g.clone();
        for (i, a) in f.coeffs.iter().enumerate() {
            if i > 0 {
                ti_g = self.t_times(&ti_g);
            }
            for (j, b) in ti_g.coeffs.iter().enumerate() {
                out[j] = k.add(&out[j], &k.mul(a, b));
            }
        }
        self.from_coeffs(out)
    }

    /// Left-associated product `f_1 f_2 ... f_n`.
    pub fn product<'a>(&self, factors: impl IntoIterator<Item = &'a SkewPoly>) -> SkewPoly {
        factors.into_iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, f: &SkewPoly, n: u32) -> SkewPoly {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, f))
    }

    // ---- normalization ------------------------------------------------

    /// The left associate with leading coefficient 1.
    pub fn monic(&self, f: &SkewPoly) -> SkewPoly {
        match f.lead() {
            None => f.clone(),
            Some(c) => {
                let inv = self.field.inv(c).expect("leading coefficient is nonzero");
                self.scale_left(&inv, f)
            }
        }
    }

    /// The unit `c` with `f c` monic, i.e. `S^n(c) = lc(f)^{-1}`. Needs
    /// preimages under `S`.
    pub fn right_monic_unit(&self, f: &SkewPoly) -> Result<FieldElement> {
        let n = f.degree().ok_or(Error::ZeroInput("right_monic"))?;
        let mut c = self.field.inv(f.lead().unwrap()).expect("nonzero lead");
        for _ in 0..n {
            c = self.field.endo_preimage(&c).ok_or_else(|| Error::NotComputable {
                op: "right_monic",
                reason: "leading coefficient is not in the image of S".into(),
            })?;
        }
        Ok(c)
    }

    /// The right associate `f c` with leading coefficient 1.
    pub fn right_monic(&self, f: &SkewPoly) -> Result<SkewPoly> {
        let c = self.right_monic_unit(f)?;
        Ok(self.mul(f, &self.constant(c)))
    }

    // ---- division -----------------------------------------------------

    /// `f = q g + r` with `deg r < deg g`. Only images under `S` are needed,
    /// so this works on every backend.
    pub fn right_divmod(&self, f: &SkewPoly, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let m = g.degree().ok_or(Error::DivisionByZero)?;
        let k = &self.field;
        let b = g.lead().unwrap();
        let mut q = vec![k.zero(); f.coeffs.len().saturating_sub(m)];
        let mut r = f.clone();
        while let Some(n) = r.degree().filter(|&n| n >= m) {
            let s = n - m;
            let x = k.mul(r.lead().unwrap(), &k.inv(&k.apply_endo(b, s as u32)).unwrap());
            r = self.sub(&r, &self.mul_monomial(&x, s, g));
            debug_assert!(r.degree().map_or(true, |d| d < n));
            q[s] = x;
        }
        Ok((self.from_coeffs(q), r))
    }

    pub fn right_rem(&self, f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
        Ok(self.right_divmod(f, g)?.1)
    }

    /// Whether `g` right-divides `f`, i.e. `f` lies in `R g`.
    pub fn right_divides(&self, g: &SkewPoly, f: &SkewPoly) -> Result<bool> {
        Ok(self.right_rem(f, g)?.is_zero())
    }

    /// `f = g q + r` with `deg r < deg g`. Needs preimages under `S` and so
    /// fails on `F_p(x)` whenever one is missing.
    pub fn left_divmod(&self, f: &SkewPoly, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        let m = g.degree().ok_or(Error::DivisionByZero)?;
        let k = &self.field;
        let b_inv = k.inv(g.lead().unwrap()).unwrap();
        let mut q = vec![k.zero(); f.coeffs.len().saturating_sub(m)];
        let mut r = f.clone();
        while let Some(n) = r.degree().filter(|&n| n >= m) {
            let s = n - m;
            let mut y = k.mul(&b_inv, r.lead().unwrap());
            for _ in 0..m {
                y = k.endo_preimage(&y).ok_or_else(|| Error::NotComputable {
                    op: "left_divmod",
                    reason: format!("{} is not in the image of S", k.format(&y)),
                })?;
            }
            r = self.sub(&r, &self.mul(g, &self.monomial(y.clone(), s)));
            debug_assert!(r.degree().map_or(true, |d| d < n));
            q[s] = y;
        }
        Ok((self.from_coeffs(q), r))
    }

    /// Whether `g` left-divides `f`, i.e. `f` lies in `g R`.
    pub fn left_divides(&self, g: &SkewPoly, f: &SkewPoly) -> Result<bool> {
        Ok(self.left_divmod(f, g)?.1.is_zero())
    }

    // ---- enumeration and coordinates ----------------------------------

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::DegreeCap {
                degree: d,
                limit: self.max_degree,
            });
        }
        Ok(())
    }

    /// Number of monic polynomials of degree `d`.
    pub fn monic_count(&self, d: usize) -> Result<u128> {
        let q = self.require_finite("enumerate_monic")? as u128;
        Ok(q.checked_pow(d as u32).unwrap_or(u128::MAX))
    }

    /// The monic polynomial of degree `d` with enumeration index `idx`
    /// (`idx = sum index(a_i) q^i`, constant term least significant).
    pub fn monic_at(&self, d: usize, mut idx: u128) -> SkewPoly {
        let q = self.field.size().expect("finite field") as u128;
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(self.field.element_at((idx % q) as u32));
            idx /= q;
        }
        coeffs.push(self.field.one());
        SkewPoly { coeffs }
    }

    /// Enumeration index of a monic polynomial, inverse of [`monic_at`](Self::monic_at).
    pub fn monic_index(&self, f: &SkewPoly) -> u128 {
        let q = self.field.size().expect("finite field") as u128;
        let n = f.degree().expect("nonzero");
        f.coeffs[..n]
            .iter()
            .rev()
            .fold(0u128, |acc, c| acc * q + self.field.index_of(c).expect("finite element") as u128)
    }

    /// All monic polynomials of degree `d` in enumeration order.
    pub fn enumerate_monic(&self, d: usize) -> Result<impl Iterator<Item = SkewPoly> + '_> {
        self.check_degree(d)?;
        let count = self.monic_count(d)?;
        self.check_search(count)?;
        Ok((0..count).map(move |i| self.monic_at(d, i)))
    }

    /// All polynomials of degree `< n` (including zero), in index order.
    pub fn enumerate_below(&self, n: usize) -> Result<impl Iterator<Item = SkewPoly> + '_> {
        let q = self.require_finite("enumerate")? as u128;
        let count = q.checked_pow(n as u32).unwrap_or(u128::MAX);
        self.check_search(count)?;
        Ok((0..count).map(move |mut idx| {
            let coeffs = (0..n)
                .map(|_| {
                    let c = self.field.element_at((idx % q) as u32);
                    idx /= q;
                    c
                })
                .collect();
            self.from_coeffs(coeffs)
        }))
    }

    /// Prime-subfield coordinates of the first `terms` coefficients of `f`.
    pub fn prime_coords(&self, f: &SkewPoly, terms: usize) -> Vec<u32> {
        let e = self.field.prime_degree().expect("finite field") as usize;
        let mut v = Vec::with_capacity(terms * e);
        for i in 0..terms {
            match f.coeffs.get(i) {
                Some(c) => v.extend(self.field.prime_coords(c)),
                None => v.extend(std::iter::repeat(0).take(e)),
            }
        }
        v
    }

    pub fn from_prime_coords(&self, v: &[u32]) -> SkewPoly {
        let e = self.field.prime_degree().expect("finite field") as usize;
        self.from_coeffs(v.chunks(e).map(|c| self.field.from_prime_coords(c)).collect())
    }

    /// The `F_p`-basis `{ε w^k t^i}` of polynomials of degree `< terms`.
    pub(crate) fn prime_basis(&self, terms: usize) -> Vec<SkewPoly> {
        let e = self.field.prime_degree().expect("finite field") as usize;
        (0..terms * e)
            .map(|j| {
                let mut v = vec![0u32; terms * e];
                v[j] = 1;
                self.from_prime_coords(&v)
            })
            .collect()
    }

    /// Matrix over `F_p` of an `F_p`-linear map from polynomials of degree
    /// `< terms_in` to polynomials of degree `< terms_out`.
    pub(crate) fn prime_matrix(
        &self,
        terms_in: usize,
        terms_out: usize,
        map: impl Fn(&SkewPoly) -> Result<SkewPoly>,
    ) -> Result<FpMatrix> {
        let e = self.field.prime_degree().expect("finite field") as usize;
        let p = self.field.characteristic();
        let cols = self
            .prime_basis(terms_in)
            .iter()
            .map(|b| Ok(self.prime_coords(&map(b)?, terms_out)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FpMatrix::from_columns(p, terms_out * e, &cols))
    }

    /// `F_p`-basis of the kernel of such a map, as polynomials.
    pub(crate) fn prime_kernel(
        &self,
        terms_in: usize,
        terms_out: usize,
        map: impl Fn(&SkewPoly) -> Result<SkewPoly>,
    ) -> Result<Vec<SkewPoly>> {
        let m = self.prime_matrix(terms_in, terms_out, map)?;
        Ok(m.kernel().iter().map(|v| self.from_prime_coords(v)).collect())
    }

    // ---- randomness ---------------------------------------------------

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        match self.field.size() {
            Some(q) => self.field.element_at(rng.gen_range(0..q)),
            None => self.field.from_int(rng.gen_range(-3..=3)),
        }
    }

    pub fn random_nonzero_element<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        loop {
            let c = self.random_element(rng);
            if !self.field.is_zero(&c) {
                return c;
            }
        }
    }

    /// A polynomial of exact degree `d`.
    pub fn random_poly<R: Rng + ?Sized>(&self, rng: &mut R, d: usize) -> SkewPoly {
        let mut coeffs: Vec<FieldElement> = (0..d).map(|_| self.random_element(rng)).collect();
        coeffs.push(self.random_nonzero_element(rng));
        SkewPoly { coeffs }
    }

    pub fn random_monic<R: Rng + ?Sized>(&self, rng: &mut R, d: usize) -> SkewPoly {
        self.monic(&self.random_poly(rng, d))
    }
}

#[cfg(test)]
mod tests;
