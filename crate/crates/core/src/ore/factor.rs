//! Atoms, divisor enumeration and atomic factorization on finite backends.
//!
//! A polynomial of degree `n` is reducible exactly when it has a monic right
//! divisor or a monic left divisor of degree between 1 and `n/2`, so the
//! searches never go beyond half the degree. Right divisors of larger degree
//! are read off from left divisors of the complementary degree.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{SkewPoly, SkewRing};
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// `f = unit * atoms[0] * ... * atoms[n-1]` with monic atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub atoms: Vec<SkewPoly>,
}

impl Factorization {
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn expand(&self, ring: &SkewRing) -> SkewPoly {
        let prod = ring.product(&self.atoms);
        ring.scale_left(&self.unit, &prod)
    }
}

impl SkewRing {
    fn monic_right_divisors_of_degree(&self, f: &SkewPoly, d: usize) -> Result<Vec<SkewPoly>> {
        let mut out = Vec::new();
        for g in self.enumerate_monic(d)? {
            if self.right_divides(&g, f)? {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Monic `g` of degree `d` with `f ∈ g R`, in enumeration order.
    pub fn monic_left_divisors_of_degree(&self, f: &SkewPoly, d: usize) -> Result<Vec<SkewPoly>> {
        let mut out = Vec::new();
        for g in self.enumerate_monic(d)? {
            if self.left_divides(&g, f)? {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Monic right divisors `h` of degree `n - d` obtained as `f = g h` from the
    /// monic left divisors `g` of degree `d`.
    fn cofactors_of_left_divisors(&self, f: &SkewPoly, d: usize) -> Result<Vec<SkewPoly>> {
        let mut out = Vec::new();
        for g in self.monic_left_divisors_of_degree(f, d)? {
            let (h, r) = self.left_divmod(f, &g)?;
            debug_assert!(r.is_zero());
            out.push(self.monic(&h));
        }
        out.sort_by_key(|h| self.monic_index(h));
        out.dedup();
        Ok(out)
    }

    /// Every monic right divisor of `f` (including `1` and `monic(f)`),
    /// sorted by degree and then enumeration index.
    pub fn right_divisors(&self, f: &SkewPoly) -> Result<Vec<SkewPoly>> {
        let n = f.degree().ok_or(Error::ZeroInput("right_divisors"))?;
        self.require_finite("right_divisors")?;
        let mut out = vec![self.one()];
        for d in 1..=n / 2 {
            out.extend(self.monic_right_divisors_of_degree(f, d)?);
        }
        for d in (n / 2 + 1)..=n {
            out.extend(self.cofactors_of_left_divisors(f, n - d)?);
        }
        let mut seen = BTreeSet::new();
        out.retain(|g| seen.insert(g.clone()));
        Ok(out)
    }

    /// Every monic left divisor of `f` (S onto only).
    pub fn left_divisors(&self, f: &SkewPoly) -> Result<Vec<SkewPoly>> {
        let n = f.degree().ok_or(Error::ZeroInput("left_divisors"))?;
        self.require_finite("left_divisors")?;
        let mut out = Vec::new();
        for d in 0..=n {
            out.extend(self.monic_left_divisors_of_degree(f, d)?);
        }
        Ok(out)
    }

    pub fn is_atom(&self, f: &SkewPoly) -> Result<bool> {
        let n = f.degree().ok_or(Error::ZeroInput("is_atom"))?;
        match n {
            0 => return Ok(false),
            1 => return Ok(true),
            _ => {}
        }
        self.require_finite("is_atom")?;
        let key = self.monic(f);
        if let Some(&v) = self.caches.atomic.read().unwrap().get(&key) {
            return Ok(v);
        }
        let mut atomic = true;
        'search: for d in 1..=n / 2 {
            for g in self.enumerate_monic(d)? {
                if self.right_divides(&g, &key)? || self.left_divides(&g, &key)? {
                    atomic = false;
                    break 'search;
                }
            }
        }
        self.caches.atomic.write().unwrap().insert(key, atomic);
        Ok(atomic)
    }

    /// The right divisor of least degree `>= 1`, least in enumeration order
    /// among those; necessarily an atom.
    fn lowest_atomic_right_divisor(&self, h: &SkewPoly) -> Result<SkewPoly> {
        let n = h.degree().expect("nonzero");
        for d in 1..=n / 2 {
            for g in self.enumerate_monic(d)? {
                if self.right_divides(&g, h)? {
                    return Ok(g);
                }
            }
        }
        for d in (n / 2 + 1)..n {
            if let Some(g) = self.cofactors_of_left_divisors(h, n - d)?.into_iter().next() {
                return Ok(g);
            }
        }
        Ok(h.clone())
    }

    /// Deterministic atomic factorization: repeatedly split off the lowest,
    /// enumeration-least monic right divisor.
    pub fn factor_atomic(&self, f: &SkewPoly) -> Result<Factorization> {
        let n = f.degree().ok_or(Error::ZeroInput("factor_atomic"))?;
        let unit = f.lead().unwrap().clone();
        if n == 0 {
            return Ok(Factorization { unit, atoms: vec![] });
        }
        if n == 1 {
            return Ok(Factorization {
                unit,
                atoms: vec![self.monic(f)],
            });
        }
        self.require_finite("factor_atomic")?;
        let mut atoms = Vec::new();
        let mut h = self.monic(f);
        while h.degree().unwrap() > 0 {
            let p = self.lowest_atomic_right_divisor(&h)?;
            let (q, r) = self.right_divmod(&h, &p)?;
            debug_assert!(r.is_zero());
            atoms.push(p);
            h = q;
        }
        atoms.reverse();
        Ok(Factorization { unit, atoms })
    }

    /// Number of atoms in any atomic factorization; `0` for units.
    pub fn length(&self, f: &SkewPoly) -> Result<usize> {
        Ok(self.factor_atomic(f)?.len())
    }

    /// All monic atoms of degree exactly `d`, in enumeration order; cached.
    pub fn enumerate_atoms(&self, d: usize) -> Result<Arc<Vec<SkewPoly>>> {
        self.require_finite("enumerate_atoms")?;
        if d == 0 {
            return Ok(Arc::new(Vec::new()));
        }
        if let Some(v) = self.caches.atoms.read().unwrap().get(&d) {
            return Ok(v.clone());
        }
        let mut atoms = Vec::new();
        for g in self.enumerate_monic(d)? {
            if self.is_atom(&g)? {
                atoms.push(g);
            }
        }
        let atoms = Arc::new(atoms);
        self.caches.atoms.write().unwrap().entry(d).or_insert_with(|| atoms.clone());
        Ok(atoms)
    }
}
