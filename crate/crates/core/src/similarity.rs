//! Homomorphisms between cyclic modules `R/Rf -> R/Rg`, similarity, the
//! eigenring `C(p) = End(R/Rp)` and the kernel of `λ_{f,p}: x + Rp ↦ fx + Rp`.
//!
//! A homomorphism `R/Rf -> R/Rg` is `x + Rf ↦ x u + Rg` for some `u` with
//! `f u ∈ R g`. The prime field is central in `R` (`S` and `D` are trivial
//! on it), so every such condition is `F_p`-linear in the coefficients of `u`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{span, FpMatrix};
use crate::ore::{SkewPoly, SkewRing};

/// `F_p`-basis of `{u : deg u < deg g, f u ∈ R g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    pub source: SkewPoly,
    pub target: SkewPoly,
    pub basis: Vec<SkewPoly>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `C(p)` presented over `F_p`.
///
/// Element `u` acts on `R/Rp` by `x ↦ x u`. The product `u ⋆ v` is the
/// composite "first `v`, then `u`", i.e. `x ↦ x v u`, so `u ⋆ v = v u mod Rp`.
/// `table[i][j]` holds the coordinates of `basis[i] ⋆ basis[j]`.
#[derive(Debug, Clone)]
pub struct Eigenring {
    pub atom: SkewPoly,
    pub basis: Vec<SkewPoly>,
    pub table: Vec<Vec<Vec<u32>>>,
    /// Index of `1` in `basis`; always `0`.
    pub identity: usize,
    p: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EigenringSummary {
    pub prime_dimension: usize,
    pub order: u128,
    pub commutative: bool,
}

impl SkewRing {
    /// Basis of the homomorphisms `R/Rf -> R/Rg`.
    pub fn hom_space(&self, f: &SkewPoly, g: &SkewPoly) -> Result<HomSpace> {
        self.require_finite("hom_space")?;
        if f.is_zero() || g.is_zero() {
            return Err(Error::ZeroInput("hom_space"));
        }
        let m = g.degree().unwrap();
        let basis = self.prime_kernel(m, m, |u| self.right_rem(&self.mul(f, u), g))?;
        Ok(HomSpace {
            source: f.clone(),
            target: g.clone(),
            basis,
        })
    }

    /// A `u` with `f u ∈ R g` and `R u + R g = R` when `f ~ g`, else `None`.
    ///
    /// Such `u` makes `x ↦ x u` onto `R/Rg`; equal degrees make it bijective.
    pub fn is_similar(&self, f: &SkewPoly, g: &SkewPoly) -> Result<Option<SkewPoly>> {
        self.require_finite("is_similar")?;
        if f.is_zero() || g.is_zero() {
            return Err(Error::ZeroInput("is_similar"));
        }
        if f.degree() != g.degree() {
            return Ok(None);
        }
        if self.right_divides(g, f)? {
            return Ok(Some(self.one()));
        }
        let hom = self.hom_space(f, g)?;
        let unit_witness = |u: &SkewPoly| -> Result<bool> { Ok(!u.is_zero() && self.rgcd(g, u)?.d == self.one()) };
        for u in &hom.basis {
            if unit_witness(u)? {
                return Ok(Some(u.clone()));
            }
        }
        let p = self.field().characteristic();
        self.check_search((p as u128).saturating_pow(hom.dim() as u32))?;
        let m = g.degree().unwrap();
        let coords: Vec<Vec<u32>> = hom.basis.iter().map(|u| self.prime_coords(u, m)).collect();
        for v in span(p, &coords) {
            let u = self.from_prime_coords(&v);
            if unit_witness(&u)? {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }

    /// `v` with `f u = v g`, the cofactor of a homomorphism witness.
    pub fn hom_cofactor(&self, f: &SkewPoly, g: &SkewPoly, u: &SkewPoly) -> Result<SkewPoly> {
        let (v, r) = self.right_divmod(&self.mul(f, u), g)?;
        if !r.is_zero() {
            return Err(Error::Invariant("not a homomorphism witness".into()));
        }
        Ok(v)
    }

    /// Fast similarity test for `t - a` and `t - a2`: some `c ≠ 0` with
    /// `a2 c = S(c) a + D(c)`.
    pub fn similar_linear(&self, a: &FieldElement, a2: &FieldElement) -> Result<Option<FieldElement>> {
        let k = self.field();
        for c in k.elements()? {
            if k.is_zero(&c) {
                continue;
            }
            let lhs = k.mul(a2, &c);
            let rhs = k.add(&k.mul(&k.endo(&c), a), &k.derive(&c));
            if lhs == rhs {
                return Ok(Some(c));
            }
        }
        Ok(None)
    }

    fn require_atom(&self, p: &SkewPoly, op: &'static str) -> Result<()> {
        if p.is_zero() {
            return Err(Error::ZeroInput(op));
        }
        if !self.is_atom(p)? {
            return Err(Error::NotAnAtom {
                op,
                poly: self.format(p),
            });
        }
        Ok(())
    }

    /// `C(p)` with its multiplication table; the division-ring axioms are
    /// verified before returning.
    pub fn eigenring(&self, p: &SkewPoly) -> Result<Eigenring> {
        self.require_finite("eigenring")?;
        self.require_atom(p, "eigenring")?;
        let atom = self.monic(p);
        let n = atom.degree().unwrap();
        let kernel = self.hom_space(&atom, &atom)?.basis;
        let prime = self.field().characteristic();
        let mut candidates = vec![self.one()];
        candidates.extend(kernel);
        let cols: Vec<Vec<u32>> = candidates.iter().map(|u| self.prime_coords(u, n)).collect();
        let rows = cols[0].len();
        let picked = FpMatrix::from_columns(prime, rows, &cols).independent_columns();
        let basis: Vec<SkewPoly> = picked.iter().map(|&i| candidates[i].clone()).collect();
        let basis_cols: Vec<Vec<u32>> = picked.iter().map(|&i| cols[i].clone()).collect();
        let bmat = FpMatrix::from_columns(prime, rows, &basis_cols);
        let mut table = Vec::with_capacity(basis.len());
        for bi in &basis {
            let mut row = Vec::with_capacity(basis.len());
            for bj in &basis {
                let prod = self.right_rem(&self.mul(bj, bi), &atom)?;
                let c = bmat
                    .solve(&self.prime_coords(&prod, n))
                    .ok_or_else(|| Error::Invariant("eigenring is not closed under products".into()))?;
                row.push(c);
            }
            table.push(row);
        }
        let ring = Eigenring {
            atom,
            basis,
            table,
            identity: 0,
            p: prime,
        };
        ring.verify_division_ring()?;
        Ok(ring)
    }

    /// `F_p`-basis of `{x mod Rp : f x ∈ R p}`.
    pub fn lambda_kernel(&self, f: &SkewPoly, p: &SkewPoly) -> Result<Vec<SkewPoly>> {
        self.require_finite("lambda_kernel")?;
        self.require_atom(p, "lambda_kernel")?;
        if f.is_zero() {
            return Err(Error::ZeroInput("lambda_kernel"));
        }
        let n = p.degree().unwrap();
        self.prime_kernel(n, n, |x| self.right_rem(&self.mul(f, x), p))
    }

    /// `dim_{C(p)} Ker λ_{f,p}`.
    pub fn dim_over_eigenring(&self, f: &SkewPoly, p: &SkewPoly) -> Result<usize> {
        let k = self.lambda_kernel(f, p)?.len();
        let c = self.eigenring(p)?.dim();
        if k % c != 0 {
            return Err(Error::Invariant(format!(
                "kernel dimension {k} is not a multiple of the eigenring dimension {c}"
            )));
        }
        Ok(k / c)
    }
}

impl Eigenring {
    /// Dimension over `F_p`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.dim() as u32)
    }

    pub fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[self.identity] = 1;
        v
    }

    /// All elements as coordinate vectors.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u32>> + '_ {
        let unit: Vec<Vec<u32>> = (0..self.dim())
            .map(|i| {
                let mut v = vec![0; self.dim()];
                v[i] = 1;
                v
            })
            .collect();
        span(self.p, &unit).collect::<Vec<_>>().into_iter()
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let n = self.dim();
        let mut out = vec![0u64; n];
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n {
                if y[j] == 0 {
                    continue;
                }
                let c = x[i] as u64 * y[j] as u64 % p;
                for (o, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = (*o + c * t as u64) % p;
                }
            }
        }
        out.into_iter().map(|v| v as u32).collect()
    }

    /// The two-sided inverse of a nonzero element, if it exists.
    pub fn inverse(&self, x: &[u32]) -> Option<Vec<u32>> {
        let n = self.dim();
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                self.mul(x, &e)
            })
            .collect();
        let y = FpMatrix::from_columns(self.p, n, &cols).solve(&self.one())?;
        (self.mul(&y, x) == self.one()).then_some(y)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn summary(&self) -> EigenringSummary {
        EigenringSummary {
            prime_dimension: self.dim(),
            order: self.order(),
            commutative: self.is_commutative(),
        }
    }

    /// Associativity on basis triples, the identity, and Schur.
    pub fn verify_division_ring(&self) -> Result<()> {
        let n = self.dim();
        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        let one = self.one();
        for i in 0..n {
            if self.mul(&one, &unit(i)) != unit(i) || self.mul(&unit(i), &one) != unit(i) {
                return Err(Error::Invariant("eigenring identity is not neutral".into()));
            }
            for j in 0..n {
                let ij = self.mul(&unit(i), &unit(j));
                for k in 0..n {
                    let jk = self.mul(&unit(j), &unit(k));
                    if self.mul(&ij, &unit(k)) != self.mul(&unit(i), &jk) {
                        return Err(Error::Invariant("eigenring product is not associative".into()));
                    }
                }
            }
        }
        for x in self.elements().filter(|x| x.iter().any(|&c| c != 0)) {
            if self.inverse(&x).is_none() {
                return Err(Error::Invariant(format!("eigenring element {x:?} has no inverse")));
            }
        }
        Ok(())
    }
}
