//! Finite algebraic sets: collections of non-units with a nonzero common left
//! multiple. Dependence of `d` on `Δ` means `R d + R Δ_ℓ ≠ R`; on atoms it
//! behaves like a matroid, which gives bases, rank and closure.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{ratfun::RatFun, BackendKind, FieldElement};
use crate::ore::{Factorization, SkewPoly, SkewRing};
use crate::report::IdentityCheck;

/// Duplicate-free monic non-units with their cached monic llcm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicSet {
    elems: Vec<SkewPoly>,
    llcm: SkewPoly,
}

impl AlgebraicSet {
    pub fn elements(&self) -> &[SkewPoly] {
        &self.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SkewPoly> {
        self.elems.iter()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Monic generator of `∩ R δ`; `1` for the empty set.
    pub fn llcm(&self) -> &SkewPoly {
        &self.llcm
    }

    pub fn contains(&self, f: &SkewPoly) -> bool {
        self.elems.contains(f)
    }
}

impl<'a> IntoIterator for &'a AlgebraicSet {
    type Item = &'a SkewPoly;
    type IntoIter = std::slice::Iter<'a, SkewPoly>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityClass {
    pub representative: SkewPoly,
    pub members: Vec<SkewPoly>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDecomposition {
    pub classes: Vec<SimilarityClass>,
}

impl ClassDecomposition {
    pub fn total_rank(&self) -> usize {
        self.classes.iter().map(|c| c.rank).sum()
    }
}

/// Where the atom-by-atom dependence test for `p_1 ... p_n` fires: `Some(n)`
/// when `p_n` depends on `Δ` itself, `Some(s)` when `p_s` depends on
/// `Δ^{p_{s+1} ... p_n}` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DependenceLocus {
    pub dependent: bool,
    pub locus: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDimension {
    pub representative: SkewPoly,
    pub members: Vec<SkewPoly>,
    pub dimension: usize,
}

/// `rk V(f)` next to the per-class eigenring dimensions of `Ker λ_{f,p}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDecomposition {
    pub classes: Vec<ClassDimension>,
    pub total: usize,
    pub rank: usize,
}

impl SkewRing {
    pub fn algebraic_set(&self, elems: impl IntoIterator<Item = SkewPoly>) -> Result<AlgebraicSet> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for e in elems {
            if e.is_zero() {
                return Err(Error::ZeroInput("algebraic_set"));
            }
            if self.is_unit(&e) {
                return Err(Error::UnitInput("algebraic_set"));
            }
            let m = self.monic(&e);
            if seen.insert(m.clone()) {
                out.push(m);
            }
        }
        let llcm = self.llcm_all(&out)?;
        Ok(AlgebraicSet { elems: out, llcm })
    }

    pub fn empty_set(&self) -> AlgebraicSet {
        AlgebraicSet {
            elems: Vec::new(),
            llcm: self.one(),
        }
    }

    pub fn set_llcm(&self, delta: &AlgebraicSet) -> SkewPoly {
        delta.llcm.clone()
    }

    pub fn set_union(&self, a: &AlgebraicSet, b: &AlgebraicSet) -> Result<AlgebraicSet> {
        self.algebraic_set(a.iter().chain(b.iter()).cloned())
    }

    pub fn set_intersection(&self, a: &AlgebraicSet, b: &AlgebraicSet) -> Result<AlgebraicSet> {
        self.algebraic_set(a.iter().filter(|x| b.contains(x)).cloned())
    }

    fn require_atoms(&self, delta: &AlgebraicSet, op: &'static str) -> Result<()> {
        for d in delta {
            if !self.is_atom(d)? {
                return Err(Error::NotAnAtom {
                    op,
                    poly: self.format(d),
                });
            }
        }
        Ok(())
    }

    /// `R d + R Δ_ℓ ≠ R`.
    pub fn is_dependent(&self, d: &SkewPoly, delta: &AlgebraicSet) -> Result<bool> {
        if d.is_zero() {
            return Err(Error::ZeroInput("is_dependent"));
        }
        if self.is_unit(d) {
            return Err(Error::UnitInput("is_dependent"));
        }
        Ok(self.rgcd(d, &delta.llcm)?.d != self.one())
    }

    /// `ℓ(Δ_ℓ) = Σ ℓ(δ)`.
    pub fn is_independent(&self, delta: &AlgebraicSet) -> Result<bool> {
        let mut total = 0;
        for d in delta {
            total += self.length(d)?;
        }
        Ok(self.length(&delta.llcm)? == total)
    }

    /// Greedy basis in input order.
    pub fn basis(&self, delta: &AlgebraicSet) -> Result<AlgebraicSet> {
        let mut kept = Vec::new();
        let mut llcm = self.one();
        for d in delta {
            if self.rgcd(d, &llcm)?.d == self.one() {
                llcm = self.llcm(&llcm, d)?;
                kept.push(d.clone());
            }
        }
        Ok(AlgebraicSet { elems: kept, llcm })
    }

    /// Size of any basis; defined for sets of atoms only.
    pub fn rank(&self, delta: &AlgebraicSet) -> Result<usize> {
        self.require_atoms(delta, "rank")?;
        Ok(self.basis(delta)?.len())
    }

    /// `V(f)`: the monic atoms right-dividing `f`.
    pub fn v_set(&self, f: &SkewPoly) -> Result<AlgebraicSet> {
        if f.is_zero() {
            return Err(Error::ZeroInput("v_set"));
        }
        self.require_finite("v_set")?;
        let mut atoms = Vec::new();
        for g in self.right_divisors(f)? {
            if g.degree() != Some(0) && self.is_atom(&g)? {
                atoms.push(g);
            }
        }
        self.algebraic_set(atoms)
    }

    /// The atoms dependent on `Δ`, i.e. `V(Δ_ℓ)`.
    pub fn closure(&self, delta: &AlgebraicSet) -> Result<AlgebraicSet> {
        self.require_atoms(delta, "closure")?;
        self.v_set(&delta.llcm)
    }

    /// Whether every element of `Δ` dependent on `Γ` already lies in `Γ`.
    pub fn is_full(&self, gamma: &AlgebraicSet, delta: &AlgebraicSet) -> Result<bool> {
        if !gamma.iter().all(|g| delta.contains(g)) {
            return Err(Error::NotSubset);
        }
        for d in delta {
            if !gamma.contains(d) && self.is_dependent(d, gamma)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(g, h)` with `Δ_ℓ = g h`, `h = Γ_ℓ` and `R g = ∩_{d ∈ Δ∖Γ} R d^h`,
    /// both verified.
    pub fn full_decompose(&self, delta: &AlgebraicSet, gamma: &AlgebraicSet) -> Result<(SkewPoly, SkewPoly)> {
        self.require_atoms(delta, "full_decompose")?;
        if !self.is_full(gamma, delta)? {
            return Err(Error::NotFull);
        }
        let h = gamma.llcm.clone();
        let (g, r) = self.right_divmod(&delta.llcm, &h)?;
        if !r.is_zero() {
            return Err(Error::Invariant("Γ_ℓ does not right-divide Δ_ℓ".into()));
        }
        let conjugates = delta
            .iter()
            .filter(|d| !gamma.contains(d))
            .map(|d| self.conj(d, &h))
            .collect::<Result<Vec<_>>>()?;
        if self.llcm_all(&conjugates)? != self.monic(&g) {
            return Err(Error::Invariant("cofactor is not the intersection of the conjugates".into()));
        }
        Ok((g, h))
    }

    /// `Δ^u = { monic δ^u : u ∉ R δ }`.
    pub fn set_conj(&self, delta: &AlgebraicSet, u: &SkewPoly) -> Result<AlgebraicSet> {
        if u.is_zero() {
            return Err(Error::ZeroInput("set_conj"));
        }
        let mut out = Vec::new();
        for d in delta {
            if !self.right_divides(d, u)? {
                out.push(self.conj(d, u)?);
            }
        }
        self.algebraic_set(out)
    }

    /// Dependence of `p_1 ... p_n` on `Δ`, computed directly and through the
    /// atoms; the two must agree.
    pub fn dependence_via_atoms(&self, fact: &Factorization, delta: &AlgebraicSet) -> Result<DependenceLocus> {
        let n = fact.atoms.len();
        if n == 0 {
            return Err(Error::UnitInput("dependence_via_atoms"));
        }
        for a in &fact.atoms {
            if !self.is_monic(a) || !self.is_atom(a)? {
                return Err(Error::InvalidFactorization);
            }
        }
        let f = fact.expand(self);
        let dependent = self.is_dependent(&f, delta)?;
        let mut locus = None;
        if self.is_dependent(&fact.atoms[n - 1], delta)? {
            locus = Some(n);
        } else {
            let mut tail = fact.atoms[n - 1].clone();
            for s in (1..n).rev() {
                let shifted = self.set_conj(delta, &tail)?;
                if self.is_dependent(&fact.atoms[s - 1], &shifted)? {
                    locus = Some(s);
                    break;
                }
                tail = self.mul(&fact.atoms[s - 1], &tail);
            }
        }
        if locus.is_some() != dependent {
            return Err(Error::Invariant("atom-wise dependence disagrees with the direct test".into()));
        }
        Ok(DependenceLocus { dependent, locus })
    }

    /// Partition into similarity classes, in order of first appearance.
    pub fn class_decompose(&self, delta: &AlgebraicSet) -> Result<ClassDecomposition> {
        self.require_atoms(delta, "class_decompose")?;
        let mut groups: Vec<Vec<SkewPoly>> = Vec::new();
        'outer: for d in delta {
            for g in groups.iter_mut() {
                if self.is_similar(&g[0], d)?.is_some() {
                    g.push(d.clone());
                    continue 'outer;
                }
            }
            groups.push(vec![d.clone()]);
        }
        let classes = groups
            .into_iter()
            .map(|members| {
                let set = self.algebraic_set(members.iter().cloned())?;
                Ok(SimilarityClass {
                    representative: members[0].clone(),
                    rank: self.basis(&set)?.len(),
                    members,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassDecomposition { classes })
    }

    /// Per-class `dim_{C(p)} Ker λ_{f,p}` over the classes met by `V(f)`.
    pub fn rank_decomposition(&self, f: &SkewPoly) -> Result<RankDecomposition> {
        let v = self.v_set(f)?;
        let classes = self
            .class_decompose(&v)?
            .classes
            .into_iter()
            .map(|c| {
                Ok(ClassDimension {
                    dimension: self.dim_over_eigenring(f, &c.representative)?,
                    representative: c.representative,
                    members: c.members,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RankDecomposition {
            total: classes.iter().map(|c| c.dimension).sum(),
            rank: self.basis(&v)?.len(),
            classes,
        })
    }

    /// Union and intersection identities for two algebraic sets of atoms.
    pub fn rank_theorems_check(&self, delta: &AlgebraicSet, gamma: &AlgebraicSet) -> Result<Vec<IdentityCheck>> {
        self.require_atoms(delta, "rank_theorems_check")?;
        self.require_atoms(gamma, "rank_theorems_check")?;
        let union = self.set_union(delta, gamma)?;
        let (cl_d, cl_g) = (self.closure(delta)?, self.closure(gamma)?);
        let meet = self.set_intersection(&cl_d, &cl_g)?;
        let (rk_d, rk_g) = (self.rank(delta)?, self.rank(gamma)?);
        let (rk_u, rk_m) = (self.rank(&union)?, self.rank(&meet)?);
        let meet_names: Vec<String> = meet.iter().map(|m| self.format(m)).collect();

        let (b, b2) = (self.basis(delta)?, self.basis(gamma)?);
        let joined = self.set_union(&b, &b2)?;
        let joined_independent = joined.len() == b.len() + b2.len() && self.is_independent(&joined)?;
        let v_gamma = self.v_set(&gamma.llcm)?;
        let v_meet_empty = self.v_set(&delta.llcm)?.iter().all(|p| !v_gamma.contains(p));

        Ok(vec![
            IdentityCheck::new(
                "rank_of_union",
                format!("{rk_d} + {rk_g}"),
                format!("{rk_u} + {rk_m}"),
            )
            .with_equal(rk_d + rk_g == rk_u + rk_m)
            .with_witnesses(meet_names.clone()),
            IdentityCheck::new(
                "llcm_of_union",
                self.format(&union.llcm),
                self.format(&self.llcm(&delta.llcm, &gamma.llcm)?),
            ),
            IdentityCheck::new("union_rank_subadditive", rk_u <= rk_d + rk_g, true),
            IdentityCheck::new(
                "llcm_of_closure_meet",
                self.format(&meet.llcm),
                self.format(&self.rgcd(&delta.llcm, &gamma.llcm)?.d),
            )
            .with_witnesses(meet_names),
            IdentityCheck::new("disjoint_closures_iff_joint_basis", meet.is_empty(), joined_independent),
            IdentityCheck::new("disjoint_v_sets_iff_rank_additive", v_meet_empty, rk_u == rk_d + rk_g),
        ])
    }

    /// Whether the elements have a nonzero common right multiple of degree
    /// at most `bound`.
    ///
    /// With `S` onto this is read off the right lcm. On `F_p(x)` it is decided
    /// in the right `K`-space `R_{≤B}`, which has basis `x^k t^i` (`k < 2^i`)
    /// because `t^i c = S^i(c) t^i` and `[K : S^i(K)] = 2^i`.
    pub fn is_right_algebraic(&self, elems: &[SkewPoly], bound: usize) -> Result<bool> {
        if elems.iter().any(|e| e.is_zero()) {
            return Err(Error::ZeroInput("is_right_algebraic"));
        }
        if self.field().endo_is_bijective() {
            let m = self.rlcm_all(elems)?;
            return Ok(m.degree().unwrap() <= bound);
        }
        debug_assert_eq!(self.field().kind(), BackendKind::RationalFunction);
        let p = self.field().characteristic();
        let dim = (1usize << (bound + 1)) - 1;
        let coords = |f: &SkewPoly| -> Vec<RatFun> {
            let mut v = Vec::with_capacity(dim);
            for i in 0..=bound {
                let parts = match f.coeff(i) {
                    Some(FieldElement::RatFun(a)) => a.decompose_over_power(1 << i, p),
                    _ => vec![RatFun::zero(); 1 << i],
                };
                v.extend(parts);
            }
            v
        };
        let mut current: Option<Vec<Vec<RatFun>>> = None;
        for delta in elems {
            let d = delta.degree().unwrap();
            if d > bound {
                return Ok(false);
            }
            let mut gens = Vec::new();
            for j in 0..=(bound - d) {
                for k in 0..(1usize << j) {
                    let mut xk = vec![0u32; k + 1];
                    xk[k] = 1;
                    let mono = self.monomial(FieldElement::RatFun(RatFun::new(xk, vec![1], p)), j);
                    gens.push(coords(&self.mul(delta, &mono)));
                }
            }
            current = Some(match current {
                None => gens,
                Some(prev) => ratfun_intersect(&prev, &gens, p),
            });
            if current.as_ref().is_some_and(|c| c.is_empty()) {
                return Ok(false);
            }
        }
        Ok(current.is_some_and(|c| !c.is_empty()))
    }
}

/// Spanning set of `span(a) ∩ span(b)` over `F_p(x)`.
fn ratfun_intersect(a: &[Vec<RatFun>], b: &[Vec<RatFun>], p: u32) -> Vec<Vec<RatFun>> {
    let n = a.first().or(b.first()).map_or(0, |v| v.len());
    // columns [a | -b]; kernel vectors (x, y) give a x = b y
    let cols: Vec<Vec<RatFun>> = a
        .iter()
        .cloned()
        .chain(b.iter().map(|v| v.iter().map(|c| c.neg(p)).collect()))
        .collect();
    let kernel = ratfun_kernel(&cols, n, p);
    kernel
        .into_iter()
        .map(|x| {
            let mut v = vec![RatFun::zero(); n];
            for (j, col) in a.iter().enumerate() {
                if x[j].is_zero() {
                    continue;
                }
                for (vi, c) in v.iter_mut().zip(col) {
                    *vi = vi.add(&c.mul(&x[j], p), p);
                }
            }
            v
        })
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .collect()
}

/// Null space of the matrix with the given columns, by Gauss-Jordan.
fn ratfun_kernel(cols: &[Vec<RatFun>], rows: usize, p: u32) -> Vec<Vec<RatFun>> {
    let ncols = cols.len();
    let mut m: Vec<Vec<RatFun>> = (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv(p).unwrap();
        for j in c..ncols {
            m[r][j] = m[r][j].mul(&inv, p);
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..ncols {
                let sub = factor.mul(&m[r][j], p).neg(p);
                m[i][j] = m[i][j].add(&sub, p);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![RatFun::zero(); ncols];
            v[free] = RatFun::constant(1, p);
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = m[row][free].neg(p);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::TwistedField;

    fn gf4() -> SkewRing {
        SkewRing::new("gf(2,2)".parse().unwrap())
    }

    fn set(r: &SkewRing, elems: &[&str]) -> AlgebraicSet {
        r.algebraic_set(elems.iter().map(|s| r.parse(s).unwrap())).unwrap()
    }

    fn names(r: &SkewRing, s: &AlgebraicSet) -> Vec<String> {
        let mut v: Vec<String> = s.iter().map(|f| r.format(f)).collect();
        v.sort();
        v
    }

    #[test]
    fn construction_normalizes_and_rejects() {
        let r = gf4();
        let s = set(&r, &["w*t + 1", "t + w^2", "t+w^2"]);
        assert_eq!(s.len(), 1);
        assert_eq!(r.algebraic_set([r.zero()]), Err(Error::ZeroInput("algebraic_set")));
        assert_eq!(r.algebraic_set([r.one()]), Err(Error::UnitInput("algebraic_set")));
        assert_eq!(r.empty_set().llcm(), &r.one());
    }

    #[test]
    fn llcm_basis_rank() {
        let r = gf4();
        let s = set(&r, &["t+1", "t+w", "t+w^2"]);
        assert_eq!(r.set_llcm(&s), r.parse("t^2+1").unwrap());
        assert_eq!(names(&r, &r.basis(&s).unwrap()), ["t + 1", "t + w"]);
        assert_eq!(r.rank(&s).unwrap(), 2);
        assert!(!r.is_independent(&s).unwrap());
        assert!(r.is_independent(&set(&r, &["t+1", "t+w"])).unwrap());
        let bad = set(&r, &["t^2+1"]);
        assert!(matches!(r.rank(&bad), Err(Error::NotAnAtom { .. })));
    }

    #[test]
    fn v_sets_and_closure() {
        let r = gf4();
        let v = r.v_set(&r.parse("t^2+1").unwrap()).unwrap();
        assert_eq!(names(&r, &v), ["t + (w+1)", "t + 1", "t + w"]);
        let v = r.v_set(&r.parse("(t+w)*(t+1)").unwrap()).unwrap();
        assert_eq!(names(&r, &v), ["t + 1"]);
        let cl = r.closure(&set(&r, &["t+1", "t+w"])).unwrap();
        assert_eq!(cl.len(), 3);
        assert_eq!(r.v_set(&r.zero()), Err(Error::ZeroInput("v_set")));
    }

    #[test]
    fn fullness_and_decomposition() {
        let r = gf4();
        let delta = set(&r, &["t+1", "t+w", "t+w^2"]);
        assert!(r.is_full(&set(&r, &["t+1"]), &delta).unwrap());
        let gamma = set(&r, &["t+1", "t+w"]);
        assert!(!r.is_full(&gamma, &delta).unwrap());
        assert_eq!(r.full_decompose(&delta, &gamma), Err(Error::NotFull));
        assert_eq!(r.is_full(&set(&r, &["t"]), &delta), Err(Error::NotSubset));

        let delta = set(&r, &["t+1", "t"]);
        let gamma = set(&r, &["t+1"]);
        assert!(r.is_full(&gamma, &delta).unwrap());
        let (g, h) = r.full_decompose(&delta, &gamma).unwrap();
        assert_eq!(r.mul(&g, &h), r.set_llcm(&delta));
        assert_eq!(h, r.parse("t+1").unwrap());
    }

    #[test]
    fn conjugate_sets_and_atomwise_dependence() {
        let r = gf4();
        let shifted = r.set_conj(&set(&r, &["t+w"]), &r.parse("t+1").unwrap()).unwrap();
        assert_eq!(names(&r, &shifted), ["t + 1"]);
        // u already in R δ drops out
        assert!(r.set_conj(&set(&r, &["t+1"]), &r.parse("t^2+1").unwrap()).unwrap().is_empty());

        let fact = Factorization {
            unit: r.field().one(),
            atoms: vec![r.parse("t+1").unwrap(), r.parse("t+1").unwrap()],
        };
        let loc = r.dependence_via_atoms(&fact, &set(&r, &["t+w"])).unwrap();
        assert_eq!(loc, DependenceLocus { dependent: true, locus: Some(1) });
        let loc = r.dependence_via_atoms(&fact, &set(&r, &["t"])).unwrap();
        assert_eq!(loc, DependenceLocus { dependent: false, locus: None });
    }

    #[test]
    fn similarity_classes_and_rank_decomposition() {
        let r = gf4();
        let cd = r.class_decompose(&set(&r, &["t+1", "t+w", "t"])).unwrap();
        assert_eq!(cd.classes.len(), 2);
        assert_eq!(cd.classes[0].members.len(), 2);
        let rd = r.rank_decomposition(&r.parse("(t^2+1)*t").unwrap()).unwrap();
        assert_eq!(rd.total, rd.rank);
    }

    #[test]
    fn rank_identities_hold_on_small_sets() {
        let r = gf4();
        let d = set(&r, &["t+1", "t+w"]);
        let g = set(&r, &["t+w^2", "t"]);
        for c in r.rank_theorems_check(&d, &g).unwrap() {
            assert!(c.equal, "{c:?}");
        }
    }

    #[test]
    fn right_algebraic_over_function_field() {
        let r = SkewRing::new(TwistedField::rational_function(2).unwrap());
        let elems = [r.t(), r.parse("x*t").unwrap()];
        assert!(!r.is_right_algebraic(&elems, 6).unwrap());
        // the left side is fine: t is a common left multiple
        assert_eq!(r.llcm(&elems[0], &elems[1]).unwrap(), r.t());
        let same = [r.t(), r.parse("t^2").unwrap()];
        assert!(r.is_right_algebraic(&same, 2).unwrap());
        assert!(!r.is_right_algebraic(&same, 1).unwrap());
        let g = gf4();
        assert!(g.is_right_algebraic(&[g.parse("t+1").unwrap(), g.parse("t+w").unwrap()], 2).unwrap());
    }
}
