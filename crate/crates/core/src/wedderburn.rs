//! Fully reducible elements: `Rf` is an intersection of maximal left ideals
//! `Rp_i`, equivalently `rk V(f) = ℓ(f)`, equivalently `R/Rf` is semisimple.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::FpMatrix;
use crate::ore::{SkewPoly, SkewRing};
use crate::report::IdentityCheck;

/// A boolean outcome with the polynomials that support it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witnesses: Vec<SkewPoly>,
}

impl Verdict {
    fn new(holds: bool, witnesses: Vec<SkewPoly>) -> Self {
        Verdict { holds, witnesses }
    }
}

/// Outcome of a search that can only confirm: `conclusive` is false when
/// nothing was found within the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundedVerdict {
    pub holds: bool,
    pub conclusive: bool,
}

/// All eight characterizations of full reducibility, evaluated separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnReport {
    pub element: SkewPoly,
    pub length: usize,
    pub rank: usize,
    /// `Rf = ∩ R p_i` for a basis of `V(f)`; witness: the atoms.
    pub intersection: Verdict,
    pub rank_equals_length: bool,
    /// `ℓ(f) = Σ dim_{C(q)} Ker λ_{f,q}` over the classes met by `V(f)`.
    pub eigenring_dimensions: bool,
    /// `R/Rf` is a direct sum of simple modules `R/Rp_i`; witness: the `p_i`.
    pub direct_sum: Verdict,
    /// Every factor is fully reducible; witness: an offending factor.
    pub factors: Verdict,
    pub neighbouring_factors: Verdict,
    pub neighbouring_atoms: Verdict,
    /// `V(f) ⊆ V(g) ⟹ g ∈ Rf` for monic `g` up to the degree bound;
    /// witness: a counterexample `g`.
    pub divisibility: Verdict,
    pub consistent: bool,
}

impl WedderburnReport {
    pub fn verdicts(&self) -> [(&'static str, bool); 8] {
        [
            ("intersection_of_atoms", self.intersection.holds),
            ("rank_equals_length", self.rank_equals_length),
            ("eigenring_dimensions", self.eigenring_dimensions),
            ("direct_sum_of_simples", self.direct_sum.holds),
            ("all_factors", self.factors.holds),
            ("neighbouring_factors", self.neighbouring_factors.holds),
            ("neighbouring_atomic_factors", self.neighbouring_atoms.holds),
            ("v_set_divisibility", self.divisibility.holds),
        ]
    }

    pub fn fully_reducible(&self) -> bool {
        self.rank_equals_length
    }
}

/// `{f : deg f ≤ bound, a f ∈ Ra}` as an `F_p`-space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealizerSpace {
    pub generator: SkewPoly,
    pub bound: usize,
    pub basis: Vec<SkewPoly>,
}

impl IdealizerSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Characterizations of `ab` being fully reducible in terms of `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductReport {
    pub a: SkewPoly,
    pub b: SkewPoly,
    pub bound: usize,
    pub product_reducible: bool,
    pub direct_sum: bool,
    pub two_sided_unit: BoundedVerdict,
    /// Witness: some `p ∈ V(a)` with `p b` not fully reducible.
    pub every_atom_times_b: Verdict,
    pub basis_times_b: Verdict,
    /// Witness: `p, q` with `p q` not fully reducible.
    pub atom_pairs: Verdict,
    pub idealizer_contained: BoundedVerdict,
    pub consistent: bool,
}

impl SkewRing {
    /// `rk V(f) = ℓ(f)`. Units count as fully reducible.
    pub fn is_fully_reducible(&self, f: &SkewPoly) -> Result<bool> {
        if f.is_zero() {
            return Err(Error::ZeroInput("is_fully_reducible"));
        }
        let key = self.monic(f);
        if let Some(&v) = self.caches.reducible.read().unwrap().get(&key) {
            return Ok(v);
        }
        let v = self.rank_and_length(&key)?;
        let holds = v.0 == v.1;
        self.caches.reducible.write().unwrap().insert(key, holds);
        Ok(holds)
    }

    fn rank_and_length(&self, f: &SkewPoly) -> Result<(usize, usize)> {
        let length = self.length(f)?;
        if length == 0 {
            return Ok((0, 0));
        }
        Ok((self.basis(&self.v_set(f)?)?.len(), length))
    }

    /// A basis `p_1..p_n` of `V(f)` with `Rf = ∩ R p_i`, `n = ℓ(f)`.
    pub fn minimal_decomposition(&self, f: &SkewPoly) -> Result<Vec<SkewPoly>> {
        let (rank, length) = self.rank_and_length(&self.monic(f))?;
        if rank != length {
            return Err(Error::NotFullyReducible { rank, length });
        }
        if length == 0 {
            return Ok(Vec::new());
        }
        let basis = self.basis(&self.v_set(f)?)?;
        if basis.llcm() != &self.monic(f) {
            return Err(Error::Invariant("basis of V(f) does not intersect to Rf".into()));
        }
        Ok(basis.elements().to_vec())
    }

    /// Atoms `p'_i` with `fR = ∩ p'_i R`, built from `f = p'_i g_i` where
    /// `R g_i = ∩_{j≠i} R p_j`; each `p'_i` is similar to `p_i`. Returned
    /// right-monic, in the order of [`SkewRing::minimal_decomposition`].
    pub fn right_decomposition(&self, f: &SkewPoly) -> Result<Vec<SkewPoly>> {
        if !self.field().endo_is_bijective() {
            return Err(Error::NotComputable {
                op: "right_decomposition",
                reason: "the twist is not onto".into(),
            });
        }
        let left = self.minimal_decomposition(f)?;
        let mut out = Vec::with_capacity(left.len());
        for i in 0..left.len() {
            let others: Vec<&SkewPoly> = left.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p).collect();
            let g = self.llcm_all(others)?;
            let (q, r) = self.right_divmod(f, &g)?;
            if !r.is_zero() {
                return Err(Error::Invariant("g_i does not right-divide f".into()));
            }
            let q = self.right_monic(&q)?;
            if !self.is_atom(&q)? || self.is_similar(&q, &left[i])?.is_none() {
                return Err(Error::Invariant("right factor is not an atom similar to its partner".into()));
            }
            out.push(q);
        }
        if !out.is_empty() {
            let m = self.rlcm_all(&out)?;
            let total: usize = out.iter().map(|q| q.degree().unwrap()).sum();
            if self.right_monic(&m)? != self.right_monic(f)? || total != f.degree().unwrap() {
                return Err(Error::Invariant("right ideals do not intersect irredundantly to fR".into()));
            }
        }
        Ok(out)
    }

    /// Every monic non-unit `g` with `f = p g q`.
    pub fn factors(&self, f: &SkewPoly) -> Result<Vec<SkewPoly>> {
        let mut seen = BTreeSet::new();
        for h in self.right_divisors(f)? {
            let (c, _) = self.right_divmod(f, &h)?;
            for g in self.right_divisors(&c)? {
                if g.degree() != Some(0) {
                    seen.insert(g);
                }
            }
        }
        let mut out: Vec<SkewPoly> = seen.into_iter().collect();
        out.sort_by_key(|g| (g.degree(), self.monic_index(g)));
        Ok(out)
    }

    /// Monic atoms `q` with `f ∈ q R`.
    pub fn left_atoms(&self, f: &SkewPoly) -> Result<Vec<SkewPoly>> {
        let mut out = Vec::new();
        for q in self.left_divisors(f)? {
            if q.degree() != Some(0) && self.is_atom(&q)? {
                out.push(q);
            }
        }
        Ok(out)
    }

    /// Simple summands of the socle of `R/Rf`, chosen so that their sum is
    /// direct, and whether they fill the module. A simple submodule is
    /// `R u / R f` with `f = q u`, `q` an atom; the sum of a family is
    /// `R·rgcd(u's) / Rf`, which fixes its dimension.
    pub fn socle_decomposition(&self, f: &SkewPoly) -> Result<(Vec<SkewPoly>, bool)> {
        let n = f.degree().ok_or(Error::ZeroInput("socle_decomposition"))?;
        let mut chosen = Vec::new();
        let mut g = self.monic(f);
        let mut used = 0;
        for q in self.left_atoms(f)? {
            let (u, r) = self.left_divmod(f, &q)?;
            debug_assert!(r.is_zero());
            let next = self.rgcd(&g, &u)?.d;
            let grew = n - next.degree().unwrap();
            if grew == used + q.degree().unwrap() {
                chosen.push(q);
                used = grew;
                g = next;
            }
        }
        Ok((chosen, used == n))
    }

    /// All eight characterizations, each computed on its own terms.
    pub fn wedderburn_report(&self, f: &SkewPoly) -> Result<WedderburnReport> {
        if f.is_zero() {
            return Err(Error::ZeroInput("wedderburn_report"));
        }
        let f = self.monic(f);
        let n = f.degree().unwrap();
        let (rank, length) = self.rank_and_length(&f)?;
        let v = if n == 0 { self.empty_set() } else { self.v_set(&f)? };
        let basis = self.basis(&v)?;

        let intersection = Verdict::new(basis.llcm() == &f, basis.elements().to_vec());

        let class_total = if n == 0 { 0 } else { self.rank_decomposition(&f)?.total };

        let direct_sum = if n == 0 {
            Verdict::new(true, Vec::new())
        } else {
            let (summands, full) = self.socle_decomposition(&f)?;
            Verdict::new(full, summands)
        };

        let mut bad_factor = None;
        let mut bad_pair = None;
        let mut bad_atoms = None;
        for g in self.factors(&f)? {
            if self.is_fully_reducible(&g)? {
                continue;
            }
            let len = self.length(&g)?;
            bad_factor.get_or_insert_with(|| g.clone());
            if len >= 2 {
                bad_pair.get_or_insert_with(|| g.clone());
            }
            if len == 2 {
                bad_atoms.get_or_insert_with(|| g.clone());
            }
        }
        let as_verdict = |bad: Option<SkewPoly>| Verdict::new(bad.is_none(), bad.into_iter().collect());

        let divisibility = as_verdict(self.divisibility_counterexample(&f, &v, n + 1)?);

        let mut report = WedderburnReport {
            length,
            rank,
            intersection,
            rank_equals_length: rank == length,
            eigenring_dimensions: class_total == length,
            direct_sum,
            factors: as_verdict(bad_factor),
            neighbouring_factors: as_verdict(bad_pair),
            neighbouring_atoms: as_verdict(bad_atoms),
            divisibility,
            consistent: false,
            element: f,
        };
        let vs = report.verdicts();
        report.consistent = vs.iter().all(|(_, b)| *b == vs[0].1);
        Ok(report)
    }

    /// First monic `g` of degree `≤ bound` with `V(f) ⊆ V(g)` and `g ∉ Rf`.
    /// Such `g` are exactly the left multiples of `V(f)_ℓ`, so the search
    /// runs over `c · V(f)_ℓ` with `c` monic.
    fn divisibility_counterexample(
        &self,
        f: &SkewPoly,
        v: &crate::algset::AlgebraicSet,
        bound: usize,
    ) -> Result<Option<SkewPoly>> {
        let l = v.llcm();
        let dl = l.degree().unwrap();
        for d in 0..=bound.saturating_sub(dl) {
            for c in self.enumerate_monic(d)? {
                let g = self.mul(&c, l);
                if !self.right_divides(f, &g)? {
                    return Ok(Some(g));
                }
            }
        }
        Ok(None)
    }

    /// `F_p`-basis of the idealizer slice `{f : deg f ≤ bound, a f ∈ Ra}`.
    pub fn idealizer(&self, a: &SkewPoly, bound: usize) -> Result<IdealizerSpace> {
        self.require_finite("idealizer")?;
        let m = a.degree().ok_or(Error::ZeroInput("idealizer"))?;
        let basis = self.prime_kernel(bound + 1, m.max(1), |f| self.right_rem(&self.mul(a, f), a))?;
        Ok(IdealizerSpace {
            generator: a.clone(),
            bound,
            basis,
        })
    }

    /// `(x, y)` with `x a + b y = c` and `deg x, deg y ≤ bound`, if any.
    pub fn two_sided_solution(
        &self,
        a: &SkewPoly,
        b: &SkewPoly,
        c: &SkewPoly,
        bound: usize,
    ) -> Result<Option<(SkewPoly, SkewPoly)>> {
        self.require_finite("in_two_sided_sum")?;
        let (da, db) = match (a.degree(), b.degree()) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::ZeroInput("in_two_sided_sum")),
        };
        let terms = bound + da.max(db) + 1;
        let terms = terms.max(c.degree().map_or(0, |d| d + 1));
        let e = self.field().prime_degree().unwrap() as usize;
        let half = self.prime_basis(bound + 1);
        let cols: Vec<Vec<u32>> = half
            .iter()
            .map(|x| self.prime_coords(&self.mul(x, a), terms))
            .chain(half.iter().map(|y| self.prime_coords(&self.mul(b, y), terms)))
            .collect();
        let m = FpMatrix::from_columns(self.field().characteristic(), terms * e, &cols);
        let Some(sol) = m.solve(&self.prime_coords(c, terms)) else {
            return Ok(None);
        };
        let k = (bound + 1) * e;
        Ok(Some((self.from_prime_coords(&sol[..k]), self.from_prime_coords(&sol[k..]))))
    }

    /// `1 ∈ Ra + bR` with witnesses of degree at most `bound`.
    pub fn in_two_sided_sum(&self, a: &SkewPoly, b: &SkewPoly, bound: usize) -> Result<bool> {
        Ok(self.two_sided_solution(a, b, &self.one(), bound)?.is_some())
    }

    /// `V'(b)`: monic atoms `q` with `b ∈ q R`.
    pub fn v_prime_set(&self, b: &SkewPoly) -> Result<Vec<SkewPoly>> {
        if !self.field().endo_is_bijective() {
            return Err(Error::NotComputable {
                op: "v_prime_set",
                reason: "left division needs the twist to be onto".into(),
            });
        }
        self.left_atoms(b)
    }

    /// The seven characterizations of `ab` being fully reducible. The
    /// searches for the two-sided sum and the idealizer use `bound`.
    pub fn product_check(&self, a: &SkewPoly, b: &SkewPoly, bound: usize) -> Result<ProductReport> {
        for x in [a, b] {
            if x.is_zero() {
                return Err(Error::ZeroInput("product_check"));
            }
            if self.is_unit(x) {
                return Err(Error::UnitInput("product_check"));
            }
        }
        let ab = self.mul(a, b);
        let factors_ok = self.is_fully_reducible(a)? && self.is_fully_reducible(b)?;
        let product_reducible = self.is_fully_reducible(&ab)?;

        let direct_sum = factors_ok && self.is_direct_sum(&ab, a, b)?;

        let two_sided_unit = if factors_ok {
            let found = self.in_two_sided_sum(a, b, bound)?;
            BoundedVerdict { holds: found, conclusive: found }
        } else {
            BoundedVerdict { holds: false, conclusive: true }
        };

        let va = self.v_set(a)?;
        let mut bad_atom = None;
        if factors_ok {
            for p in &va {
                if !self.is_fully_reducible(&self.mul(p, b))? {
                    bad_atom = Some(p.clone());
                    break;
                }
            }
        }
        let every_atom_times_b = Verdict::new(factors_ok && bad_atom.is_none(), bad_atom.into_iter().collect());

        let mut bad_basis = None;
        if factors_ok {
            for p in self.basis(&va)?.iter() {
                if !self.is_fully_reducible(&self.mul(p, b))? {
                    bad_basis = Some(p.clone());
                    break;
                }
            }
        }
        let basis_times_b = Verdict::new(factors_ok && bad_basis.is_none(), bad_basis.into_iter().collect());

        let mut bad_pair = None;
        if factors_ok {
            let vb = self.v_prime_set(b)?;
            'outer: for p in &va {
                for q in &vb {
                    if !self.is_fully_reducible(&self.mul(p, q))? {
                        bad_pair = Some(vec![p.clone(), q.clone()]);
                        break 'outer;
                    }
                }
            }
        }
        let atom_pairs = Verdict::new(factors_ok && bad_pair.is_none(), bad_pair.unwrap_or_default());

        let idealizer_contained = if factors_ok {
            let ideal = self.idealizer(a, bound)?;
            let mut all = true;
            for c in &ideal.basis {
                if self.two_sided_solution(a, b, c, bound)?.is_none() {
                    all = false;
                    break;
                }
            }
            // 1 lies in every idealizer, so success here settles the question
            BoundedVerdict { holds: all, conclusive: all }
        } else {
            BoundedVerdict { holds: false, conclusive: true }
        };

        let exact = [direct_sum, every_atom_times_b.holds, basis_times_b.holds, atom_pairs.holds];
        let bounded = [two_sided_unit, idealizer_contained];
        let consistent = exact.iter().all(|&x| x == product_reducible)
            && bounded.iter().all(|v| !v.conclusive || v.holds == product_reducible);
        Ok(ProductReport {
            a: a.clone(),
            b: b.clone(),
            bound,
            product_reducible,
            direct_sum,
            two_sided_unit,
            every_atom_times_b,
            basis_times_b,
            atom_pairs,
            idealizer_contained,
            consistent,
        })
    }

    /// `R/Rf ≅ R/Ra ⊕ R/Rb` for fully reducible `a, b`: the right side is
    /// semisimple, so this holds iff `R/Rf` is semisimple with the same
    /// multiplicity `dim Hom(R/Rp, -)` for every simple `R/Rp` involved.
    fn is_direct_sum(&self, f: &SkewPoly, a: &SkewPoly, b: &SkewPoly) -> Result<bool> {
        if !self.socle_decomposition(f)?.1 {
            return Ok(false);
        }
        let mut reps: Vec<SkewPoly> = Vec::new();
        for x in [f, a, b] {
            for q in self.left_atoms(x)? {
                let mut known = false;
                for r in &reps {
                    if self.is_similar(r, &q)?.is_some() {
                        known = true;
                        break;
                    }
                }
                if !known {
                    reps.push(q);
                }
            }
        }
        for p in &reps {
            let lhs = self.hom_space(p, f)?.dim();
            let rhs = self.hom_space(p, a)?.dim() + self.hom_space(p, b)?.dim();
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the atom `q` lies in `I_a`, i.e. `Rp ∩ Ra = R q a` for some
    /// atom `p`. Such `p` are exactly the atoms of `V(qa)` outside `V(a)`.
    pub fn in_i_a(&self, q: &SkewPoly, a: &SkewPoly) -> Result<bool> {
        let qa = self.mul(q, a);
        let va = self.v_set(a)?;
        Ok(self.v_set(&qa)?.iter().any(|p| !va.contains(p)))
    }

    /// `I_a` restricted to atoms `p` of degree at most `bound`.
    pub fn i_a_set(&self, a: &SkewPoly, bound: usize) -> Result<crate::algset::AlgebraicSet> {
        if a.is_zero() {
            return Err(Error::ZeroInput("i_a_set"));
        }
        let mut out = Vec::new();
        for d in 1..=bound {
            for p in self.enumerate_atoms(d)?.iter() {
                if self.right_divides(p, a)? {
                    continue;
                }
                let q = self.conj(p, a)?;
                if !self.is_unit(&q) && self.is_atom(&q)? {
                    out.push(q);
                }
            }
        }
        self.algebraic_set(out)
    }

    /// `rk V(ba) = rk V(a) + rk(I_a ∩ V(b))`.
    pub fn product_rank_check(&self, b: &SkewPoly, a: &SkewPoly) -> Result<IdentityCheck> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroInput("product_rank_check"));
        }
        let rank_of = |f: &SkewPoly| -> Result<usize> {
            if self.is_unit(f) {
                Ok(0)
            } else {
                Ok(self.basis(&self.v_set(f)?)?.len())
            }
        };
        let lhs = rank_of(&self.mul(b, a))?;
        let ra = rank_of(a)?;
        let mut meet = Vec::new();
        if !self.is_unit(b) {
            for q in &self.v_set(b)? {
                if self.in_i_a(q, a)? {
                    meet.push(q.clone());
                }
            }
        }
        let meet = self.algebraic_set(meet)?;
        let rm = self.basis(&meet)?.len();
        Ok(IdentityCheck::new("rank_of_product", lhs, format!("{ra} + {rm}"))
            .with_equal(lhs == ra + rm)
            .with_witnesses(meet.iter().map(|q| self.format(q)).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> SkewRing {
        SkewRing::new("gf(2,2)".parse().unwrap())
    }

    fn p(r: &SkewRing, s: &str) -> SkewPoly {
        r.parse(s).unwrap()
    }

    #[test]
    fn full_reducibility_examples() {
        let r = gf4();
        assert!(r.is_fully_reducible(&p(&r, "t^2+1")).unwrap());
        assert!(r.is_fully_reducible(&p(&r, "t^2+w")).unwrap());
        assert!(!r.is_fully_reducible(&p(&r, "(t+w)*(t+1)")).unwrap());
        assert_eq!(r.minimal_decomposition(&p(&r, "t^2+1")).unwrap(), [p(&r, "t+1"), p(&r, "t+w")]);
        assert_eq!(
            r.minimal_decomposition(&p(&r, "(t+w)*(t+1)")),
            Err(Error::NotFullyReducible { rank: 1, length: 2 })
        );
        let c = SkewRing::new("gf(5,1,frob=0)".parse().unwrap());
        assert_eq!(
            c.minimal_decomposition(&p(&c, "t^2-1")).unwrap(),
            [p(&c, "t+1"), p(&c, "t-1")]
        );
    }

    #[test]
    fn right_decomposition_examples() {
        let r = gf4();
        let f = p(&r, "t^2+1");
        let right = r.right_decomposition(&f).unwrap();
        assert_eq!(right.len(), 2);
        for q in &right {
            assert_eq!(q.degree(), Some(1));
            assert!(r.left_divides(q, &f).unwrap());
        }
        let atom = p(&r, "t^2+w");
        assert_eq!(r.right_decomposition(&atom).unwrap(), [r.right_monic(&atom).unwrap()]);
    }

    #[test]
    fn reports_agree_on_examples() {
        let r = gf4();
        let good = r.wedderburn_report(&p(&r, "t^2+1")).unwrap();
        assert!(good.consistent && good.fully_reducible());
        assert_eq!(good.direct_sum.witnesses.len(), 2);
        let bad = r.wedderburn_report(&p(&r, "(t+w)*(t+1)")).unwrap();
        assert!(bad.consistent && !bad.fully_reducible());
        assert_eq!(bad.divisibility.witnesses, [p(&r, "t+1")]);
    }

    #[test]
    fn idealizer_examples() {
        let r = gf4();
        let i = r.idealizer(&p(&r, "t+1"), 0).unwrap();
        assert_eq!(i.basis, [r.one()]);
        assert_eq!(r.idealizer(&p(&r, "t"), 1).unwrap().dim(), 4);
        let a = p(&r, "t^2+w");
        let slice = r.idealizer(&a, 2).unwrap();
        let coords: Vec<Vec<u32>> = slice.basis.iter().map(|f| r.prime_coords(f, 3)).collect();
        let m = FpMatrix::from_columns(2, 6, &coords);
        let mut with_a = coords.clone();
        with_a.push(r.prime_coords(&a, 3));
        assert_eq!(FpMatrix::from_columns(2, 6, &with_a).rank(), m.rank());
    }

    #[test]
    fn two_sided_sum_examples() {
        let r = gf4();
        let a = p(&r, "t+1");
        let (x, y) = r.two_sided_solution(&a, &a, &r.one(), 0).unwrap().unwrap();
        assert_eq!(r.add(&r.mul(&x, &a), &r.mul(&a, &y)), r.one());
        let w = p(&r, "w");
        assert!(r.in_two_sided_sum(&w, &a, 0).unwrap());
    }

    #[test]
    fn product_check_examples() {
        let r = gf4();
        let a = p(&r, "t+1");
        let rep = r.product_check(&a, &a, 2).unwrap();
        assert!(rep.consistent && rep.product_reducible && rep.direct_sum);
        assert!(rep.two_sided_unit.holds && rep.idealizer_contained.holds);
        let rep = r.product_check(&p(&r, "t+w"), &a, 2).unwrap();
        assert!(rep.consistent && !rep.product_reducible);
        assert_eq!(rep.every_atom_times_b.witnesses, [p(&r, "t+w")]);
        assert_eq!(r.product_check(&a, &r.one(), 2), Err(Error::UnitInput("product_check")));
    }

    #[test]
    fn i_a_examples() {
        let r = gf4();
        let a = p(&r, "t+1");
        let ia = r.i_a_set(&a, 1).unwrap();
        assert!(ia.contains(&a));
        assert!(!ia.contains(&p(&r, "t+w")));
        for q in r.enumerate_atoms(1).unwrap().iter() {
            assert_eq!(r.in_i_a(q, &a).unwrap(), ia.contains(q));
        }
        let all = r.i_a_set(&r.one(), 1).unwrap();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn product_rank_examples() {
        let r = gf4();
        let c = r.product_rank_check(&p(&r, "t+w"), &p(&r, "t+1")).unwrap();
        assert!(c.equal);
        assert_eq!((c.lhs.as_str(), c.rhs.as_str()), ("1", "1 + 0"));
        let c = r.product_rank_check(&p(&r, "t+1"), &p(&r, "t+1")).unwrap();
        assert_eq!((c.lhs.as_str(), c.rhs.as_str()), ("2", "1 + 1"));
    }
}
