//! Randomized and exhaustive identity checks shared by the test suites and
//! the command-line runner. Each check returns [`IdentityCheck`]s instead of
//! panicking, so that callers can aggregate violations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algset::AlgebraicSet;
use crate::error::Result;
use crate::ore::{SkewPoly, SkewRing};
use crate::report::IdentityCheck;

fn implication(name: &str, premise: bool, conclusion: bool) -> IdentityCheck {
    IdentityCheck::new(name, premise, conclusion).with_equal(!premise || conclusion)
}

fn truth(name: &str, holds: bool) -> IdentityCheck {
    IdentityCheck::new(name, holds, true)
}

/// A uniformly chosen monic atom of degree `1..=max_degree`.
pub fn random_atom<R: Rng + ?Sized>(ring: &SkewRing, rng: &mut R, max_degree: usize) -> Result<SkewPoly> {
    let d = rng.gen_range(1..=max_degree);
    let atoms = ring.enumerate_atoms(d)?;
    Ok(atoms.choose(rng).expect("atoms exist in every degree").clone())
}

/// A set of `1..=max_size` random atoms.
pub fn random_atom_set<R: Rng + ?Sized>(
    ring: &SkewRing,
    rng: &mut R,
    max_size: usize,
    max_degree: usize,
) -> Result<AlgebraicSet> {
    let n = rng.gen_range(1..=max_size);
    let atoms = (0..n).map(|_| random_atom(ring, rng, max_degree)).collect::<Result<Vec<_>>>()?;
    ring.algebraic_set(atoms)
}

/// A random non-unit of degree `1..=max_degree` (not necessarily monic).
pub fn random_nonunit<R: Rng + ?Sized>(ring: &SkewRing, rng: &mut R, max_degree: usize) -> SkewPoly {
    let d = rng.gen_range(1..=max_degree);
    ring.random_poly(rng, d)
}

/// Length is additive on products, and `ℓ(llcm) + ℓ(rgcd) = ℓ(a) + ℓ(b)`.
pub fn length_laws(ring: &SkewRing, a: &SkewPoly, b: &SkewPoly) -> Result<Vec<IdentityCheck>> {
    let (la, lb) = (ring.length(a)?, ring.length(b)?);
    let lab = ring.length(&ring.mul(a, b))?;
    let lm = ring.length(&ring.llcm(a, b)?)?;
    let lg = ring.length(&ring.rgcd(a, b)?.d)?;
    Ok(vec![
        IdentityCheck::new("length_of_product", lab, la + lb),
        IdentityCheck::new("length_of_lcm_and_gcd", lm + lg, la + lb),
    ])
}

/// `a` and `b` with `Ra + Rb = R`, so that `a^b ~ a`.
pub fn random_coprime_pair<R: Rng + ?Sized>(
    ring: &SkewRing,
    rng: &mut R,
    max_degree: usize,
) -> Result<(SkewPoly, SkewPoly)> {
    loop {
        let a = random_nonunit(ring, rng, max_degree);
        let b = random_nonunit(ring, rng, max_degree);
        if ring.rgcd(&a, &b)?.d == ring.one() {
            return Ok((a, b));
        }
    }
}

/// `a^b` is similar to `a` when `Ra + Rb = R`, and similar elements share
/// their length.
pub fn similar_pair(ring: &SkewRing, a: &SkewPoly, b: &SkewPoly) -> Result<Vec<IdentityCheck>> {
    let c = ring.conj(a, b)?;
    let similar = ring.is_similar(a, &c)?.is_some();
    Ok(vec![
        truth("conjugate_is_similar", similar),
        IdentityCheck::new("similar_same_length", ring.length(a)?, ring.length(&c)?),
    ])
}

/// Elements of different degree are never similar.
pub fn dissimilar_pair(ring: &SkewRing, a: &SkewPoly, b: &SkewPoly) -> Result<Vec<IdentityCheck>> {
    let similar = ring.is_similar(a, b)?.is_some();
    Ok(vec![implication("different_degree_not_similar", a.degree() != b.degree(), !similar)])
}

/// Every nonzero element of the eigenring of the atom `p` has a two-sided
/// inverse.
pub fn schur(ring: &SkewRing, p: &SkewPoly) -> Result<IdentityCheck> {
    let e = ring.eigenring(p)?;
    let zero = vec![0; e.dim()];
    let mut failures = Vec::new();
    let mut count = 0u128;
    for x in e.elements() {
        if x == zero {
            continue;
        }
        count += 1;
        let ok = e
            .inverse(&x)
            .is_some_and(|y| e.mul(&x, &y) == e.one() && e.mul(&y, &x) == e.one());
        if !ok {
            failures.push(format!("{x:?}"));
        }
    }
    Ok(IdentityCheck::new("eigenring_inverses", count - failures.len() as u128, count)
        .with_witnesses(failures))
}

/// If `b` depends on `Δ ∪ {a}` but not on `Δ`, then `a` depends on `Δ ∪ {b}`.
pub fn exchange(ring: &SkewRing, delta: &AlgebraicSet, a: &SkewPoly, b: &SkewPoly) -> Result<IdentityCheck> {
    let with_a = ring.algebraic_set(delta.iter().cloned().chain([a.clone()]))?;
    let with_b = ring.algebraic_set(delta.iter().cloned().chain([b.clone()]))?;
    let premise = ring.is_dependent(b, &with_a)? && !ring.is_dependent(b, delta)?;
    Ok(implication("exchange", premise, ring.is_dependent(a, &with_b)?))
}

/// If `p` depends on `Δ` and every element of `Δ` depends on `Δ'`, then `p`
/// depends on `Δ'`.
pub fn transitivity(ring: &SkewRing, delta: &AlgebraicSet, delta2: &AlgebraicSet, p: &SkewPoly) -> Result<IdentityCheck> {
    let mut premise = ring.is_dependent(p, delta)?;
    for d in delta {
        premise = premise && ring.is_dependent(d, delta2)?;
    }
    Ok(implication("transitivity", premise, ring.is_dependent(p, delta2)?))
}

/// `rk V(f) = Σ dim_{C(p)} Ker λ_{f,p}` over the classes met by `V(f)`.
pub fn dimension_formula(ring: &SkewRing, f: &SkewPoly) -> Result<IdentityCheck> {
    if ring.is_unit(f) {
        return Ok(IdentityCheck::new("rank_equals_class_dimensions", 0, 0));
    }
    let rd = ring.rank_decomposition(f)?;
    let parts: Vec<String> = rd.classes.iter().map(|c| c.dimension.to_string()).collect();
    Ok(IdentityCheck::new("rank_equals_class_dimensions", rd.rank, rd.total)
        .with_witnesses(vec![ring.format(f), parts.join(" + ")]))
}

/// The eight characterizations agree, and a fully reducible element has
/// `ℓ(f)` simple summands and a matching right decomposition.
pub fn wedderburn(ring: &SkewRing, f: &SkewPoly) -> Result<Vec<IdentityCheck>> {
    let rep = ring.wedderburn_report(f)?;
    let verdicts: Vec<String> = rep.verdicts().iter().map(|(n, v)| format!("{n}={v}")).collect();
    let mut out = vec![truth("characterizations_agree", rep.consistent).with_witnesses(verdicts)];
    if rep.fully_reducible() {
        out.push(IdentityCheck::new("simple_summand_count", rep.direct_sum.witnesses.len(), rep.length));
        let summand_degrees: usize = rep.direct_sum.witnesses.iter().map(|q| q.degree().unwrap()).sum();
        out.push(IdentityCheck::new("summand_degrees", summand_degrees, f.degree().unwrap()));
        out.push(left_right_symmetry(ring, f)?);
    }
    Ok(out)
}

/// `fR = ∩ p'_i R` with `p'_i ~ p_i` for the minimal decomposition `p_i`.
pub fn left_right_symmetry(ring: &SkewRing, f: &SkewPoly) -> Result<IdentityCheck> {
    let left = ring.minimal_decomposition(f)?;
    let right = match ring.right_decomposition(f) {
        Ok(r) => r,
        Err(e) => return Ok(truth("right_decomposition", false).with_witnesses(vec![e.to_string()])),
    };
    let mut ok = right.len() == left.len();
    for (p, q) in left.iter().zip(&right) {
        ok = ok && ring.is_similar(p, q)?.is_some();
    }
    if let Some(m) = right.iter().try_fold(None::<SkewPoly>, |acc, q| -> Result<_> {
        Ok(Some(match acc {
            None => q.clone(),
            Some(m) => ring.lgcd_rlcm(&m, q)?.1,
        }))
    })? {
        ok = ok && ring.right_monic(&m)? == ring.right_monic(f)?;
    }
    Ok(truth("right_decomposition", ok).with_witnesses(right.iter().map(|q| ring.format(q)).collect()))
}

/// The rank identities for unions and intersections of closures.
pub fn rank_union(ring: &SkewRing, delta: &AlgebraicSet, gamma: &AlgebraicSet) -> Result<Vec<IdentityCheck>> {
    ring.rank_theorems_check(delta, gamma)
}

/// `rk V(ba) = rk V(a) + rk(I_a ∩ V(b))`.
pub fn product_rank(ring: &SkewRing, b: &SkewPoly, a: &SkewPoly) -> Result<IdentityCheck> {
    ring.product_rank_check(b, a)
}

/// Every monic polynomial of degree at most `d`.
pub fn all_monic_up_to(ring: &SkewRing, d: usize) -> Result<Vec<SkewPoly>> {
    let mut out = Vec::new();
    for k in 0..=d {
        out.extend(ring.enumerate_monic(k)?);
    }
    Ok(out)
}
