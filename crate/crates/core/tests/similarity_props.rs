mod common;

use common::{ring, rng};
use firlab::checks::{random_atom, random_coprime_pair, random_nonunit};
use proptest::prelude::*;

const FIELDS: [&str; 3] = ["gf(2,2)", "gf(2,3)", "gf(3,2)"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn similarity_is_an_equivalence(seed: u64, which in 0usize..3) {
        let r = ring(FIELDS[which]);
        let mut g = rng(seed);
        let (a, u) = random_coprime_pair(&r, &mut g, 2).unwrap();
        prop_assert!(r.is_similar(&a, &a).unwrap().is_some());
        let b = r.conj(&a, &u).unwrap();
        prop_assert!(r.is_similar(&a, &b).unwrap().is_some());
        prop_assert!(r.is_similar(&b, &a).unwrap().is_some());
        let v = loop {
            let v = random_nonunit(&r, &mut g, 2);
            if r.rgcd(&b, &v).unwrap().d == r.one() {
                break v;
            }
        };
        let c = r.conj(&b, &v).unwrap();
        prop_assert!(r.is_similar(&a, &c).unwrap().is_some());
        prop_assert_eq!(r.length(&a).unwrap(), r.length(&c).unwrap());
    }

    #[test]
    fn similarity_is_symmetric_on_random_pairs(seed: u64, which in 0usize..3) {
        let r = ring(FIELDS[which]);
        let mut g = rng(seed);
        let d = 1 + (seed % 2) as usize;
        let a = r.random_poly(&mut g, d);
        let b = r.random_poly(&mut g, d);
        let ab = r.is_similar(&a, &b).unwrap().is_some();
        prop_assert_eq!(ab, r.is_similar(&b, &a).unwrap().is_some());
        if ab {
            prop_assert_eq!(r.length(&a).unwrap(), r.length(&b).unwrap());
            prop_assert_eq!(r.is_atom(&a).unwrap(), r.is_atom(&b).unwrap());
        }
    }

    #[test]
    fn similar_witness_maps_both_ways(seed: u64, which in 0usize..3) {
        // f u = v g with Ru + Rg = R and fR + vR = R
        let r = ring(FIELDS[which]);
        let mut g = rng(seed);
        let (f, w) = random_coprime_pair(&r, &mut g, 2).unwrap();
        let h = r.conj(&f, &w).unwrap();
        let u = r.is_similar(&f, &h).unwrap().unwrap();
        let v = r.hom_cofactor(&f, &h, &u).unwrap();
        prop_assert_eq!(r.rgcd(&u, &h).unwrap().d, r.one());
        prop_assert_eq!(r.lgcd_rlcm(&f, &v).unwrap().0, r.one());
    }

    #[test]
    fn similar_elements_factor_alike(seed: u64, which in 0usize..2) {
        let r = ring(FIELDS[which]);
        let mut g = rng(seed);
        let (a, u) = random_coprime_pair(&r, &mut g, 3).unwrap();
        let a2 = r.conj(&a, &u).unwrap();
        let divs = r.right_divisors(&a).unwrap();
        let c = &divs[divs.len() / 2];
        let (b, _) = r.right_divmod(&a, c).unwrap();
        let mut found = false;
        for c2 in r.right_divisors(&a2).unwrap() {
            if c2.degree() != c.degree() || r.is_similar(c, &c2).unwrap().is_none() {
                continue;
            }
            let (b2, _) = r.right_divmod(&a2, &c2).unwrap();
            if r.is_similar(&b, &b2).unwrap().is_some() {
                found = true;
                break;
            }
        }
        prop_assert!(found);
    }

    #[test]
    fn kernel_dimension_counts_the_class_rank(seed: u64, which in 0usize..2) {
        let r = ring(FIELDS[which]);
        let mut g = rng(seed);
        let f = random_nonunit(&r, &mut g, 4);
        let p = random_atom(&r, &mut g, 2).unwrap();
        let dim = r.dim_over_eigenring(&f, &p).unwrap();
        prop_assert!(dim <= r.length(&f).unwrap());
        let classes = r.class_decompose(&r.v_set(&f).unwrap()).unwrap();
        let mut rank = 0;
        for c in &classes.classes {
            if r.is_similar(&c.representative, &p).unwrap().is_some() {
                rank = c.rank;
            }
        }
        prop_assert_eq!(dim, rank);
    }
}

#[test]
fn every_small_eigenring_is_a_division_ring() {
    for (desc, max) in [("gf(2,2)", 3), ("gf(3,2)", 2), ("gf(2,3)", 2), ("gf(3,2,frob=1,der=w)", 2)] {
        let r = ring(desc);
        for d in 1..=max {
            for p in r.enumerate_atoms(d).unwrap().iter() {
                let c = firlab::checks::schur(&r, p).unwrap();
                assert!(c.equal, "{desc}: {}", r.format(p));
            }
        }
    }
}
