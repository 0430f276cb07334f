mod common;

use firlab::field::ratfun::RatFun;
use firlab::{FieldElement, TwistedField};
use proptest::prelude::*;

fn finite_fields() -> Vec<TwistedField> {
    ["gf(2,2)", "gf(2,3,frob=2)", "gf(3,2,frob=1,der=w)", "gf(5,1,frob=0)", "gf(2,4,frob=3,der=w+1)"]
        .iter()
        .map(|d| d.parse().unwrap())
        .collect()
}

#[test]
fn twist_is_a_ring_endomorphism_and_derivation_obeys_leibniz() {
    for k in finite_fields() {
        let elems = k.elements().unwrap();
        for a in &elems {
            for b in &elems {
                let ab = k.mul(a, b);
                assert_eq!(k.endo(&ab), k.mul(&k.endo(a), &k.endo(b)));
                assert_eq!(k.endo(&k.add(a, b)), k.add(&k.endo(a), &k.endo(b)));
                let leibniz = k.add(&k.mul(&k.endo(a), &k.derive(b)), &k.mul(&k.derive(a), b));
                assert_eq!(k.derive(&ab), leibniz, "{}", k.descriptor());
            }
        }
    }
}

#[test]
fn preimage_inverts_the_twist_on_finite_fields() {
    for k in finite_fields() {
        for a in k.elements().unwrap() {
            assert_eq!(k.endo_preimage(&k.endo(&a)), Some(a.clone()));
            assert_eq!(k.endo(&k.endo_preimage(&a).unwrap()), a);
        }
    }
}

#[test]
fn descriptors_are_canonical() {
    for k in finite_fields() {
        let again: TwistedField = k.descriptor().parse().unwrap();
        assert_eq!(again.descriptor(), k.descriptor());
    }
}

fn ratfun(p: u32) -> impl Strategy<Value = RatFun> {
    (
        prop::collection::vec(0..p, 0..5),
        prop::collection::vec(0..p, 1..4),
    )
        .prop_filter_map("nonzero denominator", move |(num, mut den)| {
            den.push(1);
            Some(RatFun::new(num, den, p))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn function_field_twist_is_multiplicative(a in ratfun(2), b in ratfun(2)) {
        let k = TwistedField::rational_function(2).unwrap();
        let (a, b) = (FieldElement::RatFun(a), FieldElement::RatFun(b));
        prop_assert_eq!(k.endo(&k.mul(&a, &b)), k.mul(&k.endo(&a), &k.endo(&b)));
        prop_assert_eq!(k.endo(&k.add(&a, &b)), k.add(&k.endo(&a), &k.endo(&b)));
    }

    #[test]
    fn function_field_printing_round_trips(a in ratfun(3)) {
        let k = TwistedField::rational_function(3).unwrap();
        let a = FieldElement::RatFun(a);
        let s = k.format(&a);
        let back = k.parse_element(&s).unwrap();
        prop_assert_eq!(k.format(&back), s);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn twist_images_have_preimages(a in ratfun(2)) {
        let k = TwistedField::rational_function(2).unwrap();
        let a = FieldElement::RatFun(a);
        prop_assert_eq!(k.endo_preimage(&k.endo(&a)), Some(a));
    }

    #[test]
    fn decomposition_over_powers_reassembles(a in ratfun(2), i in 0usize..4) {
        let m = 1usize << i;
        let parts = a.decompose_over_power(m, 2);
        let mut sum = RatFun::zero();
        for (k, y) in parts.iter().enumerate() {
            let mut xk = vec![0u32; k + 1];
            xk[k] = 1;
            sum = sum.add(&RatFun::new(xk, vec![1], 2).mul(&y.inflate(m), 2), 2);
        }
        prop_assert_eq!(sum, a);
    }
}
