use super::*;
use crate::field::TwistedField;

fn gf4() -> SkewRing {
    SkewRing::new("gf(2,2)".parse().unwrap())
}

fn p(r: &SkewRing, s: &str) -> SkewPoly {
    r.parse(s).unwrap()
}

/// `f ∈ R g` decided only through multiplication: some `q` with `q g = f`.
fn oracle_in_left_ideal(r: &SkewRing, f: &SkewPoly, g: &SkewPoly) -> bool {
    let (Some(n), Some(m)) = (f.degree(), g.degree()) else {
        return f.is_zero();
    };
    if n < m {
        return false;
    }
    r.enumerate_below(n - m + 1).unwrap().any(|q| r.mul(&q, g) == *f)
}

#[test]
fn multiplication_examples() {
    let r = gf4();
    assert_eq!(r.mul(&p(&r, "t+1"), &p(&r, "t+1")), p(&r, "t^2+1"));
    assert_eq!(r.mul(&p(&r, "t+w"), &p(&r, "t+1")), p(&r, "t^2 + w^2*t + w"));
    let f = p(&r, "w*t^3 + t + 1");
    assert_eq!(r.mul(&f, &r.one()), f);
    assert_eq!(r.format(&p(&r, "t*w")), "(w+1)*t");
}

#[test]
fn right_division_examples() {
    let r = gf4();
    let (q, rem) = r.right_divmod(&p(&r, "t^2+1"), &p(&r, "t+w")).unwrap();
    assert_eq!((q, rem), (p(&r, "t + w^2"), r.zero()));
    let f = p(&r, "t^2 + w^2*t + w");
    let (q, rem) = r.right_divmod(&f, &p(&r, "t+w")).unwrap();
    assert_eq!(q, p(&r, "t"));
    assert_eq!(rem, p(&r, "w"));
    let g = p(&r, "t^3 + w*t + 1");
    assert_eq!(r.right_divmod(&g, &g).unwrap(), (r.one(), r.zero()));
    assert_eq!(r.right_divmod(&g, &r.zero()), Err(Error::DivisionByZero));
}

#[test]
fn left_division_examples() {
    let r = gf4();
    let (q, rem) = r.left_divmod(&p(&r, "t^2+1"), &p(&r, "t+1")).unwrap();
    assert_eq!((q, rem), (p(&r, "t+1"), r.zero()));
    let a = r.field().generator().unwrap();
    let sat = r.monomial(r.field().endo(&a), 1);
    assert_eq!(r.left_divmod(&sat, &r.t()).unwrap(), (r.constant(a), r.zero()));

    let f = SkewRing::new(TwistedField::rational_function(2).unwrap());
    let xt = f.parse("x*t").unwrap();
    assert!(matches!(f.left_divmod(&xt, &f.t()), Err(Error::NotComputable { .. })));
    // right division is still fine there
    let (q, rem) = f.right_divmod(&xt, &f.t()).unwrap();
    assert_eq!((q, rem), (f.parse("x").unwrap(), f.zero()));
}

#[test]
fn gcd_and_lcm_examples() {
    let r = gf4();
    let (a, b) = (p(&r, "t+1"), p(&r, "t+w"));
    assert_eq!(r.rgcd(&a, &b).unwrap().d, r.one());
    let f = p(&r, "w*t^2 + t");
    assert_eq!(r.rgcd(&f, &r.zero()).unwrap().d, r.monic(&f));
    assert_eq!(r.rgcd(&p(&r, "t^2+1"), &b).unwrap().d, b);
    assert_eq!(r.rgcd(&r.zero(), &r.zero()), Err(Error::ZeroInput("rgcd")));

    assert_eq!(r.llcm(&a, &b).unwrap(), p(&r, "t^2+1"));
    assert_eq!(r.llcm(&f, &f).unwrap(), r.monic(&f));
    assert_eq!(r.llcm(&a, &p(&r, "t^2+1")).unwrap(), p(&r, "t^2+1"));
}

#[test]
fn llcm_agrees_with_exhaustive_quadratic_search() {
    let r = gf4();
    let (a, b) = (p(&r, "t+1"), p(&r, "t+w"));
    let common: Vec<SkewPoly> = r
        .enumerate_monic(2)
        .unwrap()
        .filter(|m| oracle_in_left_ideal(&r, m, &a) && oracle_in_left_ideal(&r, m, &b))
        .collect();
    assert_eq!(common, vec![p(&r, "t^2+1")]);
}

#[test]
fn bezout_cofactors_reassemble() {
    let r = gf4();
    let a = p(&r, "t^3 + w*t + 1");
    let b = p(&r, "t^2 + (w+1)");
    let z = r.rgcd(&a, &b).unwrap();
    assert_eq!(r.add(&r.mul(&z.u, &a), &r.mul(&z.v, &b)), z.d);
}

#[test]
fn conjugate_examples() {
    let r = gf4();
    let (a, b) = (p(&r, "t+1"), p(&r, "t+w"));
    assert_eq!(r.conj(&b, &a).unwrap(), a);
    assert_eq!(r.conj(&a, &b).unwrap(), p(&r, "t+w^2"));
    let f = p(&r, "w*t^2+1");
    assert_eq!(r.conj(&f, &r.one()).unwrap(), r.monic(&f));
}

#[test]
fn right_ideal_examples() {
    let r = gf4();
    let (a, b) = (p(&r, "t+1"), p(&r, "t+w"));
    let (g, m) = r.lgcd_rlcm(&a, &b).unwrap();
    assert_eq!(g, r.one());
    assert_eq!(m.degree(), Some(2));
    assert!(r.left_divides(&a, &m).unwrap() && r.left_divides(&b, &m).unwrap());
    let f = p(&r, "w*t^2 + t + w");
    let mf = r.right_monic(&f).unwrap();
    assert_eq!(r.lgcd_rlcm(&f, &f).unwrap(), (mf.clone(), mf));

    let ff = SkewRing::new(TwistedField::rational_function(2).unwrap());
    assert!(matches!(
        ff.lgcd_rlcm(&ff.t(), &ff.parse("x*t").unwrap()),
        Err(Error::NotComputable { .. })
    ));
}

#[test]
fn atom_examples() {
    let r = gf4();
    assert!(r.is_atom(&p(&r, "t+w")).unwrap());
    assert!(!r.is_atom(&p(&r, "t^2+1")).unwrap());
    assert!(r.is_atom(&p(&r, "t^2+w")).unwrap());
    assert!(!r.is_atom(&p(&r, "w")).unwrap());
    assert_eq!(r.is_atom(&r.zero()), Err(Error::ZeroInput("is_atom")));
}

#[test]
fn atom_test_matches_product_oracle() {
    // A monic quadratic is reducible iff it is a product of two monic linears.
    let r = gf4();
    let linears: Vec<SkewPoly> = r.enumerate_monic(1).unwrap().collect();
    let mut products = std::collections::BTreeSet::new();
    for a in &linears {
        for b in &linears {
            products.insert(r.mul(a, b));
        }
    }
    for f in r.enumerate_monic(2).unwrap() {
        assert_eq!(r.is_atom(&f).unwrap(), !products.contains(&f), "{}", r.format(&f));
    }
}

#[test]
fn factorization_examples() {
    let r = gf4();
    let fa = r.factor_atomic(&p(&r, "t^2+1")).unwrap();
    assert_eq!(fa.atoms, vec![p(&r, "t+1"), p(&r, "t+1")]);
    assert!(r.field().is_one(&fa.unit));
    let w = r.field().generator().unwrap();
    let fu = r.factor_atomic(&r.constant(w.clone())).unwrap();
    assert!(fu.atoms.is_empty());
    assert_eq!(fu.unit, w);
    let fa = r.factor_atomic(&p(&r, "t^2+w")).unwrap();
    assert_eq!(fa.atoms, vec![p(&r, "t^2+w")]);

    assert_eq!(r.length(&p(&r, "t^2+1")).unwrap(), 2);
    assert_eq!(r.length(&p(&r, "w^2")).unwrap(), 0);
    assert_eq!(r.length(&p(&r, "t^2+w")).unwrap(), 1);
}

#[test]
fn factorization_reassembles_with_unit() {
    let r = gf4();
    let f = p(&r, "w*(t+1)*(t^2+w)*(t+w)");
    let fa = r.factor_atomic(&f).unwrap();
    assert_eq!(fa.expand(&r), f);
    assert_eq!(fa.len(), 3);
    for a in &fa.atoms {
        assert!(r.is_atom(a).unwrap());
    }
}

#[test]
fn atom_enumeration_examples() {
    let r = gf4();
    assert_eq!(r.enumerate_atoms(1).unwrap().len(), 4);
    let quad = r.enumerate_atoms(2).unwrap();
    assert!(quad.contains(&p(&r, "t^2+w")));
    assert!(!quad.contains(&p(&r, "t^2+1")));

    let f2 = SkewRing::new("gf(2,1,frob=0)".parse().unwrap());
    assert_eq!(*f2.enumerate_atoms(2).unwrap(), vec![f2.parse("t^2+t+1").unwrap()]);

    let ff = SkewRing::new(TwistedField::rational_function(2).unwrap());
    assert_eq!(ff.enumerate_atoms(1), Err(Error::InfiniteBackend("enumerate_atoms")));
}

#[test]
fn right_divisor_list_matches_oracle() {
    let r = gf4();
    for s in ["t^2+1", "t^3 + w*t + 1", "(t+1)*(t^2+w)*(t+w)"] {
        let f = p(&r, s);
        let n = f.degree().unwrap();
        let mut expected = Vec::new();
        for d in 0..=n {
            expected.extend(r.enumerate_monic(d).unwrap().filter(|g| oracle_in_left_ideal(&r, &f, g)));
        }
        assert_eq!(r.right_divisors(&f).unwrap(), expected, "{s}");
    }
}

#[test]
fn monic_enumeration_order_and_caps() {
    let r = gf4();
    let names: Vec<String> = r.enumerate_monic(1).unwrap().map(|g| r.format(&g)).collect();
    assert_eq!(names, ["t", "t + 1", "t + w", "t + (w+1)"]);
    for (i, g) in r.enumerate_monic(2).unwrap().enumerate() {
        assert_eq!(r.monic_index(&g), i as u128);
    }
    let small = gf4().with_max_degree(2);
    assert!(matches!(small.enumerate_monic(3), Err(Error::DegreeCap { .. })));
    let tiny = gf4().with_search_limit(10);
    assert!(matches!(tiny.enumerate_monic(2), Err(Error::SearchCap { .. })));
}

#[test]
fn derivation_commutation_rule() {
    let r = SkewRing::new("gf(3,2,frob=1,der=w)".parse().unwrap());
    let k = r.field().clone();
    for a in k.elements().unwrap() {
        let lhs = r.mul(&r.t(), &r.constant(a.clone()));
        let rhs = r.from_coeffs(vec![k.derive(&a), k.endo(&a)]);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn text_round_trip() {
    let r = gf4();
    for s in ["t^2 + (w+1)*t + w", "t^3 + 1", "w*t", "0", "w+1", "t + (w+1)"] {
        assert_eq!(r.format(&p(&r, s)), s);
    }
    let ff = SkewRing::new(TwistedField::rational_function(2).unwrap());
    assert_eq!(ff.format(&ff.parse("t*x").unwrap()), "x^2*t");
    assert_eq!(ff.format(&ff.parse("1/x*t").unwrap()), "(1/x)*t");
}
