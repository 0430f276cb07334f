#![allow(dead_code)]

use firlab::{SkewPoly, SkewRing};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ring(desc: &str) -> SkewRing {
    SkewRing::new(desc.parse().expect("descriptor"))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn parse(r: &SkewRing, s: &str) -> SkewPoly {
    r.parse(s).expect("polynomial literal")
}

/// Every monic atomic factorization of `f`, found by peeling atomic right
/// divisors in all possible ways.
pub fn all_factorizations(r: &SkewRing, f: &SkewPoly) -> Vec<Vec<SkewPoly>> {
    if f.degree() == Some(0) {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in r.right_divisors(f).unwrap() {
        if p.degree() == Some(0) || !r.is_atom(&p).unwrap() {
            continue;
        }
        let (q, _) = r.right_divmod(f, &p).unwrap();
        for mut head in all_factorizations(r, &r.monic(&q)) {
            head.push(p.clone());
            out.push(head);
        }
    }
    out
}
