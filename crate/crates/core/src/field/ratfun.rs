//! Rational functions over `F_p`, kept as reduced fractions with monic
//! denominators so that equality is structural.

use super::fp_poly::{self, FpPoly};
use crate::linalg::FpMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFun {
    num: FpPoly,
    den: FpPoly,
}

impl RatFun {
    pub fn zero() -> Self {
        RatFun {
            num: Vec::new(),
            den: vec![1],
        }
    }

    pub fn constant(c: u32, p: u32) -> Self {
        RatFun::new(vec![c % p], vec![1], p)
    }

    pub fn x() -> Self {
        RatFun {
            num: vec![0, 1],
            den: vec![1],
        }
    }

    /// Normalizes `num/den`. Panics on a zero denominator.
    pub fn new(num: FpPoly, den: FpPoly, p: u32) -> Self {
        let num = fp_poly::trim(num);
        let den = fp_poly::trim(den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RatFun::zero();
        }
        let g = fp_poly::gcd(&num, &den, p);
        let num = fp_poly::divrem(&num, &g, p).0;
        let den = fp_poly::divrem(&den, &g, p).0;
        let lead = *den.last().unwrap();
        let inv = crate::linalg::inv_mod(lead, p);
        RatFun {
            num: fp_poly::scale(&num, inv, p),
            den: fp_poly::scale(&den, inv, p),
        }
    }

    pub fn numerator(&self) -> &[u32] {
        &self.num
    }

    pub fn denominator(&self) -> &[u32] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == [1]
    }

    pub fn add(&self, other: &RatFun, p: u32) -> RatFun {
        if self.den == other.den {
            return RatFun::new(fp_poly::add(&self.num, &other.num, p), self.den.clone(), p);
        }
        let num = fp_poly::add(
            &fp_poly::mul(&self.num, &other.den, p),
            &fp_poly::mul(&other.num, &self.den, p),
            p,
        );
        RatFun::new(num, fp_poly::mul(&self.den, &other.den, p), p)
    }

    pub fn neg(&self, p: u32) -> RatFun {
        RatFun {
            num: fp_poly::neg(&self.num, p),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFun, p: u32) -> RatFun {
        RatFun::new(
            fp_poly::mul(&self.num, &other.num, p),
            fp_poly::mul(&self.den, &other.den, p),
            p,
        )
    }

    pub fn inv(&self, p: u32) -> Option<RatFun> {
        if self.is_zero() {
            return None;
        }
        Some(RatFun::new(self.den.clone(), self.num.clone(), p))
    }

    /// `r(x) -> r(x^m)`. Reducedness and monicity are preserved.
    pub fn inflate(&self, m: usize) -> RatFun {
        RatFun {
            num: fp_poly::inflate(&self.num, m),
            den: fp_poly::inflate(&self.den, m),
        }
    }

    /// The unique `s` with `s(x^m) = r(x)`, if any.
    pub fn deflate(&self, m: usize) -> Option<RatFun> {
        Some(RatFun {
            num: fp_poly::deflate(&self.num, m)?,
            den: fp_poly::deflate(&self.den, m)?,
        })
    }

    /// Writes `r = sum_{k<m} x^k * y_k(x^m)` and returns `[y_0, .., y_{m-1}]`.
    ///
    /// The denominator is first cleared into `F_p[x^m]` by multiplying with
    /// `mu(x^m)/den`, where `mu` is the minimal polynomial of `x^m` modulo `den`.
    pub fn decompose_over_power(&self, m: usize, p: u32) -> Vec<RatFun> {
        if m == 1 {
            return vec![self.clone()];
        }
        let mu = min_poly_of_power(&self.den, m, p);
        let mu_inflated = fp_poly::inflate(&mu, m);
        let (cofactor, r) = fp_poly::divrem(&mu_inflated, &self.den, p);
        debug_assert!(r.is_empty());
        let numer = fp_poly::mul(&self.num, &cofactor, p);
        (0..m)
            .map(|k| {
                let part: FpPoly = numer.iter().skip(k).step_by(m).copied().collect();
                RatFun::new(part, mu.clone(), p)
            })
            .collect()
    }
}

/// Minimal polynomial of `x^m` in `F_p[x]/(den)`.
fn min_poly_of_power(den: &[u32], m: usize, p: u32) -> FpPoly {
    let n = den.len() - 1;
    if n == 0 {
        return vec![1];
    }
    let xm = fp_poly::rem(&fp_poly::inflate(&[0, 1], m), den, p);
    let mut powers: Vec<FpPoly> = vec![vec![1]];
    for j in 1..=n {
        let next = fp_poly::rem(&fp_poly::mul(&powers[j - 1], &xm, p), den, p);
        powers.push(next);
        let cols: Vec<Vec<u32>> = powers
            .iter()
            .map(|f| {
                let mut c = f.clone();
                c.resize(n, 0);
                c
            })
            .collect();
        let mat = FpMatrix::from_columns(p, n, &cols);
        if let Some(k) = mat.kernel().into_iter().find(|v| v[j] != 0) {
            return fp_poly::monic(&fp_poly::trim(k), p);
        }
    }
    unreachable!("n+1 vectors in an n-dimensional space are dependent")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_is_reduced() {
        // (x^2+x)/(x) over F_2 -> x+1
        let r = RatFun::new(vec![0, 1, 1], vec![0, 1], 2);
        assert_eq!(r.numerator(), &[1, 1]);
        assert_eq!(r.denominator(), &[1]);
    }

    #[test]
    fn inverse_of_x2_plus_x() {
        let r = RatFun::new(vec![0, 1, 1], vec![1], 2);
        let inv = r.inv(2).unwrap();
        assert_eq!(inv.numerator(), &[1]);
        assert_eq!(inv.denominator(), &[0, 1, 1]);
        assert_eq!(fp_poly::gcd(inv.numerator(), inv.denominator(), 2), vec![1]);
    }

    #[test]
    fn decomposition_reassembles() {
        // (x^3 + 1)/(x^2 + x + 1) over F_3, m = 4
        let p = 3;
        let r = RatFun::new(vec![1, 0, 0, 1], vec![1, 1, 1], p);
        let parts = r.decompose_over_power(4, p);
        let mut acc = RatFun::zero();
        for (k, y) in parts.iter().enumerate() {
            let mut xk = vec![0u32; k + 1];
            xk[k] = 1;
            let term = RatFun::new(xk, vec![1], p).mul(&y.inflate(4), p);
            acc = acc.add(&term, p);
        }
        assert_eq!(acc, r);
    }
}
