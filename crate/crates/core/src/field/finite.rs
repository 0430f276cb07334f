//! Table-driven arithmetic in `GF(p^e)`.
//!
//! Elements are indices `0..q`; the index of `c_0 + c_1 w + ... + c_{e-1} w^{e-1}`
//! is `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`, so index order is the lexicographic
//! order on prime-subfield coordinates with the top coordinate most significant.

use super::fp_poly::{self, FpPoly};
use crate::error::{Error, Result};

/// Largest supported field size; multiplication goes through log tables.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// Moduli shipped for the desk-scale fields (Conway polynomials).
fn default_modulus(p: u32, e: u32) -> Option<FpPoly> {
    match (p, e) {
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (3, 2) => Some(vec![2, 2, 1]),
        (5, 2) => Some(vec![2, 4, 1]),
        _ => None,
    }
}

#[derive(Debug)]
pub struct GaloisField {
    p: u32,
    e: u32,
    q: u32,
    modulus: FpPoly,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

pub(crate) fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d: &u32| (*d as u64) * (*d as u64) <= n as u64).all(|d| n % d != 0)
}

impl GaloisField {
    pub fn new(p: u32, e: u32, modulus: Option<FpPoly>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        let q64 = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if q64 > MAX_FIELD_SIZE {
            return Err(Error::InvalidField(format!(
                "GF({p}^{e}) exceeds the supported size {MAX_FIELD_SIZE}"
            )));
        }
        let q = q64 as u32;
        let modulus = match modulus.or_else(|| default_modulus(p, e)) {
            Some(m) => {
                let m = fp_poly::trim(m);
                if fp_poly::degree(&m) != Some(e as usize)
                    || m[e as usize] != 1
                    || !fp_poly::is_irreducible(&m, p)
                {
                    return Err(Error::InvalidField(format!(
                        "modulus {m:?} is not a monic irreducible of degree {e}"
                    )));
                }
                m
            }
            None => least_irreducible(p, e),
        };
        let mut field = GaloisField {
            p,
            e,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
        };
        field.build_tables();
        Ok(field)
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let order = q - 1;
        let mut generator_powers = None;
        for g in 1..q {
            let gp = self.to_poly(g);
            let mut powers = Vec::with_capacity(order as usize);
            let mut cur: FpPoly = vec![1];
            let mut seen_one_early = false;
            for i in 0..order {
                let idx = self.from_poly(&cur);
                if i > 0 && idx == 1 {
                    seen_one_early = true;
                    break;
                }
                powers.push(idx);
                cur = fp_poly::rem(&fp_poly::mul(&cur, &gp, self.p), &self.modulus, self.p);
            }
            if !seen_one_early {
                generator_powers = Some(powers);
                break;
            }
        }
        let exp = generator_powers.expect("multiplicative group of a finite field is cyclic");
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        self.exp = exp;
        self.log = log;
        if q <= 256 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = self.add_digits(a, b);
                }
            }
            self.add_table = Some(t);
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Prime-subfield coordinates (coefficient of `w^i` at position `i`).
    pub fn coords(&self, a: u32) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.e as usize);
        let mut x = a;
        for _ in 0..self.e {
            v.push(x % self.p);
            x /= self.p;
        }
        v
    }

    pub fn from_coords(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0u32, |acc, &d| acc * self.p + d % self.p)
    }

    pub fn to_poly(&self, a: u32) -> FpPoly {
        fp_poly::trim(self.coords(a))
    }

    pub fn from_poly(&self, f: &[u32]) -> u32 {
        let r = fp_poly::rem(f, &self.modulus, self.p);
        let mut c = r;
        c.resize(self.e as usize, 0);
        self.from_coords(&c)
    }

    fn add_digits(&self, a: u32, b: u32) -> u32 {
        let (mut x, mut y, mut out, mut place) = (a, b, 0u32, 1u32);
        for _ in 0..self.e {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add_table {
            Some(t) => t[(a * self.q + b) as usize],
            None => self.add_digits(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        let (mut x, mut out, mut place) = (a, 0u32, 1u32);
        for _ in 0..self.e {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place = place.wrapping_mul(self.p);
        }
        out
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q - 1;
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % order as u64;
        self.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let order = self.q - 1;
        Some(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    pub fn pow(&self, a: u32, n: u64) -> u32 {
        if a == 0 {
            return if n == 0 { 1 } else { 0 };
        }
        let order = (self.q - 1) as u64;
        let s = (self.log[a as usize] as u64 * (n % order)) % order;
        self.exp[s as usize]
    }

    /// `a^(p^k)`.
    pub fn frobenius(&self, a: u32, k: u32) -> u32 {
        let k = k % self.e;
        self.pow(a, (self.p as u64).pow(k))
    }
}

fn least_irreducible(p: u32, e: u32) -> FpPoly {
    let count = (p as u64).pow(e);
    (0..count)
        .map(|idx| {
            let mut f: FpPoly = Vec::with_capacity(e as usize + 1);
            let mut x = idx;
            for _ in 0..e {
                f.push((x % p as u64) as u32);
                x /= p as u64;
            }
            f.push(1);
            f
        })
        .find(|f| fp_poly::is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_multiplication_by_hand() {
        let f = GaloisField::new(2, 2, None).unwrap();
        // w = index 2, w+1 = index 3; w^2 = w+1, w^3 = 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(3, 2), 1);
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.inv(2), Some(3));
    }

    #[test]
    fn field_axioms_gf9() {
        let f = GaloisField::new(3, 2, None).unwrap();
        for a in 0..9 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..9 {
                for c in 0..9 {
                    let lhs = f.mul(a, f.add(b, c));
                    let rhs = f.add(f.mul(a, b), f.mul(a, c));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn frobenius_has_order_e() {
        let f = GaloisField::new(2, 3, None).unwrap();
        for a in 0..8 {
            assert_eq!(f.frobenius(a, 3), a);
            assert_eq!(f.frobenius(f.frobenius(a, 1), 2), a);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(GaloisField::new(4, 1, None).is_err());
        assert!(GaloisField::new(2, 20, None).is_err());
        assert!(GaloisField::new(2, 2, Some(vec![1, 0, 1])).is_err());
    }

    #[test]
    fn non_default_modulus_is_found() {
        let f = GaloisField::new(2, 4, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(f.size(), 16);
    }
}
