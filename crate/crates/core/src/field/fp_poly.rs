//! Dense univariate polynomials over `F_p`, little-endian coefficient vectors
//! with no trailing zeros. The zero polynomial is the empty vector.

pub type FpPoly = Vec<u32>;

use crate::linalg::inv_mod;

pub fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u32]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0) as u64;
            let y = b.get(i).copied().unwrap_or(0) as u64;
            ((x + y) % p as u64) as u32
        })
        .collect();
    trim(out)
}

pub fn neg(a: &[u32], p: u32) -> FpPoly {
    a.iter().map(|&x| (p - x) % p).collect()
}

pub fn sub(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    add(a, &neg(b, p), p)
}

pub fn scale(a: &[u32], c: u32, p: u32) -> FpPoly {
    trim(a.iter().map(|&x| ((x as u64 * c as u64) % p as u64) as u32).collect())
}

pub fn mul(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let p64 = p as u64;
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p64;
        }
    }
    trim(out.into_iter().map(|v| v as u32).collect())
}

/// Euclidean division `a = q*b + r`. Panics if `b` is zero.
pub fn divrem(a: &[u32], b: &[u32], p: u32) -> (FpPoly, FpPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let inv_lead = inv_mod(b[db], p) as u64;
    let p64 = p as u64;
    let mut r: Vec<u32> = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u32; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = (r[k + db] as u64 * inv_lead % p64) as u32;
        q[k] = c;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            let sub = c as u64 * bj as u64 % p64;
            r[k + j] = ((r[k + j] as u64 + p64 - sub) % p64) as u32;
        }
    }
    (trim(q), trim(r))
}

pub fn rem(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    divrem(a, b, p).1
}

pub fn monic(a: &[u32], p: u32) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => scale(a, inv_mod(lead, p), p),
    }
}

/// Monic greatest common divisor (zero if both inputs are zero).
pub fn gcd(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

pub fn pow_mod(base: &[u32], mut e: u64, modulus: &[u32], p: u32) -> FpPoly {
    let mut acc: FpPoly = rem(&[1], modulus, p);
    let mut b = rem(base, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        e >>= 1;
    }
    acc
}

/// Rabin's irreducibility test for a monic polynomial of degree `n >= 1`.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = match degree(f) {
        Some(0) | None => return false,
        Some(n) => n,
    };
    let x: FpPoly = vec![0, 1];
    let q = p as u64;
    // x^(p^n) == x mod f
    let mut frob = x.clone();
    for _ in 0..n {
        frob = pow_mod(&frob, q, f, p);
    }
    if rem(&sub(&frob, &x, p), f, p) != Vec::<u32>::new() {
        return false;
    }
    for d in prime_divisors(n) {
        let mut h = x.clone();
        for _ in 0..n / d {
            h = pow_mod(&h, q, f, p);
        }
        let g = gcd(&sub(&h, &x, p), f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Spreads `a(x)` to `a(x^m)`.
pub fn inflate(a: &[u32], m: usize) -> FpPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; (a.len() - 1) * m + 1];
    for (i, &c) in a.iter().enumerate() {
        out[i * m] = c;
    }
    out
}

/// Inverse of [`inflate`]: returns `b` with `b(x^m) = a(x)` if `a` only has
/// exponents divisible by `m`.
pub fn deflate(a: &[u32], m: usize) -> Option<FpPoly> {
    if a.iter().enumerate().any(|(i, &c)| c != 0 && i % m != 0) {
        return None;
    }
    Some(a.iter().step_by(m).copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_is_monic_and_divides() {
        // (x+1)(x+2) and (x+1)(x+3) over F_5
        let a = mul(&[1, 1], &[2, 1], 5);
        let b = mul(&[1, 1], &[3, 1], 5);
        assert_eq!(gcd(&a, &b, 5), vec![1, 1]);
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
    }

    #[test]
    fn divrem_reassembles() {
        let a = vec![3, 0, 4, 1, 2];
        let b = vec![1, 2, 3];
        let (q, r) = divrem(&a, &b, 7);
        assert_eq!(add(&mul(&q, &b, 7), &r, 7), trim(a));
        assert!(r.len() < b.len());
    }

    #[test]
    fn inflate_deflate_inverse() {
        let a = vec![1, 0, 3, 2];
        assert_eq!(deflate(&inflate(&a, 2), 2), Some(a));
        assert_eq!(deflate(&[0, 1], 2), None);
    }
}
