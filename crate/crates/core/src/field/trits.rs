//! Polynomial-basis arithmetic on coefficient vectors over F3.
//!
//! An element of GF(3^e) in the polynomial basis is a vector of `e` trits,
//! lowest degree first. The same vector read as a base-3 number (trit `i`
//! weighted by `3^i`) is its *index*, which is how elements are ordered when
//! the modulus and the primitive element are chosen.

pub(crate) const MAX_DEGREE: usize = 12;

pub(crate) type Trits = [u8; MAX_DEGREE];

#[inline]
pub(crate) fn add3(a: u8, b: u8) -> u8 {
    let s = a + b;
    if s >= 3 {
        s - 3
    } else {
        s
    }
}

#[inline]
pub(crate) fn mul3(a: u8, b: u8) -> u8 {
    (a * b) % 3
}

#[inline]
pub(crate) fn neg3(a: u8) -> u8 {
    if a == 0 {
        0
    } else {
        3 - a
    }
}

pub(crate) fn index_to_trits(mut index: u32, e: usize) -> Trits {
    let mut t = [0u8; MAX_DEGREE];
    for slot in t.iter_mut().take(e) {
        *slot = (index % 3) as u8;
        index /= 3;
    }
    t
}

pub(crate) fn trits_to_index(t: &Trits, e: usize) -> u32 {
    t[..e].iter().rev().fold(0u32, |acc, &d| acc * 3 + d as u32)
}

pub(crate) fn add(a: &Trits, b: &Trits, e: usize) -> Trits {
    let mut r = [0u8; MAX_DEGREE];
    for i in 0..e {
        r[i] = add3(a[i], b[i]);
    }
    r
}

pub(crate) fn neg(a: &Trits, e: usize) -> Trits {
    let mut r = [0u8; MAX_DEGREE];
    for i in 0..e {
        r[i] = neg3(a[i]);
    }
    r
}

/// Product modulo the monic `modulus` (length `e + 1`, lowest first).
pub(crate) fn mul(a: &Trits, b: &Trits, modulus: &[u8], e: usize) -> Trits {
    let mut wide = [0u8; 2 * MAX_DEGREE];
    for i in 0..e {
        if a[i] == 0 {
            continue;
        }
        for j in 0..e {
            wide[i + j] = add3(wide[i + j], mul3(a[i], b[j]));
        }
    }
    // x^e = -(modulus[0] + ... + modulus[e-1] x^(e-1))
    for d in (e..2 * e).rev() {
        let c = wide[d];
        if c == 0 {
            continue;
        }
        wide[d] = 0;
        for i in 0..e {
            let t = mul3(c, modulus[i]);
            wide[d - e + i] = add3(wide[d - e + i], neg3(t));
        }
    }
    let mut r = [0u8; MAX_DEGREE];
    r[..e].copy_from_slice(&wide[..e]);
    r
}

/// Remainder of an arbitrary-length trit polynomial by a monic divisor.
fn poly_rem(dividend: &[u8], divisor: &[u8]) -> Vec<u8> {
    let mut r = dividend.to_vec();
    let dd = divisor.len() - 1;
    while r.len() > dd {
        let top = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if top != 0 {
            for (i, &c) in divisor.iter().enumerate() {
                r[shift + i] = add3(r[shift + i], neg3(mul3(top, c)));
            }
        }
        r.pop();
    }
    r
}

/// Brute-force irreducibility test: no monic polynomial of degree
/// `1..=e/2` divides the monic `poly` of degree `e`.
pub(crate) fn is_irreducible(poly: &[u8]) -> bool {
    let e = poly.len() - 1;
    if e <= 1 {
        return e == 1;
    }
    for d in 1..=e / 2 {
        let count = 3u32.pow(d as u32);
        for low in 0..count {
            let mut cand = vec![0u8; d + 1];
            let mut v = low;
            for slot in cand.iter_mut().take(d) {
                *slot = (v % 3) as u8;
                v /= 3;
            }
            cand[d] = 1;
            if poly_rem(poly, &cand).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible polynomial of degree `e` whose non-leading
/// coefficients, read as a base-3 number with the constant term least
/// significant, are smallest.
pub(crate) fn smallest_irreducible(e: usize) -> Vec<u8> {
    let count = 3u32.pow(e as u32);
    for low in 0..count {
        let mut poly = vec![0u8; e + 1];
        let mut v = low;
        for slot in poly.iter_mut().take(e) {
            *slot = (v % 3) as u8;
            v /= 3;
        }
        poly[e] = 1;
        if is_irreducible(&poly) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn pow(base: &Trits, mut exp: u64, modulus: &[u8], e: usize) -> Trits {
    let mut result = [0u8; MAX_DEGREE];
    result[0] = 1;
    let mut b = *base;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul(&result, &b, modulus, e);
        }
        b = mul(&b, &b, modulus, e);
        exp >>= 1;
    }
    result
}
