//! Published equations shared by the integration tests.
#![allow(dead_code)]

use curve_census::forms::parse_poly;
use curve_census::hyperelliptic::HyperModel;
use curve_census::trigonal::{QuinticModel, SingType};

/// Maximal trigonal quintics over GF(9): type, case and equation.
pub const TRIGONAL_F9: [(SingType, u8, &str); 22] = [
    // printed with y^3 in the z^2 term, which gives a 17-point curve
    (SingType::Split, 1, "x y z^3 + (x^3 + x y^2 + 2 y^3) z^2 + x y^3 z + x^5 + x^3 y^2 + x^2 y^3 + y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + 2 x y^2 + y^3) z^2 + (2 x^2 y^2 + 2 x y^3) z + x^5 + 2 x^4 y + x^2 y^3 + 2 x y^4 + y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x y^2 + 2 y^3) z^2 + (x^2 y^2 + x y^3 + 2 y^4) z + x^5 + x^3 y^2 + 2 x^2 y^3 + 2 x y^4 + y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x y^2 + y^3) z^2 + x y^3 z + x^5 + x^3 y^2 + 2 x^2 y^3 + 2 y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x y^2 + y^3) z^2 + (2 x^2 y^2 + x y^3 + y^4) z + x^5 + x^3 y^2 + x^2 y^3 + 2 x y^4 + 2 y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + 2 x y^2 + 2 y^3) z^2 + (x^2 y^2 + 2 x y^3) z + x^5 + x^4 y + 2 x^2 y^3 + 2 x y^4 + 2 y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + y^3) z^2 + (2 x^2 y^2 + 2 x y^3) z + x^5 + 2 x^4 y + 2 x^2 y^3 + y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 y^3) z^2 + (2 x^2 y^2 + 2 y^4) z + x^5 + x^4 y + x y^4 + y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + y^3) z^2 + (2 x^2 y^2 + 2 y^4) z + 2 x^5 + x^3 y^2 + 2 x^2 y^3 + x y^4 + 2 y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + 2 x^2 y^2 z + x^5 + x^4 y + 2 x y^4 + 2 y^5"),
    (SingType::Nonsplit, 1, "(x^2 - eps y^2) z^3 + (x (x^2 - eps y^2) + x^3 + y^3) z^2 + x^2 y^2 z + 2 x^5 + 2 x^4 y + x^3 y^2 + y^5"),
    (SingType::Nonsplit, 1, "(x^2 - eps y^2) z^3 + (2 x (x^2 - eps y^2) + 2 x^3 + y^3) z^2 + x^2 y^2 z + x^5 + 2 x^4 y + 2 x^3 y^2 + y^5"),
    (SingType::Nonsplit, 1, "(x^2 - eps y^2) z^3 + (2 x (x^2 - eps y^2) + x^3 + y^3) z^2 + (x^4 + x^3 y) z + x^5 + 2 x^2 y^3 + y^5"),
    (SingType::Nonsplit, 1, "(x^2 - eps y^2) z^3 + (x (x^2 - eps y^2) + 2 x^3 + y^3) z^2 + (x^4 + 2 x^3 y) z + 2 x^5 + 2 x^2 y^3 + y^5"),
    (SingType::Nonsplit, 1, "(x^2 - eps y^2) z^3 + (x (x^2 - eps y^2) + y^3) z^2 + (2 x^3 y + 2 x^2 y^2) z + x^5 + x^4 y + x^3 y^2 + 2 x^2 y^3 + y^5"),
    (SingType::Nonsplit, 1, "(x^2 - eps y^2) z^3 + (2 x (x^2 - eps y^2) + y^3) z^2 + (x^3 y + 2 x^2 y^2) z + 2 x^5 + x^4 y + 2 x^3 y^2 + 2 x^2 y^3 + y^5"),
    (SingType::Nonsplit, 2, "(x^2 - eps y^2) z^3 + (x (x^2 - eps y^2) + 2 x^3) z^2 + (x^4 + y^4) z + x^5"),
    (SingType::Cusp, 1, "x^2 z^3 + (x^2 y + y^3) z^2 + (x^4 + 2 x^2 y^2) z + x^4 y + y^5"),
    (SingType::Cusp, 1, "x^2 z^3 + (x^2 y + 2 y^3) z^2 + (2 x^4 + 2 x^2 y^2) z + 2 x^4 y + 2 y^5"),
    (SingType::Cusp, 1, "x^2 z^3 + (x^2 y + 2 y^3) z^2 + (x^4 + x^3 y + 2 x^2 y^2) z + x^5 + 2 x^3 y^2 + 2 x^2 y^3 + x y^4 + 2 y^5"),
    (SingType::Cusp, 1, "x^2 z^3 + (x^2 y + 2 y^3) z^2 + (x^4 + 2 x^3 y + 2 x^2 y^2) z + 2 x^5 + x^3 y^2 + 2 x^2 y^3 + 2 x y^4 + 2 y^5"),
    (SingType::Cusp, 1, "x^2 z^3 + (x^3 + x^2 y + y^3) z^2 + (2 x^3 y + 2 x^2 y^2) z + x^5 + 2 x^3 y^2 + x^2 y^3 + x y^4 + y^5"),
];

/// Isomorphism classes over GF(9), 1-based positions in [`TRIGONAL_F9`].
pub const TRIGONAL_F9_CLASSES: [&[usize]; 8] = [
    &[1, 4, 9],
    &[2, 6, 8],
    &[3, 5, 7],
    &[10, 17],
    &[11, 12],
    &[13, 14],
    &[15, 16],
    &[18, 19, 20, 21, 22],
];

/// Weil polynomials (`q = 9`) of the classes above, in the same order.
pub const TRIGONAL_F9_WEIL: [&str; 8] = [
    "(t+3)^4 (t^6+8t^5+44t^4+149t^3+396t^2+648t+729)",
    "(t^2+5t+9)(t^8+15t^7+112t^6+549t^5+1927t^4+4941t^3+9072t^2+10935t+6561)",
    "t^10+20t^9+196t^8+1247t^7+5714t^6+19667t^5+51426t^4+101007t^3+142884t^2+131220t+59049",
    "(t^2+2t+9)(t^4+9t^3+37t^2+81t+81)^2",
    "t^10+20t^9+200t^8+1299t^7+6030t^6+20843t^5+54270t^4+105219t^3+145800t^2+131220t+59049",
    "(t+3)^2(t^2+5t+9)(t^6+9t^5+49t^4+177t^3+441t^2+729t+729)",
    "t^10+20t^9+194t^8+1210t^7+5433t^6+18539t^5+48897t^4+98010t^3+141426t^2+131220t+59049",
    "(t^2+2t+9)(t^4+9t^3+37t^2+81t+81)^2",
];

/// Maximal trigonal quintics over GF(3).
pub const TRIGONAL_F3: [(SingType, u8, &str); 18] = [
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + x^3 y^2"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + 2 x^4 y + x^3 y^2 + x^2 y^3"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + x^4 y + x^3 y^2 + 2 x^2 y^3"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + x^4 y + x^3 y^2 + 2 x^2 y^3"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + x y^4"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + 2 x^4 y + x^2 y^3 + x y^4"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + 2 x^4 y + x^2 y^3 + x y^4"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + x^4 y + 2 x^2 y^3 + x y^4"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (2 x^2 y^2 + 2 x y^3 + y^4) z + 2 x^5 + 2 x^3 y^2 + 2 x y^4"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + (x^2 y^2 + 2 x y^3 + 2 y^4) z + 2 x^5 + 2 x^4 y + 2 x^3 y^2 + x^2 y^3 + 2 x y^4"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + 2 x y^3 z + 2 x^5 + x^3 y^2 + 2 x^2 y^3 + y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + 2 x y^3 z + 2 x^5 + 2 x^4 y + x y^4 + y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + 2 x y^3 z + 2 x^5 + x^4 y + x^2 y^3 + x y^4 + y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + 2 x y^3 z + 2 x^5 + 2 x^2 y^3 + x y^4 + y^5"),
    (SingType::Split, 1, "x y z^3 + (x^3 + x^2 y + 2 x y^2 + 2 y^3) z^2 + 2 x y^3 z + 2 x^5 + x^4 y + 2 x^3 y^2 + x^2 y^3 + 2 x y^4 + y^5"),
    (SingType::Cusp, 1, "x^2 z^3 + (x^2 y + 2 y^3) z^2 + 2 x^4 z + 2 x^2 y^3 + y^5"),
    (SingType::Cusp, 1, "x^2 z^3 + (x^2 y + 2 y^3) z^2 + 2 x^4 z + 2 x^4 y + 2 x^3 y^2 + x y^4 + y^5"),
    (SingType::Cusp, 1, "x^2 z^3 + (x^2 y + 2 y^3) z^2 + 2 x^4 z + 2 x^4 y + x^3 y^2 + 2 x y^4 + y^5"),
];

pub const TRIGONAL_F3_CLASSES: [&[usize]; 9] = [
    &[1, 8],
    &[2, 13],
    &[3],
    &[4, 15],
    &[5, 11],
    &[6, 9],
    &[7, 14],
    &[10, 12],
    &[16, 17, 18],
];

pub fn quintic(entry: &(SingType, u8, &str)) -> QuinticModel {
    let coeffs = parse_poly(entry.2).unwrap().to_quintic().unwrap();
    QuinticModel { sing: entry.0, case: entry.1, coeffs }
}

pub fn trigonal_f9() -> Vec<QuinticModel> {
    TRIGONAL_F9.iter().map(quintic).collect()
}

pub fn trigonal_f3() -> Vec<QuinticModel> {
    TRIGONAL_F3.iter().map(quintic).collect()
}

/// `c y^2 = f(x)` from a univariate expression.
pub fn hyper(c: u8, f: &str) -> HyperModel {
    let v = parse_poly(f).unwrap().to_univariate_x().unwrap();
    let mut arr = [0u8; 13];
    arr[..v.len()].copy_from_slice(&v);
    HyperModel::from_f(c, &arr).unwrap()
}

/// Hyperelliptic curves with 20 points over GF(9), with their Weil
/// polynomials over GF(9).
pub const HYPER_F9: [(&str, &str); 2] = [
    ("x^12 + x^11 + 2x^7 + x^5 + 2x + 1", "(t+3)^2 (t^2+9)^2 (t^2+2t+9)^2"),
    (
        "x^12 + x^11 + 2x^4 + 2x^3 + 2",
        "t^10 + 10t^9 + 51t^8 + 212t^7 + 837t^6 + 2810t^5 + 7533t^4 + 17172t^3 + 37179t^2 + 65610t + 59049",
    ),
];

/// Hyperelliptic curves with 8 points over GF(3).
pub const HYPER_F3: [&str; 2] = [
    "x^12 + x^11 + 2x^2 + 2x + 1",
    "x^12 + x^11 + x^3 + 2x^2 + x + 1",
];

/// Schoolbook product of two polynomial-basis indices modulo `modulus`
/// (lowest degree first, monic of degree `e`).
pub fn oracle_mul(a: u32, b: u32, modulus: &[u8], e: usize) -> u32 {
    let digits = |mut v: u32| {
        let mut d = vec![0u32; e];
        for x in d.iter_mut() {
            *x = v % 3;
            v /= 3;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let mut prod = vec![0u32; 2 * e];
    for i in 0..e {
        for j in 0..e {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % 3;
        }
    }
    for k in (e..2 * e).rev() {
        let c = prod[k];
        if c != 0 {
            for (i, &m) in modulus.iter().enumerate().take(e) {
                prod[k - e + i] = (prod[k - e + i] + 3 * 3 - c * m as u32) % 3;
            }
            prod[k] = 0;
        }
    }
    prod[..e].iter().rev().fold(0, |acc, &d| acc * 3 + d)
}

/// Points of `V(F)` over GF(3^e) by evaluating every monomial at every
/// point of the plane.
pub fn naive_plane_count(coeffs: &[u8; 21], e: u32) -> u64 {
    use curve_census::field::field;
    use curve_census::forms::QUINTIC_MONOMIALS;
    let k = field(e).unwrap();
    let (zero, one) = (k.zero(), k.one());
    let mut pts = vec![[one, zero, zero]];
    for x in k.elements() {
        pts.push([x, one, zero]);
        for y in k.elements() {
            pts.push([x, y, one]);
        }
    }
    pts.iter()
        .filter(|p| {
            let mut s = zero;
            for (&c, &(i, j, l)) in coeffs.iter().zip(QUINTIC_MONOMIALS.iter()) {
                if c != 0 {
                    let t = k.mul(k.mul(k.pow(p[0], i as u64), k.pow(p[1], j as u64)), k.pow(p[2], l as u64));
                    s = k.add(s, k.scale(c, t));
                }
            }
            s.is_zero()
        })
        .count() as u64
}
