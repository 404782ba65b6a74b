//! Arithmetic in GF(3^e) for `1 <= e <= 12`.
//!
//! A [`FieldCtx`] is built once per extension degree and is immutable
//! afterwards. The modulus is the smallest monic irreducible polynomial of
//! degree `e` (non-leading coefficients read as a base-3 number, constant term
//! least significant) and the primitive element `zeta` is the smallest element
//! of multiplicative order `q - 1` in the same order.
//!
//! For `q <= 3^10` elements are stored as discrete-log indices and addition
//! goes through a Zech-logarithm table: the encoding is `0` for zero and
//! `k + 1` for `zeta^k`. Larger fields fall back to the polynomial basis, with
//! an element encoded by its base-3 coefficient index. In both cases two
//! elements of one context are equal iff their encodings are equal.

mod roots;
mod trits;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub use roots::count_poly_roots;

/// Largest extension degree served by log/Zech tables.
pub const MAX_TABLE_DEGREE: u32 = 10;
/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("extension degree {0} outside 1..=12")]
    DegreeOutOfRange(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element encoding {value} does not belong to GF(3^{degree})")]
    ForeignElement { value: u32, degree: u32 },
}

/// An element of some GF(3^e); only meaningful together with its [`FieldCtx`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElem(pub(crate) u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);

    /// Raw encoding (see the module docs).
    #[inline]
    pub fn raw(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({})", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(u64),
}

#[derive(Debug)]
struct LogTables {
    /// `exp[k]` = polynomial-basis index of `zeta^k`.
    exp: Vec<u32>,
    /// `log[i]` = k with `zeta^k` having index `i` (entry 0 unused).
    log: Vec<u32>,
    /// `zech[d]` = encoding of `1 + zeta^d`.
    zech: Vec<u32>,
}

#[derive(Debug)]
pub struct FieldCtx {
    degree: u32,
    order: u32,
    modulus: Vec<u8>,
    zeta_index: u32,
    tables: Option<LogTables>,
    orbits: OnceLock<Vec<(FieldElem, u32)>>,
}

impl FieldCtx {
    /// Builds GF(3^e).
    pub fn new(e: u32) -> Result<FieldCtx, FieldError> {
        if !(1..=MAX_DEGREE).contains(&e) {
            return Err(FieldError::DegreeOutOfRange(e));
        }
        let ed = e as usize;
        let order = 3u32.pow(e);
        let n = (order - 1) as u64;
        let modulus = trits::smallest_irreducible(ed);
        let primes = trits::distinct_prime_factors(n);
        let mut one = [0u8; trits::MAX_DEGREE];
        one[0] = 1;
        let zeta_index = (1..order)
            .find(|&idx| {
                let t = trits::index_to_trits(idx, ed);
                if trits::pow(&t, n, &modulus, ed) != one {
                    return false;
                }
                primes
                    .iter()
                    .all(|&p| trits::pow(&t, n / p, &modulus, ed) != one)
            })
            .expect("the multiplicative group of a finite field is cyclic");

        let tables = (e <= MAX_TABLE_DEGREE).then(|| {
            let zeta = trits::index_to_trits(zeta_index, ed);
            let mut exp = Vec::with_capacity(n as usize);
            let mut log = vec![0u32; order as usize];
            let mut cur = one;
            for k in 0..n as u32 {
                let idx = trits::trits_to_index(&cur, ed);
                exp.push(idx);
                log[idx as usize] = k;
                cur = trits::mul(&cur, &zeta, &modulus, ed);
            }
            let zech = exp
                .iter()
                .map(|&idx| {
                    let sum = trits::add(&trits::index_to_trits(idx, ed), &one, ed);
                    let sidx = trits::trits_to_index(&sum, ed);
                    if sidx == 0 {
                        0
                    } else {
                        log[sidx as usize] + 1
                    }
                })
                .collect();
            LogTables { exp, log, zech }
        });

        Ok(FieldCtx {
            degree: e,
            order,
            modulus,
            zeta_index,
            tables,
            orbits: OnceLock::new(),
        })
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of elements `q = 3^e`.
    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        3
    }

    /// Defining polynomial, lowest degree first, monic of degree `e`.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn uses_log_tables(&self) -> bool {
        self.tables.is_some()
    }

    #[inline]
    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    /// The fixed primitive element.
    pub fn primitive(&self) -> FieldElem {
        self.from_index(self.zeta_index)
    }

    /// Embeds an integer modulo 3 as a constant of the field.
    #[inline]
    pub fn embed(&self, v: u8) -> FieldElem {
        match v % 3 {
            0 => FieldElem(0),
            1 => FieldElem(1),
            _ => self.minus_one(),
        }
    }

    #[inline]
    pub fn minus_one(&self) -> FieldElem {
        match self.tables {
            Some(_) => FieldElem((self.order - 1) / 2 + 1),
            None => FieldElem(2),
        }
    }

    /// Whether the encoding denotes an element of this field.
    #[inline]
    pub fn contains(&self, a: FieldElem) -> bool {
        a.0 < self.order
    }

    fn check(&self, a: FieldElem) -> Result<(), FieldError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(FieldError::ForeignElement {
                value: a.0,
                degree: self.degree,
            })
        }
    }

    /// Builds an element from its polynomial-basis index.
    pub fn from_index(&self, index: u32) -> FieldElem {
        debug_assert!(index < self.order);
        match &self.tables {
            Some(t) => {
                if index == 0 {
                    FieldElem(0)
                } else {
                    FieldElem(t.log[index as usize] + 1)
                }
            }
            None => FieldElem(index),
        }
    }

    /// Polynomial-basis index of an element.
    pub fn to_index(&self, a: FieldElem) -> u32 {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 {
                    0
                } else {
                    t.exp[(a.0 - 1) as usize]
                }
            }
            None => a.0,
        }
    }

    /// Element with the given polynomial-basis coefficients (lowest first).
    /// Coefficients beyond degree `e - 1` are reduced by the modulus.
    pub fn from_trits(&self, coeffs: &[u8]) -> FieldElem {
        let e = self.degree as usize;
        if coeffs.len() <= e {
            let mut t = [0u8; trits::MAX_DEGREE];
            for (slot, &c) in t.iter_mut().zip(coeffs) {
                *slot = c % 3;
            }
            return self.from_index(trits::trits_to_index(&t, e));
        }
        let x = self.from_trits(&[0, 1]);
        coeffs
            .iter()
            .rev()
            .fold(self.zero(), |acc, &c| self.add(self.mul(acc, x), self.embed(c)))
    }

    pub fn to_trits(&self, a: FieldElem) -> Vec<u8> {
        let e = self.degree as usize;
        trits::index_to_trits(self.to_index(a), e)[..e].to_vec()
    }

    /// Discrete logarithm to base `zeta`; `None` for zero.
    pub fn log(&self, a: FieldElem) -> Option<u32> {
        if a.0 == 0 {
            return None;
        }
        match &self.tables {
            Some(_) => Some(a.0 - 1),
            None => {
                let z = self.primitive();
                let mut cur = self.one();
                (0..self.order - 1).find(|_| {
                    let hit = cur == a;
                    cur = self.mul(cur, z);
                    hit
                })
            }
        }
    }

    /// `zeta^k`.
    pub fn zeta_pow(&self, k: u64) -> FieldElem {
        let n = (self.order - 1) as u64;
        match self.tables {
            Some(_) => FieldElem((k % n) as u32 + 1),
            None => self.pow(self.primitive(), k % n),
        }
    }

    /// Sort key realising the element order used by canonical forms:
    /// zero first, then ascending discrete-log index.
    #[inline]
    pub fn order_key(&self, a: FieldElem) -> u32 {
        match self.tables {
            Some(_) => a.0,
            None => self.log(a).map_or(0, |k| k + 1),
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 {
                    return b;
                }
                if b.0 == 0 {
                    return a;
                }
                let n = self.order - 1;
                let d = if b.0 >= a.0 { b.0 - a.0 } else { b.0 + n - a.0 };
                let z = t.zech[d as usize];
                if z == 0 {
                    return FieldElem(0);
                }
                let s = a.0 + z - 2;
                FieldElem(if s >= n { s - n } else { s } + 1)
            }
            None => {
                let e = self.degree as usize;
                let r = trits::add(
                    &trits::index_to_trits(a.0, e),
                    &trits::index_to_trits(b.0, e),
                    e,
                );
                FieldElem(trits::trits_to_index(&r, e))
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        match self.tables {
            Some(_) => {
                if a.0 == 0 {
                    return a;
                }
                let n = self.order - 1;
                let s = a.0 - 1 + n / 2;
                FieldElem(if s >= n { s - n } else { s } + 1)
            }
            None => {
                let e = self.degree as usize;
                let r = trits::neg(&trits::index_to_trits(a.0, e), e);
                FieldElem(trits::trits_to_index(&r, e))
            }
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        match self.tables {
            Some(_) => {
                if a.0 == 0 || b.0 == 0 {
                    return FieldElem(0);
                }
                let n = self.order - 1;
                let s = a.0 + b.0 - 2;
                FieldElem(if s >= n { s - n } else { s } + 1)
            }
            None => {
                let e = self.degree as usize;
                let r = trits::mul(
                    &trits::index_to_trits(a.0, e),
                    &trits::index_to_trits(b.0, e),
                    &self.modulus,
                    e,
                );
                FieldElem(trits::trits_to_index(&r, e))
            }
        }
    }

    /// Multiplication by an F3 constant given as 0, 1 or 2.
    #[inline]
    pub fn scale(&self, c: u8, a: FieldElem) -> FieldElem {
        match c % 3 {
            0 => FieldElem(0),
            1 => a,
            _ => self.neg(a),
        }
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self.tables {
            Some(_) => {
                let n = self.order - 1;
                FieldElem(if a.0 == 1 { 1 } else { n - (a.0 - 1) + 1 })
            }
            None => self.pow(a, (self.order - 2) as u64),
        })
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElem, exp: u64) -> FieldElem {
        if exp == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return a;
        }
        if self.tables.is_some() {
            let n = (self.order - 1) as u64;
            let k = ((a.0 - 1) as u64 * (exp % n)) % n;
            return FieldElem(k as u32 + 1);
        }
        let mut result = self.one();
        let mut base = a;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Checked arithmetic entry point: validates operands first.
    pub fn arith(&self, a: FieldElem, b: FieldElem, op: ArithOp) -> Result<FieldElem, FieldError> {
        self.check(a)?;
        if !matches!(op, ArithOp::Pow(_)) {
            self.check(b)?;
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
            ArithOp::Pow(k) => self.pow(a, k),
        })
    }

    /// `a^((q-1)/2)` is 0 or 1. Zero counts as a square.
    #[inline]
    pub fn is_square(&self, a: FieldElem) -> bool {
        match self.tables {
            // a^((q-1)/2) = zeta^(k (q-1)/2) is 1 iff k is even
            Some(_) => a.0 == 0 || (a.0 - 1) % 2 == 0,
            None => {
                let r = self.pow(a, ((self.order - 1) / 2) as u64);
                r.0 == 0 || r == self.one()
            }
        }
    }

    /// Quadratic character: 0 at zero, 1 on nonzero squares, -1 otherwise.
    #[inline]
    pub fn chi(&self, a: FieldElem) -> i32 {
        if a.0 == 0 {
            0
        } else if self.is_square(a) {
            1
        } else {
            -1
        }
    }

    /// Cube map (the Frobenius of characteristic 3).
    #[inline]
    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow(a, 3)
    }

    /// Unique cube root (Frobenius is bijective on a finite field of char 3).
    pub fn cube_root(&self, a: FieldElem) -> FieldElem {
        self.pow(a, 3u64.pow(self.degree - 1))
    }

    /// Every element once, in encoding order. For tabled fields this is zero
    /// followed by ascending discrete log.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.order).map(FieldElem)
    }

    /// Nonzero elements.
    pub fn units(&self) -> impl Iterator<Item = FieldElem> {
        self.elements().filter(|a| a.0 != 0)
    }

    /// Representatives of the orbits of `a -> a^3` on the field, each paired
    /// with the size of its orbit. Orbit sizes sum to `q`.
    pub fn frobenius_orbits(&self) -> Vec<(FieldElem, u32)> {
        let mut seen = vec![false; self.order as usize];
        let mut out = Vec::new();
        for a in self.elements() {
            if seen[a.0 as usize] {
                continue;
            }
            let mut size = 0;
            let mut cur = a;
            loop {
                seen[cur.0 as usize] = true;
                size += 1;
                cur = self.frobenius(cur);
                if cur == a {
                    break;
                }
            }
            out.push((a, size));
        }
        out
    }

    /// Cached [`FieldCtx::frobenius_orbits`].
    pub fn orbit_reps(&self) -> &[(FieldElem, u32)] {
        self.orbits.get_or_init(|| self.frobenius_orbits())
    }
}

/// Shared, lazily built field contexts for every supported degree.
pub fn field(e: u32) -> Result<&'static FieldCtx, FieldError> {
    static CACHE: [OnceLock<FieldCtx>; MAX_DEGREE as usize] = [const { OnceLock::new() }; 12];
    if !(1..=MAX_DEGREE).contains(&e) {
        return Err(FieldError::DegreeOutOfRange(e));
    }
    Ok(CACHE[(e - 1) as usize].get_or_init(|| FieldCtx::new(e).expect("degree checked")))
}
