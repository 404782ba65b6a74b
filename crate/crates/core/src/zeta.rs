//! Weil polynomials from point counts and back.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZetaError {
    #[error("Newton identity at step {0} has no integral solution")]
    NonIntegral(usize),
    #[error("128-bit overflow")]
    Overflow,
    #[error("Weil polynomials over different base fields")]
    MixedBase,
    #[error("base field order must be at least 2, got {0}")]
    InvalidBase(i128),
    #[error("need at least one point count")]
    NoCounts,
}

/// `W(t) = t^(2g) + a_1 t^(2g-1) + ... + a_(2g)` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeilPoly {
    pub q: i128,
    /// `[1, a_1, .., a_(2g)]`
    pub coeffs: Vec<i128>,
}

fn checked_pow(q: i128, e: usize) -> Result<i128, ZetaError> {
    q.checked_pow(e as u32).ok_or(ZetaError::Overflow)
}

impl WeilPoly {
    pub fn new(q: i128, coeffs: Vec<i128>) -> Self {
        WeilPoly { q, coeffs }
    }

    pub fn genus(&self) -> usize {
        (self.coeffs.len() - 1) / 2
    }

    /// `a_(2g-i) = q^(g-i) a_i` for `i = 0..g`.
    pub fn satisfies_functional_equation(&self) -> bool {
        let g = self.genus();
        (0..g).all(|i| {
            checked_pow(self.q, g - i)
                .ok()
                .and_then(|p| p.checked_mul(self.coeffs[i]))
                .is_some_and(|v| v == self.coeffs[2 * g - i])
        })
    }

    /// Distinct complex roots, each computed on the square-free part.
    pub fn roots(&self) -> Vec<Complex64> {
        let poly: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let g = rat_gcd(&poly, &rat_derivative(&poly));
        let radical = rat_div_exact(&poly, &g);
        let approx: Vec<f64> = radical.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
        durand_kerner(&approx, (self.q as f64).sqrt())
    }

    /// Largest deviation of `|alpha|` from `sqrt q` over all roots.
    pub fn root_modulus_deviation(&self) -> f64 {
        let r = (self.q as f64).sqrt();
        self.roots()
            .iter()
            .map(|z| (z.norm() - r).abs())
            .fold(0.0, f64::max)
    }

    /// Product of small integer factors, e.g. `(t + 3)^2 (t^2 + 9)^2`.
    pub fn factored(&self) -> String {
        factor_display(&self.coeffs, self.q)
    }
}

impl std::fmt::Display for WeilPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&poly_display(&self.coeffs))
    }
}

/// Weil polynomial of a genus-`g` curve from `N_1 .. N_g` over `F_q`
/// (`g = counts.len()`).
pub fn weil_from_counts(q: i128, counts: &[i128]) -> Result<WeilPoly, ZetaError> {
    if q < 2 {
        return Err(ZetaError::InvalidBase(q));
    }
    let g = counts.len();
    if g == 0 {
        return Err(ZetaError::NoCounts);
    }
    let mut p = vec![0i128; g + 1];
    for e in 1..=g {
        p[e] = 1i128
            .checked_add(checked_pow(q, e)?)
            .and_then(|v| v.checked_sub(counts[e - 1]))
            .ok_or(ZetaError::Overflow)?;
    }
    let mut a = vec![0i128; 2 * g + 1];
    a[0] = 1;
    for k in 1..=g {
        let mut s = p[k];
        for i in 1..k {
            s = a[i]
                .checked_mul(p[k - i])
                .and_then(|t| s.checked_add(t))
                .ok_or(ZetaError::Overflow)?;
        }
        if s % k as i128 != 0 {
            return Err(ZetaError::NonIntegral(k));
        }
        a[k] = -s / k as i128;
    }
    for i in 0..g {
        a[2 * g - i] = checked_pow(q, g - i)?
            .checked_mul(a[i])
            .ok_or(ZetaError::Overflow)?;
    }
    let w = WeilPoly::new(q, a);
    debug_assert!(w.satisfies_functional_equation());
    Ok(w)
}

/// `N_1 .. N_(e_max)` from the Newton recurrence.
pub fn predict_counts(w: &WeilPoly, e_max: usize) -> Result<Vec<i128>, ZetaError> {
    let n = w.coeffs.len() - 1;
    let a = &w.coeffs;
    let mut p = vec![0i128; e_max + 1];
    let mut out = Vec::with_capacity(e_max);
    for k in 1..=e_max {
        let mut s: i128 = if k <= n {
            (k as i128).checked_mul(a[k]).ok_or(ZetaError::Overflow)?
        } else {
            0
        };
        for i in 1..k.min(n + 1) {
            s = a[i]
                .checked_mul(p[k - i])
                .and_then(|t| s.checked_add(t))
                .ok_or(ZetaError::Overflow)?;
        }
        p[k] = -s;
        out.push(
            1i128
                .checked_add(checked_pow(w.q, k)?)
                .and_then(|v| v.checked_sub(p[k]))
                .ok_or(ZetaError::Overflow)?,
        );
    }
    Ok(out)
}

/// Number of distinct Weil polynomials.
pub fn count_isogeny_classes(list: &[WeilPoly]) -> Result<usize, ZetaError> {
    if let Some(first) = list.first() {
        if list.iter().any(|w| w.q != first.q) {
            return Err(ZetaError::MixedBase);
        }
    }
    let mut v: Vec<&Vec<i128>> = list.iter().map(|w| &w.coeffs).collect();
    v.sort();
    v.dedup();
    Ok(v.len())
}

/// `N <= q + 1 + 2 g sqrt q`, decided in integers.
pub fn hasse_weil_check(n: i128, q: i128, g: i128) -> bool {
    let d = n - q - 1;
    d <= 0 || d * d <= 4 * g * g * q
}

// ---- exact rational helpers, coefficients highest degree first ----

fn rat_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
    }
}

fn rat_derivative(p: &[BigRational]) -> Vec<BigRational> {
    let n = p.len() - 1;
    let mut out: Vec<BigRational> = p[..n]
        .iter()
        .enumerate()
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(n - i)))
        .collect();
    if out.is_empty() {
        out.push(BigRational::zero());
    }
    out
}

fn rat_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in 0..q.len() {
        let c = &r[i] / &b[0];
        for (j, bj) in b.iter().enumerate() {
            r[i + j] = &r[i + j] - &c * bj;
        }
        q[i] = c;
    }
    let mut rem = r[q.len()..].to_vec();
    if rem.is_empty() {
        rem.push(BigRational::zero());
    }
    rat_trim(&mut rem);
    (q, rem)
}

fn rat_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    rat_trim(&mut x);
    rat_trim(&mut y);
    while !(y.len() == 1 && y[0].is_zero()) {
        let (_, r) = rat_divmod(&x, &y);
        x = y;
        y = r;
    }
    let lead = x[0].clone();
    x.iter().map(|c| c / &lead).collect()
}

fn rat_div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let (q, r) = rat_divmod(a, b);
    debug_assert!(r.iter().all(|c| c.is_zero()));
    q
}

/// Simultaneous root iteration on a monic-normalizable polynomial, highest
/// degree first, followed by Newton polishing.
fn durand_kerner(p: &[f64], radius: f64) -> Vec<Complex64> {
    let n = p.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = p[0];
    let c: Vec<Complex64> = p.iter().map(|&v| Complex64::new(v / lead, 0.0)).collect();
    let eval = |z: Complex64| c.iter().fold(Complex64::zero(), |acc, &k| acc * z + k);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::one();
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 * radius.max(1.0) {
            break;
        }
    }
    let dc: Vec<Complex64> = c[..n]
        .iter()
        .enumerate()
        .map(|(i, &k)| k * (n - i) as f64)
        .collect();
    let deval = |z: Complex64| dc.iter().fold(Complex64::zero(), |acc, &k| acc * z + k);
    for r in roots.iter_mut() {
        for _ in 0..5 {
            let d = deval(*r);
            if d.norm() == 0.0 {
                break;
            }
            *r -= eval(*r) / d;
        }
    }
    roots
}

// ---- display ----

fn term(c: i128, deg: usize, first: bool) -> String {
    let sign = if c < 0 {
        if first {
            "-"
        } else {
            " - "
        }
    } else if first {
        ""
    } else {
        " + "
    };
    let a = c.abs();
    let body = match (deg, a) {
        (0, _) => a.to_string(),
        (1, 1) => "t".to_string(),
        (1, _) => format!("{a}t"),
        (_, 1) => format!("t^{deg}"),
        _ => format!("{a}t^{deg}"),
    };
    format!("{sign}{body}")
}

/// `[1, a_1, ..]` highest degree first.
fn poly_display(coeffs: &[i128]) -> String {
    let n = coeffs.len() - 1;
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            out.push_str(&term(c, n - i, out.is_empty()));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Exact division by a monic integer polynomial, highest degree first.
fn int_div_monic(a: &[i128], b: &[i128]) -> Option<Vec<i128>> {
    let db = b.len() - 1;
    if a.len() <= db {
        return None;
    }
    let mut r = a.to_vec();
    let mut q = vec![0i128; a.len() - db];
    for i in 0..q.len() {
        let c = r[i];
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
        q[i] = c;
    }
    r[q.len()..].iter().all(|&v| v == 0).then_some(q)
}

fn int_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Monic integer square root of a monic polynomial, if it exists.
fn int_sqrt_poly(p: &[i128]) -> Option<Vec<i128>> {
    let n = p.len() - 1;
    if n == 0 || n % 2 != 0 || p[0] != 1 {
        return None;
    }
    let m = n / 2;
    let mut r = vec![0i128; m + 1];
    r[0] = 1;
    for k in 1..=m {
        // coefficient of t^(n-k) in r^2 is 2 r_k + sum_{0<i<k} r_i r_(k-i)
        let s: i128 = (1..k).map(|i| r[i] * r[k - i]).sum();
        let v = p[k] - s;
        if v % 2 != 0 {
            return None;
        }
        r[k] = v / 2;
    }
    (int_mul(&r, &r) == p).then_some(r)
}

fn isqrt(q: i128) -> Option<i128> {
    let s = (q as f64).sqrt().round() as i128;
    (s * s == q).then_some(s)
}

fn factor_display(coeffs: &[i128], q: i128) -> String {
    let mut rest = coeffs.to_vec();
    let mut candidates: Vec<Vec<i128>> = Vec::new();
    if let Some(s) = isqrt(q) {
        candidates.push(vec![1, s]);
        candidates.push(vec![1, -s]);
    }
    let bound = 2 * (q as f64).sqrt().floor() as i128;
    for a in (-bound..=bound).rev() {
        candidates.push(vec![1, a, q]);
    }
    candidates.push(vec![1, 0, -q]);
    let mut parts: Vec<(Vec<i128>, usize)> = Vec::new();
    for cand in candidates {
        let mut mult = 0;
        while let Some(next) = int_div_monic(&rest, &cand) {
            rest = next;
            mult += 1;
        }
        if mult > 0 {
            parts.push((cand, mult));
        }
    }
    if rest.len() > 1 {
        let mut base = rest.clone();
        let mut mult = 1;
        while let Some(r) = int_sqrt_poly(&base) {
            base = r;
            mult *= 2;
        }
        parts.push((base, mult));
    }
    if parts.is_empty() {
        return poly_display(coeffs);
    }
    if parts.len() == 1 && parts[0].1 == 1 {
        return poly_display(&parts[0].0);
    }
    parts
        .iter()
        .map(|(p, m)| {
            let body = format!("({})", poly_display(p));
            if *m > 1 {
                format!("{body}^{m}")
            } else {
                body
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Expands a product of integer polynomials (highest degree first).
pub fn expand_product(factors: &[(&[i128], usize)]) -> Vec<i128> {
    let mut acc = vec![1i128];
    for (f, m) in factors {
        for _ in 0..*m {
            acc = int_mul(&acc, f);
        }
    }
    acc
}

/// Parses the output of [`WeilPoly::factored`] or a plain polynomial in `t`
/// with integer coefficients. Used for fixtures and the CLI.
pub fn parse_integer_poly(src: &str) -> Option<Vec<i128>> {
    let mut out = vec![1i128];
    let s = src.replace(' ', "");
    if s.starts_with('(') {
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let close = rest.find(')')?;
            let inner = parse_plain(&rest[1..close])?;
            rest = &rest[close + 1..];
            let mut mult = 1usize;
            if let Some(r) = rest.strip_prefix('^') {
                let end = r.find('(').unwrap_or(r.len());
                mult = r[..end].parse().ok()?;
                rest = &r[end..];
            }
            for _ in 0..mult {
                out = int_mul(&out, &inner);
            }
        }
        Some(out)
    } else {
        parse_plain(&s)
    }
}

fn parse_plain(s: &str) -> Option<Vec<i128>> {
    let mut terms: Vec<(usize, i128)> = Vec::new();
    let normalized = s.replace('-', "+-");
    for tok in normalized.split('+').filter(|t| !t.is_empty()) {
        let (neg, tok) = match tok.strip_prefix('-') {
            Some(t) => (true, t),
            None => (false, tok),
        };
        let (coef, deg) = match tok.find('t') {
            None => (tok.parse::<i128>().ok()?, 0usize),
            Some(pos) => {
                let c = if pos == 0 { 1 } else { tok[..pos].trim_end_matches('*').parse().ok()? };
                let d = match tok[pos + 1..].strip_prefix('^') {
                    Some(e) => e.parse().ok()?,
                    None if pos + 1 == tok.len() => 1,
                    None => return None,
                };
                (c, d)
            }
        };
        terms.push((deg, if neg { -coef } else { coef }));
    }
    let n = terms.iter().map(|t| t.0).max()?;
    let mut out = vec![0i128; n + 1];
    for (d, c) in terms {
        out[n - d] += c;
    }
    Some(out)
}
