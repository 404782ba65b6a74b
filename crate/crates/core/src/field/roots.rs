//! Counting distinct roots of low-degree polynomials via `gcd(X^q - X, f)`.

use super::{FieldCtx, FieldElem};

fn trim(ctx: &FieldCtx, p: &mut Vec<FieldElem>) {
    while p.last().is_some_and(|c| *c == ctx.zero()) {
        p.pop();
    }
}

/// Makes `p` monic in place; `p` must be nonzero.
fn make_monic(ctx: &FieldCtx, p: &mut [FieldElem]) {
    let lead = *p.last().expect("nonzero polynomial");
    let inv = ctx.inv(lead).expect("leading coefficient is nonzero");
    for c in p.iter_mut() {
        *c = ctx.mul(*c, inv);
    }
}

/// `a mod m` for monic `m`.
fn rem_monic(ctx: &FieldCtx, a: &mut Vec<FieldElem>, m: &[FieldElem]) {
    let dm = m.len() - 1;
    while a.len() > dm {
        let top = *a.last().unwrap();
        let shift = a.len() - 1 - dm;
        if top != ctx.zero() {
            for (i, &c) in m.iter().enumerate() {
                a[shift + i] = ctx.sub(a[shift + i], ctx.mul(top, c));
            }
        }
        a.pop();
    }
    trim(ctx, a);
}

fn mul_mod(ctx: &FieldCtx, a: &[FieldElem], b: &[FieldElem], m: &[FieldElem]) -> Vec<FieldElem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![ctx.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == ctx.zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ctx.add(prod[i + j], ctx.mul(x, y));
        }
    }
    rem_monic(ctx, &mut prod, m);
    prod
}

fn gcd_degree(ctx: &FieldCtx, mut a: Vec<FieldElem>, mut b: Vec<FieldElem>) -> usize {
    trim(ctx, &mut a);
    trim(ctx, &mut b);
    while !b.is_empty() {
        make_monic(ctx, &mut b);
        rem_monic(ctx, &mut a, &b);
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Number of distinct roots in the field of the polynomial with the given
/// coefficients (lowest degree first).
///
/// The zero polynomial has `q` roots and a nonzero constant none. Otherwise
/// the answer is `deg gcd(X^q - X, f)`, with `X^q mod f` computed by
/// square-and-multiply.
pub fn count_poly_roots(ctx: &FieldCtx, coeffs: &[FieldElem]) -> u64 {
    let mut f = coeffs.to_vec();
    trim(ctx, &mut f);
    match f.len() {
        0 => return ctx.order() as u64,
        1 => return 0,
        2 => return 1,
        _ => {}
    }
    make_monic(ctx, &mut f);

    let x = vec![ctx.zero(), ctx.one()];
    let mut result = vec![ctx.one()];
    let mut base = x.clone();
    rem_monic(ctx, &mut base, &f);
    let mut exp = ctx.order() as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(ctx, &result, &base, &f);
        }
        exp >>= 1;
        if exp > 0 {
            base = mul_mod(ctx, &base, &base, &f);
        }
    }
    // X^q - X mod f
    if result.len() < 2 {
        result.resize(2, ctx.zero());
    }
    result[1] = ctx.sub(result[1], ctx.one());
    gcd_degree(ctx, f, result) as u64
}
