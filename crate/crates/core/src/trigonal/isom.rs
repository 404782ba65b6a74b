//! Isomorphism testing for reduced quintics over GF(3) and GF(9).
//!
//! Both curves have a unique singular point at `(0:0:1)`, so any isomorphism
//! of the plane models fixes it and lies in the stabilizer
//! `[[h, 0], [l1, l2, s]]`. Up to scalars `s = 1`.

use crate::field::{FieldCtx, FieldElem};
use crate::forms::{act_binary, act_gl3, Mat2, Mat3};

use super::count::check_ext;
use super::QuinticModel;
use super::TrigonalError;

fn bmul(ctx: &FieldCtx, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    let mut out = vec![ctx.zero(); a.len() + b.len() - 1];
    for (i, &u) in a.iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for (j, &v) in b.iter().enumerate() {
            out[i + j] = ctx.add(out[i + j], ctx.mul(u, v));
        }
    }
    out
}

fn badd(ctx: &FieldCtx, a: &[FieldElem], b: &[FieldElem]) -> Vec<FieldElem> {
    a.iter().zip(b).map(|(&u, &v)| ctx.add(u, v)).collect()
}

fn scaled_eq(ctx: &FieldCtx, a: &[FieldElem], lambda: FieldElem, b: &[FieldElem]) -> bool {
    a.iter().zip(b).all(|(&u, &v)| u == ctx.mul(lambda, v))
}

fn ctx_for(e: u32) -> Result<&'static FieldCtx, TrigonalError> {
    if e > 2 {
        return Err(TrigonalError::UnsupportedField(e));
    }
    check_ext(e)
}

/// A matrix `M` fixing `(0:0:1)` and a scalar `lambda` with
/// `M . F1 = lambda F2`, if one exists over `GF(3^e)`.
pub fn trigonal_isomorphism_witness(
    m1: &QuinticModel,
    m2: &QuinticModel,
    e: u32,
) -> Result<Option<(Mat3, FieldElem)>, TrigonalError> {
    let ctx = ctx_for(e)?;
    let lay = |m: &QuinticModel| -> [Vec<FieldElem>; 4] {
        [3, 2, 1, 0].map(|k| m.layer(k).iter().map(|&c| ctx.embed(c)).collect())
    };
    let [q1, f21, f11, f01] = lay(m1);
    let [q2, f22, f12, f02] = lay(m2);
    let Some(pivot) = q2.iter().position(|c| !c.is_zero()) else {
        return Ok(None);
    };
    let elems: Vec<FieldElem> = ctx.elements().collect();
    for h in Mat2::general_linear(ctx) {
        let qh = act_binary(ctx, &h, &q1);
        let Ok(lambda) = ctx.div(qh[pivot], q2[pivot]) else { continue };
        if lambda.is_zero() || !scaled_eq(ctx, &qh, lambda, &q2) {
            continue;
        }
        let f2h = act_binary(ctx, &h, &f21);
        if !scaled_eq(ctx, &f2h, lambda, &f22) {
            continue;
        }
        let f1h = act_binary(ctx, &h, &f11);
        let f0h = act_binary(ctx, &h, &f01);
        for &l1 in &elems {
            for &l2 in &elems {
                // ascending in x: l = l2 y + l1 x
                let l = [l2, l1];
                let two_l = [ctx.scale(2, l2), ctx.scale(2, l1)];
                let z1 = badd(ctx, &bmul(ctx, &two_l, &f2h), &f1h);
                if !scaled_eq(ctx, &z1, lambda, &f12) {
                    continue;
                }
                let l2p = bmul(ctx, &l, &l);
                let l3p = bmul(ctx, &l2p, &l);
                let z0 = [
                    bmul(ctx, &qh, &l3p),
                    bmul(ctx, &f2h, &l2p),
                    bmul(ctx, &f1h, &l),
                    f0h.clone(),
                ]
                .iter()
                .fold(vec![ctx.zero(); 6], |acc, v| badd(ctx, &acc, v));
                if scaled_eq(ctx, &z0, lambda, &f02) {
                    return Ok(Some((Mat3::point_stabilizer(ctx, &h, l1, l2, ctx.one()), lambda)));
                }
            }
        }
    }
    Ok(None)
}

/// Witness search over all of `PGL3(GF(3))`, without using the singular
/// point.
pub fn trigonal_isomorphism_witness_full(
    m1: &QuinticModel,
    m2: &QuinticModel,
) -> Result<Option<(Mat3, FieldElem)>, TrigonalError> {
    let ctx = ctx_for(1)?;
    let f1 = m1.quintic(ctx);
    let f2 = m2.quintic(ctx);
    for m in Mat3::projective_representatives(ctx) {
        let g = act_gl3(ctx, &m, &f1).expect("invertible");
        for lambda in ctx.units() {
            if g.coeffs() == f2.scale(ctx, lambda).coeffs() {
                return Ok(Some((m, lambda)));
            }
        }
    }
    Ok(None)
}

pub fn trigonal_isomorphic(m1: &QuinticModel, m2: &QuinticModel, e: u32) -> Result<bool, TrigonalError> {
    Ok(trigonal_isomorphism_witness(m1, m2, e)?.is_some())
}
