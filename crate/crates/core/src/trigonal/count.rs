//! Point counts of reduced quintics, fiber by fiber over the pencil of lines
//! through `(0:0:1)`.

use crate::field::{count_poly_roots, field, FieldCtx, FieldElem};

use super::{QuinticModel, SingType, TrigonalError};

const MAX_EXT: u32 = 10;

pub(super) fn check_ext(e: u32) -> Result<&'static FieldCtx, TrigonalError> {
    if !(1..=MAX_EXT).contains(&e) {
        return Err(TrigonalError::ExtensionOutOfRange(e));
    }
    Ok(field(e)?)
}

/// Layers `q, f2, f1, f0` of a model, ascending in `x`, embedded in `ctx`.
pub(super) struct Layers {
    pub(super) l: [Vec<FieldElem>; 4],
}

impl Layers {
    pub(super) fn new(ctx: &FieldCtx, m: &QuinticModel) -> Self {
        let emb = |k: usize| m.layer(k).iter().map(|&c| ctx.embed(c)).collect::<Vec<_>>();
        Layers {
            l: [emb(3), emb(2), emb(1), emb(0)],
        }
    }

    /// Cubic in `z` over the fiber `(x : 1)`, coefficients `[a, b, c, d]`
    /// of `z^3, z^2, z, 1`.
    #[inline]
    pub(super) fn fiber(&self, ctx: &FieldCtx, x: FieldElem) -> [FieldElem; 4] {
        let mut out = [ctx.zero(); 4];
        for (o, poly) in out.iter_mut().zip(&self.l) {
            *o = poly
                .iter()
                .rev()
                .fold(ctx.zero(), |acc, &c| ctx.add(ctx.mul(acc, x), c));
        }
        out
    }

    /// Cubic over the fiber `(1 : 0)`.
    #[inline]
    pub(super) fn fiber_at_infinity(&self) -> [FieldElem; 4] {
        let mut out = [FieldElem::ZERO; 4];
        for (o, poly) in out.iter_mut().zip(&self.l) {
            *o = *poly.last().expect("nonempty layer");
        }
        out
    }
}

fn trace_is_zero(ctx: &FieldCtx, t: FieldElem) -> bool {
    let mut acc = t;
    let mut cur = t;
    for _ in 1..ctx.degree() {
        cur = ctx.frobenius(cur);
        acc = ctx.add(acc, cur);
    }
    acc.is_zero()
}

/// `z^3 + c z + d`.
fn depressed_roots(ctx: &FieldCtx, c: FieldElem, d: FieldElem) -> u64 {
    if c.is_zero() {
        return 1;
    }
    let m = ctx.neg(c);
    let Some(lm) = ctx.log(m) else { return 1 };
    if lm % 2 == 1 {
        // z -> z^3 + c z is injective
        return 1;
    }
    // z = s w with s^2 = -c turns this into w^3 - w = -d / s^3
    let s = ctx.zeta_pow((lm / 2) as u64);
    let s3 = ctx.mul(s, m);
    let t = ctx.div(d, s3).expect("s nonzero");
    if trace_is_zero(ctx, t) {
        3
    } else {
        0
    }
}

/// Number of distinct roots of `a z^3 + b z^2 + c z + d` in the field.
/// The zero polynomial has `q` roots.
pub fn cubic_root_count(ctx: &FieldCtx, [a, b, c, d]: [FieldElem; 4]) -> u64 {
    if !ctx.uses_log_tables() {
        return count_poly_roots(ctx, &[d, c, b, a]);
    }
    if a.is_zero() {
        if b.is_zero() {
            return match (c.is_zero(), d.is_zero()) {
                (true, true) => ctx.order() as u64,
                (true, false) => 0,
                _ => 1,
            };
        }
        // 4 = 1 in characteristic 3
        let disc = ctx.sub(ctx.mul(c, c), ctx.mul(b, d));
        return if disc.is_zero() {
            1
        } else if ctx.is_square(disc) {
            2
        } else {
            0
        };
    }
    let ia = ctx.inv(a).expect("a nonzero");
    let (b, c, d) = (ctx.mul(b, ia), ctx.mul(c, ia), ctx.mul(d, ia));
    if b.is_zero() {
        return depressed_roots(ctx, c, d);
    }
    // z = w + c/b kills the linear term
    let t = ctx.div(c, b).expect("b nonzero");
    let t2 = ctx.mul(t, t);
    let d1 = [ctx.mul(t2, t), ctx.mul(b, t2), ctx.mul(c, t), d]
        .into_iter()
        .fold(ctx.zero(), |acc, v| ctx.add(acc, v));
    if d1.is_zero() {
        // w^2 (w + b)
        return 2;
    }
    // w = 1/u: u^3 + (b/d1) u + 1/d1
    let id1 = ctx.inv(d1).expect("d1 nonzero");
    depressed_roots(ctx, ctx.mul(b, id1), id1)
}

/// `#V(F)(GF(3^e))` for the projective plane quintic.
pub fn count_plane_quintic(model: &QuinticModel, e: u32) -> Result<u64, TrigonalError> {
    let ctx = check_ext(e)?;
    let layers = Layers::new(ctx, model);
    Ok(count_with(ctx, &layers))
}

pub(super) fn count_with(ctx: &FieldCtx, layers: &Layers) -> u64 {
    let mut total = 1 + cubic_root_count(ctx, layers.fiber_at_infinity());
    for &(x, size) in ctx.orbit_reps() {
        total += size as u64 * cubic_root_count(ctx, layers.fiber(ctx, x));
    }
    total
}

/// Point count by evaluating `F` at every point of the plane.
pub fn count_plane_quintic_naive(model: &QuinticModel, e: u32) -> Result<u64, TrigonalError> {
    let ctx = check_ext(e)?;
    let f = model.quintic(ctx);
    let one = ctx.one();
    let zero = ctx.zero();
    let mut n = 0;
    for x in ctx.elements() {
        for y in ctx.elements() {
            n += f.eval(ctx, x, y, one).is_zero() as u64;
        }
        n += f.eval(ctx, x, one, zero).is_zero() as u64;
    }
    n += f.eval(ctx, one, zero, zero).is_zero() as u64;
    Ok(n)
}

/// Points on the normalization: the node contributes its two branches when
/// they are rational, none when they are conjugate, and the cusp one.
pub fn normalization_count(model: &QuinticModel, e: u32) -> Result<u64, TrigonalError> {
    let n = count_plane_quintic(model, e)?;
    Ok(adjust(model.sing, e, n))
}

fn adjust(sing: SingType, e: u32, n: u64) -> u64 {
    match sing {
        SingType::Split => n + 1,
        SingType::Nonsplit if e % 2 == 0 => n + 1,
        SingType::Nonsplit => n - 1,
        SingType::Cusp => n,
    }
}

/// Normalization counts over `GF(3^(base k))` for `k = 1..=len`.
pub fn count_vector(model: &QuinticModel, base: u32, len: u32) -> Result<Vec<u64>, TrigonalError> {
    (1..=len).map(|k| normalization_count(model, base * k)).collect()
}
