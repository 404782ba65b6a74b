//! Singular-locus checks.

use crate::field::{field, FieldCtx, FieldElem};
use crate::forms::TernaryQuintic;

use super::count::Layers;
use super::{tangent_cone, QuinticModel, SingType, TrigonalError};

/// Extensions scanned by [`validate_genus5`]. Any further singular point of
/// an irreducible quintic with a double point lies in one of these.
pub const VALIDATION_DEGREES: [u32; 3] = [4, 5, 6];

fn is_singular(ctx: &FieldCtx, f: &TernaryQuintic, p: [FieldElem; 3]) -> bool {
    f.eval(ctx, p[0], p[1], p[2]).is_zero()
        && f.gradient(ctx, p[0], p[1], p[2]).iter().all(|g| g.is_zero())
}

/// Singular points other than `(0:0:1)` over `GF(3^e)`, one per Frobenius
/// orbit of the fiber coordinate.
pub fn extra_singular_points(model: &QuinticModel, e: u32) -> Result<Vec<[FieldElem; 3]>, TrigonalError> {
    let ctx = field(e)?;
    let layers = Layers::new(ctx, model);
    let f = model.quintic(ctx);
    let mut out = Vec::new();
    let mut scan = |x: FieldElem, y: FieldElem, [a, b, c, d]: [FieldElem; 4]| {
        let zs: Vec<FieldElem> = if !b.is_zero() {
            // dF/dz = 2 b z + c
            vec![ctx.div(c, b).expect("b nonzero")]
        } else if !c.is_zero() {
            vec![]
        } else if !a.is_zero() {
            vec![ctx.cube_root(ctx.neg(ctx.div(d, a).expect("a nonzero")))]
        } else if d.is_zero() {
            ctx.elements().collect()
        } else {
            vec![]
        };
        for z in zs {
            let p = [x, y, z];
            if is_singular(ctx, &f, p) {
                out.push(p);
            }
        }
    };
    scan(ctx.one(), ctx.zero(), layers.fiber_at_infinity());
    for &(x, _) in ctx.orbit_reps() {
        scan(x, ctx.one(), layers.fiber(ctx, x));
    }
    Ok(out)
}

/// Whether the model has exactly one singular point, the expected double
/// point at `(0:0:1)`, so that its normalization has genus 5.
pub fn validate_genus5(model: &QuinticModel) -> Result<bool, TrigonalError> {
    if model.layer(3) != tangent_cone(model.sing).to_vec()
        || model.coeffs[..3].iter().any(|&c| c != 0)
    {
        return Ok(false);
    }
    // the cusp is ordinary only with a y^3 z^2 term
    if model.sing == SingType::Cusp && model.layer(2)[0] == 0 {
        return Ok(false);
    }
    for e in VALIDATION_DEGREES {
        if !extra_singular_points(model, e)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every singular point over `GF(3^e)` by brute force over the plane.
pub fn singular_points_naive(model: &QuinticModel, e: u32) -> Result<Vec<[FieldElem; 3]>, TrigonalError> {
    let ctx = field(e)?;
    let f = model.quintic(ctx);
    let (zero, one) = (ctx.zero(), ctx.one());
    let mut pts = vec![[one, zero, zero]];
    for x in ctx.elements() {
        pts.push([x, one, zero]);
        for y in ctx.elements() {
            pts.push([x, y, one]);
        }
    }
    Ok(pts.into_iter().filter(|&p| is_singular(ctx, &f, p)).collect())
}
