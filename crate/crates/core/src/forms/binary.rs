use crate::field::{FieldCtx, FieldElem};

use super::{FormsError, Mat2};

/// Homogeneous degree-12 form in `(x, z)`. Entry `i` is the coefficient of
/// `x^i z^(12-i)`, so the dehomogenization `F(x, 1)` has the same
/// coefficient vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm12(pub [FieldElem; 13]);

impl BinaryForm12 {
    pub fn zero() -> Self {
        BinaryForm12([FieldElem::ZERO; 13])
    }

    pub fn coeffs(&self) -> &[FieldElem; 13] {
        &self.0
    }

    pub fn scale(&self, ctx: &FieldCtx, mu: FieldElem) -> Self {
        BinaryForm12(self.0.map(|c| ctx.mul(mu, c)))
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Self) -> Self {
        let mut out = self.0;
        for (o, &b) in out.iter_mut().zip(&other.0) {
            *o = ctx.add(*o, b);
        }
        BinaryForm12(out)
    }

    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem, z: FieldElem) -> FieldElem {
        eval_binary(ctx, &self.0, x, z)
    }
}

/// Evaluates `sum c_i x^i z^(d-i)`.
pub(crate) fn eval_binary(ctx: &FieldCtx, coeffs: &[FieldElem], x: FieldElem, z: FieldElem) -> FieldElem {
    let d = coeffs.len() - 1;
    let mut acc = ctx.zero();
    for (i, &c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            let t = ctx.mul(ctx.pow(x, i as u64), ctx.pow(z, (d - i) as u64));
            acc = ctx.add(acc, ctx.mul(c, t));
        }
    }
    acc
}

/// Powers `(a x + b z)^p` for `p = 0..=d`, each in ascending-`x` layout.
fn linear_powers(ctx: &FieldCtx, a: FieldElem, b: FieldElem, d: usize) -> Vec<Vec<FieldElem>> {
    let mut out = vec![vec![ctx.one()]];
    for p in 1..=d {
        let prev = &out[p - 1];
        let mut next = vec![ctx.zero(); p + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i] = ctx.add(next[i], ctx.mul(c, b));
            next[i + 1] = ctx.add(next[i + 1], ctx.mul(c, a));
        }
        out.push(next);
    }
    out
}

/// `T[j][i]`: coefficient of `x^i z^(d-i)` in `(h11 x + h12 z)^j (h21 x + h22 z)^(d-j)`.
fn substitution_table(ctx: &FieldCtx, h: &Mat2, d: usize) -> Vec<Vec<FieldElem>> {
    let m = &h.0;
    let px = linear_powers(ctx, m[0][0], m[0][1], d);
    let pz = linear_powers(ctx, m[1][0], m[1][1], d);
    (0..=d)
        .map(|j| {
            let mut row = vec![ctx.zero(); d + 1];
            for (s, &u) in px[j].iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (t, &v) in pz[d - j].iter().enumerate() {
                    row[s + t] = ctx.add(row[s + t], ctx.mul(u, v));
                }
            }
            row
        })
        .collect()
}

/// Substitution `(x, z) -> (h11 x + h12 z, h21 x + h22 z)` on a binary form
/// of any degree, coefficients in ascending-`x` layout. No invertibility
/// check.
pub fn act_binary(ctx: &FieldCtx, h: &Mat2, coeffs: &[FieldElem]) -> Vec<FieldElem> {
    let d = coeffs.len() - 1;
    let table = substitution_table(ctx, h, d);
    let mut out = vec![ctx.zero(); d + 1];
    for (j, &c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, &t) in out.iter_mut().zip(&table[j]) {
            *o = ctx.add(*o, ctx.mul(c, t));
        }
    }
    out
}

pub fn act_gl2(ctx: &FieldCtx, h: &Mat2, form: &BinaryForm12) -> Result<BinaryForm12, FormsError> {
    if !h.is_invertible(ctx) {
        return Err(FormsError::SingularMatrix);
    }
    let v = act_binary(ctx, h, &form.0);
    Ok(BinaryForm12(v.try_into().expect("degree preserved")))
}

/// Precomputed substitution tables for a fixed list of matrices acting on
/// degree-12 forms.
pub struct Gl2ActionTable {
    mats: Vec<Mat2>,
    /// `table[h][j][i]`
    table: Vec<[[FieldElem; 13]; 13]>,
}

impl Gl2ActionTable {
    pub fn new(ctx: &FieldCtx, mats: Vec<Mat2>) -> Self {
        let table = mats
            .iter()
            .map(|h| {
                let t = substitution_table(ctx, h, 12);
                let mut arr = [[FieldElem::ZERO; 13]; 13];
                for (j, row) in t.iter().enumerate() {
                    arr[j].copy_from_slice(row);
                }
                arr
            })
            .collect();
        Gl2ActionTable { mats, table }
    }

    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn matrix(&self, k: usize) -> &Mat2 {
        &self.mats[k]
    }

    pub fn rows(&self, k: usize) -> &[[FieldElem; 13]; 13] {
        &self.table[k]
    }

    /// Coefficient `i` of `mats[k] . form`.
    #[inline]
    pub fn coeff(&self, ctx: &FieldCtx, k: usize, form: &BinaryForm12, i: usize) -> FieldElem {
        let t = &self.table[k];
        let mut acc = ctx.zero();
        for (j, &c) in form.0.iter().enumerate() {
            if !c.is_zero() {
                acc = ctx.add(acc, ctx.mul(c, t[j][i]));
            }
        }
        acc
    }

    pub fn apply(&self, ctx: &FieldCtx, k: usize, form: &BinaryForm12) -> BinaryForm12 {
        let mut out = [FieldElem::ZERO; 13];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.coeff(ctx, k, form, i);
        }
        BinaryForm12(out)
    }
}
