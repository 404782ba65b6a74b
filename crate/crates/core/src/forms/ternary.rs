use crate::field::{FieldCtx, FieldElem};

use super::{FormsError, Mat3};

/// Exponents `(i, j, k)` of `x^i y^j z^k`, ordered by `z`-degree descending
/// and then `x`-degree descending.
pub const QUINTIC_MONOMIALS: [(u8, u8, u8); 21] = {
    let mut out = [(0u8, 0u8, 0u8); 21];
    let mut n = 0;
    let mut k = 5u8;
    loop {
        let d = 5 - k;
        let mut j = 0u8;
        while j <= d {
            out[n] = (d - j, j, k);
            n += 1;
            j += 1;
        }
        if k == 0 {
            break;
        }
        k -= 1;
    }
    out
};

/// Position of `x^i y^j z^k` (with `i + j + k = 5`) in [`QUINTIC_MONOMIALS`].
pub const fn monomial_index(i: u8, j: u8, k: u8) -> usize {
    assert!(i + j + k == 5);
    let d = 5 - k as usize;
    d * (d + 1) / 2 + j as usize
}

/// Ternary quintic in the fixed monomial order. The reduced models keep the
/// `z^5`, `x z^4`, `y z^4` slots at zero; general quintics may not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TernaryQuintic(pub [FieldElem; 21]);

impl TernaryQuintic {
    pub fn from_f3(ctx: &FieldCtx, coeffs: &[u8; 21]) -> Self {
        TernaryQuintic(coeffs.map(|c| ctx.embed(c)))
    }

    pub fn coeffs(&self) -> &[FieldElem; 21] {
        &self.0
    }

    pub fn scale(&self, ctx: &FieldCtx, mu: FieldElem) -> Self {
        TernaryQuintic(self.0.map(|c| ctx.mul(mu, c)))
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Self) -> Self {
        let mut out = self.0;
        for (o, &b) in out.iter_mut().zip(&other.0) {
            *o = ctx.add(*o, b);
        }
        TernaryQuintic(out)
    }

    /// No `z^5`, `x z^4`, `y z^4` terms.
    pub fn is_reduced_shape(&self) -> bool {
        self.0[..3].iter().all(|c| c.is_zero())
    }

    /// Coefficients of `z^k` as a binary form in `(x, y)` of degree `5 - k`,
    /// ascending in the power of `x`.
    pub fn layer(&self, k: usize) -> Vec<FieldElem> {
        let d = 5 - k;
        let start = d * (d + 1) / 2;
        let mut v: Vec<FieldElem> = self.0[start..=start + d].to_vec();
        v.reverse();
        v
    }

    /// Inverse of [`TernaryQuintic::layer`] over all six layers.
    pub fn from_layers(layers: &[Vec<FieldElem>; 6]) -> Self {
        let mut out = [FieldElem::ZERO; 21];
        for (k, layer) in layers.iter().enumerate() {
            let d = 5 - k;
            let start = d * (d + 1) / 2;
            for (i, &c) in layer.iter().enumerate() {
                out[start + d - i] = c;
            }
        }
        TernaryQuintic(out)
    }

    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem, y: FieldElem, z: FieldElem) -> FieldElem {
        let px = powers(ctx, x);
        let py = powers(ctx, y);
        let pz = powers(ctx, z);
        let mut acc = ctx.zero();
        for (&c, &(i, j, k)) in self.0.iter().zip(&QUINTIC_MONOMIALS) {
            if !c.is_zero() {
                let m = ctx.mul(ctx.mul(px[i as usize], py[j as usize]), pz[k as usize]);
                acc = ctx.add(acc, ctx.mul(c, m));
            }
        }
        acc
    }

    /// `(dF/dx, dF/dy, dF/dz)` at a point.
    pub fn gradient(&self, ctx: &FieldCtx, x: FieldElem, y: FieldElem, z: FieldElem) -> [FieldElem; 3] {
        let px = powers(ctx, x);
        let py = powers(ctx, y);
        let pz = powers(ctx, z);
        let mut out = [ctx.zero(); 3];
        for (&c, &(i, j, k)) in self.0.iter().zip(&QUINTIC_MONOMIALS) {
            if c.is_zero() {
                continue;
            }
            let e = [i as usize, j as usize, k as usize];
            for (v, slot) in out.iter_mut().enumerate() {
                let n = e[v];
                if n % 3 == 0 {
                    continue;
                }
                let mut t = ctx.scale((n % 3) as u8, c);
                for (w, p) in [&px, &py, &pz].iter().enumerate() {
                    let exp = if w == v { e[w] - 1 } else { e[w] };
                    t = ctx.mul(t, p[exp]);
                }
                *slot = ctx.add(*slot, t);
            }
        }
        out
    }
}

fn powers(ctx: &FieldCtx, a: FieldElem) -> [FieldElem; 6] {
    let mut p = [ctx.one(); 6];
    for n in 1..6 {
        p[n] = ctx.mul(p[n - 1], a);
    }
    p
}

/// Dense homogeneous form of degree `d` in `(x, y, z)`, indexed by
/// `[i][j]` with `k = d - i - j`.
type Dense = [[FieldElem; 6]; 6];

fn dense_mul(ctx: &FieldCtx, a: &Dense, da: usize, b: &Dense, db: usize) -> Dense {
    let mut out = [[FieldElem::ZERO; 6]; 6];
    for i1 in 0..=da {
        for j1 in 0..=da - i1 {
            let u = a[i1][j1];
            if u.is_zero() {
                continue;
            }
            for i2 in 0..=db {
                for j2 in 0..=db - i2 {
                    let v = b[i2][j2];
                    if !v.is_zero() {
                        let cell = &mut out[i1 + i2][j1 + j2];
                        *cell = ctx.add(*cell, ctx.mul(u, v));
                    }
                }
            }
        }
    }
    out
}

/// Substitution of `v -> M v` in a quintic, expanded exactly. The result may
/// leave the reduced shape.
pub fn act_gl3(ctx: &FieldCtx, m: &Mat3, form: &TernaryQuintic) -> Result<TernaryQuintic, FormsError> {
    if !m.is_invertible(ctx) {
        return Err(FormsError::SingularMatrix);
    }
    // powers[r][p] = (row r of M . v)^p
    let mut pw: Vec<Vec<Dense>> = Vec::with_capacity(3);
    for row in &m.0 {
        let mut lin = [[FieldElem::ZERO; 6]; 6];
        lin[1][0] = row[0];
        lin[0][1] = row[1];
        lin[0][0] = row[2];
        let mut one = [[FieldElem::ZERO; 6]; 6];
        one[0][0] = ctx.one();
        let mut list = vec![one];
        for p in 1..=5 {
            let next = dense_mul(ctx, &list[p - 1], p - 1, &lin, 1);
            list.push(next);
        }
        pw.push(list);
    }
    let mut acc = [[FieldElem::ZERO; 6]; 6];
    for (&c, &(i, j, k)) in form.0.iter().zip(&QUINTIC_MONOMIALS) {
        if c.is_zero() {
            continue;
        }
        let (i, j, k) = (i as usize, j as usize, k as usize);
        let t = dense_mul(ctx, &pw[0][i], i, &pw[1][j], j);
        let t = dense_mul(ctx, &t, i + j, &pw[2][k], k);
        for a in 0..=5 {
            for b in 0..=5 - a {
                acc[a][b] = ctx.add(acc[a][b], ctx.mul(c, t[a][b]));
            }
        }
    }
    let mut out = [FieldElem::ZERO; 21];
    for (slot, &(i, j, _)) in out.iter_mut().zip(&QUINTIC_MONOMIALS) {
        *slot = acc[i as usize][j as usize];
    }
    Ok(TernaryQuintic(out))
}
