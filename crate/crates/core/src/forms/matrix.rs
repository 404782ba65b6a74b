use crate::field::{FieldCtx, FieldElem};

/// 2x2 matrix over a field context, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[FieldElem; 2]; 2]);

/// 3x3 matrix over a field context, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mat3(pub [[FieldElem; 3]; 3]);

impl Mat2 {
    pub fn identity(ctx: &FieldCtx) -> Self {
        Self::scalar(ctx, ctx.one())
    }

    pub fn scalar(ctx: &FieldCtx, mu: FieldElem) -> Self {
        Mat2([[mu, ctx.zero()], [ctx.zero(), mu]])
    }

    pub fn det(&self, ctx: &FieldCtx) -> FieldElem {
        let m = &self.0;
        ctx.sub(ctx.mul(m[0][0], m[1][1]), ctx.mul(m[0][1], m[1][0]))
    }

    pub fn is_invertible(&self, ctx: &FieldCtx) -> bool {
        !self.det(ctx).is_zero()
    }

    pub fn mul(&self, ctx: &FieldCtx, rhs: &Mat2) -> Mat2 {
        let mut out = [[ctx.zero(); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = ctx.add(
                    ctx.mul(self.0[i][0], rhs.0[0][j]),
                    ctx.mul(self.0[i][1], rhs.0[1][j]),
                );
            }
        }
        Mat2(out)
    }

    /// Every invertible 2x2 matrix over `ctx`.
    pub fn general_linear(ctx: &FieldCtx) -> Vec<Mat2> {
        let elems: Vec<FieldElem> = ctx.elements().collect();
        let mut out = Vec::new();
        for &a in &elems {
            for &b in &elems {
                for &c in &elems {
                    for &d in &elems {
                        let m = Mat2([[a, b], [c, d]]);
                        if m.is_invertible(ctx) {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }

    /// One representative per class modulo scalars: the first nonzero entry
    /// in row-major order is 1.
    pub fn projective_representatives(ctx: &FieldCtx) -> Vec<Mat2> {
        Self::general_linear(ctx)
            .into_iter()
            .filter(|m| m.0.iter().flatten().find(|x| !x.is_zero()) == Some(&ctx.one()))
            .collect()
    }
}

impl Mat3 {
    pub fn identity(ctx: &FieldCtx) -> Self {
        Self::scalar(ctx, ctx.one())
    }

    pub fn scalar(ctx: &FieldCtx, mu: FieldElem) -> Self {
        let z = ctx.zero();
        Mat3([[mu, z, z], [z, mu, z], [z, z, mu]])
    }

    pub fn det(&self, ctx: &FieldCtx) -> FieldElem {
        let m = &self.0;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            ctx.sub(ctx.mul(m[r1][c1], m[r2][c2]), ctx.mul(m[r1][c2], m[r2][c1]))
        };
        let t0 = ctx.mul(m[0][0], minor(1, 2, 1, 2));
        let t1 = ctx.mul(m[0][1], minor(1, 2, 0, 2));
        let t2 = ctx.mul(m[0][2], minor(1, 2, 0, 1));
        ctx.add(ctx.sub(t0, t1), t2)
    }

    pub fn is_invertible(&self, ctx: &FieldCtx) -> bool {
        !self.det(ctx).is_zero()
    }

    pub fn mul(&self, ctx: &FieldCtx, rhs: &Mat3) -> Mat3 {
        let mut out = [[ctx.zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).fold(ctx.zero(), |acc, k| {
                    ctx.add(acc, ctx.mul(self.0[i][k], rhs.0[k][j]))
                });
            }
        }
        Mat3(out)
    }

    /// Block matrix with upper-left 2x2 block `h`, bottom row
    /// `(l1, l2, s)` and zero third column above the diagonal. These are
    /// exactly the matrices fixing the point (0:0:1) under the column action.
    pub fn point_stabilizer(ctx: &FieldCtx, h: &Mat2, l1: FieldElem, l2: FieldElem, s: FieldElem) -> Mat3 {
        let z = ctx.zero();
        Mat3([
            [h.0[0][0], h.0[0][1], z],
            [h.0[1][0], h.0[1][1], z],
            [l1, l2, s],
        ])
    }

    /// Every invertible 3x3 matrix over `ctx` whose first nonzero entry in
    /// row-major order is 1. Practical for GF(3) only.
    pub fn projective_representatives(ctx: &FieldCtx) -> Vec<Mat3> {
        let elems: Vec<FieldElem> = ctx.elements().collect();
        let q = elems.len();
        let total = q.pow(9);
        let mut out = Vec::new();
        for code in 0..total {
            let mut v = code;
            let mut m = [[ctx.zero(); 3]; 3];
            for cell in m.iter_mut().flatten() {
                *cell = elems[v % q];
                v /= q;
            }
            let m = Mat3(m);
            if m.0.iter().flatten().find(|x| !x.is_zero()) == Some(&ctx.one()) && m.is_invertible(ctx) {
                out.push(m);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::field;

    #[test]
    fn group_orders() {
        let f3 = field(1).unwrap();
        assert_eq!(Mat2::general_linear(f3).len(), 48);
        assert_eq!(Mat2::projective_representatives(f3).len(), 24);
        let f9 = field(2).unwrap();
        assert_eq!(Mat2::general_linear(f9).len(), 5760);
        assert_eq!(Mat2::projective_representatives(f9).len(), 720);
        // |GL3(F3)| / 2
        assert_eq!(Mat3::projective_representatives(f3).len(), 11232 / 2);
    }

    #[test]
    fn determinant_is_multiplicative() {
        let f = field(1).unwrap();
        let reps = Mat3::projective_representatives(f);
        for (a, b) in reps.iter().zip(reps.iter().rev()).take(200) {
            assert_eq!(
                a.mul(f, b).det(f),
                f.mul(a.det(f), b.det(f))
            );
        }
    }
}
