//! Reduced genus-5 hyperelliptic models `c y^2 = f(x)` over F3.

use serde::{Deserialize, Serialize};

use crate::field::{field, FieldCtx, FieldElem, FieldError};
use crate::forms::{act_gl2, is_squarefree, BinaryForm12, Gl2ActionTable, Mat2, UniPoly};

/// Admissible `(b1, b2)` in enumeration order.
pub const B_PAIRS: [(u8, u8); 4] = [(1, 0), (0, 0), (0, 1), (0, 2)];
/// Admissible `c` in enumeration order.
pub const C_VALUES: [u8; 2] = [1, 2];
/// `2 * 4 * 3^10`.
pub const HYPER_MODEL_COUNT: usize = 2 * 4 * 59049;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HyperError {
    #[error("invalid hyperelliptic model: {0}")]
    InvalidModel(String),
    #[error("extension degree {0} out of range 1..=10")]
    ExtensionOutOfRange(u32),
    #[error("isomorphism testing is only supported over GF(3) and GF(9), got GF(3^{0})")]
    UnsupportedField(u32),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `c y^2 = x^12 + b1 x^11 + b2 x^10 + a9 x^9 + ... + a0` with entries in
/// `{0, 1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HyperModel {
    pub c: u8,
    pub b1: u8,
    pub b2: u8,
    /// `a[i]` is the coefficient of `x^i`.
    pub a: [u8; 10],
}

impl HyperModel {
    pub fn validate(&self) -> Result<(), HyperError> {
        if !C_VALUES.contains(&self.c) {
            return Err(HyperError::InvalidModel(format!("c = {} not in {{1, 2}}", self.c)));
        }
        if !B_PAIRS.contains(&(self.b1, self.b2)) {
            return Err(HyperError::InvalidModel(format!(
                "(b1, b2) = ({}, {}) not admissible",
                self.b1, self.b2
            )));
        }
        if let Some(a) = self.a.iter().find(|&&a| a > 2) {
            return Err(HyperError::InvalidModel(format!("coefficient {a} not in F3")));
        }
        Ok(())
    }

    /// Coefficients of `f`, lowest degree first (length 13).
    pub fn f_coeffs(&self) -> [u8; 13] {
        let mut out = [0u8; 13];
        out[..10].copy_from_slice(&self.a);
        out[10] = self.b2;
        out[11] = self.b1;
        out[12] = 1;
        out
    }

    /// Inverse of [`HyperModel::f_coeffs`]; `None` unless `f` is monic of
    /// degree 12 with an admissible top.
    pub fn from_f(c: u8, f: &[u8; 13]) -> Option<HyperModel> {
        let m = HyperModel {
            c,
            b1: f[11],
            b2: f[10],
            a: f[..10].try_into().unwrap(),
        };
        (f[12] == 1 && m.validate().is_ok()).then_some(m)
    }

    pub fn index(&self) -> Option<usize> {
        self.validate().ok()?;
        let ci = C_VALUES.iter().position(|&c| c == self.c)?;
        let bi = B_PAIRS.iter().position(|&b| b == (self.b1, self.b2))?;
        let tail = self.a.iter().fold(0usize, |acc, &a| acc * 3 + a as usize);
        Some((ci * 4 + bi) * 59049 + tail)
    }

    pub fn at(index: usize) -> Option<HyperModel> {
        if index >= HYPER_MODEL_COUNT {
            return None;
        }
        let (head, mut tail) = (index / 59049, index % 59049);
        let mut a = [0u8; 10];
        for slot in a.iter_mut().rev() {
            *slot = (tail % 3) as u8;
            tail /= 3;
        }
        let (b1, b2) = B_PAIRS[head % 4];
        Some(HyperModel {
            c: C_VALUES[head / 4],
            b1,
            b2,
            a,
        })
    }

    pub fn is_squarefree(&self) -> bool {
        let f3 = field(1).expect("GF(3)");
        is_squarefree(&UniPoly::from_f3(f3, &self.f_coeffs()))
    }

    /// Homogenization of `c^-1 f` in `(x, z)` over `ctx`.
    pub fn binary_form(&self, ctx: &FieldCtx) -> BinaryForm12 {
        let cinv = ctx.inv(ctx.embed(self.c)).expect("c is a unit");
        BinaryForm12(self.f_coeffs().map(|v| ctx.mul(cinv, ctx.embed(v))))
    }
}

/// All models in index order: `(c, (b1, b2), a0, .., a9)` lexicographic with
/// `a9` varying fastest.
pub fn enumerate_hyper_models() -> impl Iterator<Item = HyperModel> {
    (0..HYPER_MODEL_COUNT).map(|i| HyperModel::at(i).expect("index in range"))
}

fn eval_f3(ctx: &FieldCtx, coeffs: &[FieldElem], x: FieldElem) -> FieldElem {
    coeffs
        .iter()
        .rev()
        .fold(ctx.zero(), |acc, &c| ctx.add(ctx.mul(acc, x), c))
}

/// `#C(GF(3^e))` for the smooth model of `c y^2 = f(x)` with `f` of even
/// degree over F3 (entries `0..=2`, lowest degree first). The affine part is
/// summed over Frobenius orbits.
pub fn count_points_curve(c: u8, f: &[u8], e: u32) -> Result<u64, HyperError> {
    if !(1..=10).contains(&e) {
        return Err(HyperError::ExtensionOutOfRange(e));
    }
    let ctx = field(e)?;
    let coeffs: Vec<FieldElem> = f.iter().map(|&v| ctx.embed(v)).collect();
    let lead = *coeffs.last().filter(|l| !l.is_zero()).ok_or_else(|| {
        HyperError::InvalidModel("leading coefficient must be nonzero".into())
    })?;
    if coeffs.len() % 2 == 0 {
        return Err(HyperError::InvalidModel("degree must be even".into()));
    }
    let chi_c = ctx.chi(ctx.embed(c)) as i64;
    let mut total: i64 = 0;
    for &(x, size) in ctx.orbit_reps() {
        let v = eval_f3(ctx, &coeffs, x);
        total += size as i64 * (1 + chi_c * ctx.chi(v) as i64);
    }
    // two points at infinity iff lead / c is a square
    total += 1 + chi_c * ctx.chi(lead) as i64;
    Ok(total as u64)
}

pub fn count_points_hyper(model: &HyperModel, e: u32) -> Result<u64, HyperError> {
    model.validate()?;
    count_points_curve(model.c, &model.f_coeffs(), e)
}

/// `N_1 .. N_5` over the base field `GF(3^base)`.
pub fn count_vector(model: &HyperModel, base: u32) -> Result<[u64; 5], HyperError> {
    let mut out = [0u64; 5];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = count_points_hyper(model, base * (i as u32 + 1))?;
    }
    Ok(out)
}

fn check_iso_field(ctx: &FieldCtx) -> Result<(), HyperError> {
    match ctx.degree() {
        1 | 2 => Ok(()),
        e => Err(HyperError::UnsupportedField(e)),
    }
}

/// Some `(h, lambda)` with `h . F1 = lambda^2 F2`, by exhausting `GL2(k)`.
pub fn hyper_isomorphism_witness(
    m1: &HyperModel,
    m2: &HyperModel,
    ctx: &FieldCtx,
) -> Result<Option<(Mat2, FieldElem)>, HyperError> {
    check_iso_field(ctx)?;
    m1.validate()?;
    m2.validate()?;
    let f1 = m1.binary_form(ctx);
    let f2 = m2.binary_form(ctx);
    for h in Mat2::general_linear(ctx) {
        let g = act_gl2(ctx, &h, &f1).expect("invertible");
        let ratio = ctx.div(g.0[12], f2.0[12]).expect("F2 has full degree");
        if ratio.is_zero() || !ctx.is_square(ratio) {
            continue;
        }
        if g == f2.scale(ctx, ratio) {
            let lambda = ctx
                .units()
                .find(|&l| ctx.mul(l, l) == ratio)
                .expect("ratio is a square");
            return Ok(Some((h, lambda)));
        }
    }
    Ok(None)
}

pub fn hyper_isomorphic(m1: &HyperModel, m2: &HyperModel, ctx: &FieldCtx) -> Result<bool, HyperError> {
    Ok(hyper_isomorphism_witness(m1, m2, ctx)?.is_some())
}

/// Orbit minima under `PGL2(k)` acting by substitution and `(k^x)^2` acting
/// by scaling. Scalar matrices only contribute 12th powers, which are
/// squares, so projective representatives suffice.
pub struct HyperCanonicalizer {
    ctx: &'static FieldCtx,
    table: Gl2ActionTable,
}

impl HyperCanonicalizer {
    pub fn new(e: u32) -> Result<Self, HyperError> {
        let ctx = field(e)?;
        check_iso_field(ctx)?;
        let table = Gl2ActionTable::new(ctx, Mat2::projective_representatives(ctx));
        Ok(HyperCanonicalizer { ctx, table })
    }

    pub fn ctx(&self) -> &'static FieldCtx {
        self.ctx
    }

    /// Scaling by the square that minimizes the first nonzero entry.
    fn square_normalizer(&self, lead: FieldElem) -> FieldElem {
        let ctx = self.ctx;
        let n = ctx.order() as u64 - 1;
        let l = ctx.log(lead).expect("nonzero") as u64;
        ctx.zeta_pow((l % 2 + n - l) % n)
    }

    pub fn canonical_form(&self, form: &BinaryForm12) -> BinaryForm12 {
        let ctx = self.ctx;
        let key = |a: FieldElem| ctx.order_key(a);
        let mut best: Option<[FieldElem; 13]> = None;
        let mut cand = [FieldElem::ZERO; 13];
        'mats: for k in 0..self.table.len() {
            let mut mu: Option<FieldElem> = None;
            let mut below = best.is_none();
            for i in 0..13 {
                let g = self.table.coeff(ctx, k, form, i);
                let v = match mu {
                    Some(m) => ctx.mul(m, g),
                    None if g.is_zero() => g,
                    None => {
                        let m = self.square_normalizer(g);
                        mu = Some(m);
                        ctx.mul(m, g)
                    }
                };
                cand[i] = v;
                if !below {
                    let b = best.as_ref().expect("set")[i];
                    match key(v).cmp(&key(b)) {
                        std::cmp::Ordering::Less => below = true,
                        std::cmp::Ordering::Greater => continue 'mats,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            if below {
                best = Some(cand);
            }
        }
        BinaryForm12(best.expect("group is nonempty"))
    }

    pub fn canonical(&self, model: &HyperModel) -> BinaryForm12 {
        self.canonical_form(&model.binary_form(self.ctx))
    }

    /// Canonical form as field indices, convenient as a hash key.
    pub fn canonical_key(&self, model: &HyperModel) -> [u32; 13] {
        self.canonical(model).0.map(|c| self.ctx.to_index(c))
    }
}

/// Shape of the top coefficients in the general reduced model
/// `c y^2 = x^(2g+2) + ...` over F3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducedShape {
    /// `x^(2g+1)` removed and `x^(2g)` coefficient in `{0, 1, eps}`; valid
    /// when 3 does not divide `2g + 2`.
    Coprime,
    /// `(b1, b2)` in [`B_PAIRS`]; valid when 3 divides `2g + 2`.
    Divisible,
}

impl ReducedShape {
    pub fn for_genus(g: u32) -> ReducedShape {
        if (2 * g + 2) % 3 == 0 {
            ReducedShape::Divisible
        } else {
            ReducedShape::Coprime
        }
    }
}

/// Every reduced model `(c, f)` of genus `g` of the given shape, before the
/// square-free filter. Ordered like [`enumerate_hyper_models`].
pub fn reduced_family(g: u32, shape: ReducedShape) -> Vec<(u8, Vec<u8>)> {
    let deg = 2 * g as usize + 2;
    let tops: Vec<(u8, u8)> = match shape {
        ReducedShape::Divisible => B_PAIRS.to_vec(),
        ReducedShape::Coprime => vec![(0, 0), (0, 1), (0, 2)],
    };
    let free = deg - 2;
    let span = 3usize.pow(free as u32);
    let mut out = Vec::with_capacity(2 * tops.len() * span);
    for &c in &C_VALUES {
        for &(b1, b2) in &tops {
            for mut t in 0..span {
                let mut f = vec![0u8; deg + 1];
                for slot in f[..free].iter_mut().rev() {
                    *slot = (t % 3) as u8;
                    t /= 3;
                }
                f[deg - 2] = b2;
                f[deg - 1] = b1;
                f[deg] = 1;
                out.push((c, f));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn example_one() -> HyperModel {
        // x^12 + x^11 + 2x^7 + x^5 + 2x + 1
        let mut a = [0u8; 10];
        a[7] = 2;
        a[5] = 1;
        a[1] = 2;
        a[0] = 1;
        HyperModel { c: 1, b1: 1, b2: 0, a }
    }

    /// Double loop over `(x, y)` plus the points at infinity.
    fn naive_count(m: &HyperModel, e: u32) -> u64 {
        let ctx = field(e).unwrap();
        let f: Vec<FieldElem> = m.f_coeffs().iter().map(|&v| ctx.embed(v)).collect();
        let c = ctx.embed(m.c);
        let mut n = 0;
        for x in ctx.elements() {
            let fx = eval_f3(ctx, &f, x);
            for y in ctx.elements() {
                if ctx.mul(c, ctx.mul(y, y)) == fx {
                    n += 1;
                }
            }
        }
        if ctx.is_square(c) {
            n += 2;
        }
        n
    }

    #[test]
    fn index_order() {
        let first = HyperModel::at(0).unwrap();
        assert_eq!(first, HyperModel { c: 1, b1: 1, b2: 0, a: [0; 10] });
        let second = HyperModel::at(1).unwrap();
        assert_eq!(second.a[9], 1);
        assert_eq!(HyperModel::at(HYPER_MODEL_COUNT), None);
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        for _ in 0..1000 {
            let i = rng.gen_range(0..HYPER_MODEL_COUNT);
            assert_eq!(HyperModel::at(i).unwrap().index(), Some(i));
        }
        assert!(example_one().index().is_some());
        assert_eq!(enumerate_hyper_models().count(), HYPER_MODEL_COUNT);
    }

    #[test]
    fn example_counts() {
        let m = example_one();
        assert!(m.is_squarefree());
        assert_eq!(count_points_hyper(&m, 2).unwrap(), 20);
        assert_eq!(
            count_points_hyper(&m, 11),
            Err(HyperError::ExtensionOutOfRange(11))
        );
    }

    #[test]
    fn orbit_count_matches_naive() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(2);
        let mut checked = 0;
        while checked < 300 {
            let m = HyperModel::at(rng.gen_range(0..HYPER_MODEL_COUNT)).unwrap();
            if !m.is_squarefree() {
                continue;
            }
            for e in 1..=2 {
                assert_eq!(count_points_hyper(&m, e).unwrap(), naive_count(&m, e), "{m:?}");
            }
            checked += 1;
        }
    }

    #[test]
    fn planted_witnesses_over_f3() {
        let ctx = field(1).unwrap();
        let canon = HyperCanonicalizer::new(1).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let gl = Mat2::general_linear(ctx);
        let mut planted = 0;
        while planted < 40 {
            let m = HyperModel::at(rng.gen_range(0..HYPER_MODEL_COUNT)).unwrap();
            if !m.is_squarefree() {
                continue;
            }
            let h = gl[rng.gen_range(0..gl.len())];
            let g = act_gl2(ctx, &h, &m.binary_form(ctx)).unwrap();
            // g = c'^-1 f' for a monic f' when its top is c'^-1
            let top = g.0[12];
            if top.is_zero() {
                continue;
            }
            let c2 = ctx.to_index(ctx.inv(top).unwrap()) as u8;
            let f2 = g.scale(ctx, ctx.embed(c2)).0.map(|v| ctx.to_index(v) as u8);
            let Some(m2) = HyperModel::from_f(c2, &f2) else { continue };
            assert!(hyper_isomorphic(&m, &m2, ctx).unwrap());
            assert_eq!(canon.canonical(&m), canon.canonical(&m2));
            planted += 1;
        }
    }

    #[test]
    fn canonical_agrees_with_exhaustive_test() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(4);
        for e in 1..=2 {
            let ctx = field(e).unwrap();
            let canon = HyperCanonicalizer::new(e).unwrap();
            let pool: Vec<HyperModel> = (0..)
                .map(|_| HyperModel::at(rng.gen_range(0..59049)).unwrap())
                .filter(|m| m.is_squarefree())
                .take(12)
                .collect();
            for a in &pool {
                let ca = canon.canonical(a);
                assert_eq!(canon.canonical_form(&ca), ca, "idempotent");
                for b in &pool {
                    assert_eq!(
                        ca == canon.canonical(b),
                        hyper_isomorphic(a, b, ctx).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn orbit_size_divides_group_order() {
        let ctx = field(1).unwrap();
        let gl = Mat2::general_linear(ctx);
        let m = example_one();
        let f = m.binary_form(ctx);
        let mut orbit: Vec<BinaryForm12> = gl.iter().map(|h| act_gl2(ctx, h, &f).unwrap()).collect();
        orbit.sort_by_key(|g| g.0.map(|c| c.raw()));
        orbit.dedup();
        assert_eq!(48 % orbit.len(), 0);
    }

    #[test]
    fn example_curves_not_isomorphic_over_f9() {
        let mut a = [0u8; 10];
        a[4] = 2;
        a[3] = 2;
        a[0] = 2;
        let second = HyperModel { c: 1, b1: 1, b2: 0, a };
        let f9 = field(2).unwrap();
        assert!(!hyper_isomorphic(&example_one(), &second, f9).unwrap());
        assert!(hyper_isomorphic(&second, &second, f9).unwrap());
    }

    #[test]
    fn reduced_family_matches_model_order() {
        let fam = reduced_family(5, ReducedShape::for_genus(5));
        assert_eq!(fam.len(), HYPER_MODEL_COUNT);
        for i in [0usize, 1, 777, 59049 * 3 + 5, HYPER_MODEL_COUNT - 1] {
            let m = HyperModel::at(i).unwrap();
            assert_eq!(fam[i], (m.c, m.f_coeffs().to_vec()));
        }
        assert_eq!(ReducedShape::for_genus(1), ReducedShape::Coprime);
        let g1 = reduced_family(1, ReducedShape::Coprime);
        assert_eq!(g1.len(), 2 * 3 * 9);
        for (c, f) in &g1 {
            assert_eq!(f[3], 0);
            // genus-1 curves satisfy Hasse: |N - 4| <= 2 sqrt 3
            let f3 = field(1).unwrap();
            if is_squarefree(&UniPoly::from_f3(f3, f)) {
                let n = count_points_curve(*c, f, 1).unwrap() as i64;
                assert!((n - 4).pow(2) <= 12);
            }
        }
    }
}
