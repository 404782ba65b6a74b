use crate::field::{FieldCtx, FieldElem};

use super::FormsError;

/// Univariate polynomial over a field context, lowest degree first.
///
/// The coefficient vector is kept trimmed: its last entry is nonzero unless
/// the polynomial is zero, in which case the vector is empty.
#[derive(Clone, Debug)]
pub struct UniPoly<'f> {
    ctx: &'f FieldCtx,
    coeffs: Vec<FieldElem>,
}

impl PartialEq for UniPoly<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.degree() == other.ctx.degree() && self.coeffs == other.coeffs
    }
}

impl Eq for UniPoly<'_> {}

impl<'f> UniPoly<'f> {
    pub fn new(ctx: &'f FieldCtx, coeffs: Vec<FieldElem>) -> Self {
        let mut p = UniPoly { ctx, coeffs };
        p.trim();
        p
    }

    /// Polynomial with coefficients given as integers modulo 3.
    pub fn from_f3(ctx: &'f FieldCtx, coeffs: &[u8]) -> Self {
        Self::new(ctx, coeffs.iter().map(|&c| ctx.embed(c)).collect())
    }

    pub fn zero(ctx: &'f FieldCtx) -> Self {
        UniPoly {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn ctx(&self) -> &'f FieldCtx {
        self.ctx
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), FormsError> {
        if self.ctx.degree() == other.ctx.degree() {
            Ok(())
        } else {
            Err(FormsError::MixedContexts {
                left: self.ctx.degree(),
                right: other.ctx.degree(),
            })
        }
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        let f = self.ctx;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Self {
        let f = self.ctx;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.scale((i % 3) as u8, c))
            .collect();
        Self::new(f, coeffs)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = self.ctx.inv(lead).expect("trimmed leading coefficient");
                Self::new(
                    self.ctx,
                    self.coeffs.iter().map(|&c| self.ctx.mul(c, inv)).collect(),
                )
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FormsError> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ctx));
        }
        let f = self.ctx;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::new(f, out))
    }

    /// Euclidean division; errors on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), FormsError> {
        self.same_field(divisor)?;
        let f = self.ctx;
        let dd = divisor.degree().ok_or(FormsError::ZeroDivisor)?;
        let lead_inv = f
            .inv(divisor.coeffs[dd])
            .expect("trimmed leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = *rem.last().unwrap();
            let shift = rem.len() - 1 - dd;
            let c = f.mul(top, lead_inv);
            quot[shift] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(rem[shift + i], f.mul(c, d));
            }
            rem.pop();
        }
        Ok((Self::new(f, quot), Self::new(f, rem)))
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd_univ<'f>(a: &UniPoly<'f>, b: &UniPoly<'f>) -> Result<UniPoly<'f>, FormsError> {
    a.same_field(b)?;
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y)?;
        x = y;
        y = r;
    }
    Ok(x.monic())
}

/// True iff `gcd(f, f')` is constant. A polynomial with vanishing
/// derivative (a cube in characteristic 3) is reported as not square-free,
/// and so is the zero polynomial.
pub fn is_squarefree(f: &UniPoly<'_>) -> bool {
    match f.degree() {
        None => false,
        Some(0) => true,
        Some(_) => {
            let d = f.derivative();
            if d.is_zero() {
                return false;
            }
            gcd_univ(f, &d)
                .map(|g| g.degree() == Some(0))
                .unwrap_or(false)
        }
    }
}
