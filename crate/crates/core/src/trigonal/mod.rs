//! Reduced quintic models of genus-5 trigonal curves over F3.
//!
//! A model is `F = q(x, y) z^3 + f2 z^2 + f1 z + f0` with the singular point
//! at `(0:0:1)`; `q` is `xy` (split node), `x^2 - 2y^2` (non-split node) or
//! `x^2` (cusp).

mod count;
mod isom;
mod validate;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::field::{FieldCtx, FieldError};
use crate::forms::{monomial_index, TernaryQuintic};

pub use count::{
    count_plane_quintic, count_plane_quintic_naive, count_vector, cubic_root_count,
    normalization_count,
};
pub use isom::{
    trigonal_isomorphic, trigonal_isomorphism_witness, trigonal_isomorphism_witness_full,
};
pub use validate::{extra_singular_points, singular_points_naive, validate_genus5};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TrigonalError {
    #[error("unknown case {case} for {sing} type")]
    UnknownCase { sing: SingType, case: u8 },
    #[error("invalid quintic model: {0}")]
    InvalidModel(String),
    #[error("extension degree {0} out of range 1..=10")]
    ExtensionOutOfRange(u32),
    #[error("isomorphism testing is only supported over GF(3) and GF(9), got GF(3^{0})")]
    UnsupportedField(u32),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SingType {
    Split,
    Nonsplit,
    Cusp,
}

impl std::fmt::Display for SingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SingType::Split => "split",
            SingType::Nonsplit => "nonsplit",
            SingType::Cusp => "cusp",
        })
    }
}

impl std::str::FromStr for SingType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "split" => Ok(SingType::Split),
            "nonsplit" => Ok(SingType::Nonsplit),
            "cusp" => Ok(SingType::Cusp),
            _ => Err(format!("unknown singularity type {s:?}")),
        }
    }
}

/// A quintic together with the reduced family it was drawn from. `coeffs`
/// follows [`crate::forms::QUINTIC_MONOMIALS`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuinticModel {
    #[serde(rename = "type")]
    pub sing: SingType,
    pub case: u8,
    pub coeffs: [u8; 21],
}

impl QuinticModel {
    pub fn quintic(&self, ctx: &FieldCtx) -> TernaryQuintic {
        TernaryQuintic::from_f3(ctx, &self.coeffs)
    }

    /// `z^k` layer as a binary form, ascending in the power of `x`.
    pub fn layer(&self, k: usize) -> Vec<u8> {
        let d = 5 - k;
        let start = d * (d + 1) / 2;
        let mut v = self.coeffs[start..=start + d].to_vec();
        v.reverse();
        v
    }

    /// Checks the coefficient range, the `z^3` layer and membership in the
    /// declared case family.
    pub fn validate(&self) -> Result<(), TrigonalError> {
        if self.coeffs.iter().any(|&c| c > 2) {
            return Err(TrigonalError::InvalidModel("coefficients must lie in 0..=2".into()));
        }
        let spec = case_spec(self.sing, self.case)?;
        if spec.locate(&self.coeffs).is_none() {
            return Err(TrigonalError::InvalidModel(format!(
                "not a member of the {} case {} family",
                self.sing, self.case
            )));
        }
        Ok(())
    }

    /// Position in the global enumeration order.
    pub fn index(&self) -> Option<usize> {
        let spec = case_spec(self.sing, self.case).ok()?;
        spec.locate(&self.coeffs).map(|i| spec.offset + i)
    }

    /// Model for a coefficient vector, tagged with the first family in
    /// enumeration order that contains it.
    pub fn from_coeffs(coeffs: [u8; 21]) -> Option<QuinticModel> {
        all_cases()
            .iter()
            .find(|s| s.locate(&coeffs).is_some())
            .map(|s| QuinticModel {
                sing: s.sing,
                case: s.case,
                coeffs,
            })
    }

    pub fn at(index: usize) -> Option<QuinticModel> {
        let specs = all_cases();
        let spec = specs
            .iter()
            .find(|s| (s.offset..s.offset + s.size).contains(&index))?;
        Some(spec.model(index - spec.offset))
    }
}

/// One enumerated parameter: a list of alternative contributions to the 21
/// coefficients.
#[derive(Clone, Debug)]
struct Group {
    choices: Vec<[u8; 21]>,
}

/// An affine family `base + sum of one choice per group`, enumerated in
/// mixed radix with the last group varying fastest.
#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub sing: SingType,
    pub case: u8,
    /// Number of members.
    pub size: usize,
    /// Index of the first member in the global order.
    pub offset: usize,
    base: [u8; 21],
    groups: Vec<Group>,
}

impl CaseSpec {
    pub fn model(&self, mut local: usize) -> QuinticModel {
        let mut coeffs = self.base;
        for g in self.groups.iter().rev() {
            let n = g.choices.len();
            let ch = &g.choices[local % n];
            local /= n;
            for (c, &v) in coeffs.iter_mut().zip(ch) {
                *c = (*c + v) % 3;
            }
        }
        QuinticModel {
            sing: self.sing,
            case: self.case,
            coeffs,
        }
    }

    pub fn models(&self) -> impl Iterator<Item = QuinticModel> + '_ {
        (0..self.size).map(|i| self.model(i))
    }

    /// Local index of `coeffs` in this family. Groups are peeled off one at
    /// a time through slots that no other undecided group touches.
    fn locate(&self, coeffs: &[u8; 21]) -> Option<usize> {
        let mut residual = [0u8; 21];
        for i in 0..21 {
            residual[i] = (coeffs[i] + 3 - self.base[i]) % 3;
        }
        let touches = |g: &Group, s: usize| g.choices.iter().any(|c| c[s] != 0);
        let mut picked: Vec<Option<usize>> = vec![None; self.groups.len()];
        loop {
            let mut progress = false;
            for gi in 0..self.groups.len() {
                if picked[gi].is_some() {
                    continue;
                }
                let g = &self.groups[gi];
                let private: Vec<usize> = (0..21)
                    .filter(|&s| {
                        touches(g, s)
                            && self.groups.iter().enumerate().all(|(oj, o)| {
                                oj == gi || picked[oj].is_some() || !touches(o, s)
                            })
                    })
                    .collect();
                let matches: Vec<usize> = g
                    .choices
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| private.iter().all(|&s| c[s] == residual[s]))
                    .map(|(i, _)| i)
                    .collect();
                if matches.len() == 1 || matches.is_empty() {
                    let &ci = matches.first()?;
                    for s in 0..21 {
                        residual[s] = (residual[s] + 3 - g.choices[ci][s]) % 3;
                    }
                    picked[gi] = Some(ci);
                    progress = true;
                }
            }
            if picked.iter().all(|p| p.is_some()) {
                break;
            }
            if !progress {
                return None;
            }
        }
        if residual.iter().any(|&r| r != 0) {
            return None;
        }
        let mut local = 0usize;
        for (g, p) in self.groups.iter().zip(&picked) {
            local = local * g.choices.len() + p.expect("all picked");
        }
        Some(local)
    }
}

const fn slot(i: u8, j: u8, k: u8) -> usize {
    monomial_index(i, j, k)
}

/// `x^(d-t) y^t z^k` for the layer of `z`-degree `k`.
fn layer_slot(k: u8, t: u8) -> usize {
    slot(5 - k - t, t, k)
}

fn unit(s: usize, v: u8) -> [u8; 21] {
    let mut c = [0u8; 21];
    c[s] = v;
    c
}

fn free(s: usize) -> Group {
    Group {
        choices: (0..3).map(|v| unit(s, v)).collect(),
    }
}

fn among(s: usize, vals: &[u8]) -> Group {
    Group {
        choices: vals.iter().map(|&v| unit(s, v)).collect(),
    }
}

fn free_vec(v: [u8; 21]) -> Group {
    Group {
        choices: (0..3u8)
            .map(|t| v.map(|c| c * t % 3))
            .collect(),
    }
}

fn with_base(pairs: &[(usize, u8)]) -> [u8; 21] {
    let mut b = [0u8; 21];
    for &(s, v) in pairs {
        b[s] = v;
    }
    b
}

/// z^2-layer slots `a1..a4` (x^3, x^2y, xy^2, y^3), z-layer `a5..a9`,
/// z^0-layer `a10..a15` of the general split-node quintic.
fn general_slot(n: usize) -> usize {
    match n {
        1..=4 => layer_slot(2, (n - 1) as u8),
        5..=9 => layer_slot(1, (n - 5) as u8),
        10..=15 => layer_slot(0, (n - 10) as u8),
        _ => unreachable!("slot a{n}"),
    }
}

fn f0_free() -> Vec<Group> {
    (0..6).map(|t| free(layer_slot(0, t))).collect()
}

fn split_case(case: u8) -> (Vec<(usize, u8)>, Vec<Group>) {
    let xy = slot(1, 1, 3);
    let a = general_slot;
    let mut base = vec![(xy, 1)];
    let mut groups = Vec::new();
    // zero slots are simply omitted
    let (fixed, restricted, free_slots): (&[(usize, u8)], Vec<(usize, Vec<u8>)>, Vec<usize>) = match case {
        1 => (&[(1, 1)], vec![(2, vec![0, 1])], vec![3, 4, 7, 8, 9]),
        2 => (&[(2, 1)], vec![(3, vec![0, 1])], vec![4, 5, 8, 9]),
        3 => (&[(3, 1)], vec![(4, vec![0, 1])], vec![5, 6, 9]),
        4 => (&[(4, 1)], vec![], vec![5, 6, 7]),
        // {0, 1, zeta} with zeta = 2, the primitive element of F3
        5 => (&[], vec![(6, vec![0, 1, 2]), (7, vec![0, 1])], vec![5, 8, 9]),
        _ => unreachable!(),
    };
    for &(n, v) in fixed {
        base.push((a(n), v));
    }
    let mut params: Vec<(usize, Group)> = restricted
        .into_iter()
        .map(|(n, vals)| (n, among(a(n), &vals)))
        .collect();
    params.extend(free_slots.into_iter().map(|n| (n, free(a(n)))));
    params.sort_by_key(|p| p.0);
    groups.extend(params.into_iter().map(|p| p.1));
    groups.extend(f0_free());
    (base, groups)
}

fn nonsplit_case(case: u8) -> (Vec<(usize, u8)>, Vec<Group>) {
    // x^2 - 2 y^2 = x^2 + y^2 over F3, and x (x^2 - 2 y^2) = x^3 + x y^2
    let mut base = vec![(slot(2, 0, 3), 1), (slot(0, 2, 3), 1)];
    let x3 = layer_slot(2, 0);
    let xy2 = layer_slot(2, 2);
    let y3 = layer_slot(2, 3);
    let f1 = |t: u8| layer_slot(1, t);
    let mut groups = Vec::new();
    match case {
        1 => {
            base.push((y3, 1));
            let mut cubic = [0u8; 21];
            cubic[x3] = 1;
            cubic[xy2] = 1;
            groups.push(free_vec(cubic));
            groups.push(free(x3));
            groups.extend([0, 1, 2].map(|t| free(f1(t))));
            groups.extend(f0_free());
        }
        2 => {
            base.push((x3, 1));
            base.push((xy2, 1));
            groups.push(free(x3));
            groups.extend([0, 1, 4].map(|t| free(f1(t))));
            groups.extend(f0_free());
        }
        3 => {
            base.push((x3, 1));
            groups.extend([2, 3, 4].map(|t| free(f1(t))));
            groups.extend(f0_free());
        }
        4 => {
            groups.extend((0..5).map(|t| free(f1(t))));
            let mut tails = Vec::new();
            for code in 0..729usize {
                let mut digits = [0u8; 6];
                let mut v = code;
                for d in digits.iter_mut().rev() {
                    *d = (v % 3) as u8;
                    v /= 3;
                }
                // first nonzero entry equal to 1, or the zero tail
                if digits.iter().find(|&&d| d != 0).is_none_or(|&d| d == 1) {
                    let mut c = [0u8; 21];
                    for (t, &d) in digits.iter().enumerate() {
                        c[layer_slot(0, t as u8)] = d;
                    }
                    tails.push(c);
                }
            }
            groups.push(Group { choices: tails });
        }
        _ => unreachable!(),
    }
    (base, groups)
}

fn cusp_case() -> (Vec<(usize, u8)>, Vec<Group>) {
    let base = vec![(slot(2, 0, 3), 1)];
    let mut groups = vec![
        among(layer_slot(2, 0), &[0, 1]),
        among(layer_slot(2, 1), &[0, 1]),
        free(layer_slot(2, 2)),
        among(layer_slot(2, 3), &[1, 2]),
    ];
    groups.extend([0, 1, 2].map(|t| free(layer_slot(1, t))));
    groups.extend(f0_free());
    (base, groups)
}

/// Every family in global order: split 1..5, non-split 1..4, cusp 1.
pub fn all_cases() -> &'static [CaseSpec] {
    static CASES: OnceLock<Vec<CaseSpec>> = OnceLock::new();
    CASES.get_or_init(|| {
        let mut out = Vec::new();
        let mut offset = 0;
        let mut push = |sing, case, (base, groups): (Vec<(usize, u8)>, Vec<Group>)| {
            let size = groups.iter().map(|g| g.choices.len()).product();
            out.push(CaseSpec {
                sing,
                case,
                size,
                offset,
                base: with_base(&base),
                groups,
            });
            offset += size;
        };
        for c in 1..=5 {
            push(SingType::Split, c, split_case(c));
        }
        for c in 1..=4 {
            push(SingType::Nonsplit, c, nonsplit_case(c));
        }
        push(SingType::Cusp, 1, cusp_case());
        out
    })
}

pub fn case_spec(sing: SingType, case: u8) -> Result<&'static CaseSpec, TrigonalError> {
    all_cases()
        .iter()
        .find(|s| s.sing == sing && s.case == case)
        .ok_or(TrigonalError::UnknownCase { sing, case })
}

/// Total number of enumerated candidates over all families.
pub fn trigonal_model_count() -> usize {
    all_cases().iter().map(|s| s.size).sum()
}

/// Stream of one family in enumeration order.
pub fn enumerate_trigonal_models(
    sing: SingType,
    case: u8,
) -> Result<impl Iterator<Item = QuinticModel>, TrigonalError> {
    Ok(case_spec(sing, case)?.models())
}

/// Expected `z^3` layer, ascending in `x`.
pub fn tangent_cone(sing: SingType) -> [u8; 3] {
    match sing {
        SingType::Split => [0, 1, 0],
        SingType::Nonsplit => [1, 0, 1],
        SingType::Cusp => [0, 0, 1],
    }
}
