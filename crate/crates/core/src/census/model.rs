//! Family-tagged models and their parsing from JSON or equations.

use serde::{Deserialize, Serialize};

use crate::forms::parse_poly;
use crate::hyperelliptic::{self, HyperModel};
use crate::trigonal::{self, QuinticModel};
use crate::zeta::{weil_from_counts, WeilPoly};

use super::CensusError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Hyperelliptic,
    Trigonal,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Hyperelliptic => "hyperelliptic",
            Family::Trigonal => "trigonal",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Model {
    Hyperelliptic(HyperModel),
    Trigonal(QuinticModel),
}

impl Model {
    pub fn family(&self) -> Family {
        match self {
            Model::Hyperelliptic(_) => Family::Hyperelliptic,
            Model::Trigonal(_) => Family::Trigonal,
        }
    }

    /// Position in the family's enumeration order.
    pub fn index(&self) -> Option<usize> {
        match self {
            Model::Hyperelliptic(m) => m.index(),
            Model::Trigonal(m) => m.index(),
        }
    }

    pub fn validate(&self) -> Result<(), CensusError> {
        match self {
            Model::Hyperelliptic(m) => m.validate()?,
            Model::Trigonal(m) => m.validate()?,
        }
        Ok(())
    }

    /// Square-free for hyperelliptic models, a single double point for
    /// quintics.
    pub fn is_genus5(&self) -> Result<bool, CensusError> {
        Ok(match self {
            Model::Hyperelliptic(m) => m.is_squarefree(),
            Model::Trigonal(m) => trigonal::validate_genus5(m)?,
        })
    }

    /// Points of the smooth model over GF(3^e).
    pub fn count(&self, e: u32) -> Result<u64, CensusError> {
        Ok(match self {
            Model::Hyperelliptic(m) => hyperelliptic::count_points_hyper(m, e)?,
            Model::Trigonal(m) => trigonal::normalization_count(m, e)?,
        })
    }

    pub fn count_vector(&self, base: u32, len: u32) -> Result<Vec<u64>, CensusError> {
        (1..=len).map(|k| self.count(base * k)).collect()
    }

    /// Weil polynomial over GF(3^base).
    pub fn weil(&self, base: u32) -> Result<WeilPoly, CensusError> {
        let counts: Vec<i128> = self
            .count_vector(base, 5)?
            .into_iter()
            .map(|n| n as i128)
            .collect();
        Ok(weil_from_counts(3i128.pow(base), &counts)?)
    }

    /// Short family/case label.
    pub fn case_label(&self) -> String {
        match self {
            Model::Hyperelliptic(m) => format!("c={} b=({},{})", m.c, m.b1, m.b2),
            Model::Trigonal(m) => format!("{}-{}", m.sing, m.case),
        }
    }

    /// Free coefficients as a digit string.
    pub fn coefficient_string(&self) -> String {
        let digits: Vec<String> = match self {
            Model::Hyperelliptic(m) => m.a.iter().map(u8::to_string).collect(),
            Model::Trigonal(m) => m.coeffs.iter().map(u8::to_string).collect(),
        };
        digits.join(" ")
    }

    /// Accepts a JSON record or an equation: `c y^2 = f(x)` (or just `f(x)`)
    /// for hyperelliptic models and a quintic in `x, y, z` for trigonal ones.
    pub fn parse(family: Family, src: &str) -> Result<Model, CensusError> {
        let src = src.trim();
        let model = if src.starts_with('{') {
            let m: Model = serde_json::from_str(src)?;
            if m.family() != family {
                return Err(CensusError::InvalidModel(format!(
                    "expected a {family} model, got {}",
                    m.family()
                )));
            }
            m
        } else {
            match family {
                Family::Hyperelliptic => Model::Hyperelliptic(parse_hyper_equation(src)?),
                Family::Trigonal => {
                    let coeffs = parse_poly(src)
                        .and_then(|p| p.to_quintic())
                        .map_err(|e| CensusError::InvalidModel(e.to_string()))?;
                    Model::Trigonal(QuinticModel::from_coeffs(coeffs).ok_or_else(|| {
                        CensusError::InvalidModel("quintic is not in any reduced family".into())
                    })?)
                }
            }
        };
        model.validate()?;
        Ok(model)
    }
}

fn parse_hyper_equation(src: &str) -> Result<HyperModel, CensusError> {
    let bad = |e: crate::forms::FormsError| CensusError::InvalidModel(e.to_string());
    let (c, rhs) = match src.split_once('=') {
        Some((lhs, rhs)) => {
            let l = parse_poly(lhs).map_err(bad)?;
            let c = match l.0.iter().collect::<Vec<_>>().as_slice() {
                [(&(0, 2, 0), &c)] => c,
                _ => {
                    return Err(CensusError::InvalidModel(
                        "left-hand side must be c y^2".into(),
                    ))
                }
            };
            (c, rhs)
        }
        None => (1, src),
    };
    let f = parse_poly(rhs).and_then(|p| p.to_univariate_x()).map_err(bad)?;
    if f.len() > 13 {
        return Err(CensusError::InvalidModel("degree exceeds 12".into()));
    }
    let mut arr = [0u8; 13];
    arr[..f.len()].copy_from_slice(&f);
    HyperModel::from_f(c, &arr)
        .ok_or_else(|| CensusError::InvalidModel("not in the reduced hyperelliptic family".into()))
}
