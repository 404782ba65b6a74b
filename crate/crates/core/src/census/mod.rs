//! Two-phase census: sweep a reduced family for its maximal point count,
//! then classify the maximal models and attach Weil polynomials.

mod classify;
mod model;
mod report;

use std::collections::BTreeMap;
use std::ops::Range;
use std::path::PathBuf;
use std::time::Instant;

use log::info;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::hyperelliptic::{HyperError, HyperModel, HYPER_MODEL_COUNT};
use crate::trigonal::{all_cases, validate_genus5, QuinticModel, SingType, TrigonalError};
use crate::zeta::{count_isogeny_classes, hasse_weil_check, weil_from_counts, ZetaError};

pub use classify::classify;
pub use model::{Family, Model};
pub use report::{read_checkpoint, write_checkpoint, write_csv, write_json, Checkpoint, CsvRow};

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("internal consistency check failed: {0}")]
    Assertion(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Hyper(#[from] HyperError),
    #[error(transparent)]
    Trigonal(#[from] TrigonalError),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
}

/// Number of count-vector entries kept per survivor; enough to pin down a
/// genus-5 Weil polynomial.
pub const COUNT_VECTOR_LEN: u32 = 5;

/// Default worker count: `CURVE_CENSUS_JOBS`, else the available cores.
pub fn default_jobs() -> usize {
    std::env::var("CURVE_CENSUS_JOBS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub family: Family,
    /// 1 for GF(3), 2 for GF(9).
    pub count_ext: u32,
    pub jobs: usize,
    /// Keep every valid model with at least this many points instead of
    /// only the maxima.
    pub min_count: Option<u64>,
    /// Restrict a trigonal sweep to these families.
    pub cases: Option<Vec<(SingType, u8)>>,
    /// Write the phase-1 survivors here.
    pub checkpoint: Option<PathBuf>,
    /// Skip phase 1 and load survivors from this checkpoint.
    pub resume: Option<PathBuf>,
    pub timing: bool,
}

impl CensusConfig {
    pub fn new(family: Family, count_ext: u32) -> Self {
        CensusConfig {
            family,
            count_ext,
            jobs: default_jobs(),
            min_count: None,
            cases: None,
            checkpoint: None,
            resume: None,
            timing: true,
        }
    }

    pub fn validate(&self) -> Result<(), CensusError> {
        if !(1..=2).contains(&self.count_ext) {
            return Err(CensusError::InvalidConfig(format!(
                "counting field must be GF(3) or GF(9), got GF(3^{})",
                self.count_ext
            )));
        }
        if self.jobs == 0 {
            return Err(CensusError::InvalidConfig("worker count must be at least 1".into()));
        }
        if let Some(cases) = &self.cases {
            if self.family != Family::Trigonal {
                return Err(CensusError::InvalidConfig(
                    "case restriction applies to the trigonal family only".into(),
                ));
            }
            for &(sing, case) in cases {
                crate::trigonal::case_spec(sing, case)?;
            }
        }
        Ok(())
    }

    pub fn q(&self) -> i128 {
        3i128.pow(self.count_ext)
    }
}

/// A model that passed phase 1, with its count over the counting field and
/// its normalization counts over the first [`COUNT_VECTOR_LEN`] extensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survivor {
    pub index: usize,
    pub model: Model,
    pub count: u64,
    pub counts: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Phase1 {
    pub max_points: u64,
    /// Candidates swept.
    pub candidates: usize,
    /// Hyperelliptic: models failing the square-free test. Trigonal:
    /// candidates that were validated and found singular elsewhere.
    pub rejected_candidates: usize,
    pub survivors: Vec<Survivor>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassReport {
    pub id: usize,
    pub rep_index: usize,
    pub rep_model: Model,
    pub members: Vec<usize>,
    pub q: i128,
    pub weil: Vec<i128>,
    pub weil_factored: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub family: Family,
    pub count_field: u32,
    pub max_points: u64,
    pub num_tuples: usize,
    pub candidates: usize,
    pub rejected_candidates: usize,
    pub classes: Vec<ClassReport>,
    pub num_isogeny_classes: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<f64>,
    #[serde(skip)]
    pub rows: Vec<CsvRow>,
}

pub fn run_census(config: &CensusConfig) -> Result<CensusReport, CensusError> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CensusError::InvalidConfig(e.to_string()))?;
    pool.install(|| run_in_pool(config))
}

fn run_in_pool(config: &CensusConfig) -> Result<CensusReport, CensusError> {
    let start = Instant::now();
    let phase1 = match &config.resume {
        Some(path) => {
            let cp = read_checkpoint(path)?;
            if cp.family != config.family || cp.count_ext != config.count_ext {
                return Err(CensusError::InvalidConfig(format!(
                    "checkpoint is for {} over GF(3^{}), not {} over GF(3^{})",
                    cp.family, cp.count_ext, config.family, config.count_ext
                )));
            }
            cp.phase1
        }
        None => {
            let p = match config.family {
                Family::Hyperelliptic => sweep_hyperelliptic(config)?,
                Family::Trigonal => sweep_trigonal(config)?,
            };
            if let Some(path) = &config.checkpoint {
                write_checkpoint(
                    path,
                    &Checkpoint {
                        family: config.family,
                        count_ext: config.count_ext,
                        phase1: p.clone(),
                    },
                )?;
            }
            p
        }
    };
    info!(
        "phase 1: max {} with {} survivors among {} candidates",
        phase1.max_points,
        phase1.survivors.len(),
        phase1.candidates
    );
    let mut report = finish(config, phase1)?;
    if config.timing {
        report.runtime_seconds = Some(start.elapsed().as_secs_f64());
    }
    Ok(report)
}

/// Counts every index in parallel; `None` marks a rejected candidate.
fn sweep_counts<F>(indices: &[usize], f: F) -> Result<Vec<Option<u64>>, CensusError>
where
    F: Fn(usize) -> Result<Option<u64>, CensusError> + Sync,
{
    indices.par_iter().map(|&i| f(i)).collect()
}

fn sweep_hyperelliptic(config: &CensusConfig) -> Result<Phase1, CensusError> {
    let e = config.count_ext;
    let indices: Vec<usize> = (0..HYPER_MODEL_COUNT).collect();
    let counts = sweep_counts(&indices, |i| {
        let m = HyperModel::at(i).expect("index in range");
        if !m.is_squarefree() {
            return Ok(None);
        }
        Ok(Some(crate::hyperelliptic::count_points_hyper(&m, e)?))
    })?;
    let rejected = counts.iter().filter(|c| c.is_none()).count();
    let max_points = counts.iter().flatten().copied().max().unwrap_or(0);
    let threshold = config.min_count.unwrap_or(max_points);
    let picked: Vec<(usize, u64)> = indices
        .iter()
        .zip(&counts)
        .filter_map(|(&i, c)| c.filter(|&c| c >= threshold).map(|c| (i, c)))
        .collect();
    let survivors = with_count_vectors(
        picked
            .into_iter()
            .map(|(i, c)| (i, Model::Hyperelliptic(HyperModel::at(i).expect("in range")), c))
            .collect(),
        e,
    )?;
    Ok(Phase1 {
        max_points,
        candidates: indices.len(),
        rejected_candidates: rejected,
        survivors,
    })
}

fn trigonal_ranges(config: &CensusConfig) -> Vec<Range<usize>> {
    all_cases()
        .iter()
        .filter(|s| {
            config
                .cases
                .as_ref()
                .is_none_or(|cs| cs.contains(&(s.sing, s.case)))
        })
        .map(|s| s.offset..s.offset + s.size)
        .collect()
}

fn sweep_trigonal(config: &CensusConfig) -> Result<Phase1, CensusError> {
    let e = config.count_ext;
    let indices: Vec<usize> = trigonal_ranges(config).into_iter().flatten().collect();
    let counts = sweep_counts(&indices, |i| {
        let m = QuinticModel::at(i).expect("index in range");
        Ok(Some(crate::trigonal::normalization_count(&m, e)?))
    })?;
    let mut levels: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (&i, c) in indices.iter().zip(&counts) {
        levels.entry(c.expect("all counted")).or_default().push(i);
    }
    let mut max_valid = None;
    let mut rejected = 0;
    let mut picked: Vec<(usize, Model, u64)> = Vec::new();
    for (&count, idxs) in levels.iter().rev() {
        if let Some(m) = max_valid {
            if count < config.min_count.unwrap_or(m) {
                break;
            }
        }
        let valid: Vec<usize> = idxs
            .par_iter()
            .map(|&i| {
                let m = QuinticModel::at(i).expect("index in range");
                Ok(validate_genus5(&m)?.then_some(i))
            })
            .collect::<Result<Vec<_>, CensusError>>()?
            .into_iter()
            .flatten()
            .collect();
        info!("count {count}: {} candidates, {} valid", idxs.len(), valid.len());
        rejected += idxs.len() - valid.len();
        if !valid.is_empty() && max_valid.is_none() {
            max_valid = Some(count);
        }
        if max_valid.is_some_and(|m| count >= config.min_count.unwrap_or(m)) {
            picked.extend(
                valid
                    .into_iter()
                    .map(|i| (i, Model::Trigonal(QuinticModel::at(i).expect("in range")), count)),
            );
        }
    }
    picked.sort_by_key(|p| p.0);
    let survivors = with_count_vectors(picked, e)?;
    Ok(Phase1 {
        max_points: max_valid.unwrap_or(0),
        candidates: indices.len(),
        rejected_candidates: rejected,
        survivors,
    })
}

fn with_count_vectors(picked: Vec<(usize, Model, u64)>, base: u32) -> Result<Vec<Survivor>, CensusError> {
    picked
        .into_par_iter()
        .map(|(index, model, count)| {
            Ok(Survivor {
                index,
                counts: model.count_vector(base, COUNT_VECTOR_LEN)?,
                model,
                count,
            })
        })
        .collect()
}

fn assert_that(cond: bool, msg: impl FnOnce() -> String) -> Result<(), CensusError> {
    if cond {
        Ok(())
    } else {
        Err(CensusError::Assertion(msg()))
    }
}

/// Phases 2 and 3: classification, Weil polynomials, re-verification.
fn finish(config: &CensusConfig, phase1: Phase1) -> Result<CensusReport, CensusError> {
    let e = config.count_ext;
    let q = config.q();
    let survivors = &phase1.survivors;
    for s in survivors {
        for (k, &n) in s.counts.iter().enumerate() {
            let qk = q.pow(k as u32 + 1);
            assert_that(hasse_weil_check(n as i128, qk, 5), || {
                format!("survivor {} violates the Hasse-Weil bound over GF({qk})", s.index)
            })?;
        }
    }
    let models: Vec<Model> = survivors.iter().map(|s| s.model).collect();
    let partition = classify(&models, e)?;
    let mut classes = Vec::with_capacity(partition.len());
    let mut class_of = vec![0usize; survivors.len()];
    for (id, members) in partition.iter().enumerate() {
        let rep = &survivors[members[0]];
        for &m in members {
            class_of[m] = id;
            assert_that(survivors[m].counts == rep.counts, || {
                format!("class {id} mixes count vectors ({} vs {})", rep.index, survivors[m].index)
            })?;
        }
        let recount = rep.model.count(e)?;
        assert_that(recount == rep.count, || {
            format!("representative {} recounts to {recount}, not {}", rep.index, rep.count)
        })?;
        assert_that(rep.model.is_genus5()?, || {
            format!("representative {} fails re-validation", rep.index)
        })?;
        let counts: Vec<i128> = rep.counts.iter().map(|&n| n as i128).collect();
        let weil = weil_from_counts(q, &counts)?;
        assert_that(weil.satisfies_functional_equation(), || {
            format!("Weil polynomial of class {id} fails the functional equation")
        })?;
        classes.push(ClassReport {
            id,
            rep_index: rep.index,
            rep_model: rep.model,
            members: members.iter().map(|&m| survivors[m].index).collect(),
            q,
            weil_factored: weil.factored(),
            weil: weil.coeffs,
        });
    }
    let weils: Vec<_> = classes
        .iter()
        .map(|c| crate::zeta::WeilPoly::new(c.q, c.weil.clone()))
        .collect();
    let num_isogeny_classes = count_isogeny_classes(&weils)?;
    let rows = survivors
        .iter()
        .zip(&class_of)
        .map(|(s, &cid)| CsvRow::new(s, cid, &classes[cid].weil))
        .collect();
    Ok(CensusReport {
        family: config.family,
        count_field: q as u32,
        max_points: phase1.max_points,
        num_tuples: survivors.len(),
        candidates: phase1.candidates,
        rejected_candidates: phase1.rejected_candidates,
        classes,
        num_isogeny_classes,
        runtime_seconds: None,
        rows,
    })
}
