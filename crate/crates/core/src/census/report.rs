//! Report and checkpoint files.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CensusError, CensusReport, Family, Phase1, Survivor};

/// One CSV line per surviving tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub enumeration_index: usize,
    pub case: String,
    pub coefficients: String,
    pub count: u64,
    pub class_id: usize,
    pub weil: String,
}

impl CsvRow {
    pub fn new(s: &Survivor, class_id: usize, weil: &[i128]) -> Self {
        CsvRow {
            enumeration_index: s.index,
            case: s.model.case_label(),
            coefficients: s.model.coefficient_string(),
            count: s.count,
            class_id,
            weil: weil.iter().map(i128::to_string).collect::<Vec<_>>().join(" "),
        }
    }
}

pub fn write_json(report: &CensusReport, path: &Path) -> Result<(), CensusError> {
    let mut w = BufWriter::new(File::create(path)?);
    serde_json::to_writer_pretty(&mut w, report)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

pub fn write_csv(report: &CensusReport, path: &Path) -> Result<(), CensusError> {
    let mut w = csv::Writer::from_path(path)?;
    for row in &report.rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Phase-1 result as JSON lines: a header, then one survivor per line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub family: Family,
    pub count_ext: u32,
    pub phase1: Phase1,
}

#[derive(Serialize, Deserialize)]
struct Header {
    family: Family,
    count_ext: u32,
    max_points: u64,
    candidates: usize,
    rejected_candidates: usize,
    survivors: usize,
}

pub fn write_checkpoint(path: &Path, cp: &Checkpoint) -> Result<(), CensusError> {
    let mut w = BufWriter::new(File::create(path)?);
    let p = &cp.phase1;
    let header = Header {
        family: cp.family,
        count_ext: cp.count_ext,
        max_points: p.max_points,
        candidates: p.candidates,
        rejected_candidates: p.rejected_candidates,
        survivors: p.survivors.len(),
    };
    serde_json::to_writer(&mut w, &header)?;
    writeln!(w)?;
    for s in &p.survivors {
        serde_json::to_writer(&mut w, s)?;
        writeln!(w)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_checkpoint(path: &Path) -> Result<Checkpoint, CensusError> {
    let mut lines = BufReader::new(File::open(path)?).lines();
    let first = lines
        .next()
        .ok_or_else(|| CensusError::InvalidConfig("empty checkpoint".into()))??;
    let header: Header = serde_json::from_str(&first)?;
    let mut survivors = Vec::with_capacity(header.survivors);
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let s: Survivor = serde_json::from_str(&line)?;
        if s.model.family() != header.family {
            return Err(CensusError::InvalidConfig("checkpoint mixes families".into()));
        }
        survivors.push(s);
    }
    if survivors.len() != header.survivors {
        return Err(CensusError::InvalidConfig(format!(
            "checkpoint truncated: {} of {} survivors",
            survivors.len(),
            header.survivors
        )));
    }
    Ok(Checkpoint {
        family: header.family,
        count_ext: header.count_ext,
        phase1: Phase1 {
            max_points: header.max_points,
            candidates: header.candidates,
            rejected_candidates: header.rejected_candidates,
            survivors,
        },
    })
}
