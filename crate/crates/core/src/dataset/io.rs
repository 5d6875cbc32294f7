use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use thiserror::Error;

use super::{record_from_json, DatasetRecord};
use crate::aut::AutLabel;
use crate::invariants::{AbsoluteInvariants, XiTuple};
use crate::rational::parse_q;
use crate::weighted::WeightedPoint;

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {message}")]
    Parse { path: PathBuf, line: usize, message: String },
    #[error(transparent)]
    Core(#[from] crate::Error),
}

pub(crate) fn io_err(path: &Path, source: std::io::Error) -> DatasetError {
    DatasetError::Io { path: path.to_path_buf(), source }
}

/// Buffered JSONL writer.
pub struct JsonlWriter {
    path: PathBuf,
    w: BufWriter<File>,
}

impl JsonlWriter {
    pub fn create(path: &Path) -> Result<Self, DatasetError> {
        let f = File::create(path).map_err(|e| io_err(path, e))?;
        Ok(JsonlWriter { path: path.to_path_buf(), w: BufWriter::new(f) })
    }

    pub fn write(&mut self, rec: &DatasetRecord) -> Result<(), DatasetError> {
        serde_json::to_writer(&mut self.w, rec)
            .map_err(|e| io_err(&self.path, std::io::Error::other(e)))?;
        self.w.write_all(b"\n").map_err(|e| io_err(&self.path, e))
    }

    pub fn finish(mut self) -> Result<(), DatasetError> {
        self.w.flush().map_err(|e| io_err(&self.path, e))
    }
}

pub fn write_jsonl<'a>(
    records: impl IntoIterator<Item = &'a DatasetRecord>,
    path: &Path,
) -> Result<(), DatasetError> {
    let mut w = JsonlWriter::create(path)?;
    for r in records {
        w.write(r)?;
    }
    w.finish()
}

pub fn read_jsonl(path: &Path) -> Result<Vec<DatasetRecord>, DatasetError> {
    let f = File::open(path).map_err(|e| io_err(path, e))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(f).lines().enumerate() {
        let line = line.map_err(|e| io_err(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = record_from_json(&line).map_err(|message| DatasetError::Parse {
            path: path.to_path_buf(),
            line: i + 1,
            message,
        })?;
        out.push(rec);
    }
    Ok(out)
}

fn csv_header() -> Vec<String> {
    let mut h: Vec<String> = (0..8).map(|i| format!("c{i}")).collect();
    h.push("h".into());
    h.extend((0..6).map(|i| format!("xi{i}")));
    h.extend((0..6).map(|i| format!("xi_norm{i}")));
    for k in ["wheight", "i6", "j6", "aut", "aut_code"] {
        h.push(k.into());
    }
    h.extend((1..=5).map(|i| format!("abs{i}")));
    h
}

/// Flat CSV with the JSONL fields spread over columns, plus the numeric class code.
pub fn write_csv(records: &[DatasetRecord], path: &Path) -> Result<(), DatasetError> {
    let csv_io = |e: csv::Error| io_err(path, std::io::Error::other(e));
    let mut w = csv::Writer::from_path(path).map_err(csv_io)?;
    w.write_record(csv_header()).map_err(csv_io)?;
    for r in records {
        let mut row: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
        row.push(r.naive_height.to_string());
        row.extend(r.xi_raw.xi.iter().map(|x| x.to_string()));
        row.extend(r.xi_normalized.coords.iter().map(|x| x.to_string()));
        row.push(r.weighted_height.to_string());
        row.push(r.i6.to_string());
        row.push(r.j6.to_string());
        row.push(r.aut_label.as_str().to_string());
        row.push(r.aut_label.code().to_string());
        row.extend(r.abs_invariants.i.iter().map(|x| x.to_string()));
        w.write_record(&row).map_err(csv_io)?;
    }
    w.flush().map_err(|e| io_err(path, e))
}

pub fn read_csv(path: &Path) -> Result<Vec<DatasetRecord>, DatasetError> {
    let mut rd = csv::Reader::from_path(path).map_err(|e| io_err(path, std::io::Error::other(e)))?;
    let header = csv_header();
    let mut out = Vec::new();
    for (i, row) in rd.records().enumerate() {
        let line = i + 2;
        let perr = |message: String| DatasetError::Parse { path: path.to_path_buf(), line, message };
        let row = row.map_err(|e| perr(e.to_string()))?;
        if row.len() != header.len() {
            return Err(perr(format!("expected {} columns, got {}", header.len(), row.len())));
        }
        let col = |k: usize| row.get(k).unwrap_or("");
        let named = |k: usize, e: String| perr(format!("column `{}`: {e}", header[k]));
        let int = |k: usize| col(k).parse::<i64>().map_err(|e| named(k, e.to_string()));
        let rat = |k: usize| parse_q(col(k)).map_err(|e| named(k, e.to_string()));
        let big = |k: usize| col(k).parse::<BigInt>().map_err(|e| named(k, e.to_string()));
        let mut coeffs = [0i64; 8];
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = int(k)?;
        }
        let naive_height = int(8)? as u32;
        let xi = XiTuple::new([rat(9)?, rat(10)?, rat(11)?, rat(12)?, rat(13)?, rat(14)?]);
        let coords = [big(15)?, big(16)?, big(17)?, big(18)?, big(19)?, big(20)?];
        let weighted_height = col(21).parse::<f64>().map_err(|e| named(21, e.to_string()))?;
        let aut_label = col(24).parse::<AutLabel>().map_err(|e| named(24, e.to_string()))?;
        out.push(DatasetRecord {
            coeffs,
            naive_height,
            xi_raw: xi,
            xi_normalized: WeightedPoint { coords },
            weighted_height,
            i6: rat(22)?,
            j6: rat(23)?,
            aut_label,
            abs_invariants: AbsoluteInvariants { i: [rat(26)?, rat(27)?, rat(28)?, rat(29)?, rat(30)?] },
        });
    }
    Ok(out)
}
