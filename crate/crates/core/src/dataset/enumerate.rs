use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use num_integer::Integer;
use rayon::prelude::*;

use super::io::{io_err, JsonlWriter};
use super::{build_record, DatasetError, DatasetRecord, Stats};
use crate::tables;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub height_bound: u32,
    /// Keep only the representative of `+-c` whose first nonzero entry is positive.
    pub dedupe_antipodal: bool,
    pub worker_count: usize,
    pub output_path: PathBuf,
}

impl EnumerationConfig {
    pub fn new(height_bound: u32, output_path: impl Into<PathBuf>) -> Self {
        assert!(height_bound >= 1, "height bound must be at least 1");
        EnumerationConfig {
            height_bound,
            dedupe_antipodal: true,
            worker_count: 1,
            output_path: output_path.into(),
        }
    }
}

pub fn naive_height(c: &[i64; 8]) -> u32 {
    c.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0) as u32
}

fn first_nonzero_positive(c: &[i64; 8]) -> bool {
    c.iter().find(|&&v| v != 0).is_some_and(|&v| v > 0)
}

/// gcd 1, I6 != 0 and, with `dedupe`, first nonzero entry positive.
pub fn is_admissible(c: &[i64; 8], dedupe: bool) -> bool {
    if dedupe && !first_nonzero_positive(c) {
        return false;
    }
    if c.iter().fold(0i64, |g, v| g.gcd(v)) != 1 {
        return false;
    }
    tables::eval_numerator_i128(&tables::I6, c) != Some(0)
}

/// Blocks are indexed by the prefix `(c0, c1)` in lexicographic order.
pub fn block_count(h: u32) -> usize {
    let side = 2 * h as usize + 1;
    side * side
}

pub fn block_prefix(h: u32, block: usize) -> (i64, i64) {
    let side = 2 * h as usize + 1;
    ((block / side) as i64 - h as i64, (block % side) as i64 - h as i64)
}

/// Admissible tuples with prefix `block_prefix(h, block)` and all `|c_i| <= h`, in lexicographic order.
pub fn enumerate_block(h: u32, dedupe: bool, block: usize) -> Vec<[i64; 8]> {
    let (c0, c1) = block_prefix(h, block);
    if dedupe && (c0 < 0 || (c0 == 0 && c1 < 0)) {
        return Vec::new();
    }
    let h = h as i64;
    let side = (2 * h + 1) as usize;
    let mut out = Vec::new();
    let mut c = [c0, c1, -h, -h, -h, -h, -h, -h];
    for _ in 0..side.pow(6) {
        if is_admissible(&c, dedupe) {
            out.push(c);
        }
        for k in (2..8).rev() {
            if c[k] < h {
                c[k] += 1;
                break;
            }
            c[k] = -h;
        }
    }
    out
}

/// Every admissible tuple of height at most `cfg.height_bound`, in canonical order.
pub fn enumerate(cfg: &EnumerationConfig) -> impl Iterator<Item = [i64; 8]> + '_ {
    (0..block_count(cfg.height_bound))
        .flat_map(move |b| enumerate_block(cfg.height_bound, cfg.dedupe_antipodal, b))
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

/// All records in canonical order, built in memory.
pub fn records_for(cfg: &EnumerationConfig) -> Vec<DatasetRecord> {
    let h = cfg.height_bound;
    let blocks: Vec<Vec<DatasetRecord>> = pool(cfg.worker_count).install(|| {
        (0..block_count(h))
            .into_par_iter()
            .map(|b| {
                enumerate_block(h, cfg.dedupe_antipodal, b)
                    .iter()
                    .map(|c| build_record(*c).expect("enumerated tuples are valid"))
                    .collect()
            })
            .collect()
    });
    blocks.into_iter().flatten().collect()
}

fn part_path(dir: &Path, block: usize) -> PathBuf {
    dir.join(format!("block-{block:05}.jsonl"))
}

/// Writes the JSONL database to `cfg.output_path` and returns the counts.
///
/// Each block is written to its own part file; parts are concatenated in block order,
/// so the output does not depend on `worker_count`.
pub fn generate(cfg: &EnumerationConfig) -> Result<Stats, DatasetError> {
    let out = &cfg.output_path;
    let mut dir = out.clone().into_os_string();
    dir.push(".parts");
    let dir = PathBuf::from(dir);
    fs::create_dir_all(&dir).map_err(|e| io_err(&dir, e))?;
    let h = cfg.height_bound;
    let per_block: Vec<Result<Stats, DatasetError>> = pool(cfg.worker_count).install(|| {
        (0..block_count(h))
            .into_par_iter()
            .map(|b| {
                let path = part_path(&dir, b);
                let mut w = JsonlWriter::create(&path)?;
                let mut stats = Stats::default();
                for c in enumerate_block(h, cfg.dedupe_antipodal, b) {
                    let rec = build_record(c).map_err(DatasetError::Core)?;
                    stats.add(&rec);
                    w.write(&rec)?;
                }
                w.finish()?;
                Ok(stats)
            })
            .collect()
    });
    let mut stats = Stats::default();
    for s in per_block {
        stats.merge(&s?);
    }
    let file = File::create(out).map_err(|e| io_err(out, e))?;
    let mut w = BufWriter::new(file);
    for b in 0..block_count(h) {
        let path = part_path(&dir, b);
        let mut part = File::open(&path).map_err(|e| io_err(&path, e))?;
        std::io::copy(&mut part, &mut w).map_err(|e| io_err(out, e))?;
        fs::remove_file(&path).map_err(|e| io_err(&path, e))?;
    }
    w.flush().map_err(|e| io_err(out, e))?;
    fs::remove_dir(&dir).map_err(|e| io_err(&dir, e))?;
    Ok(stats)
}
