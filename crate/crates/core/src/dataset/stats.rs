use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::DatasetRecord;
use crate::aut::AutLabel;

/// Label counts per exact naive height. Columns follow [`AutLabel::ALL`] (L0..L7).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub by_height: BTreeMap<u32, [u64; 8]>,
}

impl Stats {
    pub fn from_records<'a>(records: impl IntoIterator<Item = &'a DatasetRecord>) -> Self {
        let mut s = Stats::default();
        for r in records {
            s.add(r);
        }
        s
    }

    pub fn add(&mut self, r: &DatasetRecord) {
        self.by_height.entry(r.naive_height).or_default()[r.aut_label.index()] += 1;
    }

    pub fn merge(&mut self, other: &Stats) {
        for (h, row) in &other.by_height {
            let mine = self.by_height.entry(*h).or_default();
            for (a, b) in mine.iter_mut().zip(row) {
                *a += b;
            }
        }
    }

    /// Counts at exact height `h`.
    pub fn row(&self, h: u32) -> [u64; 8] {
        self.by_height.get(&h).copied().unwrap_or_default()
    }

    /// Counts over heights `1..=h`.
    pub fn cumulative(&self, h: u32) -> [u64; 8] {
        let mut out = [0u64; 8];
        for (_, row) in self.by_height.range(..=h) {
            for (a, b) in out.iter_mut().zip(row) {
                *a += b;
            }
        }
        out
    }

    pub fn total(&self) -> u64 {
        self.by_height.values().flatten().sum()
    }

    pub fn count(&self, label: AutLabel) -> u64 {
        self.by_height.values().map(|r| r[label.index()]).sum()
    }

    /// Text table: one row per exact height, then cumulative rows.
    pub fn render_table(&self) -> String {
        let mut s = String::new();
        let head: Vec<String> =
            AutLabel::ALL.iter().map(|l| format!("{} {}", l.locus(), l.as_str())).collect();
        let line = |s: &mut String, name: String, row: &[u64; 8]| {
            let _ = write!(s, "{name:<8}");
            for v in row {
                let _ = write!(s, "{v:>11}");
            }
            let _ = writeln!(s, "{:>11}", row.iter().sum::<u64>());
        };
        let _ = write!(s, "{:<8}", "h");
        for h in &head {
            let _ = write!(s, "{h:>11}");
        }
        let _ = writeln!(s, "{:>11}", "Total");
        for (h, row) in &self.by_height {
            line(&mut s, format!("={h}"), row);
        }
        for h in self.by_height.keys() {
            line(&mut s, format!("<={h}"), &self.cumulative(*h));
        }
        s
    }
}
