use num_traits::ToPrimitive;
use ratcubic_core::dataset::DatasetRecord;
use serde::{Deserialize, Serialize};

use crate::{MlError, Result};

/// Values above this magnitude are not exactly representable as f64.
pub const LOG_THRESHOLD: f64 = 9_007_199_254_740_992.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureMode {
    #[serde(rename = "coeffs")]
    Coefficients,
    Invariants,
}

impl FeatureMode {
    pub fn width(self) -> usize {
        match self {
            FeatureMode::Coefficients => 8,
            FeatureMode::Invariants => 6,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FeatureMode::Coefficients => "coeffs",
            FeatureMode::Invariants => "invariants",
        }
    }
}

impl std::str::FromStr for FeatureMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "coeffs" | "coefficients" => Ok(FeatureMode::Coefficients),
            "invariants" => Ok(FeatureMode::Invariants),
            _ => Err(format!("unknown feature mode {s:?}")),
        }
    }
}

/// Row-major feature table.
#[derive(Clone, Debug, PartialEq)]
pub struct FeatureMatrix {
    pub mode: FeatureMode,
    pub width: usize,
    pub values: Vec<f64>,
    pub labels: Vec<u8>,
    /// Set when the signed log transform `sign(v) * ln(1 + |v|)` was applied
    /// to every invariant value.
    pub log_transformed: bool,
}

impl FeatureMatrix {
    pub fn new(mode: FeatureMode, values: Vec<f64>, labels: Vec<u8>) -> Self {
        let width = mode.width();
        assert_eq!(values.len(), width * labels.len(), "ragged feature matrix");
        FeatureMatrix { mode, width, values, labels, log_transformed: false }
    }

    pub fn rows(&self) -> usize {
        self.labels.len()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.width..(i + 1) * self.width]
    }

    pub fn select(&self, idx: &[usize]) -> FeatureMatrix {
        let mut values = Vec::with_capacity(idx.len() * self.width);
        let mut labels = Vec::with_capacity(idx.len());
        for &i in idx {
            values.extend_from_slice(self.row(i));
            labels.push(self.labels[i]);
        }
        FeatureMatrix { values, labels, ..self.clone_empty() }
    }

    fn clone_empty(&self) -> FeatureMatrix {
        FeatureMatrix {
            mode: self.mode,
            width: self.width,
            values: Vec::new(),
            labels: Vec::new(),
            log_transformed: self.log_transformed,
        }
    }
}

pub fn featurize(records: &[DatasetRecord], mode: FeatureMode) -> Result<FeatureMatrix> {
    if records.is_empty() {
        return Err(MlError::EmptyInput);
    }
    let labels = records.iter().map(|r| r.aut_label.code()).collect();
    let mut values = Vec::with_capacity(records.len() * mode.width());
    match mode {
        FeatureMode::Coefficients => {
            for r in records {
                values.extend(r.coeffs.iter().map(|&c| c as f64));
            }
        }
        FeatureMode::Invariants => {
            for r in records {
                values.extend(r.xi_normalized.coords.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)));
            }
        }
    }
    let mut m = FeatureMatrix::new(mode, values, labels);
    if mode == FeatureMode::Invariants && m.values.iter().any(|v| v.is_nan() || v.abs() > LOG_THRESHOLD) {
        for v in &mut m.values {
            *v = v.signum() * v.abs().ln_1p();
        }
        m.log_transformed = true;
    }
    Ok(m)
}
