use ratcubic_core::dataset::DatasetRecord;
use ratcubic_core::AutLabel;
use serde::{Deserialize, Serialize};

use crate::features::{featurize, FeatureMode};
use crate::forest::{ForestConfig, ForestModel};
use crate::metrics::{baseline_majority, evaluate_predictions, ClassMetrics};
use crate::split::{class_weights, present_classes, split_indices};
use crate::{MlError, Result, N_CLASSES};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub features: FeatureMode,
    pub trees: usize,
    pub seed: u64,
    pub test_fraction: f64,
    pub weighted: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig { features: FeatureMode::Invariants, trees: 100, seed: 42, test_fraction: 0.10, weighted: true }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema: u32,
    pub config: ExperimentConfig,
    pub train_rows: usize,
    pub test_rows: usize,
    pub log_transformed: bool,
    /// `(label, weight)` for each class present in training.
    pub class_weights: Vec<(String, f64)>,
    pub metrics: ClassMetrics,
    pub baseline_label: String,
    pub baseline_accuracy: f64,
    /// Share of the baseline label in the whole input.
    pub baseline_prior: f64,
}

impl ExperimentReport {
    pub fn render(&self) -> String {
        let mut s = format!(
            "features={} trees={} seed={} test_fraction={} weighted={}\ntrain={} test={}{}\n\n",
            self.config.features.as_str(),
            self.config.trees,
            self.config.seed,
            self.config.test_fraction,
            if self.config.weighted { "on" } else { "off" },
            self.train_rows,
            self.test_rows,
            if self.log_transformed { " (log-magnitude features)" } else { "" },
        );
        s += &self.metrics.render();
        s += &format!(
            "\nbaseline ({}) accuracy {:.6}, prior {:.6}\n",
            self.baseline_label, self.baseline_accuracy, self.baseline_prior
        );
        s
    }
}

fn name(code: u8) -> String {
    AutLabel::from_code(code).map_or_else(|| code.to_string(), |l| l.to_string())
}

/// Featurize, split, train, and score both the forest and the majority baseline.
pub fn run_experiment(records: &[DatasetRecord], cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    let m = featurize(records, cfg.features)?;
    let (train_idx, test_idx) = split_indices(&m.labels, cfg.test_fraction, cfg.seed)?;
    if test_idx.is_empty() {
        return Err(MlError::EmptyTest);
    }
    let (train, test) = (m.select(&train_idx), m.select(&test_idx));
    let classes = present_classes(&train.labels);
    let weights = if cfg.weighted { class_weights(&train.labels, &classes)? } else { [1.0; N_CLASSES] };
    let mut fc = ForestConfig::new(cfg.trees, cfg.seed);
    fc.class_weights = weights;
    let model = ForestModel::train(&train, &fc)?;
    let pred = model.predict(&test);
    let metrics = evaluate_predictions(&test.labels, &pred, &classes);

    let base = baseline_majority(&train.labels);
    let hits = test.labels.iter().filter(|&&l| l == base).count();
    let prior = m.labels.iter().filter(|&&l| l == base).count() as f64 / m.rows() as f64;
    Ok(ExperimentReport {
        schema: 1,
        config: cfg.clone(),
        train_rows: train.rows(),
        test_rows: test.rows(),
        log_transformed: m.log_transformed,
        class_weights: classes.iter().map(|&c| (name(c), weights[c as usize])).collect(),
        metrics,
        baseline_label: name(base),
        baseline_accuracy: hits as f64 / test.rows() as f64,
        baseline_prior: prior,
    })
}
