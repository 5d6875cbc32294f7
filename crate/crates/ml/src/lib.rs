//! Random-forest harness for predicting automorphism labels from either the
//! raw coefficients or the normalized invariant point of each record.
//!
//! Labels are the numeric codes of [`ratcubic_core::AutLabel::code`]; the
//! forest never relabels rows.

mod experiment;
mod features;
mod forest;
mod metrics;
mod split;

pub use experiment::{run_experiment, ExperimentConfig, ExperimentReport};
pub use features::{featurize, FeatureMatrix, FeatureMode, LOG_THRESHOLD};
pub use forest::{ForestConfig, ForestModel, Tree};
pub use metrics::{baseline_majority, evaluate, evaluate_predictions, Averages, ClassMetrics, ClassRow};
pub use split::{class_weights, present_classes, stratified_split};

/// Number of label codes.
pub const N_CLASSES: usize = 8;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum MlError {
    #[error("no records to featurize")]
    EmptyInput,
    #[error("classes with no samples: {0:?}")]
    EmptyClasses(Vec<String>),
    #[error("test fraction must lie strictly between 0 and 1, got {0}")]
    BadFraction(f64),
    #[error("training set is empty")]
    EmptyTrain,
    #[error("test set is empty")]
    EmptyTest,
    #[error("tree count must be at least 1")]
    NoTrees,
}

pub type Result<T> = std::result::Result<T, MlError>;
