use ratcubic_core::AutLabel;
use serde::{Deserialize, Serialize};

use crate::features::FeatureMatrix;
use crate::forest::ForestModel;
use crate::{MlError, Result, N_CLASSES};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassRow {
    pub code: u8,
    pub label: String,
    /// `None` when the class was never predicted.
    pub precision: Option<f64>,
    /// `None` when the class has no test rows.
    pub recall: Option<f64>,
    pub f1: Option<f64>,
    pub support: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Averages {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    pub support: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub classes: Vec<ClassRow>,
    pub accuracy: f64,
    pub macro_avg: Averages,
    pub weighted_avg: Averages,
}

impl ClassMetrics {
    pub fn class(&self, label: AutLabel) -> Option<&ClassRow> {
        self.classes.iter().find(|r| r.code == label.code())
    }

    /// Text table in the usual precision/recall/F1/support layout.
    pub fn render(&self) -> String {
        let fmt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |x| format!("{x:.2}"));
        let mut s = format!("{:<14}{:>10}{:>10}{:>10}{:>10}\n", "Class", "Precision", "Recall", "F1-score", "Support");
        for r in &self.classes {
            s += &format!(
                "{:<14}{:>10}{:>10}{:>10}{:>10}\n",
                r.label,
                fmt(r.precision),
                fmt(r.recall),
                fmt(r.f1),
                r.support
            );
        }
        s += "\n";
        s += &format!("{:<14}{:>10}{:>10}{:>10.2}{:>10}\n", "Accuracy", "", "", self.accuracy, self.macro_avg.support);
        for (name, a) in [("Macro avg", &self.macro_avg), ("Weighted avg", &self.weighted_avg)] {
            s += &format!(
                "{:<14}{:>10.2}{:>10.2}{:>10.2}{:>10}\n",
                name, a.precision, a.recall, a.f1, a.support
            );
        }
        s
    }
}

pub fn evaluate(model: &ForestModel, test: &FeatureMatrix) -> Result<ClassMetrics> {
    if test.rows() == 0 {
        return Err(MlError::EmptyTest);
    }
    let pred = model.predict(test);
    Ok(evaluate_predictions(&test.labels, &pred, &[]))
}

/// One-vs-rest metrics. Rows are reported for every code in `extra` and every
/// code seen in `truth` or `pred`. Averages run over classes with test
/// support, counting an undefined precision as 0.
pub fn evaluate_predictions(truth: &[u8], pred: &[u8], extra: &[u8]) -> ClassMetrics {
    assert_eq!(truth.len(), pred.len());
    let mut tp = [0u64; N_CLASSES];
    let mut support = [0u64; N_CLASSES];
    let mut predicted = [0u64; N_CLASSES];
    let mut listed = [false; N_CLASSES];
    for &c in extra {
        listed[c as usize] = true;
    }
    for (&t, &p) in truth.iter().zip(pred) {
        support[t as usize] += 1;
        predicted[p as usize] += 1;
        listed[t as usize] = true;
        listed[p as usize] = true;
        if t == p {
            tp[t as usize] += 1;
        }
    }
    let mut classes = Vec::new();
    for c in 0..N_CLASSES {
        if !listed[c] {
            continue;
        }
        let precision = (predicted[c] > 0).then(|| tp[c] as f64 / predicted[c] as f64);
        let recall = (support[c] > 0).then(|| tp[c] as f64 / support[c] as f64);
        let f1 = match (precision, recall) {
            (Some(p), Some(r)) if p + r > 0.0 => Some(2.0 * p * r / (p + r)),
            (Some(_), Some(_)) => Some(0.0),
            _ => None,
        };
        let label = AutLabel::from_code(c as u8).map_or_else(|| c.to_string(), |l| l.to_string());
        classes.push(ClassRow { code: c as u8, label, precision, recall, f1, support: support[c] });
    }
    let n = truth.len() as u64;
    let scored: Vec<&ClassRow> = classes.iter().filter(|r| r.support > 0).collect();
    let avg = |weighted: bool| {
        let mut acc = [0.0; 3];
        let mut denom = 0.0;
        for r in &scored {
            let w = if weighted { r.support as f64 } else { 1.0 };
            acc[0] += w * r.precision.unwrap_or(0.0);
            acc[1] += w * r.recall.unwrap_or(0.0);
            acc[2] += w * r.f1.unwrap_or(0.0);
            denom += w;
        }
        let d = if denom > 0.0 { denom } else { 1.0 };
        Averages { precision: acc[0] / d, recall: acc[1] / d, f1: acc[2] / d, support: n }
    };
    let correct: u64 = tp.iter().sum();
    ClassMetrics {
        accuracy: if n > 0 { correct as f64 / n as f64 } else { 0.0 },
        macro_avg: avg(false),
        weighted_avg: avg(true),
        classes,
    }
}

/// Most frequent training code (lowest code on ties).
pub fn baseline_majority(train_labels: &[u8]) -> u8 {
    let mut counts = [0usize; N_CLASSES];
    for &l in train_labels {
        counts[l as usize] += 1;
    }
    let mut best = 0;
    for k in 1..N_CLASSES {
        if counts[k] > counts[best] {
            best = k;
        }
    }
    best as u8
}
