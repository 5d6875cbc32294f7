use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ratcubic_core::AutLabel;

use crate::features::FeatureMatrix;
use crate::{MlError, Result, N_CLASSES};

fn code_name(code: u8) -> String {
    AutLabel::from_code(code).map_or_else(|| code.to_string(), |l| l.to_string())
}

/// Codes occurring in `labels`, ascending.
pub fn present_classes(labels: &[u8]) -> Vec<u8> {
    let mut seen = [false; N_CLASSES];
    for &l in labels {
        seen[l as usize] = true;
    }
    (0..N_CLASSES as u8).filter(|&c| seen[c as usize]).collect()
}

/// `w_i = N / (C * n_i)` for every code in `classes`; the result is indexed by code
/// and is zero for codes not in `classes`.
pub fn class_weights(labels: &[u8], classes: &[u8]) -> Result<[f64; N_CLASSES]> {
    let mut counts = [0usize; N_CLASSES];
    for &l in labels {
        counts[l as usize] += 1;
    }
    let empty: Vec<String> = classes.iter().filter(|&&c| counts[c as usize] == 0).map(|&c| code_name(c)).collect();
    if !empty.is_empty() {
        return Err(MlError::EmptyClasses(empty));
    }
    let n = labels.len() as f64;
    let k = classes.len() as f64;
    let mut w = [0.0; N_CLASSES];
    for &c in classes {
        w[c as usize] = n / (k * counts[c as usize] as f64);
    }
    Ok(w)
}

/// Per-class shuffle then take `round(fraction * n_c)` rows for test, capped at
/// `n_c - 1` so every class keeps a training row. Row order is preserved.
pub fn stratified_split(m: &FeatureMatrix, test_fraction: f64, seed: u64) -> Result<(FeatureMatrix, FeatureMatrix)> {
    let (train, test) = split_indices(&m.labels, test_fraction, seed)?;
    Ok((m.select(&train), m.select(&test)))
}

pub(crate) fn split_indices(labels: &[u8], test_fraction: f64, seed: u64) -> Result<(Vec<usize>, Vec<usize>)> {
    if !(test_fraction > 0.0 && test_fraction < 1.0) {
        return Err(MlError::BadFraction(test_fraction));
    }
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); N_CLASSES];
    for (i, &l) in labels.iter().enumerate() {
        by_class[l as usize].push(i);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_test = vec![false; labels.len()];
    for idx in &mut by_class {
        if idx.is_empty() {
            continue;
        }
        idx.shuffle(&mut rng);
        let n = idx.len();
        let k = ((test_fraction * n as f64).round() as usize).min(n - 1);
        for &i in &idx[..k] {
            in_test[i] = true;
        }
    }
    let (test, train): (Vec<usize>, Vec<usize>) = (0..labels.len()).partition(|&i| in_test[i]);
    Ok((train, test))
}
