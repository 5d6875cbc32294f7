use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::features::FeatureMatrix;
use crate::{MlError, Result, N_CLASSES};

type Dist = [f64; N_CLASSES];

#[derive(Clone, Debug)]
pub struct ForestConfig {
    pub trees: usize,
    pub seed: u64,
    /// Per-code multiplier applied to every bootstrap count; all ones for an unweighted forest.
    pub class_weights: [f64; N_CLASSES],
    /// Candidate features per split; `None` means `floor(sqrt(width))`.
    pub max_features: Option<usize>,
}

impl ForestConfig {
    pub fn new(trees: usize, seed: u64) -> Self {
        ForestConfig { trees, seed, class_weights: [1.0; N_CLASSES], max_features: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
enum Node {
    Split { feature: u16, threshold: f64, left: u32, right: u32 },
    Leaf { dist: Dist },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tree {
    nodes: Vec<Node>,
}

impl Tree {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn depth(&self) -> usize {
        fn go(t: &Tree, i: usize) -> usize {
            match &t.nodes[i] {
                Node::Leaf { .. } => 0,
                Node::Split { left, right, .. } => 1 + go(t, *left as usize).max(go(t, *right as usize)),
            }
        }
        go(self, 0)
    }

    fn leaf(&self, x: &[f64]) -> &Dist {
        let mut i = 0;
        loop {
            match &self.nodes[i] {
                Node::Leaf { dist } => return dist,
                Node::Split { feature, threshold, left, right } => {
                    i = if x[*feature as usize] <= *threshold { *left } else { *right } as usize;
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ForestModel {
    pub trees: Vec<Tree>,
    pub seed: u64,
    pub tree_count: usize,
    pub width: usize,
}

pub(crate) fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Sorted distinct values and per-row ranks, column-major.
struct Ranked {
    n: usize,
    uniq: Vec<Vec<f64>>,
    ranks: Vec<u32>,
}

impl Ranked {
    fn new(m: &FeatureMatrix) -> Self {
        let n = m.rows();
        let mut uniq = Vec::with_capacity(m.width);
        let mut ranks = vec![0u32; n * m.width];
        for f in 0..m.width {
            let mut col: Vec<f64> = (0..n).map(|i| m.values[i * m.width + f]).collect();
            col.sort_by(f64::total_cmp);
            col.dedup();
            for i in 0..n {
                let v = m.values[i * m.width + f];
                ranks[f * n + i] = col.partition_point(|u| u.total_cmp(&v).is_lt()) as u32;
            }
            uniq.push(col);
        }
        Ranked { n, uniq, ranks }
    }

    fn rank(&self, f: usize, row: u32) -> u32 {
        self.ranks[f * self.n + row as usize]
    }
}

impl ForestModel {
    pub fn train(train: &FeatureMatrix, cfg: &ForestConfig) -> Result<ForestModel> {
        if train.rows() == 0 {
            return Err(MlError::EmptyTrain);
        }
        if cfg.trees == 0 {
            return Err(MlError::NoTrees);
        }
        let ranked = Ranked::new(train);
        let mut state = cfg.seed;
        let seeds: Vec<u64> = (0..cfg.trees).map(|_| splitmix64(&mut state)).collect();
        let max_features = cfg.max_features.unwrap_or((train.width as f64).sqrt() as usize).clamp(1, train.width);
        let trees = seeds
            .par_iter()
            .map(|&s| grow_tree(train, &ranked, &cfg.class_weights, max_features, s))
            .collect();
        Ok(ForestModel { trees, seed: cfg.seed, tree_count: cfg.trees, width: train.width })
    }

    /// Mean of the per-tree leaf distributions.
    pub fn predict_proba(&self, x: &[f64]) -> Dist {
        let mut acc = [0.0; N_CLASSES];
        for t in &self.trees {
            for (a, d) in acc.iter_mut().zip(t.leaf(x)) {
                *a += d;
            }
        }
        for a in &mut acc {
            *a /= self.trees.len() as f64;
        }
        acc
    }

    pub fn predict_row(&self, x: &[f64]) -> u8 {
        let p = self.predict_proba(x);
        let mut best = 0;
        for k in 1..N_CLASSES {
            if p[k] > p[best] {
                best = k;
            }
        }
        best as u8
    }

    pub fn predict(&self, m: &FeatureMatrix) -> Vec<u8> {
        (0..m.rows()).into_par_iter().map(|i| self.predict_row(m.row(i))).collect()
    }
}

struct Best {
    feature: usize,
    score: f64,
    cut: u32,
    threshold: f64,
}

fn split_score(left: &Dist, wl: f64, total: &Dist, wt: f64) -> f64 {
    let wr = wt - wl;
    let mut sl = 0.0;
    let mut sr = 0.0;
    for k in 0..N_CLASSES {
        sl += left[k] * left[k];
        let r = total[k] - left[k];
        sr += r * r;
    }
    sl / wl + sr / wr
}

fn grow_tree(m: &FeatureMatrix, ranked: &Ranked, cw: &Dist, max_features: usize, seed: u64) -> Tree {
    let n = m.rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mult = vec![0u32; n];
    for _ in 0..n {
        mult[rng.gen_range(0..n)] += 1;
    }
    let weight: Vec<f64> = (0..n).map(|i| mult[i] as f64 * cw[m.labels[i] as usize]).collect();
    let mut samples: Vec<u32> = (0..n as u32).filter(|&i| mult[i as usize] > 0).collect();

    let width = m.width;
    let mut feats: Vec<usize> = (0..width).collect();
    let mut keys: Vec<u64> = Vec::new();
    let max_uniq = ranked.uniq.iter().map(Vec::len).max().unwrap_or(0);
    let mut hist: Vec<Dist> = vec![[0.0; N_CLASSES]; max_uniq.min(4096)];
    let mut present: Vec<u32> = vec![0; hist.len()];

    let mut nodes = vec![Node::Leaf { dist: [0.0; N_CLASSES] }];
    let mut stack = vec![(0usize, samples.len(), 0usize)];
    while let Some((lo, hi, id)) = stack.pop() {
        let node = &mut samples[lo..hi];
        let mut total = [0.0; N_CLASSES];
        for &i in node.iter() {
            total[m.labels[i as usize] as usize] += weight[i as usize];
        }
        let wt: f64 = total.iter().sum();
        let classes = total.iter().filter(|&&w| w > 0.0).count();
        let mut best: Option<Best> = None;
        if classes > 1 && node.len() > 1 {
            let mut visited = 0;
            for j in 0..width {
                if visited == max_features {
                    break;
                }
                let pick = rng.gen_range(j..width);
                feats.swap(j, pick);
                let f = feats[j];
                let uniq = &ranked.uniq[f];
                let mut left = [0.0; N_CLASSES];
                let mut wl = 0.0;
                let mut found_split = false;
                let mut consider = |cut: u32, next: u32, left: &Dist, wl: f64, best: &mut Option<Best>| {
                    found_split = true;
                    let s = split_score(left, wl, &total, wt);
                    if best.as_ref().is_none_or(|b| s > b.score) {
                        let (a, b) = (uniq[cut as usize], uniq[next as usize]);
                        let mut t = a / 2.0 + b / 2.0;
                        if t >= b || !t.is_finite() {
                            t = a;
                        }
                        *best = Some(Best { feature: f, score: s, cut, threshold: t });
                    }
                };
                if uniq.len() <= hist.len() && uniq.len() <= node.len() {
                    let (mut rmin, mut rmax) = (u32::MAX, 0);
                    for &i in node.iter() {
                        let r = ranked.rank(f, i);
                        hist[r as usize][m.labels[i as usize] as usize] += weight[i as usize];
                        present[r as usize] += 1;
                        rmin = rmin.min(r);
                        rmax = rmax.max(r);
                    }
                    let mut prev: Option<u32> = None;
                    for r in rmin..=rmax {
                        if present[r as usize] == 0 {
                            continue;
                        }
                        if let Some(p) = prev {
                            consider(p, r, &left, wl, &mut best);
                        }
                        for k in 0..N_CLASSES {
                            left[k] += hist[r as usize][k];
                            wl += hist[r as usize][k];
                        }
                        hist[r as usize] = [0.0; N_CLASSES];
                        present[r as usize] = 0;
                        prev = Some(r);
                    }
                } else {
                    keys.clear();
                    keys.extend(node.iter().map(|&i| (ranked.rank(f, i) as u64) << 32 | i as u64));
                    keys.sort_unstable();
                    let mut prev = (keys[0] >> 32) as u32;
                    for &key in keys.iter() {
                        let r = (key >> 32) as u32;
                        let i = (key & 0xffff_ffff) as usize;
                        if r != prev {
                            consider(prev, r, &left, wl, &mut best);
                            prev = r;
                        }
                        left[m.labels[i] as usize] += weight[i];
                        wl += weight[i];
                    }
                }
                if found_split {
                    visited += 1;
                }
            }
        }
        match best {
            None => {
                let mut dist = total;
                for d in &mut dist {
                    *d /= wt;
                }
                nodes[id] = Node::Leaf { dist };
            }
            Some(b) => {
                let mut mid = 0;
                for k in 0..node.len() {
                    if ranked.rank(b.feature, node[k]) <= b.cut {
                        node.swap(k, mid);
                        mid += 1;
                    }
                }
                let left = nodes.len();
                nodes.push(Node::Leaf { dist: [0.0; N_CLASSES] });
                nodes.push(Node::Leaf { dist: [0.0; N_CLASSES] });
                nodes[id] = Node::Split {
                    feature: b.feature as u16,
                    threshold: b.threshold,
                    left: left as u32,
                    right: left as u32 + 1,
                };
                stack.push((lo + mid, hi, left + 1));
                stack.push((lo, lo + mid, left));
            }
        }
    }
    Tree { nodes }
}
