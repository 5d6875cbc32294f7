mod common;

use std::collections::HashSet;
use std::io::Write;

use num_traits::Zero;
use ratcubic_core::dataset::*;
use ratcubic_core::invariants::{i6_resultant, j6_explicit, j6_resultant, syzygy_residual};
use ratcubic_core::rational::q;
use ratcubic_core::{AutLabel, Error, RationalMap3};

const GOLDEN: &str = include_str!("golden/record.json");

#[test]
fn golden_record_bytes() {
    let rec = build_record([2, 3, -1, -3, 1, 2, -3, 1]).unwrap();
    assert_eq!(serde_json::to_string(&rec).unwrap(), GOLDEN.trim());
    assert_eq!(rec.naive_height, 3);
    assert_eq!(rec.j6, q(89360));
    assert_eq!(rec.aut_label, AutLabel::E);
    assert!((rec.weighted_height - 5.66).abs() < 0.005);
}

#[test]
fn special_records() {
    let d4 = build_record([0, 0, 0, 1, 1, 0, 0, 0]).unwrap();
    assert_eq!(d4.aut_label, AutLabel::D4);
    assert_eq!(d4.xi_normalized.to_xi(), ratcubic_core::XiTuple::from_ints([0, -2, 0, 0, 0, 0]));
    let a4 = build_record([1, 0, 0, -3, 0, -3, 0, 0]).unwrap();
    assert_eq!(a4.aut_label, AutLabel::A4);
    assert_eq!(build_record([1, 0, 0, 0, 1, 0, 0, 0]), Err(Error::NotARationalMap));
    assert_eq!(build_record([2, 0, 0, 0, 0, 0, 0, 2]), Err(Error::NotPrimitive(2)));
}

#[test]
fn height_one_counts() {
    let mut cfg = EnumerationConfig::new(1, "unused");
    let all: Vec<[i64; 8]> = enumerate(&cfg).collect();
    assert_eq!(all.len(), 2248);
    for c in &all {
        let g = c.iter().fold(0i64, |g, v| num_integer::gcd(g, *v));
        assert_eq!(g, 1);
        assert!(!RationalMap3::from_ints(*c).unwrap().i6().is_zero());
        assert!(c.iter().find(|v| **v != 0).unwrap() > &0);
    }
    cfg.dedupe_antipodal = false;
    assert_eq!(enumerate(&cfg).count(), 4496);
}

#[test]
fn enumeration_order_and_partition() {
    let cfg = EnumerationConfig::new(1, "unused");
    let all: Vec<[i64; 8]> = enumerate(&cfg).collect();
    let mut sorted = all.clone();
    sorted.sort();
    assert_eq!(all, sorted);
    let set: HashSet<_> = all.iter().collect();
    assert_eq!(set.len(), all.len());
    // Brute-force filter over the whole box.
    let mut brute = 0;
    for n in 0..3i64.pow(8) {
        let mut c = [0i64; 8];
        let mut k = n;
        for i in (0..8).rev() {
            c[i] = k % 3 - 1;
            k /= 3;
        }
        let g = c.iter().fold(0i64, |g, v| num_integer::gcd(g, *v));
        let first_pos = c.iter().find(|v| **v != 0).is_some_and(|v| *v > 0);
        if g == 1 && first_pos && RationalMap3::from_ints(c).is_ok() {
            brute += 1;
            assert!(set.contains(&c));
        }
    }
    assert_eq!(brute, all.len());
}

#[test]
fn height_one_labels() {
    let recs = records_for(&EnumerationConfig::new(1, "unused"));
    let stats = Stats::from_records(&recs);
    // L0..L7 = {e}, C2-1, C2-2, C3, V4-1, V4-2, A4, D4
    assert_eq!(stats.row(1), [2128, 58, 46, 8, 4, 2, 0, 2]);
    assert_eq!(stats.total(), 2248);
    for r in &recs {
        let phi = RationalMap3::from_ints(r.coeffs).unwrap();
        assert!(syzygy_residual(&r.xi_raw).is_zero());
        assert_eq!(j6_resultant(&phi), r.j6);
        assert_eq!(j6_explicit(&phi), r.j6);
        assert_eq!(i6_resultant(&phi), r.i6);
    }
}

#[test]
fn jsonl_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let recs: Vec<DatasetRecord> =
        records_for(&EnumerationConfig::new(1, "unused")).into_iter().take(1000).collect();
    let path = dir.path().join("r.jsonl");
    write_jsonl(&recs, &path).unwrap();
    assert_eq!(read_jsonl(&path).unwrap(), recs);
    let golden = build_record([2, 3, -1, -3, 1, 2, -3, 1]).unwrap();
    write_jsonl([&golden], &path).unwrap();
    let back = read_jsonl(&path).unwrap();
    assert_eq!(back[0].abs_invariants.i[2].to_string(), "531441/712336");
    let csv = dir.path().join("r.csv");
    write_csv(&recs, &csv).unwrap();
    assert_eq!(read_csv(&csv).unwrap(), recs);
}

#[test]
fn empty_and_malformed_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.jsonl");
    std::fs::File::create(&path).unwrap();
    assert!(read_jsonl(&path).unwrap().is_empty());
    let bad = dir.path().join("bad.jsonl");
    let mut f = std::fs::File::create(&bad).unwrap();
    writeln!(f, "{}", GOLDEN.trim()).unwrap();
    writeln!(f, "{}", GOLDEN.trim().replace("\"j6\":\"89360\"", "\"j6\":\"8x\"")).unwrap();
    drop(f);
    let err = read_jsonl(&bad).unwrap_err().to_string();
    assert!(err.contains(":2:") && err.contains("j6"), "{err}");
    let missing = dir.path().join("missing.jsonl");
    std::fs::write(&missing, GOLDEN.trim().replace("\"aut\":\"{e}\",", "")).unwrap();
    let err = read_jsonl(&missing).unwrap_err().to_string();
    assert!(err.contains(":1:") && err.contains("aut"), "{err}");
    let err = read_jsonl(&dir.path().join("nope.jsonl")).unwrap_err();
    assert!(matches!(err, DatasetError::Io { .. }));
}

#[test]
fn generate_is_independent_of_workers() {
    let dir = tempfile::tempdir().unwrap();
    let mut outs = Vec::new();
    for workers in [1usize, 3] {
        let mut cfg = EnumerationConfig::new(1, dir.path().join(format!("w{workers}.jsonl")));
        cfg.worker_count = workers;
        let stats = generate(&cfg).unwrap();
        assert_eq!(stats.total(), 2248);
        outs.push(std::fs::read(&cfg.output_path).unwrap());
        assert!(!dir.path().join(format!("w{workers}.jsonl.parts")).exists());
    }
    assert_eq!(outs[0], outs[1]);
    let recs = read_jsonl(&dir.path().join("w1.jsonl")).unwrap();
    assert_eq!(recs, records_for(&EnumerationConfig::new(1, "unused")));
}

#[test]
fn stats_table_layout() {
    let recs = records_for(&EnumerationConfig::new(1, "unused"));
    let t = Stats::from_records(&recs).render_table();
    let lines: Vec<&str> = t.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("L0 {e}") && lines[0].contains("L7 D4"));
    assert!(lines[1].starts_with("=1") && lines[1].trim_end().ends_with("2248"));
    assert!(lines[2].starts_with("<=1"));
}
