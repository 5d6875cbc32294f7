#![allow(dead_code)]

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ratcubic_core::rational::{q, qr};
use ratcubic_core::{BinaryForm, MobiusMap, Q, RationalMap3};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_q(r: &mut ChaCha8Rng, bound: i64) -> Q {
    let d = r.gen_range(1..=3);
    qr(r.gen_range(-bound..=bound), d)
}

pub fn random_map(r: &mut ChaCha8Rng, bound: i64) -> RationalMap3 {
    loop {
        let c: [i64; 8] = std::array::from_fn(|_| r.gen_range(-bound..=bound));
        if let Ok(m) = RationalMap3::from_ints(c) {
            return m;
        }
    }
}

pub fn random_form(r: &mut ChaCha8Rng, degree: usize, bound: i64) -> BinaryForm {
    BinaryForm::new((0..=degree).map(|_| small_q(r, bound)).collect())
}

pub fn random_sigma(r: &mut ChaCha8Rng, bound: i64) -> MobiusMap {
    loop {
        let v: [i64; 4] = std::array::from_fn(|_| r.gen_range(-bound..=bound));
        if let Ok(m) = MobiusMap::from_ints(v[0], v[1], v[2], v[3]) {
            return m;
        }
    }
}

/// A rational matrix of determinant 1.
pub fn random_sl2(r: &mut ChaCha8Rng, bound: i64) -> MobiusMap {
    loop {
        let a = small_q(r, bound);
        if a.is_zero() {
            continue;
        }
        let b = small_q(r, bound);
        let c = small_q(r, bound);
        let e = (q(1) + &b * &c) / &a;
        let m = MobiusMap::new(a, b, c, e).unwrap();
        assert_eq!(m.det(), q(1));
        return m;
    }
}

/// Random sigma with det different from +-1.
pub fn random_gl2(r: &mut ChaCha8Rng, bound: i64) -> MobiusMap {
    loop {
        let m = random_sigma(r, bound);
        let d = m.det();
        if d != q(1) && d != q(-1) {
            return m;
        }
    }
}
