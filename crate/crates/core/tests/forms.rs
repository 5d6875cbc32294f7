mod common;

use common::*;
use num_traits::{Pow, Zero};
use rand::Rng;
use proptest::prelude::*;
use ratcubic_core::forms::{act, resultant, transvectant};
use ratcubic_core::map::{associated_pair, conjugate_map, fixed_point_form, inverse_associated};
use ratcubic_core::rational::{q, qr};
use ratcubic_core::{BinaryForm, Error, MobiusMap, Q, RationalMap3};

fn form_strategy(degree: usize) -> impl Strategy<Value = BinaryForm> {
    proptest::collection::vec((-9i64..=9, 1i64..=4), degree + 1)
        .prop_map(|v| BinaryForm::new(v.into_iter().map(|(n, d)| qr(n, d)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn first_transvectant_with_itself_vanishes(f in (1usize..=6).prop_flat_map(form_strategy)) {
        prop_assert!(transvectant(&f, &f, 1).unwrap().is_zero());
    }

    #[test]
    fn transvectant_is_bilinear(
        f1 in form_strategy(4), f2 in form_strategy(4), g in form_strategy(3),
        a in -5i64..=5, b in -5i64..=5, r in 0usize..=3,
    ) {
        let lhs = transvectant(&f1.scale(&q(a)).add(&f2.scale(&q(b))), &g, r).unwrap();
        let rhs = transvectant(&f1, &g, r).unwrap().scale(&q(a))
            .add(&transvectant(&f2, &g, r).unwrap().scale(&q(b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn act_composes(f in form_strategy(4), m in (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3),
                    n in (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)) {
        let (Ok(m), Ok(n)) = (MobiusMap::from_ints(m.0, m.1, m.2, m.3), MobiusMap::from_ints(n.0, n.1, n.2, n.3)) else {
            return Ok(());
        };
        prop_assert_eq!(act(&f, &m.compose(&n)), act(&act(&f, &m), &n));
    }
}

#[test]
fn zeroth_transvectant_is_the_product() {
    let mut r = rng(1);
    let f = random_form(&mut r, 3, 5);
    let g = random_form(&mut r, 2, 5);
    assert_eq!(transvectant(&f, &g, 0).unwrap(), f.mul(&g));
}

/// `-54 a0^2 a3^2 + 36 a0 a1 a2 a3 - 8 a0 a2^3 - 8 a1^3 a3 + 2 a1^2 a2^2`, raw coefficients.
fn cubic_generator(a: &[Q]) -> Q {
    let (a0, a1, a2, a3) = (&a[0], &a[1], &a[2], &a[3]);
    q(-54) * a0 * a0 * a3 * a3 + q(36) * a0 * a1 * a2 * a3 - q(8) * a0 * a2 * a2 * a2
        - q(8) * a1 * a1 * a1 * a3
        + q(2) * a1 * a1 * a2 * a2
}

fn cubic_transvectant_invariant(f: &BinaryForm) -> Q {
    let h = transvectant(f, f, 2).unwrap();
    let d = transvectant(&h, &h, 2).unwrap();
    assert_eq!(d.degree(), 0);
    d.coeff(0).clone()
}

#[test]
fn cubic_invariant_of_x3_plus_y3() {
    // a3 = a0 = 1 in standard form, i.e. x^3 + y^3.
    let f = BinaryForm::from_standard(&[q(1), q(0), q(0), q(1)]);
    assert_eq!(f, BinaryForm::from_ints(&[1, 0, 0, 1]));
    assert_eq!(cubic_generator(f.coeffs()), q(-54));
    assert_eq!(cubic_transvectant_invariant(&f), q(-2));
}

#[test]
fn cubic_generator_is_27_times_the_transvectant() {
    let mut r = rng(12);
    for _ in 0..50 {
        let f = random_form(&mut r, 3, 6);
        assert_eq!(cubic_generator(f.coeffs()), q(27) * cubic_transvectant_invariant(&f));
    }
}

#[test]
fn transvectant_order_checked() {
    let f = BinaryForm::from_ints(&[1, 0, 1]);
    let g = BinaryForm::from_ints(&[1, 2, 3, 4]);
    assert_eq!(transvectant(&f, &g, 3), Err(Error::TransvectantOrder { r: 3, m: 2, n: 3 }));
}

#[test]
fn act_examples() {
    let mut r = rng(2);
    let f = random_form(&mut r, 5, 7);
    assert_eq!(act(&f, &MobiusMap::identity()), f);
    let xy = BinaryForm::from_ints(&[0, 1, 0]);
    assert_eq!(act(&xy, &MobiusMap::from_ints(0, 1, 1, 0).unwrap()), xy);
}

#[test]
fn resultant_covariance() {
    let mut r = rng(3);
    for _ in 0..40 {
        let m = r.gen_range(1..=4);
        let n = r.gen_range(1..=4);
        let f = random_form(&mut r, m, 5);
        let g = random_form(&mut r, n, 5);
        let s = random_sigma(&mut r, 3);
        if f.is_zero() || g.is_zero() {
            continue;
        }
        let lhs = resultant(&act(&f, &s), &act(&g, &s)).unwrap();
        let rhs = Pow::pow(&s.det(), (m * n) as u32) * resultant(&f, &g).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn resultant_examples() {
    let f = BinaryForm::from_ints(&[1, -2, 0, 5]);
    assert!(resultant(&f, &f).unwrap().is_zero());
    let x3 = BinaryForm::from_ints(&[0, 0, 0, 1]);
    let y3 = BinaryForm::from_ints(&[1, 0, 0, 0]);
    assert_eq!(resultant(&x3, &y3).unwrap(), q(-1));
    assert_eq!(resultant(&BinaryForm::zero(3), &y3), Err(Error::ZeroForm));
    let phi = RationalMap3::from_ints([2, 3, -1, -3, 1, 2, -3, 1]).unwrap();
    assert_eq!(resultant(&phi.f0(), &phi.f1()).unwrap(), q(-211));
}

/// Univariate gcd degree over the rationals, coefficients ascending.
fn gcd_degree(a: &[Q], b: &[Q]) -> Option<usize> {
    fn trim(mut p: Vec<Q>) -> Vec<Q> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let mut r = a.clone();
        while r.len() >= b.len() && !r.is_empty() {
            let k = r.len() - b.len();
            let f = r.last().unwrap() / b.last().unwrap();
            for (i, c) in b.iter().enumerate() {
                r[i + k] -= &f * c;
            }
            r = trim(r);
        }
        a = b;
        b = r;
    }
    (!a.is_empty()).then(|| a.len() - 1)
}

#[test]
fn validity_matches_polynomial_gcd() {
    let mut r = rng(4);
    let mut invalid = 0;
    for _ in 0..3000 {
        let c: [i64; 8] = std::array::from_fn(|_| r.gen_range(-1..=1));
        let m = RationalMap3::new_unchecked(c.map(q));
        let (f0, f1) = (m.f0(), m.f1());
        if f0.is_zero() || f1.is_zero() {
            continue;
        }
        let coprime = gcd_degree(f0.coeffs(), f1.coeffs()) == Some(0)
            && !(f0.coeff(3).is_zero() && f1.coeff(3).is_zero());
        assert_eq!(!m.i6().is_zero(), coprime, "{c:?}");
        invalid += usize::from(!coprime);
    }
    assert!(invalid > 0);
}

#[test]
fn conjugation_examples() {
    let mut r = rng(5);
    let phi = random_map(&mut r, 5);
    assert!(conjugate_map(&phi, &MobiusMap::identity()).unwrap().projectively_equal(&phi));
    let neg = MobiusMap::from_ints(-1, 0, 0, 1).unwrap();
    for _ in 0..20 {
        let (t, s) = (small_q(&mut r, 5), small_q(&mut r, 5));
        let Ok(l1) = RationalMap3::new([q(1), q(0), t, q(0), q(0), s, q(0), q(1)]) else { continue };
        assert!(conjugate_map(&l1, &neg).unwrap().projectively_equal(&l1));
    }
    let inv_z3 = RationalMap3::from_ints([0, 0, 0, 1, 1, 0, 0, 0]).unwrap();
    let tau = MobiusMap::from_ints(0, 1, 1, 0).unwrap();
    assert!(conjugate_map(&inv_z3, &tau).unwrap().projectively_equal(&inv_z3));
}

#[test]
fn conjugation_inverts() {
    let mut r = rng(6);
    for _ in 0..50 {
        let phi = random_map(&mut r, 6);
        let s = random_sigma(&mut r, 4);
        let back = conjugate_map(&conjugate_map(&phi, &s).unwrap(), &s.inverse()).unwrap();
        assert!(back.projectively_equal(&phi));
    }
}

#[test]
fn associated_pair_examples() {
    // Tuple read in ascending powers of z: phi = z^3.
    let phi = RationalMap3::from_ascending([0, 0, 0, 1, 1, 0, 0, 0].map(q)).unwrap();
    let (i, j) = associated_pair(&phi);
    assert_eq!(i, BinaryForm::from_ints(&[0, -1, 0, 1, 0]));
    assert_eq!(j, BinaryForm::from_ints(&[3, 0, 3]));
    assert_eq!(i.to_string(), "x^3*y - x*y^3");
    // The same tuple in descending order is 1/z^3.
    let psi = RationalMap3::from_ints([0, 0, 0, 1, 1, 0, 0, 0]).unwrap();
    let (i, j) = associated_pair(&psi);
    assert_eq!(i, BinaryForm::from_ints(&[1, 0, 0, 0, -1]));
    assert!(j.is_zero());
}

#[test]
fn associated_pair_is_linear() {
    let mut r = rng(7);
    let phi = random_map(&mut r, 8);
    let l = qr(-7, 3);
    let (i, j) = associated_pair(&phi);
    let (i2, j2) = associated_pair(&phi.scale(&l));
    assert_eq!((i2, j2), (i.scale(&l), j.scale(&l)));
}

#[test]
fn associated_pair_equivariance() {
    let mut r = rng(8);
    for _ in 0..100 {
        let phi = random_map(&mut r, 6);
        let s = random_sl2(&mut r, 4);
        let (i, j) = associated_pair(&phi);
        let (ci, cj) = associated_pair(&conjugate_map(&phi, &s).unwrap());
        assert_eq!(ci, act(&i, &s));
        assert_eq!(cj, act(&j, &s));
    }
}

#[test]
fn associated_pair_covariance_general_sigma() {
    let mut r = rng(9);
    let mut common_scalar = 0;
    for _ in 0..100 {
        let phi = random_map(&mut r, 6);
        let s = random_sigma(&mut r, 4);
        let (i, j) = associated_pair(&phi);
        let (ci, cj) = associated_pair(&conjugate_map(&phi, &s).unwrap());
        assert_eq!(ci, act(&i, &s));
        assert_eq!(cj, act(&j, &s).scale(&s.det()));
        let mut lhs = ci.coeffs().to_vec();
        lhs.extend(cj.coeffs().iter().cloned());
        let mut rhs = act(&i, &s).coeffs().to_vec();
        rhs.extend(act(&j, &s).coeffs().iter().cloned());
        common_scalar += usize::from(ratcubic_core::rational::projectively_equal(&lhs, &rhs));
    }
    // A single scalar for both forms exists only when det(sigma) = 1 or J vanishes.
    assert!(common_scalar < 100);
}

#[test]
fn inverse_round_trip() {
    let mut r = rng(10);
    for _ in 0..1000 {
        let phi = random_map(&mut r, 10);
        let (i, j) = associated_pair(&phi);
        let back = inverse_associated(&i, &j).unwrap();
        assert!(back.projectively_equal(&phi));
    }
    let inv_z3 = RationalMap3::from_ints([0, 0, 0, 1, 1, 0, 0, 0]).unwrap();
    let (i, j) = associated_pair(&inv_z3);
    assert!(inverse_associated(&i, &j).unwrap().projectively_equal(&inv_z3));
}

#[test]
fn inverse_rejects_the_resultant_locus() {
    let f = BinaryForm::from_ints(&[0, 0, 0, 0, 1]);
    let g = BinaryForm::zero(2);
    assert_eq!(inverse_associated(&f, &g), Err(Error::NotARationalMap));
    // A nonzero pair whose cubics share the factor x.
    let f = BinaryForm::from_ints(&[0, 0, 1, 0, 0]);
    assert_eq!(inverse_associated(&f, &BinaryForm::zero(2)), Err(Error::NotARationalMap));
}

#[test]
fn fixed_point_examples() {
    let z3 = RationalMap3::from_ints([1, 0, 0, 0, 0, 0, 0, 1]).unwrap();
    assert_eq!(fixed_point_form(&z3), vec![q(0), q(-1), q(0), q(1), q(0)]);
    let inv_z3 = RationalMap3::from_ints([0, 0, 0, 1, 1, 0, 0, 0]).unwrap();
    assert_eq!(fixed_point_form(&inv_z3), vec![q(1), q(0), q(0), q(0), q(-1)]);
}

fn eval_uni(p: &[Q], t: &Q) -> Q {
    p.iter().rev().fold(Q::zero(), |acc, c| acc * t + c)
}

#[test]
fn automorphisms_permute_fixed_points() {
    // z -> -z commutes with (z^3 + t z)/(s z^2 + 1).
    let mut r = rng(11);
    let mut seen = 0;
    for _ in 0..200 {
        let (t, s) = (q(r.gen_range(-6..=6)), q(r.gen_range(-6..=6)));
        let Ok(phi) = RationalMap3::new([q(1), q(0), t, q(0), q(0), s, q(0), q(1)]) else { continue };
        let sp = fixed_point_form(&phi);
        for n in -40i64..=40 {
            for d in 1i64..=4 {
                let x = qr(n, d);
                if eval_uni(&sp, &x).is_zero() {
                    assert!(eval_uni(&sp, &-x.clone()).is_zero());
                    seen += 1;
                }
            }
        }
    }
    assert!(seen > 0);
}
