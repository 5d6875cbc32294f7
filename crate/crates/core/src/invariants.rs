//! The invariants xi0..xi5 of weights (2, 2, 3, 3, 4, 6), I6, J6, the syzygy and
//! the absolute invariants.

use num_traits::{Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::forms::{resultant, transvectant, BinaryForm};
use crate::map::{associated_pair, RationalMap3};
use crate::rational::{qr, Q};
use crate::tables;
use crate::{Error, Result};

pub const WEIGHTS: [u32; 6] = [2, 2, 3, 3, 4, 6];

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct XiTuple {
    #[serde(with = "crate::rational::serde_qs")]
    pub xi: [Q; 6],
}

impl XiTuple {
    pub fn new(xi: [Q; 6]) -> Self {
        XiTuple { xi }
    }

    pub fn from_ints(v: [i64; 6]) -> Self {
        XiTuple { xi: v.map(crate::rational::q) }
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(Zero::is_zero)
    }

    /// `lambda * xi = (lambda^w_i xi_i)`.
    pub fn scale_weighted(&self, lambda: &Q) -> Self {
        let mut out = self.xi.clone();
        for (x, w) in out.iter_mut().zip(WEIGHTS) {
            *x = &*x * Pow::pow(lambda, w);
        }
        XiTuple { xi: out }
    }
}

impl std::ops::Index<usize> for XiTuple {
    type Output = Q;
    fn index(&self, i: usize) -> &Q {
        &self.xi[i]
    }
}

const XI_TABLES: [&tables::Table<8>; 6] =
    [&tables::XI0, &tables::XI1, &tables::XI2, &tables::XI3, &tables::XI4, &tables::XI5];

/// The six explicit polynomials in c0..c7.
pub fn xi_explicit(phi: &RationalMap3) -> XiTuple {
    XiTuple { xi: XI_TABLES.map(|t| tables::eval_q(t, phi.coeffs())) }
}

/// [`xi_explicit`] on an integer tuple.
pub fn xi_explicit_int(c: &[i64; 8]) -> XiTuple {
    XiTuple { xi: XI_TABLES.map(|t| tables::eval_i64(t, c)) }
}

fn scalar(f: &BinaryForm) -> Q {
    debug_assert_eq!(f.degree(), 0);
    f.coeff(0).clone()
}

/// `(J,J)_2, (I,I)_4, ((I,I)_2,I)_4, (I,J^2)_4, ((I,I)_2,J^2)_4, (J^3,(I,(I,I)_2)_1)_6`.
pub fn xi_via_transvectants(phi: &RationalMap3) -> XiTuple {
    let (i, j) = associated_pair(phi);
    let tv = |f: &BinaryForm, g: &BinaryForm, r| transvectant(f, g, r).expect("degrees fixed");
    let ii2 = tv(&i, &i, 2);
    let j2 = j.pow(2);
    let j3 = j.pow(3);
    XiTuple {
        xi: [
            scalar(&tv(&j, &j, 2)),
            scalar(&tv(&i, &i, 4)),
            scalar(&tv(&ii2, &i, 4)),
            scalar(&tv(&i, &j2, 4)),
            scalar(&tv(&ii2, &j2, 4)),
            scalar(&tv(&j3, &tv(&i, &ii2, 1), 6)),
        ],
    }
}

/// I6 as a polynomial in the xi.
pub fn i6_from_xi(x: &XiTuple) -> Q {
    let [x0, x1, x2, x3, x4, x5] = &x.xi;
    -qr(1, 8) * x1 * x1 * x1 - qr(1, 384) * x0 * x0 * x1 + qr(3, 4) * x2 * x2
        - qr(3, 16) * x1 * x4
        - qr(1, 256) * x3 * x3
        + qr(3, 16) * x2 * x3
        + qr(1, 64) * x0 * x4
        - qr(1, 8) * x5
}

/// Legacy I6 expression; not weighted-homogeneous, kept for comparison.
pub fn i6_from_xi_legacy(x: &XiTuple) -> Q {
    let [x0, x1, x2, x3, x4, x5] = &x.xi;
    qr(1, 8) * x1 * x1 * x1 + qr(1, 384) * x1 * x0 * x0 - qr(3, 4) * x2 * x2
        - qr(3, 16) * x2 * x4
        + qr(1, 256) * x4 * x4
        + qr(3, 16) * x1 * x3
        - qr(1, 64) * x0 * x3
        - qr(1, 8) * x5
}

/// `Res(f0, f1)` by the Sylvester determinant.
pub fn i6_resultant(phi: &RationalMap3) -> Q {
    resultant(&phi.f0(), &phi.f1()).expect("valid maps have nonzero blocks")
}

pub fn j6_from_xi(x: &XiTuple) -> Q {
    let [x0, x1, _, x3, x4, _] = &x.xi;
    x3 * x3 - Q::from_integer(4.into()) * x4 * x0 + qr(2, 3) * x0 * x0 * x1
}

/// `Res(I, J)`.
pub fn j6_resultant(phi: &RationalMap3) -> Q {
    let (i, j) = associated_pair(phi);
    if i.is_zero() || j.is_zero() {
        return Q::zero();
    }
    resultant(&i, &j).expect("nonzero forms")
}

/// The explicit degree-6 polynomial, which is written in ascending coefficient order.
pub fn j6_explicit(phi: &RationalMap3) -> Q {
    tables::eval_q(&tables::J6_ASC, &phi.to_ascending())
}

pub fn j6(phi: &RationalMap3) -> Q {
    j6_from_xi(&xi_explicit(phi))
}

fn syzygy_rhs(x: &XiTuple, c_022: Q) -> Q {
    let [x0, x1, x2, x3, x4, _] = &x.xi;
    let x0_3 = x0 * x0 * x0;
    qr(1, 108) * &x0_3 * x1 * x1 * x1 + c_022 * &x0_3 * x2 * x2
        - qr(1, 24) * x0 * x1 * x1 * x3 * x3
        - qr(1, 6) * x2 * x3 * x3 * x3
        + qr(1, 2) * x0 * x2 * x3 * x4
        + qr(1, 4) * x1 * x3 * x3 * x4
        - qr(1, 4) * x0 * x1 * x4 * x4
        - qr(1, 2) * x4 * x4 * x4
}

/// The degree-12 relation among the xi; zero on every map.
pub fn syzygy_residual(x: &XiTuple) -> Q {
    &x.xi[5] * &x.xi[5] - syzygy_rhs(x, qr(-1, 18))
}

/// Variant with coefficient -18 on `xi0^3 xi2^2`; it does not vanish on general maps.
pub fn syzygy_residual_legacy(x: &XiTuple) -> Q {
    &x.xi[5] * &x.xi[5] - syzygy_rhs(x, qr(-18, 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AbsoluteInvariants {
    #[serde(with = "crate::rational::serde_qs")]
    pub i: [Q; 5],
}

/// `(xi0^6, xi1^6, xi2^4, xi3^4, xi4^3) / I6^2`.
pub fn absolute_invariants(x: &XiTuple, i6: &Q) -> Result<AbsoluteInvariants> {
    if i6.is_zero() {
        return Err(Error::NotARationalMap);
    }
    let d = i6 * i6;
    let p = |v: &Q, k: u32| Pow::pow(v, k) / &d;
    Ok(AbsoluteInvariants {
        i: [p(&x.xi[0], 6), p(&x.xi[1], 6), p(&x.xi[2], 4), p(&x.xi[3], 4), p(&x.xi[4], 3)],
    })
}
