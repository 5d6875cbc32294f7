//! Automorphism loci of degree-3 maps and the classifier.
//!
//! Loci are tested in decreasing specialty:
//! D4, A4, V4 (first kind), V4 (second kind), C3, C2 (first kind), C2 (second kind), trivial.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::invariants::{xi_explicit, XiTuple};
use crate::map::RationalMap3;
use crate::rational::{q, qr, Q};
use crate::tables;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AutLabel {
    E,
    C2_1,
    C2_2,
    C3,
    V4_1,
    V4_2,
    A4,
    D4,
}

impl AutLabel {
    pub const ALL: [AutLabel; 8] = [
        AutLabel::E,
        AutLabel::C2_1,
        AutLabel::C2_2,
        AutLabel::C3,
        AutLabel::V4_1,
        AutLabel::V4_2,
        AutLabel::A4,
        AutLabel::D4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AutLabel::E => "{e}",
            AutLabel::C2_1 => "C2-1",
            AutLabel::C2_2 => "C2-2",
            AutLabel::C3 => "C3",
            AutLabel::V4_1 => "V4-1",
            AutLabel::V4_2 => "V4-2",
            AutLabel::A4 => "A4",
            AutLabel::D4 => "D4",
        }
    }

    /// Locus name L0..L7.
    pub fn locus(self) -> &'static str {
        ["L0", "L1", "L2", "L3", "L4", "L5", "L6", "L7"][self.index()]
    }

    /// Position in [`AutLabel::ALL`].
    pub fn index(self) -> usize {
        AutLabel::ALL.iter().position(|&l| l == self).expect("listed")
    }

    /// Numeric class code used by the ML tables.
    pub fn code(self) -> u8 {
        match self {
            AutLabel::A4 => 0,
            AutLabel::C2_1 => 1,
            AutLabel::C2_2 => 2,
            AutLabel::D4 => 3,
            AutLabel::V4_1 => 4,
            AutLabel::V4_2 => 5,
            AutLabel::E => 6,
            AutLabel::C3 => 7,
        }
    }

    pub fn from_code(code: u8) -> Option<Self> {
        AutLabel::ALL.into_iter().find(|l| l.code() == code)
    }
}

impl fmt::Display for AutLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AutLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        AutLabel::ALL
            .into_iter()
            .find(|l| {
                l.as_str() == t || l.locus() == t || format!("{l:?}") == t || (t == "E" && *l == AutLabel::E)
            })
            .ok_or_else(|| Error::Parse { what: "automorphism label", input: s.to_string() })
    }
}

impl Serialize for AutLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for AutLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn degenerate(locus: &'static str, reason: &str) -> Error {
    Error::DegenerateFamily { locus, reason: reason.to_string() }
}

/// Normal-form representative of a locus.
///
/// Parameters: C2-1 and C2-2 take `(t, s)`; C3 and V4-1 take `t`; V4-2 takes `s`;
/// A4 and D4 take none.
pub fn family_representative(locus: AutLabel, params: &[Q]) -> Result<RationalMap3> {
    let want = match locus {
        AutLabel::E => return Err(Error::NoFamily("{e}")),
        AutLabel::C2_1 | AutLabel::C2_2 => 2,
        AutLabel::C3 | AutLabel::V4_1 | AutLabel::V4_2 => 1,
        AutLabel::A4 | AutLabel::D4 => 0,
    };
    if params.len() != want {
        return Err(Error::Arity { expected: want, got: params.len() });
    }
    let z = Q::zero;
    let o = Q::one;
    let c: [Q; 8] = match locus {
        AutLabel::C2_1 | AutLabel::C2_2 => {
            let (t, s) = (params[0].clone(), params[1].clone());
            if &t * &s == Q::one() {
                return Err(degenerate(locus.as_str(), "I6 = 0 at t*s = 1"));
            }
            if locus == AutLabel::C2_1 {
                [o(), z(), t, z(), z(), s, z(), o()]
            } else {
                [z(), s, z(), o(), o(), z(), t, z()]
            }
        }
        AutLabel::C3 => {
            let t = params[0].clone();
            if t.is_zero() {
                return Err(degenerate("C3", "I6 = -t vanishes at t = 0"));
            }
            [o(), z(), z(), -t, z(), z(), o(), z()]
        }
        AutLabel::V4_1 => {
            let t = params[0].clone();
            if &t * &t == Q::one() {
                return Err(degenerate("V4-1", "I6 = (t^2 - 1)^2 vanishes at t = +-1"));
            }
            [z(), t.clone(), z(), o(), o(), z(), t, z()]
        }
        AutLabel::V4_2 => {
            let s = params[0].clone();
            if &s * &s == Q::one() {
                return Err(degenerate("V4-2", "I6 = -(s^2 - 1)^2 vanishes at s = +-1"));
            }
            [z(), s.clone(), z(), -o(), o(), z(), -s, z()]
        }
        AutLabel::A4 => [1, 0, 0, -3, 0, -3, 0, 0].map(q),
        AutLabel::D4 => [0, 0, 0, 1, 1, 0, 0, 0].map(q),
        AutLabel::E => unreachable!(),
    };
    RationalMap3::new(c)
}

/// Values of the locus equations at a point; a locus holds where its entries vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocusResiduals {
    pub l1: Q,
    pub l2: [Q; 4],
    pub l3: Q,
    pub l4: [Q; 4],
    pub l5: Q,
    /// xi2 != 0 and every other coordinate 0.
    pub l6: bool,
    /// xi1 != 0 and every other coordinate 0.
    pub l7: bool,
}

fn ext7(x: &XiTuple, i6: &Q) -> [Q; 7] {
    let [a, b, c, d, e, f] = x.xi.clone();
    [a, b, c, d, e, f, i6.clone()]
}

pub fn l2_residuals(x: &XiTuple) -> [Q; 4] {
    let [x0, x1, x2, x3, x4, x5] = &x.xi;
    let three = q(3);
    [
        x5.clone(),
        x0 * x0 * x1 + &three * x0 * x4 - &three * x3 * x3,
        x0 * x0 * x2 + qr(1, 2) * x0 * x1 * x3 - &three * x3 * x4,
        x0 * x1 * x4 - x0 * x2 * x3 - qr(1, 2) * x1 * x3 * x3 + &three * x4 * x4,
    ]
}

pub fn l4_residuals(x: &XiTuple) -> [Q; 4] {
    let [x0, x1, x2, x3, x4, x5] = &x.xi;
    [x0 * x1 + q(3) * x4, x2.clone(), x3.clone(), x5.clone()]
}

fn only_nonzero(x: &XiTuple, k: usize) -> bool {
    x.xi.iter().enumerate().all(|(i, v)| (i == k) != v.is_zero())
}

pub fn locus_residuals(x: &XiTuple, i6: &Q) -> LocusResiduals {
    let v = ext7(x, i6);
    LocusResiduals {
        l1: tables::eval_q(&tables::EQ_L1, &v),
        l2: l2_residuals(x),
        l3: tables::eval_q(&tables::EQ_L3, &v),
        l4: l4_residuals(x),
        l5: tables::eval_q(&tables::EQ_L5, &v),
        l6: only_nonzero(x, 2),
        l7: only_nonzero(x, 1),
    }
}

/// Parameter `t` of the C3 normal form whose invariants are weighted-equal to `(xi, I6)`.
///
/// The family point is `(-2, 1/6, (27t+2)/72, -(27t+2)/3, (54t-1)/9, -t(27t-16)/4)` with
/// `I6 = -t`. Writing `m = lambda^2 = -xi0/2`, the even-weight coordinates fix `t` linearly
/// and the odd-weight pair is checked through `xi2^2` so no square root is taken.
pub fn c3_family_parameter(x: &XiTuple, i6: &Q) -> Option<Q> {
    let [x0, x1, x2, x3, x4, x5] = &x.xi;
    if x0.is_zero() {
        return None;
    }
    let m = -x0 / q(2);
    if *x1 != &m / q(6) || *x3 != q(-24) * x2 {
        return None;
    }
    let m2 = &m * &m;
    let m3 = &m2 * &m;
    let t = (q(9) * x4 / &m2 + q(1)) / q(54);
    if t.is_zero() || *i6 != -(&t * &m3) {
        return None;
    }
    if *x5 != -(&m3 * &t * (q(27) * &t - q(16))) / q(4) {
        return None;
    }
    let lin = q(27) * &t + q(2);
    if x2 * x2 != &m3 * &lin * &lin / q(72 * 72) {
        return None;
    }
    Some(t)
}

pub fn c3_family_match(x: &XiTuple, i6: &Q) -> bool {
    c3_family_parameter(x, i6).is_some()
}

/// Label from the invariants. `i6` must be nonzero.
pub fn classify_xi(x: &XiTuple, i6: &Q) -> AutLabel {
    let z = |i: usize| x.xi[i].is_zero();
    if only_nonzero(x, 1) {
        return AutLabel::D4;
    }
    if only_nonzero(x, 2) {
        return AutLabel::A4;
    }
    if z(2) && z(3) && z(5) && l4_residuals(x)[0].is_zero() {
        return AutLabel::V4_1;
    }
    if z(0) && z(3) && z(4) && z(5) {
        return AutLabel::V4_2;
    }
    if c3_family_match(x, i6) {
        return AutLabel::C3;
    }
    if z(2) && z(3) {
        return AutLabel::C2_1;
    }
    if z(5) && l2_residuals(x).iter().all(Zero::is_zero) {
        return AutLabel::C2_2;
    }
    AutLabel::E
}

pub fn classify(phi: &RationalMap3) -> Result<AutLabel> {
    let i6 = phi.i6();
    if i6.is_zero() {
        return Err(Error::NotARationalMap);
    }
    Ok(classify_xi(&xi_explicit(phi), &i6))
}
