//! Mobius transformations and degree-3 rational maps.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::forms::{act, resultant, BinaryForm};
use crate::rational::{q, Q};
use crate::tables;
use crate::{Error, Result};

/// The matrix `[[a, b], [c, e]]`, acting as `z -> (a z + b) / (c z + e)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MobiusMap {
    #[serde(with = "crate::rational::serde_q")]
    pub a: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub b: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub c: Q,
    #[serde(with = "crate::rational::serde_q")]
    pub e: Q,
}

impl MobiusMap {
    pub fn new(a: Q, b: Q, c: Q, e: Q) -> Result<Self> {
        let m = MobiusMap { a, b, c, e };
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(m)
    }

    pub fn from_ints(a: i64, b: i64, c: i64, e: i64) -> Result<Self> {
        Self::new(q(a), q(b), q(c), q(e))
    }

    pub fn identity() -> Self {
        MobiusMap { a: Q::one(), b: Q::zero(), c: Q::zero(), e: Q::one() }
    }

    pub fn det(&self) -> Q {
        &self.a * &self.e - &self.b * &self.c
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, o: &Self) -> Self {
        MobiusMap {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.e,
            c: &self.c * &o.a + &self.e * &o.c,
            e: &self.c * &o.b + &self.e * &o.e,
        }
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        MobiusMap {
            a: &self.e / &d,
            b: -&self.b / &d,
            c: -&self.c / &d,
            e: &self.a / &d,
        }
    }
}

/// A degree-3 map `f0 / f1` with coefficients `c0..c7` (see the crate docs for the order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMap3 {
    c: [Q; 8],
}

impl RationalMap3 {
    /// Validated constructor: rejects tuples with `I6 = 0`.
    pub fn new(c: [Q; 8]) -> Result<Self> {
        let m = Self::new_unchecked(c);
        if m.i6().is_zero() {
            return Err(Error::NotARationalMap);
        }
        Ok(m)
    }

    /// Raw container without the resultant check.
    pub fn new_unchecked(c: [Q; 8]) -> Self {
        RationalMap3 { c }
    }

    pub fn from_ints(c: [i64; 8]) -> Result<Self> {
        Self::new(c.map(q))
    }

    pub fn from_slice(c: &[Q]) -> Result<Self> {
        let arr: [Q; 8] = c
            .to_vec()
            .try_into()
            .map_err(|v: Vec<Q>| Error::Arity { expected: 8, got: v.len() })?;
        Self::new(arr)
    }

    /// Reads `c` as `(c0 + c1 z + c2 z^2 + c3 z^3) / (c4 + .. + c7 z^3)`.
    pub fn from_ascending(c: [Q; 8]) -> Result<Self> {
        Self::new(reverse_blocks(&c))
    }

    pub fn coeffs(&self) -> &[Q; 8] {
        &self.c
    }

    /// The same tuple in ascending powers of `z`.
    pub fn to_ascending(&self) -> [Q; 8] {
        reverse_blocks(&self.c)
    }

    pub fn f0(&self) -> BinaryForm {
        BinaryForm::new(vec![
            self.c[3].clone(),
            self.c[2].clone(),
            self.c[1].clone(),
            self.c[0].clone(),
        ])
    }

    pub fn f1(&self) -> BinaryForm {
        BinaryForm::new(vec![
            self.c[7].clone(),
            self.c[6].clone(),
            self.c[5].clone(),
            self.c[4].clone(),
        ])
    }

    fn from_forms(f0: &BinaryForm, f1: &BinaryForm) -> [Q; 8] {
        let g = |f: &BinaryForm, i: usize| f.coeff(3 - i).clone();
        [g(f0, 0), g(f0, 1), g(f0, 2), g(f0, 3), g(f1, 0), g(f1, 1), g(f1, 2), g(f1, 3)]
    }

    /// `Res(f0, f1)` from the explicit polynomial.
    pub fn i6(&self) -> Q {
        tables::eval_q(&tables::I6, &self.c)
    }

    pub fn scale(&self, s: &Q) -> Self {
        RationalMap3 { c: self.c.clone().map(|x| x * s) }
    }

    pub fn projectively_equal(&self, other: &Self) -> bool {
        crate::rational::projectively_equal(&self.c, &other.c)
    }
}

fn reverse_blocks(c: &[Q; 8]) -> [Q; 8] {
    [4, 3, 2, 1, 8, 7, 6, 5].map(|k: usize| c[k - 1].clone())
}

/// `(e f0^s - b f1^s) / (-c f0^s + a f1^s)`, the map `s^-1 . phi . s`.
pub fn conjugate_map(phi: &RationalMap3, s: &MobiusMap) -> Result<RationalMap3> {
    if s.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let f0 = act(&phi.f0(), s);
    let f1 = act(&phi.f1(), s);
    let g0 = f0.scale(&s.e).sub(&f1.scale(&s.b));
    let g1 = f1.scale(&s.a).sub(&f0.scale(&s.c));
    RationalMap3::new(RationalMap3::from_forms(&g0, &g1))
}

/// `(I, J) = (y f0 - x f1, df0/dx + df1/dy)`.
pub fn associated_pair(phi: &RationalMap3) -> (BinaryForm, BinaryForm) {
    let (f0, f1) = (phi.f0(), phi.f1());
    let i = f0.mul_y().sub(&f1.mul_x());
    let j = f0.dx().add(&f1.dy());
    (i, j)
}

/// `(x g + df/dy) / (y g - df/dx)` for a quartic `f` and quadratic `g`.
pub fn inverse_associated(f: &BinaryForm, g: &BinaryForm) -> Result<RationalMap3> {
    assert_eq!(f.degree(), 4, "inverse_associated expects a quartic");
    assert_eq!(g.degree(), 2, "inverse_associated expects a quadratic");
    let num = g.mul_x().add(&f.dy());
    let den = g.mul_y().sub(&f.dx());
    let delta = resultant(&num, &den).map_err(|_| Error::NotARationalMap)?;
    if delta.is_zero() {
        return Err(Error::NotARationalMap);
    }
    RationalMap3::new(RationalMap3::from_forms(&num, &den))
}

/// `S(t) = f0(t, 1) - t f1(t, 1)`, coefficients in ascending powers of `t`.
pub fn fixed_point_form(phi: &RationalMap3) -> Vec<Q> {
    let (f0, f1) = (phi.f0(), phi.f1());
    (0..5)
        .map(|i| {
            let a = if i < 4 { f0.coeff(i).clone() } else { Q::zero() };
            let b = if i >= 1 { f1.coeff(i - 1).clone() } else { Q::zero() };
            a - b
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ascending_is_block_reversal() {
        let m = RationalMap3::from_ascending([2, 3, -1, -3, 1, 2, -3, 1].map(q)).unwrap();
        assert_eq!(m.coeffs(), &[-3, -1, 3, 2, 1, -3, 2, 1].map(q));
        assert_eq!(m.to_ascending(), [2, 3, -1, -3, 1, 2, -3, 1].map(q));
    }

    #[test]
    fn singular_sigma() {
        assert_eq!(MobiusMap::from_ints(1, 2, 2, 4), Err(Error::SingularMatrix));
    }
}
