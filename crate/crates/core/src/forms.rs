//! Binary forms over the rationals.
//!
//! `coeffs[i]` multiplies `x^i y^(d-i)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::map::MobiusMap;
use crate::rational::{parse_q, q, Q};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<Q>,
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// n (n-1) .. (n-k+1)
fn falling(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j))
}

impl BinaryForm {
    /// Panics on an empty coefficient vector; a form has degree `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Q>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![Q::zero(); degree + 1])
    }

    /// The monomial `x^i y^(d-i)`.
    pub fn monomial(degree: usize, i: usize) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i] = Q::one();
        f
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Q {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "adding forms of different degree");
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "subtracting forms of different degree");
        Self::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Q::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::new(vec![Q::one()]);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiply by `x` (raises the degree by one).
    pub fn mul_x(&self) -> Self {
        let mut c = vec![Q::zero()];
        c.extend(self.coeffs.iter().cloned());
        Self::new(c)
    }

    /// Multiply by `y` (raises the degree by one).
    pub fn mul_y(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.push(Q::zero());
        Self::new(c)
    }

    /// The mixed partial derivative `d^(dx+dy) f / dx^dx dy^dy`, of degree `d - dx - dy`.
    pub fn partial(&self, dx: usize, dy: usize) -> Result<Self> {
        let d = self.degree();
        if dx + dy > d {
            return Err(Error::DerivativeOrder);
        }
        let out = (0..=d - dx - dy)
            .map(|j| {
                let i = j + dx;
                let c = &self.coeffs[i];
                if c.is_zero() {
                    Q::zero()
                } else {
                    c * Q::from_integer(falling(i, dx) * falling(d - i, dy))
                }
            })
            .collect();
        Ok(Self::new(out))
    }

    /// `df/dx`; the derivative of a constant is the degree-0 zero form.
    pub fn dx(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero(0);
        }
        self.partial(1, 0).expect("degree checked")
    }

    /// `df/dy`; the derivative of a constant is the degree-0 zero form.
    pub fn dy(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero(0);
        }
        self.partial(0, 1).expect("degree checked")
    }

    pub fn eval(&self, x: &Q, y: &Q) -> Q {
        let d = self.degree();
        let mut acc = Q::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), d - i);
            }
        }
        acc
    }

    /// Coefficients `a_i` of the standard form `sum binom(d,i) a_i x^i y^(d-i)`.
    pub fn to_standard(&self) -> Vec<Q> {
        let d = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c / Q::from_integer(binomial(d, i)))
            .collect()
    }

    pub fn from_standard(a: &[Q]) -> Self {
        let d = a.len() - 1;
        Self::new(
            a.iter()
                .enumerate()
                .map(|(i, c)| c * Q::from_integer(binomial(d, i)))
                .collect(),
        )
    }
}

/// The r-th transvectant
/// `(m-r)!(n-r)!/(m!n!) * sum_k (-1)^k binom(r,k) d^r f/dx^(r-k)dy^k * d^r g/dx^k dy^(r-k)`.
pub fn transvectant(f: &BinaryForm, g: &BinaryForm, r: usize) -> Result<BinaryForm> {
    let (m, n) = (f.degree(), g.degree());
    if r > m || r > n {
        return Err(Error::TransvectantOrder { r, m, n });
    }
    let mut acc = BinaryForm::zero(m + n - 2 * r);
    for k in 0..=r {
        let term = f.partial(r - k, k)?.mul(&g.partial(k, r - k)?);
        let c = Q::from_integer(binomial(r, k));
        let c = if k % 2 == 1 { -c } else { c };
        acc = acc.add(&term.scale(&c));
    }
    let pre = Q::new(factorial(m - r) * factorial(n - r), factorial(m) * factorial(n));
    Ok(acc.scale(&pre))
}

/// `f^M(x, y) = f(a x + b y, c x + e y)`.
pub fn act(f: &BinaryForm, m: &MobiusMap) -> BinaryForm {
    let d = f.degree();
    let l1 = BinaryForm::new(vec![m.b.clone(), m.a.clone()]);
    let l2 = BinaryForm::new(vec![m.e.clone(), m.c.clone()]);
    let p1: Vec<BinaryForm> = (0..=d).map(|k| l1.pow(k as u32)).collect();
    let p2: Vec<BinaryForm> = (0..=d).map(|k| l2.pow(k as u32)).collect();
    let mut acc = BinaryForm::zero(d);
    for (i, c) in f.coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&p1[i].mul(&p2[d - i]).scale(c));
        }
    }
    acc
}

/// Sylvester resultant of two forms of formal degrees `m`, `n`.
///
/// Rows hold `coeffs[0..=d]` shifted, so `Res(x^3, y^3) = -1`.
pub fn resultant(f: &BinaryForm, g: &BinaryForm) -> Result<Q> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroForm);
    }
    let (m, n) = (f.degree(), g.degree());
    let size = m + n;
    if size == 0 {
        return Ok(Q::one());
    }
    let mut a = vec![vec![Q::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.coeffs.iter().enumerate() {
            a[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.coeffs.iter().enumerate() {
            a[n + i][i + j] = c.clone();
        }
    }
    Ok(determinant(a))
}

pub(crate) fn determinant(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut det = Q::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Q::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for i in (0..=d).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let (px, py) = (i, d - i);
            let mono = [("x", px), ("y", py)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect::<Vec<_>>()
                .join("*");
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            let body = match (a.is_one(), mono.is_empty()) {
                (true, true) => "1".to_string(),
                (true, false) => mono,
                (false, true) => a.to_string(),
                (false, false) => format!("{a}*{mono}"),
            };
            if first {
                write!(out, "{}{}", if sign == "-" { "-" } else { "" }, body)?;
                first = false;
            } else {
                write!(out, " {sign} {body}")?;
            }
        }
        if first {
            write!(out, "0")?;
        }
        Ok(())
    }
}

impl Serialize for BinaryForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BinaryForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        if v.is_empty() {
            return Err(serde::de::Error::custom("a binary form needs at least one coefficient"));
        }
        let c = v.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>();
        c.map(BinaryForm::new).map_err(serde::de::Error::custom)
    }
}
