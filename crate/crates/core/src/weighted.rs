//! Points of the weighted projective space P(2, 2, 3, 3, 4, 6).

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::invariants::{XiTuple, WEIGHTS};
use crate::rational::{to_f64, Q};
use crate::{Error, Result};

/// Integer representative with no prime `p` such that `p^w_i | x_i` for all `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedPoint {
    pub coords: [BigInt; 6],
}

impl WeightedPoint {
    pub fn to_xi(&self) -> XiTuple {
        XiTuple::new(self.coords.clone().map(Q::from_integer))
    }
}

impl Serialize for WeightedPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<i128> = self
            .coords
            .iter()
            .map(|c| c.to_i128().ok_or_else(|| serde::ser::Error::custom("coordinate exceeds i128")))
            .collect::<std::result::Result<_, _>>()?;
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedPoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i128>::deserialize(d)?;
        let arr: [i128; 6] =
            v.try_into().map_err(|v: Vec<i128>| de::Error::invalid_length(v.len(), &"6 integers"))?;
        Ok(WeightedPoint { coords: arr.map(BigInt::from) })
    }
}

fn lcm_denominators(x: &XiTuple) -> BigInt {
    x.xi.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn prime_factors_small(mut n: BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            out.push(p.clone());
            while (&n % &p).is_zero() {
                n /= &p;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

/// Divide out `p^(k w_i)` for the largest possible `k`; returns `k`.
fn strip_prime(coords: &mut [BigInt; 6], p: &BigInt) -> u32 {
    let mut k = u32::MAX;
    for (c, w) in coords.iter().zip(WEIGHTS) {
        if c.is_zero() {
            continue;
        }
        let mut v = 0u32;
        let mut t = c.clone();
        while (&t % p).is_zero() {
            t /= p;
            v += 1;
        }
        k = k.min(v / w);
        if k == 0 {
            return 0;
        }
    }
    if k == u32::MAX || k == 0 {
        return 0;
    }
    for (c, w) in coords.iter_mut().zip(WEIGHTS) {
        *c = &*c / Pow::pow(p, k * w);
    }
    k
}

/// Normalized representative and the positive `lambda` with `result = lambda * xi`.
pub fn normalize_weighted_with_lambda(x: &XiTuple) -> Result<(WeightedPoint, Q)> {
    if x.is_zero() {
        return Err(Error::ZeroPoint);
    }
    let d = lcm_denominators(x);
    let mut coords: [BigInt; 6] = std::array::from_fn(|i| {
        let v = &x.xi[i] * Q::from_integer(Pow::pow(&d, WEIGHTS[i]));
        debug_assert!(v.denom().is_one());
        v.to_integer()
    });
    let mut lambda = Q::from_integer(d.clone());
    let mut divide = |coords: &mut [BigInt; 6], p: &BigInt| {
        let k = strip_prime(coords, p);
        if k > 0 {
            lambda /= Q::from_integer(Pow::pow(p, k));
        }
    };
    for p in prime_factors_small(d) {
        divide(&mut coords, &p);
    }
    // Any remaining prime p satisfies p^w_i <= |x_i| for every nonzero x_i.
    let bound = coords
        .iter()
        .zip(WEIGHTS)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, w)| c.abs().nth_root(w))
        .min()
        .expect("nonzero point");
    let mut g = coords.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut p = BigInt::from(2);
    while p <= bound && &p * &p <= g {
        if (&g % &p).is_zero() {
            divide(&mut coords, &p);
            while (&g % &p).is_zero() {
                g /= &p;
            }
        }
        p += 1;
    }
    if g > BigInt::one() && g <= bound {
        divide(&mut coords, &g);
    }
    Ok((WeightedPoint { coords }, lambda))
}

pub fn normalize_weighted(x: &XiTuple) -> Result<WeightedPoint> {
    normalize_weighted_with_lambda(x).map(|(p, _)| p)
}

/// `max_i |x_i|^(1/w_i)`; zero coordinates contribute 0.
pub fn weighted_height(p: &WeightedPoint) -> f64 {
    weighted_height_of(&p.to_xi())
}

/// The same maximum taken directly over a rational tuple.
pub fn weighted_height_of(x: &XiTuple) -> f64 {
    x.xi
        .iter()
        .zip(WEIGHTS)
        .map(|(v, w)| to_f64(&v.abs()).powf(1.0 / w as f64))
        .fold(0.0, f64::max)
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn pow_i(x: &Q, k: i64) -> Q {
    let p = Pow::pow(x, k.unsigned_abs() as u32);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

fn rational_root(x: &Q, n: u32) -> Option<Q> {
    if n.is_multiple_of(2) && x.is_negative() {
        return None;
    }
    let root = |b: &BigInt| {
        let r = b.abs().nth_root(n);
        (Pow::pow(&r, n) == b.abs()).then_some(r)
    };
    let num = root(x.numer())?;
    let den = root(x.denom())?;
    let num = if x.numer().sign() == Sign::Minus { -num } else { num };
    Some(Q::new(num, den))
}

/// True iff `q_i = lambda^w_i p_i` for a rational `lambda != 0`.
pub fn weighted_points_equal(p: &XiTuple, q: &XiTuple) -> bool {
    if p.is_zero() || q.is_zero() {
        return false;
    }
    let mut idx = Vec::new();
    for i in 0..6 {
        match (p.xi[i].is_zero(), q.xi[i].is_zero()) {
            (true, true) => {}
            (false, false) => idx.push(i),
            _ => return false,
        }
    }
    let g = idx.iter().fold(0i64, |acc, &i| num_integer::gcd(acc, WEIGHTS[i] as i64));
    // mu = lambda^g satisfies mu^(w_i/g) = r_i; Bezout on the reduced weights pins mu down.
    let ws: Vec<i64> = idx.iter().map(|&i| WEIGHTS[i] as i64 / g).collect();
    let coeffs = bezout(&ws);
    let mut mu = Q::one();
    for (k, &i) in idx.iter().enumerate() {
        let r = &q.xi[i] / &p.xi[i];
        mu *= pow_i(&r, coeffs[k]);
    }
    for (k, &i) in idx.iter().enumerate() {
        let r = &q.xi[i] / &p.xi[i];
        if pow_i(&mu, ws[k]) != r {
            return false;
        }
    }
    rational_root(&mu, g as u32).is_some()
}

/// Integers `a_k` with `sum a_k w_k = gcd(w)`.
fn bezout(ws: &[i64]) -> Vec<i64> {
    let mut coeffs = vec![0i64; ws.len()];
    let mut g = 0i64;
    for (k, &w) in ws.iter().enumerate() {
        if g == 0 {
            g = w;
            coeffs[k] = 1;
            continue;
        }
        let (ng, s, t) = ext_gcd(g, w);
        for c in coeffs.iter_mut().take(k) {
            *c *= s;
        }
        coeffs[k] = t;
        g = ng;
    }
    coeffs
}
