//! Integer term tables for the explicit invariant polynomials.
//! Each entry is (integer coefficient, exponent vector); the value is the sum divided by `den`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::Q;

pub(crate) struct Table<const N: usize> {
    pub den: i64,
    pub terms: &'static [(i64, [u8; N])],
}

/// xi0 in c0..c7.
pub(crate) const XI0: Table<8> = Table {
    den: 1,
    terms: &[
        (6, [1, 0, 1, 0, 0, 0, 0, 0]),
        (18, [1, 0, 0, 0, 0, 0, 0, 1]),
        (-2, [0, 2, 0, 0, 0, 0, 0, 0]),
        (-4, [0, 1, 0, 0, 0, 0, 1, 0]),
        (2, [0, 0, 1, 0, 0, 1, 0, 0]),
        (6, [0, 0, 0, 0, 0, 1, 0, 1]),
        (-2, [0, 0, 0, 0, 0, 0, 2, 0]),
    ],
};

/// xi1 in c0..c7.
pub(crate) const XI1: Table<8> = Table {
    den: 6,
    terms: &[
        (-3, [1, 0, 1, 0, 0, 0, 0, 0]),
        (3, [1, 0, 0, 0, 0, 0, 0, 1]),
        (1, [0, 2, 0, 0, 0, 0, 0, 0]),
        (-2, [0, 1, 0, 0, 0, 0, 1, 0]),
        (3, [0, 0, 1, 0, 0, 1, 0, 0]),
        (-12, [0, 0, 0, 1, 1, 0, 0, 0]),
        (-3, [0, 0, 0, 0, 0, 1, 0, 1]),
        (1, [0, 0, 0, 0, 0, 0, 2, 0]),
    ],
};

/// xi2 in c0..c7.
pub(crate) const XI2: Table<8> = Table {
    den: 72,
    terms: &[
        (-27, [2, 0, 0, 1, 0, 0, 0, 0]),
        (9, [1, 1, 1, 0, 0, 0, 0, 0]),
        (-9, [1, 1, 0, 0, 0, 0, 0, 1]),
        (-9, [1, 0, 1, 0, 0, 0, 1, 0]),
        (54, [1, 0, 0, 1, 0, 1, 0, 0]),
        (9, [1, 0, 0, 0, 0, 0, 1, 1]),
        (-2, [0, 3, 0, 0, 0, 0, 0, 0]),
        (6, [0, 2, 0, 0, 0, 0, 1, 0]),
        (-9, [0, 1, 1, 0, 0, 1, 0, 0]),
        (-72, [0, 1, 0, 1, 1, 0, 0, 0]),
        (9, [0, 1, 0, 0, 0, 1, 0, 1]),
        (-6, [0, 1, 0, 0, 0, 0, 2, 0]),
        (27, [0, 0, 2, 0, 1, 0, 0, 0]),
        (-54, [0, 0, 1, 0, 1, 0, 0, 1]),
        (9, [0, 0, 1, 0, 0, 1, 1, 0]),
        (72, [0, 0, 0, 1, 1, 0, 1, 0]),
        (-27, [0, 0, 0, 1, 0, 2, 0, 0]),
        (27, [0, 0, 0, 0, 1, 0, 0, 2]),
        (-9, [0, 0, 0, 0, 0, 1, 1, 1]),
        (2, [0, 0, 0, 0, 0, 0, 3, 0]),
    ],
};

/// xi3 in c0..c7.
pub(crate) const XI3: Table<8> = Table {
    den: 3,
    terms: &[
        (27, [2, 0, 0, 1, 0, 0, 0, 0]),
        (-9, [1, 1, 1, 0, 0, 0, 0, 0]),
        (9, [1, 1, 0, 0, 0, 0, 0, 1]),
        (-15, [1, 0, 1, 0, 0, 0, 1, 0]),
        (18, [1, 0, 0, 1, 0, 1, 0, 0]),
        (-9, [1, 0, 0, 0, 0, 0, 1, 1]),
        (2, [0, 3, 0, 0, 0, 0, 0, 0]),
        (2, [0, 2, 0, 0, 0, 0, 1, 0]),
        (1, [0, 1, 1, 0, 0, 1, 0, 0]),
        (15, [0, 1, 0, 0, 0, 1, 0, 1]),
        (-2, [0, 1, 0, 0, 0, 0, 2, 0]),
        (-3, [0, 0, 2, 0, 1, 0, 0, 0]),
        (-18, [0, 0, 1, 0, 1, 0, 0, 1]),
        (-1, [0, 0, 1, 0, 0, 1, 1, 0]),
        (3, [0, 0, 0, 1, 0, 2, 0, 0]),
        (-27, [0, 0, 0, 0, 1, 0, 0, 2]),
        (9, [0, 0, 0, 0, 0, 1, 1, 1]),
        (-2, [0, 0, 0, 0, 0, 0, 3, 0]),
    ],
};

/// xi4 in c0..c7.
pub(crate) const XI4: Table<8> = Table {
    den: 9,
    terms: &[
        (-9, [2, 0, 2, 0, 0, 0, 0, 0]),
        (18, [2, 0, 1, 0, 0, 0, 0, 1]),
        (-54, [2, 0, 0, 1, 0, 0, 1, 0]),
        (-27, [2, 0, 0, 0, 0, 0, 0, 2]),
        (6, [1, 2, 1, 0, 0, 0, 0, 0]),
        (-6, [1, 2, 0, 0, 0, 0, 0, 1]),
        (6, [1, 1, 1, 0, 0, 0, 1, 0]),
        (36, [1, 1, 0, 1, 0, 1, 0, 0]),
        (6, [1, 1, 0, 0, 0, 0, 1, 1]),
        (-6, [1, 0, 2, 0, 0, 1, 0, 0]),
        (-18, [1, 0, 1, 1, 1, 0, 0, 0]),
        (24, [1, 0, 1, 0, 0, 1, 0, 1]),
        (-6, [1, 0, 1, 0, 0, 0, 2, 0]),
        (-54, [1, 0, 0, 1, 1, 0, 0, 1]),
        (18, [1, 0, 0, 0, 0, 1, 0, 2]),
        (-6, [1, 0, 0, 0, 0, 0, 2, 1]),
        (-1, [0, 4, 0, 0, 0, 0, 0, 0]),
        (-2, [0, 2, 1, 0, 0, 1, 0, 0]),
        (-12, [0, 2, 0, 1, 1, 0, 0, 0]),
        (-6, [0, 2, 0, 0, 0, 1, 0, 1]),
        (2, [0, 2, 0, 0, 0, 0, 2, 0]),
        (6, [0, 1, 2, 0, 1, 0, 0, 0]),
        (-2, [0, 1, 1, 0, 0, 1, 1, 0]),
        (-24, [0, 1, 0, 1, 1, 0, 1, 0]),
        (12, [0, 1, 0, 1, 0, 2, 0, 0]),
        (-54, [0, 1, 0, 0, 1, 0, 0, 2]),
        (6, [0, 1, 0, 0, 0, 1, 1, 1]),
        (12, [0, 0, 2, 0, 1, 0, 1, 0]),
        (-3, [0, 0, 2, 0, 0, 2, 0, 0]),
        (-6, [0, 0, 1, 1, 1, 1, 0, 0]),
        (36, [0, 0, 1, 0, 1, 0, 1, 1]),
        (-6, [0, 0, 1, 0, 0, 2, 0, 1]),
        (-2, [0, 0, 1, 0, 0, 1, 2, 0]),
        (-18, [0, 0, 0, 1, 1, 1, 0, 1]),
        (-12, [0, 0, 0, 1, 1, 0, 2, 0]),
        (6, [0, 0, 0, 1, 0, 2, 1, 0]),
        (-9, [0, 0, 0, 0, 0, 2, 0, 2]),
        (6, [0, 0, 0, 0, 0, 1, 2, 1]),
        (-1, [0, 0, 0, 0, 0, 0, 4, 0]),
    ],
};

/// xi5 in c0..c7.
pub(crate) const XI5: Table<8> = Table {
    den: 4,
    terms: &[
        (-27, [4, 0, 0, 2, 0, 0, 0, 0]),
        (18, [3, 1, 1, 1, 0, 0, 0, 0]),
        (-18, [3, 1, 0, 1, 0, 0, 0, 1]),
        (-4, [3, 0, 3, 0, 0, 0, 0, 0]),
        (12, [3, 0, 2, 0, 0, 0, 0, 1]),
        (-18, [3, 0, 1, 1, 0, 0, 1, 0]),
        (-18, [3, 0, 0, 1, 0, 0, 1, 1]),
        (-4, [2, 3, 0, 1, 0, 0, 0, 0]),
        (1, [2, 2, 2, 0, 0, 0, 0, 0]),
        (-2, [2, 2, 1, 0, 0, 0, 0, 1]),
        (12, [2, 2, 0, 1, 0, 0, 1, 0]),
        (-3, [2, 2, 0, 0, 0, 0, 0, 2]),
        (-2, [2, 1, 2, 0, 0, 0, 1, 0]),
        (18, [2, 1, 1, 1, 0, 1, 0, 0]),
        (8, [2, 1, 1, 0, 0, 0, 1, 1]),
        (-36, [2, 1, 0, 2, 1, 0, 0, 0]),
        (6, [2, 1, 0, 1, 0, 1, 0, 1]),
        (-6, [2, 1, 0, 0, 0, 0, 1, 2]),
        (-4, [2, 0, 3, 0, 0, 1, 0, 0]),
        (6, [2, 0, 2, 1, 1, 0, 0, 0]),
        (4, [2, 0, 2, 0, 0, 1, 0, 1]),
        (-3, [2, 0, 2, 0, 0, 0, 2, 0]),
        (-6, [2, 0, 1, 1, 0, 1, 1, 0]),
        (-24, [2, 0, 1, 0, 0, 1, 0, 2]),
        (10, [2, 0, 1, 0, 0, 0, 2, 1]),
        (-36, [2, 0, 0, 2, 1, 0, 1, 0]),
        (18, [2, 0, 0, 2, 0, 2, 0, 0]),
        (-54, [2, 0, 0, 1, 1, 0, 0, 2]),
        (42, [2, 0, 0, 1, 0, 1, 1, 1]),
        (-16, [2, 0, 0, 1, 0, 0, 3, 0]),
        (-3, [2, 0, 0, 0, 0, 0, 2, 2]),
        (-8, [1, 3, 0, 1, 0, 1, 0, 0]),
        (2, [1, 2, 2, 0, 0, 1, 0, 0]),
        (8, [1, 2, 1, 1, 1, 0, 0, 0]),
        (-4, [1, 2, 1, 0, 0, 1, 0, 1]),
        (-24, [1, 2, 0, 1, 1, 0, 0, 1]),
        (8, [1, 2, 0, 1, 0, 1, 1, 0]),
        (10, [1, 2, 0, 0, 0, 1, 0, 2]),
        (-2, [1, 1, 3, 0, 1, 0, 0, 0]),
        (10, [1, 1, 2, 0, 1, 0, 0, 1]),
        (16, [1, 1, 1, 1, 1, 0, 1, 0]),
        (-2, [1, 1, 1, 1, 0, 2, 0, 0]),
        (42, [1, 1, 1, 0, 1, 0, 0, 2]),
        (-8, [1, 1, 1, 0, 0, 1, 1, 1]),
        (-24, [1, 1, 0, 2, 1, 1, 0, 0]),
        (-48, [1, 1, 0, 1, 1, 0, 1, 1]),
        (-14, [1, 1, 0, 1, 0, 2, 0, 1]),
        (16, [1, 1, 0, 1, 0, 1, 2, 0]),
        (-18, [1, 1, 0, 0, 1, 0, 0, 3]),
        (8, [1, 1, 0, 0, 0, 1, 1, 2]),
        (-6, [1, 0, 3, 0, 1, 0, 1, 0]),
        (8, [1, 0, 2, 1, 1, 1, 0, 0]),
        (-14, [1, 0, 2, 0, 1, 0, 1, 1]),
        (8, [1, 0, 2, 0, 0, 2, 0, 1]),
        (-2, [1, 0, 2, 0, 0, 1, 2, 0]),
        (24, [1, 0, 1, 1, 1, 1, 0, 1]),
        (8, [1, 0, 1, 1, 1, 0, 2, 0]),
        (-6, [1, 0, 1, 1, 0, 2, 1, 0]),
        (6, [1, 0, 1, 0, 1, 0, 1, 2]),
        (4, [1, 0, 1, 0, 0, 2, 0, 2]),
        (-4, [1, 0, 1, 0, 0, 1, 2, 1]),
        (-24, [1, 0, 0, 2, 1, 1, 1, 0]),
        (8, [1, 0, 0, 2, 0, 3, 0, 0]),
        (-24, [1, 0, 0, 1, 1, 0, 2, 1]),
        (10, [1, 0, 0, 1, 0, 2, 1, 1]),
        (-18, [1, 0, 0, 0, 1, 0, 1, 3]),
        (12, [1, 0, 0, 0, 0, 2, 0, 3]),
        (-2, [1, 0, 0, 0, 0, 1, 2, 2]),
        (-4, [0, 3, 0, 1, 0, 2, 0, 0]),
        (-16, [0, 3, 0, 0, 1, 0, 0, 2]),
        (1, [0, 2, 2, 0, 0, 2, 0, 0]),
        (8, [0, 2, 1, 1, 1, 1, 0, 0]),
        (16, [0, 2, 1, 0, 1, 0, 1, 1]),
        (-2, [0, 2, 1, 0, 0, 2, 0, 1]),
        (8, [0, 2, 0, 1, 1, 1, 0, 1]),
        (-4, [0, 2, 0, 1, 0, 2, 1, 0]),
        (-3, [0, 2, 0, 0, 0, 2, 0, 2]),
        (-2, [0, 1, 3, 0, 1, 1, 0, 0]),
        (-4, [0, 1, 2, 1, 2, 0, 0, 0]),
        (-6, [0, 1, 2, 0, 1, 1, 0, 1]),
        (-4, [0, 1, 2, 0, 1, 0, 2, 0]),
        (2, [0, 1, 2, 0, 0, 2, 1, 0]),
        (-24, [0, 1, 1, 1, 2, 0, 0, 1]),
        (16, [0, 1, 1, 1, 1, 1, 1, 0]),
        (-2, [0, 1, 1, 1, 0, 3, 0, 0]),
        (-6, [0, 1, 1, 0, 1, 1, 0, 2]),
        (8, [0, 1, 1, 0, 1, 0, 2, 1]),
        (-4, [0, 1, 0, 2, 1, 2, 0, 0]),
        (-36, [0, 1, 0, 1, 2, 0, 0, 2]),
        (16, [0, 1, 0, 1, 1, 1, 1, 1]),
        (-6, [0, 1, 0, 1, 0, 3, 0, 1]),
        (-18, [0, 1, 0, 0, 1, 1, 0, 3]),
        (12, [0, 1, 0, 0, 1, 0, 2, 2]),
        (-2, [0, 1, 0, 0, 0, 2, 1, 2]),
        (1, [0, 0, 4, 0, 2, 0, 0, 0]),
        (8, [0, 0, 3, 0, 2, 0, 0, 1]),
        (-2, [0, 0, 3, 0, 1, 1, 1, 0]),
        (-4, [0, 0, 2, 1, 2, 0, 1, 0]),
        (2, [0, 0, 2, 1, 1, 2, 0, 0]),
        (18, [0, 0, 2, 0, 2, 0, 0, 2]),
        (-2, [0, 0, 2, 0, 1, 1, 1, 1]),
        (-4, [0, 0, 2, 0, 1, 0, 3, 0]),
        (1, [0, 0, 2, 0, 0, 2, 2, 0]),
        (-24, [0, 0, 1, 1, 2, 0, 1, 1]),
        (8, [0, 0, 1, 1, 1, 2, 0, 1]),
        (8, [0, 0, 1, 1, 1, 1, 2, 0]),
        (-2, [0, 0, 1, 1, 0, 3, 1, 0]),
        (18, [0, 0, 1, 0, 1, 1, 1, 2]),
        (-8, [0, 0, 1, 0, 1, 0, 3, 1]),
        (-4, [0, 0, 1, 0, 0, 3, 0, 2]),
        (2, [0, 0, 1, 0, 0, 2, 2, 1]),
        (-4, [0, 0, 0, 2, 1, 2, 1, 0]),
        (1, [0, 0, 0, 2, 0, 4, 0, 0]),
        (-36, [0, 0, 0, 1, 2, 0, 1, 2]),
        (6, [0, 0, 0, 1, 1, 2, 0, 2]),
        (8, [0, 0, 0, 1, 1, 1, 2, 1]),
        (-2, [0, 0, 0, 1, 0, 3, 1, 1]),
        (-27, [0, 0, 0, 0, 2, 0, 0, 4]),
        (18, [0, 0, 0, 0, 1, 1, 1, 3]),
        (-4, [0, 0, 0, 0, 1, 0, 3, 2]),
        (-4, [0, 0, 0, 0, 0, 3, 0, 3]),
        (1, [0, 0, 0, 0, 0, 2, 2, 2]),
    ],
};

/// Res(f0, f1) in c0..c7.
pub(crate) const I6: Table<8> = Table {
    den: 1,
    terms: &[
        (-1, [3, 0, 0, 0, 0, 0, 0, 3]),
        (1, [2, 1, 0, 0, 0, 0, 1, 2]),
        (2, [2, 0, 1, 0, 0, 1, 0, 2]),
        (-1, [2, 0, 1, 0, 0, 0, 2, 1]),
        (3, [2, 0, 0, 1, 1, 0, 0, 2]),
        (-3, [2, 0, 0, 1, 0, 1, 1, 1]),
        (1, [2, 0, 0, 1, 0, 0, 3, 0]),
        (-1, [1, 2, 0, 0, 0, 1, 0, 2]),
        (-3, [1, 1, 1, 0, 1, 0, 0, 2]),
        (1, [1, 1, 1, 0, 0, 1, 1, 1]),
        (1, [1, 1, 0, 1, 1, 0, 1, 1]),
        (2, [1, 1, 0, 1, 0, 2, 0, 1]),
        (-1, [1, 1, 0, 1, 0, 1, 2, 0]),
        (2, [1, 0, 2, 0, 1, 0, 1, 1]),
        (-1, [1, 0, 2, 0, 0, 2, 0, 1]),
        (-1, [1, 0, 1, 1, 1, 1, 0, 1]),
        (-2, [1, 0, 1, 1, 1, 0, 2, 0]),
        (1, [1, 0, 1, 1, 0, 2, 1, 0]),
        (-3, [1, 0, 0, 2, 2, 0, 0, 1]),
        (3, [1, 0, 0, 2, 1, 1, 1, 0]),
        (-1, [1, 0, 0, 2, 0, 3, 0, 0]),
        (1, [0, 3, 0, 0, 1, 0, 0, 2]),
        (-1, [0, 2, 1, 0, 1, 0, 1, 1]),
        (-2, [0, 2, 0, 1, 1, 1, 0, 1]),
        (1, [0, 2, 0, 1, 1, 0, 2, 0]),
        (1, [0, 1, 2, 0, 1, 1, 0, 1]),
        (3, [0, 1, 1, 1, 2, 0, 0, 1]),
        (-1, [0, 1, 1, 1, 1, 1, 1, 0]),
        (-2, [0, 1, 0, 2, 2, 0, 1, 0]),
        (1, [0, 1, 0, 2, 1, 2, 0, 0]),
        (-1, [0, 0, 3, 0, 2, 0, 0, 1]),
        (1, [0, 0, 2, 1, 2, 0, 1, 0]),
        (-1, [0, 0, 1, 2, 2, 1, 0, 0]),
        (1, [0, 0, 0, 3, 3, 0, 0, 0]),
    ],
};

/// Explicit J6 polynomial in ascending coefficient order; evaluate on the block-reversed tuple.
pub(crate) const J6_ASC: Table<8> = Table {
    den: 1,
    terms: &[
        (81, [2, 0, 0, 4, 0, 0, 0, 0]),
        (108, [2, 0, 0, 3, 0, 0, 1, 0]),
        (54, [2, 0, 0, 2, 0, 0, 2, 0]),
        (12, [2, 0, 0, 1, 0, 0, 3, 0]),
        (1, [2, 0, 0, 0, 0, 0, 4, 0]),
        (-18, [1, 2, 0, 2, 0, 0, 0, 1]),
        (-12, [1, 2, 0, 1, 0, 0, 1, 1]),
        (-2, [1, 2, 0, 0, 0, 0, 2, 1]),
        (48, [1, 1, 2, 1, 0, 0, 0, 1]),
        (16, [1, 1, 2, 0, 0, 0, 1, 1]),
        (-54, [1, 1, 1, 3, 0, 0, 0, 0]),
        (-126, [1, 1, 1, 2, 0, 0, 1, 0]),
        (96, [1, 1, 1, 1, 0, 1, 0, 1]),
        (-66, [1, 1, 1, 1, 0, 0, 2, 0]),
        (32, [1, 1, 1, 0, 0, 1, 1, 1]),
        (-10, [1, 1, 1, 0, 0, 0, 3, 0]),
        (54, [1, 1, 0, 3, 0, 1, 0, 0]),
        (-108, [1, 1, 0, 2, 1, 0, 0, 1]),
        (-18, [1, 1, 0, 2, 0, 1, 1, 0]),
        (-72, [1, 1, 0, 1, 1, 0, 1, 1]),
        (48, [1, 1, 0, 1, 0, 2, 0, 1]),
        (-30, [1, 1, 0, 1, 0, 1, 2, 0]),
        (-12, [1, 1, 0, 0, 1, 0, 2, 1]),
        (16, [1, 1, 0, 0, 0, 2, 1, 1]),
        (-6, [1, 1, 0, 0, 0, 1, 3, 0]),
        (-16, [1, 0, 4, 0, 0, 0, 0, 1]),
        (12, [1, 0, 3, 2, 0, 0, 0, 0]),
        (40, [1, 0, 3, 1, 0, 0, 1, 0]),
        (-64, [1, 0, 3, 0, 0, 1, 0, 1]),
        (12, [1, 0, 3, 0, 0, 0, 2, 0]),
        (-36, [1, 0, 2, 2, 0, 1, 0, 0]),
        (144, [1, 0, 2, 1, 1, 0, 0, 1]),
        (72, [1, 0, 2, 1, 0, 1, 1, 0]),
        (48, [1, 0, 2, 0, 1, 0, 1, 1]),
        (-96, [1, 0, 2, 0, 0, 2, 0, 1]),
        (28, [1, 0, 2, 0, 0, 1, 2, 0]),
        (54, [1, 0, 1, 3, 1, 0, 0, 0]),
        (-162, [1, 0, 1, 2, 1, 0, 1, 0]),
        (-108, [1, 0, 1, 2, 0, 2, 0, 0]),
        (288, [1, 0, 1, 1, 1, 1, 0, 1]),
        (-126, [1, 0, 1, 1, 1, 0, 2, 0]),
        (24, [1, 0, 1, 1, 0, 2, 1, 0]),
        (96, [1, 0, 1, 0, 1, 1, 1, 1]),
        (-22, [1, 0, 1, 0, 1, 0, 3, 0]),
        (-64, [1, 0, 1, 0, 0, 3, 0, 1]),
        (20, [1, 0, 1, 0, 0, 2, 2, 0]),
        (378, [1, 0, 0, 3, 1, 1, 0, 0]),
        (-162, [1, 0, 0, 2, 2, 0, 0, 1]),
        (162, [1, 0, 0, 2, 1, 1, 1, 0]),
        (-60, [1, 0, 0, 2, 0, 3, 0, 0]),
        (-108, [1, 0, 0, 1, 2, 0, 1, 1]),
        (144, [1, 0, 0, 1, 1, 2, 0, 1]),
        (-18, [1, 0, 0, 1, 1, 1, 2, 0]),
        (-8, [1, 0, 0, 1, 0, 3, 1, 0]),
        (-18, [1, 0, 0, 0, 2, 0, 2, 1]),
        (48, [1, 0, 0, 0, 1, 2, 1, 1]),
        (-10, [1, 0, 0, 0, 1, 1, 3, 0]),
        (-16, [1, 0, 0, 0, 0, 4, 0, 1]),
        (4, [1, 0, 0, 0, 0, 3, 2, 0]),
        (1, [0, 4, 0, 0, 0, 0, 0, 2]),
        (-10, [0, 3, 1, 1, 0, 0, 0, 1]),
        (-6, [0, 3, 1, 0, 0, 0, 1, 1]),
        (12, [0, 3, 0, 3, 0, 0, 0, 0]),
        (28, [0, 3, 0, 2, 0, 0, 1, 0]),
        (-22, [0, 3, 0, 1, 0, 1, 0, 1]),
        (20, [0, 3, 0, 1, 0, 0, 2, 0]),
        (12, [0, 3, 0, 0, 1, 0, 0, 2]),
        (-10, [0, 3, 0, 0, 0, 1, 1, 1]),
        (4, [0, 3, 0, 0, 0, 0, 3, 0]),
        (4, [0, 2, 3, 0, 0, 0, 0, 1]),
        (-3, [0, 2, 2, 2, 0, 0, 0, 0]),
        (-10, [0, 2, 2, 1, 0, 0, 1, 0]),
        (20, [0, 2, 2, 0, 0, 1, 0, 1]),
        (-3, [0, 2, 2, 0, 0, 0, 2, 0]),
        (6, [0, 2, 1, 2, 0, 1, 0, 0]),
        (-18, [0, 2, 1, 1, 1, 0, 0, 1]),
        (-28, [0, 2, 1, 1, 0, 1, 1, 0]),
        (-30, [0, 2, 1, 0, 1, 0, 1, 1]),
        (28, [0, 2, 1, 0, 0, 2, 0, 1]),
        (-10, [0, 2, 1, 0, 0, 1, 2, 0]),
        (-36, [0, 2, 0, 3, 1, 0, 0, 0]),
        (12, [0, 2, 0, 2, 1, 0, 1, 0]),
        (45, [0, 2, 0, 2, 0, 2, 0, 0]),
        (-126, [0, 2, 0, 1, 1, 1, 0, 1]),
        (68, [0, 2, 0, 1, 1, 0, 2, 0]),
        (6, [0, 2, 0, 1, 0, 2, 1, 0]),
        (54, [0, 2, 0, 0, 2, 0, 0, 2]),
        (-66, [0, 2, 0, 0, 1, 1, 1, 1]),
        (20, [0, 2, 0, 0, 1, 0, 3, 0]),
        (12, [0, 2, 0, 0, 0, 3, 0, 1]),
        (-3, [0, 2, 0, 0, 0, 2, 2, 0]),
        (-8, [0, 1, 3, 0, 1, 0, 0, 1]),
        (6, [0, 1, 2, 2, 1, 0, 0, 0]),
        (20, [0, 1, 2, 1, 1, 0, 1, 0]),
        (24, [0, 1, 2, 0, 1, 1, 0, 1]),
        (6, [0, 1, 2, 0, 1, 0, 2, 0]),
        (-60, [0, 1, 1, 2, 1, 1, 0, 0]),
        (162, [0, 1, 1, 1, 2, 0, 0, 1]),
        (-104, [0, 1, 1, 1, 1, 1, 1, 0]),
        (-18, [0, 1, 1, 0, 2, 0, 1, 1]),
        (72, [0, 1, 1, 0, 1, 2, 0, 1]),
        (-28, [0, 1, 1, 0, 1, 1, 2, 0]),
        (-108, [0, 1, 0, 3, 2, 0, 0, 0]),
        (-252, [0, 1, 0, 2, 2, 0, 1, 0]),
        (150, [0, 1, 0, 2, 1, 2, 0, 0]),
        (-162, [0, 1, 0, 1, 2, 1, 0, 1]),
        (12, [0, 1, 0, 1, 2, 0, 2, 0]),
        (20, [0, 1, 0, 1, 1, 2, 1, 0]),
        (108, [0, 1, 0, 0, 3, 0, 0, 2]),
        (-126, [0, 1, 0, 0, 2, 1, 1, 1]),
        (28, [0, 1, 0, 0, 2, 0, 3, 0]),
        (40, [0, 1, 0, 0, 1, 3, 0, 1]),
        (-10, [0, 1, 0, 0, 1, 2, 2, 0]),
        (-60, [0, 0, 3, 0, 2, 0, 0, 1]),
        (45, [0, 0, 2, 2, 2, 0, 0, 0]),
        (150, [0, 0, 2, 1, 2, 0, 1, 0]),
        (-108, [0, 0, 2, 0, 2, 1, 0, 1]),
        (45, [0, 0, 2, 0, 2, 0, 2, 0]),
        (-234, [0, 0, 1, 2, 2, 1, 0, 0]),
        (378, [0, 0, 1, 1, 3, 0, 0, 1]),
        (-60, [0, 0, 1, 1, 2, 1, 1, 0]),
        (54, [0, 0, 1, 0, 3, 0, 1, 1]),
        (-36, [0, 0, 1, 0, 2, 2, 0, 1]),
        (6, [0, 0, 1, 0, 2, 1, 2, 0]),
        (324, [0, 0, 0, 3, 3, 0, 0, 0]),
        (-108, [0, 0, 0, 2, 3, 0, 1, 0]),
        (45, [0, 0, 0, 2, 2, 2, 0, 0]),
        (54, [0, 0, 0, 1, 3, 1, 0, 1]),
        (-36, [0, 0, 0, 1, 3, 0, 2, 0]),
        (6, [0, 0, 0, 1, 2, 2, 1, 0]),
        (81, [0, 0, 0, 0, 4, 0, 0, 2]),
        (-54, [0, 0, 0, 0, 3, 1, 1, 1]),
        (12, [0, 0, 0, 0, 3, 0, 3, 0]),
        (12, [0, 0, 0, 0, 2, 3, 0, 1]),
        (-3, [0, 0, 0, 0, 2, 2, 2, 0]),
    ],
};

/// Locus equation for C2 (first kind), variables (xi0..xi5, I6).
pub(crate) const EQ_L1: Table<7> = Table {
    den: 64,
    terms: &[
        (64, [6, 6, 0, 0, 0, 0, 0]),
        (-3456, [4, 4, 0, 0, 2, 0, 0]),
        (-432, [4, 3, 0, 0, 0, 2, 0]),
        (-1728, [3, 4, 0, 0, 0, 2, 0]),
        (-6912, [3, 3, 0, 0, 3, 0, 0]),
        (46656, [2, 2, 0, 0, 4, 0, 0]),
        (11664, [2, 1, 0, 0, 2, 2, 0]),
        (729, [2, 0, 0, 0, 0, 4, 0]),
        (46656, [1, 2, 0, 0, 2, 2, 0]),
        (186624, [1, 1, 0, 0, 5, 0, 0]),
        (1944, [1, 1, 0, 0, 0, 4, 0]),
        (23328, [1, 0, 0, 0, 3, 2, 0]),
        (11664, [0, 2, 0, 0, 0, 4, 0]),
        (93312, [0, 1, 0, 0, 3, 2, 0]),
        (186624, [0, 0, 0, 0, 6, 0, 0]),
        (23328, [0, 0, 0, 0, 1, 4, 0]),
    ],
};

/// Locus equation for C3, variables (xi0..xi5, I6).
pub(crate) const EQ_L3: Table<7> = Table {
    den: 1,
    terms: &[
        (1, [9, 0, 0, 0, 0, 0, 4]),
        (-2834352, [6, 0, 0, 0, 3, 0, 3]),
        (3779136, [6, 0, 0, 0, 0, 0, 5]),
        (24794911296, [3, 0, 0, 0, 9, 0, 0]),
        (892616806656, [3, 0, 0, 0, 6, 0, 2]),
        (7140934453248, [3, 0, 0, 0, 3, 0, 4]),
        (4760622968832, [3, 0, 0, 0, 0, 0, 6]),
        (1999004627104432128, [0, 0, 0, 0, 0, 0, 7]),
    ],
};

/// Locus equation for V4 (second kind), variables (xi0..xi5, I6).
pub(crate) const EQ_L5: Table<7> = Table {
    den: 1,
    terms: &[
        (-16, [0, 9, 0, 0, 0, 0, 0]),
        (72, [0, 6, 2, 0, 0, 0, 0]),
        (96, [0, 6, 0, 0, 0, 0, 1]),
        (-81, [0, 3, 4, 0, 0, 0, 0]),
        (-216, [0, 3, 2, 0, 0, 0, 1]),
        (-144, [0, 3, 0, 0, 0, 0, 2]),
        (36, [0, 0, 4, 0, 0, 0, 1]),
        (96, [0, 0, 2, 0, 0, 0, 2]),
        (64, [0, 0, 0, 0, 0, 0, 3]),
    ],
};

fn eval_int<const N: usize>(t: &Table<N>, v: &[i64; N]) -> Option<i128> {
    let mut acc: i128 = 0;
    for (c, e) in t.terms {
        let mut term = *c as i128;
        for (x, &k) in v.iter().zip(e) {
            for _ in 0..k {
                term = term.checked_mul(*x as i128)?;
            }
        }
        acc = acc.checked_add(term)?;
    }
    Some(acc)
}

/// Exact value of the table at an integer point.
pub(crate) fn eval_i64<const N: usize>(t: &Table<N>, v: &[i64; N]) -> Q {
    match eval_int(t, v) {
        Some(n) => Q::new(BigInt::from(n), BigInt::from(t.den)),
        None => eval_q(t, &v.map(|x| Q::from_integer(BigInt::from(x)))),
    }
}

/// Numerator of the table value over `den` at an integer point, if it fits.
pub(crate) fn eval_numerator_i128<const N: usize>(t: &Table<N>, v: &[i64; N]) -> Option<i128> {
    eval_int(t, v)
}

pub(crate) fn eval_q<const N: usize>(t: &Table<N>, v: &[Q; N]) -> Q {
    if v.iter().all(|x| x.denom().is_one()) {
        if let Some(ints) = v.iter().map(|x| x.numer().to_i64()).collect::<Option<Vec<_>>>() {
            let arr: [i64; N] = ints.try_into().expect("length N");
            if let Some(n) = eval_int(t, &arr) {
                return Q::new(BigInt::from(n), BigInt::from(t.den));
            }
        }
    }
    let maxe = t.terms.iter().flat_map(|(_, e)| e.iter()).copied().max().unwrap_or(0) as usize;
    let powers: Vec<Vec<Q>> = v
        .iter()
        .map(|x| {
            let mut p = vec![Q::one()];
            for k in 1..=maxe {
                let next = &p[k - 1] * x;
                p.push(next);
            }
            p
        })
        .collect();
    let mut acc = Q::zero();
    for (c, e) in t.terms {
        let mut term = Q::from_integer(BigInt::from(*c));
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                term *= &powers[i][k as usize];
            }
        }
        acc += term;
    }
    acc / Q::from_integer(BigInt::from(t.den))
}
