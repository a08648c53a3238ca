use serde::{Deserialize, Serialize};

use super::field::check_odd_prime;
use super::OracleError;

/// A 2×2 matrix over `F_q`, entries reduced to `0..q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Mat2 {
    pub fn new(q: u32, a: i64, b: i64, c: i64, d: i64) -> Self {
        let r = |x: i64| x.rem_euclid(q as i64) as u32;
        Self {
            a: r(a),
            b: r(b),
            c: r(c),
            d: r(d),
        }
    }

    pub fn identity() -> Self {
        Self {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        }
    }

    pub fn minus_identity(q: u32) -> Self {
        Self::new(q, -1, 0, 0, -1)
    }

    pub fn mul(&self, o: &Self, q: u32) -> Self {
        let m = |x: u32, y: u32, z: u32, w: u32| (x * y + z * w) % q;
        Self {
            a: m(self.a, o.a, self.b, o.c),
            b: m(self.a, o.b, self.b, o.d),
            c: m(self.c, o.a, self.d, o.c),
            d: m(self.c, o.b, self.d, o.d),
        }
    }

    pub fn det(&self, q: u32) -> u32 {
        (self.a * self.d + q * q - (self.b * self.c) % q) % q
    }

    pub fn trace(&self, q: u32) -> u32 {
        (self.a + self.d) % q
    }

    /// Inverse of a determinant-one matrix.
    pub fn inv_sl2(&self, q: u32) -> Self {
        Self {
            a: self.d,
            b: (q - self.b) % q,
            c: (q - self.c) % q,
            d: self.a,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_minus_identity(&self, q: u32) -> bool {
        *self == Self::minus_identity(q)
    }

    /// `self · x · self⁻¹` for `self` of determinant one.
    pub fn conjugate(&self, x: &Self, q: u32) -> Self {
        self.mul(x, q).mul(&self.inv_sl2(q), q)
    }

    /// `x y x⁻¹ y⁻¹` for determinant-one `x`, `y`.
    pub fn commutator(x: &Self, y: &Self, q: u32) -> Self {
        x.mul(y, q).mul(&x.inv_sl2(q), q).mul(&y.inv_sl2(q), q)
    }

    /// Dense code in `0..q⁴`.
    pub fn code(&self, q: u32) -> usize {
        (((self.a * q + self.b) * q + self.c) * q + self.d) as usize
    }
}

/// SL2 over any prime field, characteristic two included.
pub(crate) fn sl2_elements(q: u32) -> Vec<Mat2> {
    let mut out = Vec::with_capacity((q * q * q - q) as usize);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = Mat2 { a, b, c, d };
                    if m.det(q) == 1 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// All of `SL2(F_q)` for an odd prime `3 ≤ q ≤ 13`, in lexicographic order
/// of `(a, b, c, d)`.
pub fn enumerate_sl2(q: u32) -> Result<Vec<Mat2>, OracleError> {
    check_odd_prime(q)?;
    Ok(sl2_elements(q))
}
