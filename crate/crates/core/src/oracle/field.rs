use serde::{Deserialize, Serialize};

use super::OracleError;

/// Largest field size the enumerators accept.
pub const MAX_Q: u32 = 13;

pub fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Odd primes `3 ≤ q ≤ 13`.
pub fn check_odd_prime(q: u32) -> Result<(), OracleError> {
    if (3..=MAX_Q).contains(&q) && q % 2 == 1 && is_prime(q) {
        Ok(())
    } else {
        Err(OracleError::UnsupportedField(q))
    }
}

/// An element `a + b·ω` of `F_{q²} = F_q[ω]/(ω² - d)`; elements of `F_q`
/// have `b = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElem {
    pub a: u32,
    pub b: u32,
}

/// Arithmetic context for `F_q` and its quadratic extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Field {
    q: u32,
    d: u32,
}

impl Field {
    pub fn new(q: u32) -> Result<Self, OracleError> {
        check_odd_prime(q)?;
        let squares: Vec<u32> = (1..q).map(|x| x * x % q).collect();
        let d = (2..q)
            .find(|x| !squares.contains(x))
            .expect("odd prime fields have non-residues");
        Ok(Self { q, d })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// The non-residue `d = ω²`.
    pub fn nonresidue(&self) -> u32 {
        self.d
    }

    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.q as i64) as u32
    }

    pub fn base(&self, x: i64) -> FieldElem {
        FieldElem {
            a: self.reduce(x),
            b: 0,
        }
    }

    pub fn elem(&self, a: i64, b: i64) -> FieldElem {
        FieldElem {
            a: self.reduce(a),
            b: self.reduce(b),
        }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { a: 0, b: 0 }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem { a: 1, b: 0 }
    }

    pub fn omega(&self) -> FieldElem {
        FieldElem { a: 0, b: 1 }
    }

    pub fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        FieldElem {
            a: (x.a + y.a) % self.q,
            b: (x.b + y.b) % self.q,
        }
    }

    pub fn neg(&self, x: FieldElem) -> FieldElem {
        FieldElem {
            a: (self.q - x.a) % self.q,
            b: (self.q - x.b) % self.q,
        }
    }

    pub fn sub(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let q = self.q as u64;
        let (xa, xb, ya, yb) = (x.a as u64, x.b as u64, y.a as u64, y.b as u64);
        FieldElem {
            a: ((xa * ya + self.d as u64 * (xb * yb % q)) % q) as u32,
            b: ((xa * yb + xb * ya) % q) as u32,
        }
    }

    pub fn pow(&self, mut x: FieldElem, mut e: u64) -> FieldElem {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    /// `x ↦ x^q`, which sends `a + bω` to `a - bω`.
    pub fn frobenius(&self, x: FieldElem) -> FieldElem {
        FieldElem {
            a: x.a,
            b: (self.q - x.b) % self.q,
        }
    }

    /// Norm `x^(q+1) = a² - d·b²`, an element of `F_q`.
    pub fn norm(&self, x: FieldElem) -> u32 {
        self.mul(x, self.frobenius(x)).a
    }

    pub fn inv(&self, x: FieldElem) -> Option<FieldElem> {
        let n = self.norm(x);
        if n == 0 {
            return None;
        }
        let n_inv = self.pow(self.base(n as i64), self.q as u64 - 2);
        Some(self.mul(self.frobenius(x), n_inv))
    }

    pub fn is_base(&self, x: FieldElem) -> bool {
        x.b == 0
    }

    /// Position of `x` in [`elements`](Self::elements).
    pub fn index(&self, x: FieldElem) -> usize {
        (x.a + x.b * self.q) as usize
    }

    pub fn from_index(&self, i: usize) -> FieldElem {
        let q = self.q as usize;
        FieldElem {
            a: (i % q) as u32,
            b: (i / q) as u32,
        }
    }

    /// All `q²` elements of `F_{q²}`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..(self.q * self.q) as usize).map(|i| self.from_index(i))
    }
}
