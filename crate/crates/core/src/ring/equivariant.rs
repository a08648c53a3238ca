use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, RingError};

/// Class of a variety carrying a Z2-action, split into its invariant part
/// `plus = [X // Z2]` and the complement `minus = [X] - [X // Z2]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EquivariantClass {
    pub plus: LaurentPoly,
    pub minus: LaurentPoly,
}

impl EquivariantClass {
    pub fn new(plus: LaurentPoly, minus: LaurentPoly) -> Self {
        Self { plus, minus }
    }

    /// A variety with trivial action: everything is invariant.
    pub fn trivial(class: LaurentPoly) -> Self {
        Self {
            plus: class,
            minus: LaurentPoly::zero(),
        }
    }

    /// `C*` with `λ ↦ λ⁻¹`: the quotient is the affine line (coordinate
    /// `λ + λ⁻¹`), so the split is `(q, -1)`.
    pub fn torus_inversion() -> Self {
        Self::new(LaurentPoly::q(), LaurentPoly::constant(-1))
    }

    /// `(C*)²` with the coordinate swap. The quotient is `C × C*` through the
    /// elementary symmetric functions, giving `(q² - q, 1 - q)`.
    pub fn torus_pair_swap() -> Self {
        Self::new(
            LaurentPoly::from_int_terms(&[(2, 1), (1, -1)]),
            LaurentPoly::from_int_terms(&[(1, -1), (0, 1)]),
        )
    }

    pub fn total(&self) -> LaurentPoly {
        &self.plus + &self.minus
    }

    /// `plus - minus`, the trace of the generator on the class.
    pub fn difference(&self) -> LaurentPoly {
        &self.plus - &self.minus
    }

    /// Class of `X // Z2`.
    pub fn quotient_class(&self) -> &LaurentPoly {
        &self.plus
    }

    /// Product under the simultaneous (diagonal) action.
    pub fn z2_product(&self, other: &Self) -> Self {
        Self {
            plus: &self.plus * &other.plus + &self.minus * &other.minus,
            minus: &self.plus * &other.minus + &self.minus * &other.plus,
        }
    }

    /// `n`-fold power under the diagonal action:
    /// `plus = (T^n + D^n)/2`, `minus = (T^n - D^n)/2` with `T` the total and
    /// `D` the difference.
    pub fn z2_power(&self, n: u32) -> Result<Self, RingError> {
        if n == 0 {
            return Err(RingError::ZeroPower);
        }
        let t = self.total().pow(n);
        let d = self.difference().pow(n);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        Ok(Self {
            plus: (&t + &d).scale(&half),
            minus: (&t - &d).scale(&half),
        })
    }

    /// Removes an invariant closed piece (both parts subtract).
    pub fn remove(&self, piece: &Self) -> Self {
        Self {
            plus: &self.plus - &piece.plus,
            minus: &self.minus - &piece.minus,
        }
    }
}
