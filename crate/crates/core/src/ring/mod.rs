//! Exact arithmetic in `Q[q, q⁻¹]`, the ring that receives the classes of
//! every variety in this crate, plus Z2-equivariant class pairs.

mod equivariant;
mod laurent;
mod text;

pub use equivariant::EquivariantClass;
pub(crate) use laurent::lin;
pub use laurent::LaurentPoly;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("non-invertible: {0} has no inverse in the Laurent ring")]
    NonInvertible(String),
    #[error("inexact division: {dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot evaluate negative powers of q at q = 0")]
    EvaluationAtZero,
    #[error("exponent {0} out of range")]
    ExponentTooLarge(i64),
    #[error("Z2 power requires a positive exponent")]
    ZeroPower,
    #[error("cannot parse polynomial {input:?} at byte {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
