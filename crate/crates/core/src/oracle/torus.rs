//! Points over `F_q` of a torus modulo its Weyl involution, counted as
//! Frobenius-stable orbits: `½ (#{F x = x} + #{F x = σ x})`.

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::OracleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TorusVariant {
    /// `(C*)^n` with `x ↦ x⁻¹`, the diagonal core of SL2.
    Sl2Inversion,
    /// `((C*)^2)^n` with `(a, b) ↦ (b, a)`, the diagonal core of GL2.
    Gl2Swap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusCount {
    /// Points with `F x = x`.
    pub fixed: u64,
    /// Points with `F x = σ x`.
    pub twisted: u64,
    /// Frobenius-stable orbits.
    pub orbits: u64,
}

/// Counts for one factor; the torus is the `n`-th power of it.
fn factor_counts(variant: TorusVariant, f: &Field) -> (u64, u64) {
    let units: Vec<_> = f.elements().skip(1).collect();
    match variant {
        TorusVariant::Sl2Inversion => {
            let fixed = units.iter().filter(|&&x| f.is_base(x)).count();
            let twisted = units
                .iter()
                .filter(|&&x| Some(f.frobenius(x)) == f.inv(x))
                .count();
            (fixed as u64, twisted as u64)
        }
        TorusVariant::Gl2Swap => {
            let mut fixed = 0;
            let mut twisted = 0;
            for &a in &units {
                for &b in &units {
                    if f.is_base(a) && f.is_base(b) {
                        fixed += 1;
                    }
                    if f.frobenius(a) == b && f.frobenius(b) == a {
                        twisted += 1;
                    }
                }
            }
            (fixed, twisted)
        }
    }
}

pub fn count_z2_torus_quotient(
    variant: TorusVariant,
    n: u32,
    q: u32,
) -> Result<TorusCount, OracleError> {
    let f = Field::new(q)?;
    let (fixed1, twisted1) = factor_counts(variant, &f);
    let fixed = fixed1.pow(n);
    let twisted = twisted1.pow(n);
    debug_assert_eq!((fixed + twisted) % 2, 0);
    Ok(TorusCount {
        fixed,
        twisted,
        orbits: (fixed + twisted) / 2,
    })
}
