//! Classes of SL2 representation and character varieties for free groups,
//! closed surfaces and their Jordan-type parabolic variants.
//!
//! Every family has two independent routes to its character variety: a
//! closed form ([`character_variety_class`]) and an expression assembled
//! from the strata of the representation variety
//! ([`character_variety_via_strata`]). The tests require them to agree.

mod assembly;
pub(crate) mod formulas;
mod jordan;
mod spec;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::motive::MotiveError;
use crate::ring::LaurentPoly;

pub use assembly::{character_variety_motive, character_variety_via_strata, stratum_motive};
pub use formulas::printed;
pub use jordan::{jordan_reduce, PunctureReduction};
pub use spec::{PunctureClass, VarietySpec, GRAMMAR_HINT, MAX_PARAM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("cannot parse spec {input:?}: {message} ({GRAMMAR_HINT})")]
    Parse { input: String, message: String },
    #[error("invalid spec {0}")]
    InvalidSpec(String),
    #[error("not tabulated: {what} for {spec}")]
    NotTabulated { spec: String, what: String },
    #[error(transparent)]
    Motive(#[from] MotiveError),
}

impl CatalogError {
    pub(crate) fn parse(input: &str, message: &str) -> Self {
        Self::Parse {
            input: input.to_string(),
            message: message.to_string(),
        }
    }

    fn not_tabulated(spec: &VarietySpec, what: impl Into<String>) -> Self {
        Self::NotTabulated {
            spec: spec.to_string(),
            what: what.into(),
        }
    }
}

/// Pieces of the stratification by common eigenvectors. The four reducible
/// strata make up [`StratumId::Red`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StratumId {
    Iota,
    UpsilonHat,
    DeltaHat,
    Varrho,
    Irr,
    Red,
}

impl StratumId {
    /// The five disjoint strata.
    pub const FIVE: [StratumId; 5] = [
        StratumId::Iota,
        StratumId::UpsilonHat,
        StratumId::DeltaHat,
        StratumId::Varrho,
        StratumId::Irr,
    ];

    pub const REDUCIBLE: [StratumId; 4] = [
        StratumId::Iota,
        StratumId::UpsilonHat,
        StratumId::DeltaHat,
        StratumId::Varrho,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StratumId::Iota => "iota",
            StratumId::UpsilonHat => "upsilon_hat",
            StratumId::DeltaHat => "delta_hat",
            StratumId::Varrho => "varrho",
            StratumId::Irr => "irr",
            StratumId::Red => "red",
        }
    }
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StratumId {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "iota" => StratumId::Iota,
            "upsilon" | "upsilon_hat" => StratumId::UpsilonHat,
            "delta" | "delta_hat" => StratumId::DeltaHat,
            "varrho" => StratumId::Varrho,
            "irr" => StratumId::Irr,
            "red" => StratumId::Red,
            _ => {
                return Err(CatalogError::parse(
                    s,
                    "strata are iota, upsilon, delta, varrho, irr and red",
                ))
            }
        })
    }
}

/// A spec after Jordan reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Family {
    /// Free group of rank 0 with only `-Id` punctures.
    Point,
    Free(u32),
    Surface(u32),
    FreeJPlus {
        n: u32,
        s: u32,
    },
    SurfaceJPlus {
        g: u32,
        s: u32,
    },
    Twisted {
        g: u32,
        r: u32,
    },
    AbelianSl2(u32),
    AbelianGl2(u32),
}

pub(crate) fn family(spec: &VarietySpec) -> Result<Family, CatalogError> {
    spec.validate()?;
    Ok(match spec {
        VarietySpec::Free { n } => Family::Free(*n),
        VarietySpec::Surface { g } => Family::Surface(*g),
        VarietySpec::AbelianSl2 { n } => Family::AbelianSl2(*n),
        VarietySpec::AbelianGl2 { n } => Family::AbelianGl2(*n),
        VarietySpec::FreeParabolic { n, punctures } => {
            // no relation to balance, so the sign is irrelevant
            let red = jordan_reduce(punctures);
            match (*n, red.r) {
                (0, 0) => Family::Point,
                (n, 0) => Family::Free(n),
                (n, r) => Family::FreeJPlus { n, s: r },
            }
        }
        VarietySpec::SurfaceParabolic { g, punctures } => {
            let red = jordan_reduce(punctures);
            match (red.twisted, red.r) {
                (true, r) => Family::Twisted { g: *g, r },
                (false, 0) => Family::Surface(*g),
                (false, s) => Family::SurfaceJPlus { g: *g, s },
            }
        }
    })
}

/// Class of one stratum of the representation variety.
pub fn stratum_class(spec: &VarietySpec, stratum: StratumId) -> Result<LaurentPoly, CatalogError> {
    use formulas::*;
    use StratumId::*;
    let fam = family(spec)?;
    if stratum == Red {
        let mut sum = LaurentPoly::zero();
        for s in StratumId::REDUCIBLE {
            sum += &stratum_class(spec, s)?;
        }
        return Ok(sum);
    }
    Ok(match fam {
        Family::Point => match stratum {
            Iota => LaurentPoly::one(),
            _ => LaurentPoly::zero(),
        },
        Family::Free(n) => match stratum {
            Iota => free::iota(n),
            UpsilonHat => free::upsilon(n),
            DeltaHat => free::delta(n),
            Varrho => free::varrho(n),
            _ => free::irr(n),
        },
        Family::Surface(g) => match stratum {
            Iota => free::iota(2 * g),
            UpsilonHat => free::upsilon(2 * g),
            DeltaHat => free::delta(2 * g),
            Varrho => surface::varrho(g),
            _ => surface::total(g) - stratum_class(spec, Red)?,
        },
        Family::FreeJPlus { n, s } => match stratum {
            UpsilonHat => free_jplus::upsilon(n, s),
            Varrho => free_jplus::varrho(n, s),
            Irr => free_jplus::irr(n, s),
            _ => LaurentPoly::zero(),
        },
        Family::SurfaceJPlus { g, s } => match stratum {
            UpsilonHat => surface_jplus::upsilon(g, s),
            Varrho => surface_jplus::varrho(g, s),
            Irr => surface_jplus::irr(g, s),
            _ => LaurentPoly::zero(),
        },
        Family::Twisted { g, r } => match stratum {
            Irr => twisted::total(g, r),
            _ => LaurentPoly::zero(),
        },
        Family::AbelianSl2(_) | Family::AbelianGl2(_) => {
            return Err(CatalogError::not_tabulated(
                spec,
                format!("stratum {stratum}"),
            ))
        }
    })
}

/// Class of the representation variety.
pub fn representation_variety_class(spec: &VarietySpec) -> Result<LaurentPoly, CatalogError> {
    use formulas::*;
    Ok(match family(spec)? {
        Family::Point => LaurentPoly::one(),
        Family::Free(n) => free::total(n),
        Family::Surface(g) => surface::total(g),
        Family::FreeJPlus { n, s } => free_jplus::total(n, s),
        Family::SurfaceJPlus { g, s } => surface_jplus::total(g, s),
        Family::Twisted { g, r } => twisted::total(g, r),
        Family::AbelianSl2(_) | Family::AbelianGl2(_) => {
            return Err(CatalogError::not_tabulated(spec, "representation variety"))
        }
    })
}

/// Class of the character variety from its closed form.
pub fn character_variety_class(spec: &VarietySpec) -> Result<LaurentPoly, CatalogError> {
    use formulas::*;
    Ok(match family(spec)? {
        Family::Point => LaurentPoly::one(),
        Family::Free(n) => free::boxed(n),
        Family::Surface(g) => surface::boxed(g),
        Family::FreeJPlus { n, s } => free_jplus::boxed(n, s),
        Family::SurfaceJPlus { g, s } => surface_jplus::boxed(g, s),
        Family::Twisted { g, r } => twisted::boxed(g, r),
        Family::AbelianSl2(n) => abelian::sl2(n),
        Family::AbelianGl2(n) => abelian::gl2(n),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HelperPlane {
    /// `pi_s`: points of `(C*)^s` on the hyperplane `sum c_i = 0`.
    SmallPi,
    /// `Pi_s` for a genus `g` surface.
    BigPi,
}

pub fn helper_plane_class(kind: HelperPlane, s: u32, g: u32) -> Result<LaurentPoly, CatalogError> {
    if s == 0 || s > MAX_PARAM {
        return Err(CatalogError::InvalidSpec(format!(
            "s = {s} out of 1..={MAX_PARAM}"
        )));
    }
    match kind {
        HelperPlane::SmallPi => Ok(formulas::plane::small_pi(s)),
        HelperPlane::BigPi if g == 0 || g > MAX_PARAM => Err(CatalogError::InvalidSpec(format!(
            "g = {g} out of 1..={MAX_PARAM}"
        ))),
        HelperPlane::BigPi => Ok(formulas::plane::big_pi(g, s)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoteKind {
    /// The closed form is known to disagree with point counts.
    Suspect,
    /// A parameter sits at the edge of where the strata analysis was done.
    BoundaryParameter,
    /// The returned class differs from a commonly displayed variant.
    PrintedVariantDiffers,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogNote {
    pub kind: NoteKind,
    pub message: String,
}

/// Caveats attached to a spec's classes.
pub fn notes(spec: &VarietySpec) -> Vec<CatalogNote> {
    let mut out = Vec::new();
    let Ok(fam) = family(spec) else {
        return out;
    };
    let mut push = |kind, message: String| out.push(CatalogNote { kind, message });
    match fam {
        Family::Twisted { g: 1, r: 0 } => push(
            NoteKind::Suspect,
            "suspect at r=0, g=1: the twisted formula gives 0, but {[A,B] = -Id} is a \
             nonempty free PGL2-orbit"
                .to_string(),
        ),
        Family::FreeJPlus { n: 0, .. } | Family::Point => push(
            NoteKind::BoundaryParameter,
            "boundary parameter n=0: no free generators".to_string(),
        ),
        Family::SurfaceJPlus { s, .. } if s % 2 == 1 => push(
            NoteKind::PrintedVariantDiffers,
            format!(
                "the surface-parabolic box without (-1)^s on its last term differs at odd s = {s}"
            ),
        ),
        Family::AbelianGl2(_) => push(
            NoteKind::PrintedVariantDiffers,
            "abelian GL2: returning 1/2((q-1)^(2n) + (q^2-1)^n), not the displayed \
             1/2((q-1)^(2n) + (q+1)^(2n))"
                .to_string(),
        ),
        _ => {}
    }
    out
}

#[cfg(test)]
mod tests;
