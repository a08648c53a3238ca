//! Variety families and their text syntax.
//!
//! ```text
//! spec    := family ":" params
//! family  := "free" | "surface" | "twisted" | "abelian-sl2" | "abelian-gl2"
//! params  := param ("," param)*
//! param   := key "=" integer | "punct=" class ("," class)*
//! class   := "J+" | "J-" | "-Id"
//! ```
//!
//! Keys: `n` for `free` and the abelian families, `g` for `surface` and
//! `twisted`, `r` for `twisted`. `punct=` must come last and makes a free or
//! surface spec parabolic; `s=k` is shorthand for `k` copies of `J+`.
//! `twisted:g=G,r=R` means `surface:g=G,punct=J+,...,J+,-Id` with `R` copies
//! of `J+`. Printing always uses the `punct=` form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CatalogError;

/// Largest integer parameter accepted; keeps powers of two and degrees small.
pub const MAX_PARAM: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PunctureClass {
    /// Conjugacy class of `[[1,1],[0,1]]`.
    JPlus,
    /// Conjugacy class of `[[-1,1],[0,-1]]`.
    JMinus,
    /// The central element `-Id`.
    MinusId,
}

impl PunctureClass {
    pub fn token(self) -> &'static str {
        match self {
            PunctureClass::JPlus => "J+",
            PunctureClass::JMinus => "J-",
            PunctureClass::MinusId => "-Id",
        }
    }
}

impl fmt::Display for PunctureClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for PunctureClass {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "J+" => Ok(PunctureClass::JPlus),
            "J-" => Ok(PunctureClass::JMinus),
            "-Id" => Ok(PunctureClass::MinusId),
            other => Err(CatalogError::parse(
                other,
                "puncture classes are J+, J- or -Id",
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VarietySpec {
    /// `Rep(F_n) = SL2^n`.
    Free { n: u32 },
    /// Closed orientable surface of genus `g`.
    Surface { g: u32 },
    /// `F_{n+s}` with the last `s` generators constrained to puncture classes.
    FreeParabolic {
        n: u32,
        punctures: Vec<PunctureClass>,
    },
    /// Genus `g` surface with `s` punctures of Jordan type.
    SurfaceParabolic {
        g: u32,
        punctures: Vec<PunctureClass>,
    },
    /// Commuting `n`-tuples in SL2.
    AbelianSl2 { n: u32 },
    /// Commuting `n`-tuples in GL2.
    AbelianGl2 { n: u32 },
}

impl VarietySpec {
    pub fn free(n: u32) -> Self {
        Self::Free { n }
    }

    pub fn surface(g: u32) -> Self {
        Self::Surface { g }
    }

    pub fn free_parabolic(n: u32, punctures: Vec<PunctureClass>) -> Self {
        Self::FreeParabolic { n, punctures }
    }

    pub fn surface_parabolic(g: u32, punctures: Vec<PunctureClass>) -> Self {
        Self::SurfaceParabolic { g, punctures }
    }

    /// `s` punctures all of class `J+`.
    pub fn free_jplus(n: u32, s: usize) -> Self {
        Self::FreeParabolic {
            n,
            punctures: vec![PunctureClass::JPlus; s],
        }
    }

    pub fn surface_jplus(g: u32, s: usize) -> Self {
        Self::SurfaceParabolic {
            g,
            punctures: vec![PunctureClass::JPlus; s],
        }
    }

    /// Surface with `r` punctures of class `J+` and one at `-Id`.
    pub fn twisted(g: u32, r: usize) -> Self {
        let mut punctures = vec![PunctureClass::JPlus; r];
        punctures.push(PunctureClass::MinusId);
        Self::SurfaceParabolic { g, punctures }
    }

    pub fn abelian_sl2(n: u32) -> Self {
        Self::AbelianSl2 { n }
    }

    pub fn abelian_gl2(n: u32) -> Self {
        Self::AbelianGl2 { n }
    }

    pub fn punctures(&self) -> &[PunctureClass] {
        match self {
            Self::FreeParabolic { punctures, .. } | Self::SurfaceParabolic { punctures, .. } => {
                punctures
            }
            _ => &[],
        }
    }

    /// Checks the parameter bounds of each family.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let check = |name: &str, v: u32, min: u32| {
            if v < min || v > MAX_PARAM {
                Err(CatalogError::InvalidSpec(format!(
                    "{self}: {name} must lie in {min}..={MAX_PARAM}"
                )))
            } else {
                Ok(())
            }
        };
        match self {
            Self::Free { n } | Self::AbelianSl2 { n } | Self::AbelianGl2 { n } => check("n", *n, 1),
            Self::Surface { g } => check("g", *g, 1),
            Self::FreeParabolic { n, punctures } => {
                check("n", *n, 0)?;
                check("s", punctures.len() as u32, 1)
            }
            Self::SurfaceParabolic { g, punctures } => {
                check("g", *g, 1)?;
                check("s", punctures.len() as u32, 1)
            }
        }
    }
}

impl fmt::Display for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let punct = |f: &mut fmt::Formatter<'_>, ps: &[PunctureClass]| {
            f.write_str(",punct=")?;
            for (i, p) in ps.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                f.write_str(p.token())?;
            }
            Ok(())
        };
        match self {
            Self::Free { n } => write!(f, "free:n={n}"),
            Self::Surface { g } => write!(f, "surface:g={g}"),
            Self::FreeParabolic { n, punctures } => {
                write!(f, "free:n={n}")?;
                punct(f, punctures)
            }
            Self::SurfaceParabolic { g, punctures } => {
                write!(f, "surface:g={g}")?;
                punct(f, punctures)
            }
            Self::AbelianSl2 { n } => write!(f, "abelian-sl2:n={n}"),
            Self::AbelianGl2 { n } => write!(f, "abelian-gl2:n={n}"),
        }
    }
}

pub const GRAMMAR_HINT: &str = "expected e.g. free:n=3, surface:g=2, surface:g=2,punct=J+,J-,-Id, \
free:n=1,s=2, twisted:g=1,r=0, abelian-sl2:n=4 or abelian-gl2:n=1";

impl FromStr for VarietySpec {
    type Err = CatalogError;

    fn from_str(src: &str) -> Result<Self, Self::Err> {
        let s = src.trim();
        let (family, rest) = s
            .split_once(':')
            .ok_or_else(|| CatalogError::parse(src, "missing ':' after the family name"))?;
        let mut params: Vec<(&str, u32)> = Vec::new();
        let mut punctures: Option<Vec<PunctureClass>> = None;
        for raw in rest.split(',') {
            let tok = raw.trim();
            if let Some(list) = punctures.as_mut() {
                if tok.contains('=') {
                    return Err(CatalogError::parse(
                        src,
                        "punct= must be the last parameter",
                    ));
                }
                list.push(tok.parse().map_err(|_| {
                    CatalogError::parse(src, &format!("unknown puncture class {tok:?}"))
                })?);
                continue;
            }
            let (key, value) = tok.split_once('=').ok_or_else(|| {
                CatalogError::parse(src, &format!("expected key=value, got {tok:?}"))
            })?;
            let key = key.trim();
            if key == "punct" {
                let first: PunctureClass = value.parse().map_err(|_| {
                    CatalogError::parse(src, &format!("unknown puncture class {:?}", value.trim()))
                })?;
                punctures = Some(vec![first]);
                continue;
            }
            let v: u32 = value.trim().parse().map_err(|_| {
                CatalogError::parse(src, &format!("{key} must be a non-negative integer"))
            })?;
            if params.iter().any(|(k, _)| *k == key) {
                return Err(CatalogError::parse(src, &format!("duplicate key {key}")));
            }
            params.push((key, v));
        }

        let take = |params: &mut Vec<(&str, u32)>, key: &str| -> Result<u32, CatalogError> {
            let pos = params
                .iter()
                .position(|(k, _)| *k == key)
                .ok_or_else(|| CatalogError::parse(src, &format!("missing {key}=")))?;
            Ok(params.remove(pos).1)
        };
        let mut shorthand = |params: &mut Vec<(&str, u32)>| -> Result<(), CatalogError> {
            if let Some(pos) = params.iter().position(|(k, _)| *k == "s") {
                let s = params.remove(pos).1;
                if punctures.is_some() {
                    return Err(CatalogError::parse(
                        src,
                        "give either s= or punct=, not both",
                    ));
                }
                if s == 0 {
                    return Err(CatalogError::parse(src, "s must be positive"));
                }
                punctures = Some(vec![PunctureClass::JPlus; s as usize]);
            }
            Ok(())
        };

        let spec = match family.trim() {
            "free" => {
                let n = take(&mut params, "n")?;
                shorthand(&mut params)?;
                match punctures.take() {
                    Some(p) => VarietySpec::FreeParabolic { n, punctures: p },
                    None => VarietySpec::Free { n },
                }
            }
            "surface" => {
                let g = take(&mut params, "g")?;
                shorthand(&mut params)?;
                match punctures.take() {
                    Some(p) => VarietySpec::SurfaceParabolic { g, punctures: p },
                    None => VarietySpec::Surface { g },
                }
            }
            "twisted" => {
                if punctures.is_some() {
                    return Err(CatalogError::parse(src, "twisted takes g= and r= only"));
                }
                let g = take(&mut params, "g")?;
                let r = take(&mut params, "r")?;
                VarietySpec::twisted(g, r as usize)
            }
            "abelian-sl2" | "abelian-gl2" => {
                if punctures.is_some() {
                    return Err(CatalogError::parse(src, "abelian families take n= only"));
                }
                let n = take(&mut params, "n")?;
                if family.trim() == "abelian-sl2" {
                    VarietySpec::AbelianSl2 { n }
                } else {
                    VarietySpec::AbelianGl2 { n }
                }
            }
            other => {
                return Err(CatalogError::parse(
                    src,
                    &format!("unknown family {other:?}"),
                ));
            }
        };
        if let Some((k, _)) = params.first() {
            return Err(CatalogError::parse(src, &format!("unexpected key {k}")));
        }
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for VarietySpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VarietySpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
