//! Strata and character varieties assembled from homogeneous pieces.

use crate::motive::atoms::*;
use crate::motive::{evaluate, EvalTrace, MotiveExpr};
use crate::ring::{EquivariantClass, LaurentPoly};

use super::formulas::{plane, projective_space, two};
use super::{family, CatalogError, Family, StratumId, VarietySpec};

const RED_CORE: &str = "every closed orbit of reducible tuples meets the diagonal tuples, \
which form (C*)^N with the Weyl group acting by inversion";

const GL2_CORE: &str = "closed orbits of commuting tuples are diagonal; the diagonal tuples \
form ((C*)^2)^n with the Weyl group swapping the two eigenvalues";

fn torus_pow(n: u32) -> LaurentPoly {
    torus().pow(n)
}

fn empty() -> MotiveExpr {
    MotiveExpr::atom("empty", LaurentPoly::zero())
}

fn signs(n: u32) -> MotiveExpr {
    MotiveExpr::atom(format!("{{±1}}^{n}"), two(n))
}

fn non_sign_diagonals(n: u32) -> MotiveExpr {
    MotiveExpr::atom(format!("(C*)^{n} - {{±1}}^{n}"), torus_pow(n) - two(n))
}

/// `n` sign-unipotent matrices sharing an eigenline, recorded by the signs and
/// the projectivized vector of off-diagonal entries.
fn upsilon_free(n: u32) -> MotiveExpr {
    MotiveExpr::fibration(
        sl2_mod_stab_jplus_atom(),
        MotiveExpr::fibration(
            signs(n),
            MotiveExpr::atom(format!("P^{}", n - 1), projective_space(n)),
        ),
    )
}

fn delta_free(n: u32) -> Result<MotiveExpr, CatalogError> {
    let diagonal = EquivariantClass::torus_inversion()
        .z2_power(n)
        .map_err(|e| CatalogError::InvalidSpec(e.to_string()))?
        .remove(&EquivariantClass::trivial(two(n)));
    Ok(MotiveExpr::z2_quotient(
        format!("SL2/T x ((C*)^{n} - {{±1}}^{n})"),
        sl2_mod_torus_weyl().z2_product(&diagonal),
    ))
}

/// Upper triangular tuples with non-sign diagonal and off-diagonal part in
/// `off`, spread over PGL2 and divided by the rescaling group.
fn varrho(n: u32, off: MotiveExpr) -> MotiveExpr {
    MotiveExpr::principal_quotient(
        MotiveExpr::fibration(
            pgl2_atom(),
            MotiveExpr::fibration(non_sign_diagonals(n), off),
        ),
        borel_rescaling_atom(),
    )
}

fn upsilon_parabolic(base: MotiveExpr) -> MotiveExpr {
    MotiveExpr::fibration(
        sl2_mod_stab_jplus_atom(),
        MotiveExpr::principal_quotient(base, torus_atom()),
    )
}

/// Expression for one stratum of the representation variety. `Irr` and
/// `Red` are atoms pinned to the complement and the sum of the others.
pub fn stratum_motive(spec: &VarietySpec, stratum: StratumId) -> Result<MotiveExpr, CatalogError> {
    use StratumId::*;
    let fam = family(spec)?;
    match stratum {
        Red => {
            let parts = StratumId::REDUCIBLE
                .iter()
                .map(|&s| stratum_motive(spec, s))
                .collect::<Result<_, _>>()?;
            return Ok(MotiveExpr::disjoint(parts));
        }
        Irr => {
            let (red, _) = evaluate(&stratum_motive(spec, Red)?)?;
            let total = super::representation_variety_class(spec)?;
            return Ok(MotiveExpr::atom("irreducible locus", total - red));
        }
        _ => {}
    }
    Ok(match fam {
        Family::Point => match stratum {
            Iota => MotiveExpr::atom("(-Id, ..., -Id)", LaurentPoly::one()),
            _ => empty(),
        },
        Family::Free(n) | Family::Surface(n) => {
            let rank = if matches!(fam, Family::Surface(_)) {
                2 * n
            } else {
                n
            };
            match stratum {
                Iota => MotiveExpr::atom(format!("{{±Id}}^{rank}"), two(rank)),
                UpsilonHat => upsilon_free(rank),
                DeltaHat => delta_free(rank)?,
                _ => {
                    let off = if matches!(fam, Family::Surface(_)) {
                        MotiveExpr::atom(
                            format!("hyperplane in C^{rank} minus a line"),
                            LaurentPoly::q_pow(rank as i64 - 1) - LaurentPoly::q(),
                        )
                    } else {
                        MotiveExpr::atom(
                            format!("C^{rank} minus a line"),
                            LaurentPoly::q_pow(rank as i64) - LaurentPoly::q(),
                        )
                    };
                    varrho(rank, off)
                }
            }
        }
        Family::FreeJPlus { n, s } => {
            let free_part = || {
                MotiveExpr::fibration(
                    MotiveExpr::atom(format!("C^{n}"), LaurentPoly::q_pow(n as i64)),
                    MotiveExpr::atom(format!("(C*)^{s}"), torus_pow(s)),
                )
            };
            match stratum {
                UpsilonHat => upsilon_parabolic(MotiveExpr::fibration(signs(n), free_part())),
                Varrho => varrho(n, free_part()),
                _ => empty(),
            }
        }
        Family::SurfaceJPlus { g, s } => {
            let n = 2 * g;
            match stratum {
                UpsilonHat => upsilon_parabolic(MotiveExpr::fibration(
                    MotiveExpr::fibration(
                        signs(n),
                        MotiveExpr::atom(format!("C^{n}"), LaurentPoly::q_pow(n as i64)),
                    ),
                    MotiveExpr::atom(format!("pi_{s}"), plane::small_pi(s)),
                )),
                Varrho => varrho(n, MotiveExpr::atom(format!("Pi_{s}"), plane::big_pi(g, s))),
                _ => empty(),
            }
        }
        Family::Twisted { .. } => empty(),
        Family::AbelianSl2(_) | Family::AbelianGl2(_) => {
            return Err(CatalogError::NotTabulated {
                spec: spec.to_string(),
                what: format!("stratum {stratum}"),
            })
        }
    })
}

fn irreducible_quotient(spec: &VarietySpec) -> Result<MotiveExpr, CatalogError> {
    Ok(MotiveExpr::principal_quotient(
        stratum_motive(spec, StratumId::Irr)?,
        pgl2_atom(),
    ))
}

/// The character variety as a disjoint union of stratum quotients.
pub fn character_variety_motive(spec: &VarietySpec) -> Result<MotiveExpr, CatalogError> {
    let fam = family(spec)?;
    Ok(match fam {
        Family::Point => MotiveExpr::atom("point", LaurentPoly::one()),
        Family::Free(n) | Family::Surface(n) => {
            let rank = if matches!(fam, Family::Surface(_)) {
                2 * n
            } else {
                n
            };
            let torus = EquivariantClass::torus_inversion()
                .z2_power(rank)
                .map_err(|e| CatalogError::InvalidSpec(e.to_string()))?;
            MotiveExpr::disjoint(vec![
                irreducible_quotient(spec)?,
                MotiveExpr::core_replace(
                    "reducible locus // SL2",
                    RED_CORE,
                    MotiveExpr::z2_quotient(format!("(C*)^{rank}"), torus),
                ),
            ])
        }
        Family::FreeJPlus { .. } | Family::SurfaceJPlus { .. } => MotiveExpr::disjoint(vec![
            irreducible_quotient(spec)?,
            MotiveExpr::principal_quotient(
                stratum_motive(spec, StratumId::UpsilonHat)?,
                sl2_mod_stab_jplus_atom(),
            ),
            MotiveExpr::principal_quotient(stratum_motive(spec, StratumId::Varrho)?, pgl2_atom()),
        ]),
        Family::Twisted { .. } => irreducible_quotient(spec)?,
        Family::AbelianSl2(n) => MotiveExpr::core_replace(
            "Rep(Z^n) // SL2",
            RED_CORE,
            MotiveExpr::z2_quotient(
                format!("(C*)^{n}"),
                EquivariantClass::torus_inversion()
                    .z2_power(n)
                    .map_err(|e| CatalogError::InvalidSpec(e.to_string()))?,
            ),
        ),
        Family::AbelianGl2(n) => MotiveExpr::core_replace(
            "Rep_GL2(Z^n) // GL2",
            GL2_CORE,
            MotiveExpr::z2_quotient(
                format!("((C*)^2)^{n}"),
                EquivariantClass::torus_pair_swap()
                    .z2_power(n)
                    .map_err(|e| CatalogError::InvalidSpec(e.to_string()))?,
            ),
        ),
    })
}

/// Evaluates [`character_variety_motive`].
pub fn character_variety_via_strata(
    spec: &VarietySpec,
) -> Result<(LaurentPoly, EvalTrace), CatalogError> {
    Ok(evaluate(&character_variety_motive(spec)?)?)
}
