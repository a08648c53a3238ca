//! Pinned classes of the homogeneous spaces that recur in the SL2 strata.
//!
//! Each constant is fixed by hand, not derived from the others; the unit tests
//! check them against independent descriptions of the same spaces.

use crate::ring::{lin, EquivariantClass, LaurentPoly};

use super::MotiveExpr;

pub fn point() -> LaurentPoly {
    LaurentPoly::one()
}

pub fn affine_line() -> LaurentPoly {
    LaurentPoly::q()
}

pub fn torus() -> LaurentPoly {
    lin(1, -1)
}

pub fn sl2() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(3, 1), (1, -1)])
}

pub fn pgl2() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(3, 1), (1, -1)])
}

/// Orbit of a sign-unipotent tuple: `SL2 / Stab J+`, i.e. nonzero vectors
/// modulo sign.
pub fn sl2_mod_stab_jplus() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(2, 1), (0, -1)])
}

/// Orbit of a diagonal tuple: `SL2 / T`, ordered pairs of distinct lines.
pub fn sl2_mod_stab_dlambda() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(2, 1), (1, 1)])
}

/// The conjugacy class of `J+ = [[1,1],[0,1]]`.
pub fn class_jplus() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(2, 1), (0, -1)])
}

/// The group `C* × C` rescaling and shearing the off-diagonal entries of a
/// triangular tuple.
pub fn borel_rescaling() -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(2, 1), (1, -1)])
}

/// `SL2 / T` with the Weyl involution swapping the two lines. The quotient is
/// unordered pairs of distinct points of `P1`, i.e. `P2` minus a conic.
pub fn sl2_mod_torus_weyl() -> EquivariantClass {
    EquivariantClass::new(LaurentPoly::q_pow(2), LaurentPoly::q())
}

pub fn sl2_atom() -> MotiveExpr {
    MotiveExpr::atom("SL2", sl2())
}

pub fn pgl2_atom() -> MotiveExpr {
    MotiveExpr::atom("PGL2", pgl2())
}

pub fn sl2_mod_stab_jplus_atom() -> MotiveExpr {
    MotiveExpr::atom("SL2/Stab(J+)", sl2_mod_stab_jplus())
}

pub fn torus_atom() -> MotiveExpr {
    MotiveExpr::atom("C*", torus())
}

pub fn borel_rescaling_atom() -> MotiveExpr {
    MotiveExpr::atom("C* x C", borel_rescaling())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_is_nonzero_vectors_times_line() {
        // first column any nonzero vector, second column an affine line of choices
        let nonzero_vectors = LaurentPoly::q_pow(2) - LaurentPoly::one();
        assert_eq!(sl2(), &nonzero_vectors * &affine_line());
    }

    #[test]
    fn pgl2_matches_gl2_over_torus() {
        let gl2 = (LaurentPoly::q_pow(2) - LaurentPoly::one())
            * (LaurentPoly::q_pow(2) - LaurentPoly::q());
        assert_eq!(gl2.divide_exact(&torus()).unwrap(), pgl2());
    }

    #[test]
    fn stabilizer_quotients() {
        // SL2/Stab(J+) is (C² - 0)/±1: a C*/±1 ≅ C* bundle over P1. The
        // class is not [SL2]/[Stab J+] since Stab J+ = {±1} × C is disconnected;
        // it is [SL2]/[C].
        let p1 = lin(1, 1);
        assert_eq!(sl2_mod_stab_jplus(), &p1 * &torus());
        assert_eq!(
            sl2_mod_stab_jplus(),
            sl2().divide_exact(&affine_line()).unwrap()
        );
        assert_eq!(class_jplus(), sl2_mod_stab_jplus());
        // Stab D = diagonal torus
        assert_eq!(
            sl2().divide_exact(&torus()).unwrap(),
            sl2_mod_stab_dlambda()
        );
        assert_eq!(sl2_mod_torus_weyl().total(), sl2_mod_stab_dlambda());
    }

    #[test]
    fn weyl_quotient_is_plane_minus_conic() {
        let p2 = LaurentPoly::from_int_terms(&[(2, 1), (1, 1), (0, 1)]);
        let conic = LaurentPoly::from_int_terms(&[(1, 1), (0, 1)]);
        assert_eq!(sl2_mod_torus_weyl().plus, p2 - conic);
    }

    #[test]
    fn point_is_unit() {
        assert!(point().is_one());
    }
}
