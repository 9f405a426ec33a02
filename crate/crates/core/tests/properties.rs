//! Randomized checks of the algebra kernel, 1000 exact instances each.

mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ratfunc_field(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn supercommutativity((a, pa) in homogeneous(), (b, pb) in homogeneous()) {
        supercommutes(&a, pa, &b, pb)?;
    }

    #[test]
    fn nu_squared_is_identity(nu in nu(), a in elem(None)) {
        nu_involution(&nu, &a)?;
    }

    #[test]
    fn nu_flips_homogeneous_parity(nu in nu(), (a, odd) in homogeneous()) {
        nu_flips_parity(&nu, &a, odd)?;
    }

    #[test]
    fn units_invert(a in unit()) {
        even_inverse(&a)?;
    }

    #[test]
    fn supermatrix_inverse(nu in nu(), m in smatrix()) {
        let invertible = matrix_inverse(&nu, &m)?;
        prop_assume!(invertible);
    }
}
