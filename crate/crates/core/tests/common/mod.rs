//! Strategies and property bodies shared by the integration tests.
#![allow(dead_code)]

use nugrass::arith::{Mono, Poly};
use nugrass::{Alg, Entry, NuStructure, OddMask, Rat, RatFunc, SMatrix, SuperElem};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub const ALPHA: usize = 2;
pub const BETA: usize = 3;

fn poly(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0u16..3, 0u16..3), -4i64..=4), 1..=max_terms).prop_map(|terms| {
        Poly::from_terms(
            ALPHA,
            terms.into_iter().map(|((a, b), c)| (Mono::from_exponents(vec![a, b]), Rat::from_int(c))),
        )
    })
}

/// Polynomials with an occasional nonvanishing denominator.
pub fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(3), prop::option::weighted(0.4, (poly(2), 1i64..=3))).prop_map(|(num, den)| match den {
        None => RatFunc::from_poly(num),
        Some((d, c)) => {
            let den = d.mul(&d).add(&Poly::constant(ALPHA, Rat::from_int(c)));
            RatFunc::new(num, den).expect("sum of a square and a positive constant")
        }
    })
}

pub fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonzero", |f| !f.is_zero())
}

/// Elements of parity `odd` (or of any parity when `None`).
pub fn elem(odd: Option<bool>) -> impl Strategy<Value = SuperElem> {
    prop::collection::vec((0u32..(1 << BETA), ratfunc()), 0..4).prop_map(move |terms| {
        let terms = terms.into_iter().filter(|(m, _)| match odd {
            Some(o) => (m.count_ones() % 2 == 1) == o,
            None => true,
        });
        SuperElem::from_terms(ALPHA, BETA, terms.map(|(m, f)| (OddMask::from_bits(m), f)))
    })
}

pub fn homogeneous() -> impl Strategy<Value = (SuperElem, bool)> {
    any::<bool>().prop_flat_map(|odd| elem(Some(odd)).prop_map(move |a| (a, odd)))
}

/// Even elements with a nonzero body, hence invertible.
pub fn unit() -> impl Strategy<Value = SuperElem> {
    (nonzero_ratfunc(), elem(Some(false))).prop_map(|(body, rest)| {
        let soul = SuperElem::from_terms(ALPHA, BETA, rest.terms().filter(|(m, _)| !m.is_empty()).map(|(m, f)| (*m, f.clone())));
        SuperElem::scalar(BETA, body).add(&soul)
    })
}

/// Identity, the cyclic shift, or a random permutation pairing.
pub fn nu() -> impl Strategy<Value = NuStructure> {
    let n = 1usize << (BETA - 1);
    prop_oneof![
        Just(NuStructure::identity(BETA)),
        Just(NuStructure::shift(BETA).unwrap()),
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|p| NuStructure::from_permutation(BETA, &p).unwrap()),
    ]
}

/// Sparse entries with affine coefficients, to keep inverses readable.
fn light_elem(odd: bool) -> impl Strategy<Value = SuperElem> {
    let coeff = (-3i64..=3, -2i64..=2, -2i64..=2).prop_map(|(c, a, b)| {
        let x = |i| RatFunc::var(ALPHA, i);
        RatFunc::constant(ALPHA, Rat::from_int(c))
            .add(&x(0).scale(&Rat::from_int(a)))
            .add(&x(1).scale(&Rat::from_int(b)))
    });
    prop::collection::vec((0u32..(1 << BETA), coeff), 0..3).prop_map(move |terms| {
        let terms = terms.into_iter().filter(|(m, _)| (m.count_ones() % 2 == 1) == odd);
        SuperElem::from_terms(ALPHA, BETA, terms.map(|(m, f)| (OddMask::from_bits(m), f)))
    })
}

/// Square supermatrices with split `e|o` in each direction.
pub fn smatrix() -> impl Strategy<Value = SMatrix<Entry>> {
    prop_oneof![Just((1usize, 1usize)), Just((2, 1)), Just((1, 2))].prop_flat_map(|split| {
        let size = split.0 + split.1;
        let cells = prop::collection::vec((light_elem(false), light_elem(true)), size * size);
        let diag = prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], size);
        (cells, diag).prop_map(move |(cells, diag)| {
            SMatrix::from_fn(split, split, |i, j| {
                let odd = (i >= split.0) != (j >= split.0);
                let (e, o) = &cells[i * size + j];
                if odd {
                    Entry::El(o.clone())
                } else if i == j {
                    Entry::El(e.add(&SuperElem::constant(ALPHA, BETA, Rat::from_int(diag[i]))))
                } else {
                    Entry::El(e.clone())
                }
            })
        })
    })
}

pub fn field_axioms(a: &RatFunc, b: &RatFunc, c: &RatFunc) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    prop_assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    prop_assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    prop_assert_eq!(a.mul(b), b.mul(a));
    prop_assert!(a.sub(a).is_zero());
    if !a.is_zero() {
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
    }
    Ok(())
}

pub fn supercommutes(a: &SuperElem, pa: bool, b: &SuperElem, pb: bool) -> Result<(), TestCaseError> {
    let swapped = b.mul(a);
    let expected = if pa && pb { swapped.neg() } else { swapped };
    prop_assert_eq!(a.mul(b), expected);
    Ok(())
}

pub fn nu_involution(nu: &NuStructure, a: &SuperElem) -> Result<(), TestCaseError> {
    prop_assert_eq!(&nu.apply(&nu.apply(a).unwrap()).unwrap(), a);
    Ok(())
}

pub fn nu_flips_parity(nu: &NuStructure, a: &SuperElem, odd: bool) -> Result<(), TestCaseError> {
    let image = nu.apply(a).unwrap();
    if !a.is_zero() {
        prop_assert!(image.has_parity(!odd), "{} -> {}", a, image);
    }
    Ok(())
}

pub fn even_inverse(a: &SuperElem) -> Result<(), TestCaseError> {
    let inv = a.invert_even().unwrap();
    prop_assert!(a.mul(&inv).is_one());
    prop_assert!(inv.mul(a).is_one());
    Ok(())
}

/// Returns `Ok(false)` when the matrix is singular (rejected, not failed).
pub fn matrix_inverse(nu: &NuStructure, m: &SMatrix<Entry>) -> Result<bool, TestCaseError> {
    let alg = Alg::new(ALPHA, nu);
    let Ok(inv) = alg.smat_inv(m) else { return Ok(false) };
    let id = alg.identity(m.row_split());
    prop_assert!(alg.smat_mul(m, &inv).unwrap() == id);
    prop_assert!(alg.smat_mul(&inv, m).unwrap() == id);
    Ok(true)
}
