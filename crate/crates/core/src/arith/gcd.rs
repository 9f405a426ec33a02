//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive primitive pseudo-remainder sequences: a polynomial is viewed as
//! univariate in one variable with coefficients in the remaining ones, the
//! content is split off recursively and the primitive parts are reduced with
//! pseudo-division. Results are monic in graded-lex order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{Poly, Rat};

pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let nvars = a.nvars();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(nvars);
    }
    if a == b {
        return a.monic();
    }

    // Pull out the common monomial factor first; it is cheap and common.
    let ma = a.mono_content();
    let mb = b.mono_content();
    let mg = ma.gcd(&mb);
    let (a, b) = if mg.is_one() {
        (a.clone(), b.clone())
    } else {
        (
            a.div_exact(&Poly::monomial(mg.clone(), super::Rat::one())).unwrap(),
            b.div_exact(&Poly::monomial(mg.clone(), super::Rat::one())).unwrap(),
        )
    };
    let g = gcd_no_mono(&a, &b);
    g.mul_mono(&mg, &super::Rat::one()).monic()
}

/// Cheap certificate that `gcd(a, b) = 1`. Fix every variable but `v` at an
/// integer point and reduce modulo a prime, keeping only points where both
/// leading coefficients in `v` survive; the image gcd then has degree at
/// least `deg_v gcd(a, b)`. If that image degree is zero for every shared
/// variable, the gcd is constant.
fn coprime_by_images(a: &Poly, b: &Poly) -> bool {
    let nvars = a.nvars();
    'vars: for v in 0..nvars {
        let (da, db) = (a.degree_in(v) as usize, b.degree_in(v) as usize);
        if da == 0 || db == 0 {
            continue;
        }
        // A single unlucky point can make unrelated factors collide, so a
        // few points are tried and any certificate of degree zero suffices.
        for attempt in 0..4u64 {
            let point: Vec<u64> = (0..nvars as u64).map(|j| scramble(attempt * 64 + j)).collect();
            let (Some(ia), Some(ib)) = (modular_image(a, v, &point), modular_image(b, v, &point)) else {
                continue;
            };
            if ia.len() == da + 1 && ib.len() == db + 1 && modular_gcd_degree(ia, ib) == 0 {
                continue 'vars;
            }
        }
        return false;
    }
    true
}

/// Deterministic spread of small integers over the field.
fn scramble(n: u64) -> u64 {
    let mut z = n.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    (z ^ (z >> 31)) % PRIME
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, PRIME - 2)
}

fn big_mod(n: &BigInt) -> u64 {
    let r = n.mod_floor(&BigInt::from(PRIME));
    r.iter_u64_digits().next().unwrap_or(0)
}

fn rat_mod(r: &Rat) -> Option<u64> {
    let den = big_mod(r.denom());
    (den != 0).then(|| mul_mod(big_mod(r.numer()), inv_mod(den)))
}

/// Coefficients in `v` (ascending, trimmed) modulo `PRIME` after
/// substituting `point` for the other variables.
fn modular_image(p: &Poly, v: usize, point: &[u64]) -> Option<Vec<u64>> {
    let mut out = vec![0u64; p.degree_in(v) as usize + 1];
    for (mono, c) in p.terms() {
        let mut t = rat_mod(c)?;
        for (j, &e) in mono.exponents().iter().enumerate() {
            if j != v && e > 0 {
                t = mul_mod(t, pow_mod(point[j], e as u64));
            }
        }
        let slot = &mut out[mono.exponents()[v] as usize];
        *slot = (*slot + t) % PRIME;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    Some(out)
}

fn modular_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.iter().all(|&c| c == 0) {
            return a.len() - 1;
        }
        if b.len() == 1 {
            return 0;
        }
        let lead = inv_mod(*b.last().unwrap());
        while a.len() >= b.len() {
            let q = mul_mod(*a.last().unwrap(), lead);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + PRIME - mul_mod(bc, q)) % PRIME;
            }
            a.pop();
            while a.len() > 1 && *a.last().unwrap() == 0 {
                a.pop();
            }
            if a.len() == 1 && a[0] == 0 {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

fn gcd_no_mono(a: &Poly, b: &Poly) -> Poly {
    let nvars = a.nvars();
    if a.is_constant() || b.is_constant() || coprime_by_images(a, b) {
        return Poly::one(nvars);
    }
    if a.div_exact(b).is_some() {
        return b.monic();
    }
    if b.div_exact(a).is_some() {
        return a.monic();
    }
    let var = match (0..nvars).find(|&v| a.degree_in(v) > 0 && b.degree_in(v) > 0) {
        Some(v) => v,
        None => {
            // No shared variable: the gcd lies in the coefficient ring of any
            // variable of `a`, so fold `b` against those coefficients.
            let v = (0..nvars).find(|&v| a.degree_in(v) > 0).unwrap();
            return gcd_list_with(b, &a.coeffs_in(v));
        }
    };
    let ca = a.coeffs_in(var);
    let cb = b.coeffs_in(var);
    let cont_a = gcd_list(&ca);
    let cont_b = gcd_list(&cb);
    let pa = primitive(&ca, &cont_a);
    let pb = primitive(&cb, &cont_b);
    let g_cont = gcd(&cont_a, &cont_b);
    let g_pp = prs(pa, pb);
    let g_pp = Poly::from_coeffs(nvars, var, &g_pp);
    g_cont.mul(&g_pp).monic()
}

fn gcd_list_with(start: &Poly, polys: &[Poly]) -> Poly {
    let mut g = start.clone();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        g = gcd(&g, p);
        if g.is_one() {
            break;
        }
    }
    g.monic()
}

fn gcd_list(polys: &[Poly]) -> Poly {
    let mut it = polys.iter().filter(|p| !p.is_zero());
    match it.next() {
        None => Poly::zero(polys.first().map(|p| p.nvars()).unwrap_or(0)),
        Some(first) => {
            let mut g = first.monic();
            for p in it {
                if g.is_one() {
                    break;
                }
                g = gcd(&g, p);
            }
            g
        }
    }
}

fn primitive(coeffs: &[Poly], content: &Poly) -> Vec<Poly> {
    coeffs
        .iter()
        .map(|c| c.div_exact(content).expect("content divides every coefficient"))
        .collect()
}

/// Scales a univariate polynomial over `Q[...]` to integer coefficients
/// with content 1 and a positive leading coefficient. Without this the
/// pseudo-remainders grow exponentially.
fn normalize(p: Vec<Poly>) -> Vec<Poly> {
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::from(1);
    for c in p.iter().flat_map(|c| c.terms()) {
        num_gcd = num_gcd.gcd(c.1.numer());
        den_lcm = den_lcm.lcm(c.1.denom());
    }
    if num_gcd.is_zero() {
        return p;
    }
    let mut factor = Rat::from_big(den_lcm, num_gcd);
    if degree(&p).is_some_and(|d| p[d].leading_coeff().is_negative()) {
        factor = -factor;
    }
    if factor.is_one() {
        return p;
    }
    p.iter().map(|c| c.scale(&factor)).collect()
}

fn degree(p: &[Poly]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn trim(mut p: Vec<Poly>) -> Vec<Poly> {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    p
}

/// Pseudo-remainder of `a` by `b` (univariate over the coefficient ring).
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = degree(b).expect("nonzero divisor");
    let lcb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lcr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lcb);
        }
        for (i, bc) in b.iter().enumerate() {
            let t = bc.mul(&lcr);
            r[i + shift] = r[i + shift].sub(&t);
        }
        debug_assert!(r[dr].is_zero());
    }
    trim(r)
}

/// Primitive gcd of two primitive univariate polynomials.
fn prs(a: Vec<Poly>, b: Vec<Poly>) -> Vec<Poly> {
    let nvars = a[0].nvars();
    let (a, b) = (normalize(a), normalize(b));
    let (mut a, mut b) = if degree(&a) >= degree(&b) { (a, b) } else { (b, a) };
    loop {
        let r = prem(&a, &b);
        match degree(&r) {
            None => {
                let cont = gcd_list(&b);
                return trim(primitive(&b, &cont));
            }
            Some(0) => return vec![Poly::one(nvars)],
            Some(_) => {
                let cont = gcd_list(&r);
                a = b;
                b = normalize(trim(primitive(&r, &cont)));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn x(i: usize) -> Poly {
        Poly::var(4, i)
    }

    fn c(n: i64) -> Poly {
        Poly::constant(4, Rat::from_int(n))
    }

    #[test]
    fn coprime_is_one() {
        assert!(gcd(&x(0), &x(1)).is_one());
        assert!(gcd(&x(0).add(&c(1)), &x(0).sub(&c(1))).is_one());
    }

    #[test]
    fn recovers_common_factor() {
        let f = x(0).mul(&x(3)).sub(&x(1).mul(&x(2)));
        let a = f.mul(&x(0).add(&x(1))).mul(&x(2));
        let b = f.mul(&f).mul(&x(2).sub(&c(3))).mul(&x(2));
        let g = gcd(&a, &b);
        assert_eq!(g, f.mul(&x(2)).monic());
    }

    #[test]
    fn scalar_multiples() {
        let f = x(0).add(&x(1).scale(&Rat::new(1, 2)));
        let g = gcd(&f.scale(&Rat::from_int(6)), &f.mul(&x(3)).scale(&Rat::new(-2, 7)));
        assert_eq!(g, f.monic());
    }

    #[test]
    fn disjoint_variables() {
        let a = x(0).mul(&x(2).add(&c(1)));
        let b = x(1).mul(&x(2).add(&c(1)));
        assert_eq!(gcd(&a, &b), x(2).add(&c(1)));
    }

    #[test]
    fn colliding_images_are_not_mistaken_for_a_factor() {
        // At x1 = 2 both factors below restrict to multiples of 16*x2^4 + 1/2.
        let p = x(0).pow(4).mul(&x(1).pow(4)).add(&Poly::constant(4, Rat::new(1, 2)));
        let q = x(0).pow(2).mul(&x(1).pow(4)).add(&Poly::constant(4, Rat::new(1, 8)));
        assert!(gcd(&p, &q).is_one());
        let f = x(1).add(&c(2));
        assert_eq!(gcd(&p.mul(&f), &q.mul(&f).mul(&x(0))), f);
    }
}
