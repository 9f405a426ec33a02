//! The superalgebra `Q(x1..xa) ⊗ Λ[e1..eb]`, its parity grading, the body
//! map, inversion of even elements, and the odd involution `ν`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{Rat, RatFunc};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// A basis monomial `e_{i1} e_{i2} ...` of the exterior algebra, stored as a
/// bitset (bit `i` is generator `e_{i+1}`).
///
/// Ordered graded-lexicographically: fewer generators first, then by the
/// sorted index lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct OddMask(u32);

impl OddMask {
    pub const EMPTY: OddMask = OddMask(0);

    pub fn from_bits(bits: u32) -> OddMask {
        OddMask(bits)
    }

    /// Mask of the single generator `e_{i+1}`.
    pub fn single(i: usize) -> OddMask {
        assert!(i < 32, "at most 32 odd generators are supported");
        OddMask(1 << i)
    }

    pub fn from_indices(indices: &[usize]) -> OddMask {
        OddMask(indices.iter().fold(0, |acc, &i| acc | (1 << i)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_even(self) -> bool {
        self.len().is_multiple_of(2)
    }

    /// Zero-based generator indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 & (1 << i) != 0)
    }

    /// Product of basis monomials: `None` if they share a generator,
    /// otherwise the merged mask and the reordering sign.
    pub fn product(self, other: OddMask) -> Option<(OddMask, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0u32;
        let mut rest = other.0;
        while rest != 0 {
            let j = rest.trailing_zeros();
            // generators of `self` that sit after e_j
            swaps += (self.0 >> (j + 1)).count_ones();
            rest &= rest - 1;
        }
        Some((OddMask(self.0 | other.0), swaps % 2 == 1))
    }

    /// All masks on `beta` generators in graded-lex order.
    pub fn all(beta: usize) -> Vec<OddMask> {
        let mut v: Vec<OddMask> = (0..(1u32 << beta)).map(OddMask).collect();
        v.sort();
        v
    }
}

impl Ord for OddMask {
    fn cmp(&self, other: &OddMask) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the smallest differing generator belongs to `self`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for OddMask {
    fn partial_cmp(&self, other: &OddMask) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OddMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for i in self.indices() {
            write!(f, "e{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for OddMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    pub fn from_bit(odd: bool) -> Parity {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::Mixed => Parity::Mixed,
        }
    }
}

/// Element of `Q(x1..x_alpha) ⊗ Λ[e1..e_beta]`.
#[derive(Clone)]
pub struct SuperElem {
    alpha: usize,
    beta: usize,
    terms: BTreeMap<OddMask, RatFunc>,
}

impl SuperElem {
    pub fn zero(alpha: usize, beta: usize) -> SuperElem {
        SuperElem { alpha, beta, terms: BTreeMap::new() }
    }

    pub fn one(alpha: usize, beta: usize) -> SuperElem {
        SuperElem::scalar(beta, RatFunc::one(alpha))
    }

    pub fn constant(alpha: usize, beta: usize, c: Rat) -> SuperElem {
        SuperElem::scalar(beta, RatFunc::constant(alpha, c))
    }

    /// Purely even element with no odd part.
    pub fn scalar(beta: usize, f: RatFunc) -> SuperElem {
        SuperElem::term(beta, OddMask::EMPTY, f)
    }

    pub fn term(beta: usize, mask: OddMask, f: RatFunc) -> SuperElem {
        let alpha = f.nvars();
        let mut terms = BTreeMap::new();
        if !f.is_zero() {
            terms.insert(mask, f);
        }
        SuperElem { alpha, beta, terms }
    }

    /// Even coordinate `x_{i+1}`.
    pub fn even_var(alpha: usize, beta: usize, i: usize) -> SuperElem {
        SuperElem::scalar(beta, RatFunc::var(alpha, i))
    }

    /// Odd generator `e_{j+1}`.
    pub fn odd_gen(alpha: usize, beta: usize, j: usize) -> SuperElem {
        assert!(j < beta, "odd generator e{} out of range (beta = {beta})", j + 1);
        SuperElem::term(beta, OddMask::single(j), RatFunc::one(alpha))
    }

    pub fn from_terms(alpha: usize, beta: usize, terms: impl IntoIterator<Item = (OddMask, RatFunc)>) -> SuperElem {
        let mut out = SuperElem::zero(alpha, beta);
        for (m, f) in terms {
            out.add_term(m, f);
        }
        out
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OddMask, &RatFunc)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mask: OddMask) -> RatFunc {
        self.terms.get(&mask).cloned().unwrap_or_else(|| RatFunc::zero(self.alpha))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: OddMask, f: RatFunc) {
        if f.is_zero() {
            return;
        }
        debug_assert!(mask.bits() >> self.beta == 0, "mask outside the generator range");
        match self.terms.get_mut(&mask) {
            Some(c) => {
                let s = c.add(&f);
                if s.is_zero() {
                    self.terms.remove(&mask);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(mask, f);
            }
        }
    }

    fn check_ctx(&self, other: &SuperElem) -> Result<()> {
        if self.alpha != other.alpha || self.beta != other.beta {
            return Err(Error::ContextMismatch(format!(
                "({}|{}) vs ({}|{})",
                self.alpha, self.beta, other.alpha, other.beta
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SuperElem) -> Result<SuperElem> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, f) in &other.terms {
            out.add_term(*m, f.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &SuperElem) -> Result<SuperElem> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, f) in &other.terms {
            out.add_term(*m, f.neg());
        }
        Ok(out)
    }

    /// Supercommutative product.
    pub fn try_mul(&self, other: &SuperElem) -> Result<SuperElem> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SuperElem::zero(self.alpha, self.beta));
        }
        let mut acc: BTreeMap<OddMask, Vec<RatFunc>> = BTreeMap::new();
        for (ma, fa) in &self.terms {
            for (mb, fb) in &other.terms {
                if let Some((m, negative)) = ma.product(*mb) {
                    let p = fa.mul(fb);
                    acc.entry(m).or_default().push(if negative { p.neg() } else { p });
                }
            }
        }
        let mut out = SuperElem::zero(self.alpha, self.beta);
        for (m, parts) in acc {
            let mut it = parts.into_iter();
            let first = it.next().unwrap();
            let sum = it.fold(first, |s, p| s.add(&p));
            if !sum.is_zero() {
                out.terms.insert(m, sum);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &SuperElem) -> SuperElem {
        self.try_add(other).expect("superalgebra context mismatch")
    }

    pub fn sub(&self, other: &SuperElem) -> SuperElem {
        self.try_sub(other).expect("superalgebra context mismatch")
    }

    pub fn mul(&self, other: &SuperElem) -> SuperElem {
        self.try_mul(other).expect("superalgebra context mismatch")
    }

    pub fn neg(&self) -> SuperElem {
        SuperElem {
            alpha: self.alpha,
            beta: self.beta,
            terms: self.terms.iter().map(|(m, f)| (*m, f.neg())).collect(),
        }
    }

    pub fn scale(&self, f: &RatFunc) -> SuperElem {
        if f.is_zero() {
            return SuperElem::zero(self.alpha, self.beta);
        }
        SuperElem {
            alpha: self.alpha,
            beta: self.beta,
            terms: self.terms.iter().map(|(m, c)| (*m, c.mul(f))).collect(),
        }
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for m in self.terms.keys() {
            if m.is_even() {
                even = true;
            } else {
                odd = true;
            }
        }
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// True if the element is homogeneous of the given parity (zero is both).
    pub fn has_parity(&self, odd: bool) -> bool {
        self.terms.keys().all(|m| m.is_even() != odd)
    }

    /// Coefficient of the empty mask: the image modulo nilpotents.
    pub fn body(&self) -> RatFunc {
        self.coeff(OddMask::EMPTY)
    }

    /// Inverse of an even element with nonzero body, via the terminating
    /// geometric series in its nilpotent part.
    pub fn invert_even(&self) -> Result<SuperElem> {
        match self.parity() {
            Parity::Even => {}
            p => return Err(Error::ParityError(format!("{p:?}").to_lowercase())),
        }
        self.invert_unit()
    }

    /// Inverse of any element with nonzero body. The soul is nilpotent, so
    /// the series terminates whatever the parity of its parts.
    pub fn invert_unit(&self) -> Result<SuperElem> {
        let body = self.body();
        let body_inv = body.inv().map_err(|_| Error::NotInvertible)?;
        let mut nil = self.clone();
        nil.terms.remove(&OddMask::EMPTY);
        if nil.is_zero() {
            return Ok(SuperElem::scalar(self.beta, body_inv));
        }
        // a = b (1 - n) with n = -b^{-1} (a - b)
        let n = nil.scale(&body_inv).neg();
        let mut sum = SuperElem::one(self.alpha, self.beta);
        let mut power = n.clone();
        while !power.is_zero() {
            sum = sum.add(&power);
            power = power.mul(&n);
        }
        Ok(sum.scale(&body_inv))
    }

    /// Exact equality, coefficientwise by cross-multiplication.
    pub fn equals(&self, other: &SuperElem) -> bool {
        if self.alpha != other.alpha || self.beta != other.beta || self.terms.len() != other.terms.len() {
            return false;
        }
        self.terms
            .iter()
            .zip(&other.terms)
            .all(|((ma, fa), (mb, fb))| ma == mb && fa.equals(fb))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.body().is_one()
    }

    /// Evaluates every coefficient at a point of the even coordinates.
    pub fn eval_coeffs(&self, point: &[Rat]) -> Result<BTreeMap<OddMask, Rat>> {
        let mut out = BTreeMap::new();
        for (m, f) in &self.terms {
            let v = f.eval_at(point)?;
            if !v.is_zero() {
                out.insert(*m, v);
            }
        }
        Ok(out)
    }

    /// Largest stored coefficient size, used by the reduction heuristics and
    /// for diagnostics.
    pub fn max_coeff_size(&self) -> usize {
        self.terms.values().map(|f| f.size()).max().unwrap_or(0)
    }
}

impl PartialEq for SuperElem {
    fn eq(&self, other: &SuperElem) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for SuperElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut text = if m.is_empty() {
                c.to_string()
            } else if c.is_one() {
                m.to_string()
            } else if c.neg().is_one() {
                format!("-{m}")
            } else {
                let cs = c.to_string();
                let simple = c.is_polynomial() && c.num().nterms() == 1;
                if simple {
                    format!("{cs}*{m}")
                } else {
                    format!("({cs})*{m}")
                }
            };
            if i > 0 {
                if let Some(rest) = text.strip_prefix('-') {
                    text = format!(" - {rest}");
                } else {
                    text = format!(" + {text}");
                }
            }
            f.write_str(&text)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SuperElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The odd involution `ν(a ⊗ b) = a ⊗ T(b)`, where `T` is given in an ordered
/// basis of `Λ` (even monomials first) by the block matrix `[[0, A], [A⁻¹, 0]]`.
#[derive(Clone)]
pub struct NuStructure {
    beta: usize,
    name: String,
    even_basis: Vec<OddMask>,
    odd_basis: Vec<OddMask>,
    pairing: Mat<Rat>,
    /// `images[mask]` = T(mask) as a combination of masks.
    images: Vec<Vec<(OddMask, Rat)>>,
}

impl NuStructure {
    /// Pairing `A = identity`: `T` swaps the i-th even and i-th odd basis
    /// monomials of the graded-lex basis.
    pub fn identity(beta: usize) -> NuStructure {
        let n = Self::half_dim(beta);
        let pairing = Mat::identity(n, &Rat::one());
        NuStructure::from_pairing_named(beta, pairing, "identity".into()).expect("identity pairing is invertible")
    }

    /// Permutation pairing: `T(odd_j) = even_{perm[j]}` (zero-based).
    pub fn from_permutation(beta: usize, perm: &[usize]) -> Result<NuStructure> {
        let n = Self::half_dim(beta);
        if perm.len() != n {
            return Err(Error::InvalidNu(format!("permutation has {} entries, expected {n}", perm.len())));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidNu(format!("{perm:?} is not a permutation of 0..{n}")));
            }
            seen[p] = true;
        }
        let pairing = Mat::from_fn(n, n, |i, j| if perm[j] == i { Rat::one() } else { Rat::zero() });
        NuStructure::from_pairing_named(beta, pairing, format!("permutation{perm:?}"))
    }

    /// Cyclic pairing whose `T` never sends an odd generator `e_i` to
    /// something with a nonzero scalar part (available for `beta >= 3`).
    pub fn shift(beta: usize) -> Result<NuStructure> {
        let n = Self::half_dim(beta);
        if beta < 3 {
            return Err(Error::InvalidNu(format!("shift pairing needs beta >= 3, got {beta}")));
        }
        let perm: Vec<usize> = (0..n).map(|j| (j + 1) % n).collect();
        let mut nu = NuStructure::from_permutation(beta, &perm)?;
        nu.name = "shift".into();
        Ok(nu)
    }

    pub fn from_pairing(beta: usize, pairing: Mat<Rat>) -> Result<NuStructure> {
        NuStructure::from_pairing_named(beta, pairing, "custom".into())
    }

    /// Reads a pairing from JSON: either `{"permutation": [..]}` (zero-based,
    /// as in [`NuStructure::from_permutation`]) or `{"pairing": [[..], ..]}`
    /// with integer or `"p/q"` string entries.
    pub fn from_json(beta: usize, text: &str) -> Result<NuStructure> {
        let bad = |msg: String| Error::InvalidNu(msg);
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| bad(format!("not JSON: {e}")))?;
        if let Some(perm) = value.get("permutation") {
            let perm: Vec<usize> =
                serde_json::from_value(perm.clone()).map_err(|e| bad(format!("bad permutation: {e}")))?;
            return NuStructure::from_permutation(beta, &perm);
        }
        let rows = value
            .get("pairing")
            .and_then(|v| v.as_array())
            .ok_or_else(|| bad("expected a \"permutation\" or \"pairing\" field".into()))?;
        let entry = |v: &serde_json::Value| -> Result<Rat> {
            match v {
                serde_json::Value::Number(n) if n.is_i64() => Ok(Rat::from(n.as_i64().unwrap())),
                serde_json::Value::String(s) => s.parse().map_err(|e: String| bad(e)),
                other => Err(bad(format!("bad pairing entry {other}"))),
            }
        };
        let parsed = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("pairing rows must be arrays".into()))?
                    .iter()
                    .map(entry)
                    .collect::<Result<Vec<Rat>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n = Self::half_dim(beta);
        if parsed.len() != n || parsed.iter().any(|r| r.len() != n) {
            return Err(bad(format!("pairing must be {n}x{n}")));
        }
        NuStructure::from_pairing(beta, Mat::from_rows(parsed))
    }

    fn half_dim(beta: usize) -> usize {
        if beta == 0 {
            0
        } else {
            1 << (beta - 1)
        }
    }

    fn from_pairing_named(beta: usize, pairing: Mat<Rat>, name: String) -> Result<NuStructure> {
        if beta > 20 {
            return Err(Error::InvalidNu(format!("beta = {beta} is too large")));
        }
        let n = Self::half_dim(beta);
        if pairing.rows() != n || pairing.cols() != n {
            return Err(Error::InvalidNu(format!(
                "pairing must be {n}x{n}, got {}x{}",
                pairing.rows(),
                pairing.cols()
            )));
        }
        let all = OddMask::all(beta);
        let even_basis: Vec<OddMask> = all.iter().copied().filter(|m| m.is_even()).collect();
        let odd_basis: Vec<OddMask> = all.iter().copied().filter(|m| !m.is_even()).collect();
        let mut images = vec![Vec::new(); 1 << beta];
        if beta > 0 {
            let inv = pairing
                .inverse()
                .ok_or_else(|| Error::InvalidNu("pairing matrix is singular".into()))?;
            for j in 0..n {
                // T(odd_j) = sum_i A[i][j] even_i ; T(even_j) = sum_i Ainv[i][j] odd_i
                images[odd_basis[j].bits() as usize] = (0..n)
                    .filter(|&i| !pairing.get(i, j).is_zero())
                    .map(|i| (even_basis[i], pairing.get(i, j).clone()))
                    .collect();
                images[even_basis[j].bits() as usize] = (0..n)
                    .filter(|&i| !inv.get(i, j).is_zero())
                    .map(|i| (odd_basis[i], inv.get(i, j).clone()))
                    .collect();
            }
        }
        Ok(NuStructure { beta, name, even_basis, odd_basis, pairing, images })
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn even_basis(&self) -> &[OddMask] {
        &self.even_basis
    }

    pub fn odd_basis(&self) -> &[OddMask] {
        &self.odd_basis
    }

    pub fn pairing(&self) -> &Mat<Rat> {
        &self.pairing
    }

    /// `T` applied to a single basis monomial.
    pub fn image(&self, mask: OddMask) -> &[(OddMask, Rat)] {
        &self.images[mask.bits() as usize]
    }

    /// Applies `ν`, linearly over the rational-function coefficients.
    pub fn apply(&self, a: &SuperElem) -> Result<SuperElem> {
        if a.beta() != self.beta {
            return Err(Error::ContextMismatch(format!(
                "nu built for beta = {}, element has beta = {}",
                self.beta,
                a.beta()
            )));
        }
        if self.beta == 0 {
            return Err(Error::InvalidNu("no odd generators, nu is undefined".into()));
        }
        let mut out = SuperElem::zero(a.alpha(), a.beta());
        for (m, f) in a.terms() {
            for (im, c) in self.image(*m) {
                out.add_term(*im, f.scale(c));
            }
        }
        Ok(out)
    }

    /// `body(ν(e_{j+1}))`, the constant the reduced label sees in place of an
    /// odd generator.
    pub fn odd_generator_body(&self, j: usize) -> Rat {
        self.image(OddMask::single(j))
            .iter()
            .find(|(m, _)| m.is_empty())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }
}

impl fmt::Debug for NuStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NuStructure({}, beta = {})", self.name, self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: usize = 2;
    const B: usize = 3;

    fn x(i: usize) -> SuperElem {
        SuperElem::even_var(A, B, i)
    }

    fn e(j: usize) -> SuperElem {
        SuperElem::odd_gen(A, B, j)
    }

    #[test]
    fn mask_order_is_graded_lex() {
        let names: Vec<String> = OddMask::all(3).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["1", "e1", "e2", "e3", "e1e2", "e1e3", "e2e3", "e1e2e3"]);
    }

    #[test]
    fn product_examples() {
        assert_eq!(e(0).mul(&e(1)).to_string(), "e1e2");
        assert_eq!(e(1).mul(&e(0)).to_string(), "-e1e2");
        assert!(e(0).mul(&e(0)).is_zero());
        let a = x(0).add(&e(0).mul(&e(1)));
        assert_eq!(a.mul(&e(0)).to_string(), "x1*e1");
    }

    #[test]
    fn context_mismatch() {
        let other = SuperElem::odd_gen(A, B + 1, 0);
        assert!(matches!(e(0).try_mul(&other), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(x(0).parity(), Parity::Even);
        assert_eq!(e(2).parity(), Parity::Odd);
        assert_eq!(x(0).add(&e(0)).parity(), Parity::Mixed);
    }

    #[test]
    fn body_examples() {
        assert_eq!(x(0).add(&e(0).mul(&e(1))).body(), RatFunc::var(A, 0));
        assert!(e(2).body().is_zero());
        assert!(SuperElem::one(A, B).body().is_one());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(x(0).invert_even().unwrap().to_string(), "1/x1");
        let one = SuperElem::one(A, B);
        let e12 = e(0).mul(&e(1));
        assert_eq!(one.add(&e12).invert_even().unwrap(), one.sub(&e12));
        let a = x(0).add(&e12);
        let inv = a.invert_even().unwrap();
        assert_eq!(inv.to_string(), "1/x1 + (-1/x1^2)*e1e2");
        assert!(a.mul(&inv).is_one());
        assert!(matches!(e(0).invert_even(), Err(Error::ParityError(_))));
        assert!(matches!(e12.invert_even(), Err(Error::NotInvertible)));
    }

    #[test]
    fn nu_of_one_is_first_odd_monomial() {
        let nu = NuStructure::identity(B);
        assert_eq!(nu.apply(&SuperElem::one(A, B)).unwrap(), e(0));
        // even basis: 1, e1e2, e1e3, e2e3 ; odd basis: e1, e2, e3, e1e2e3
        assert_eq!(nu.apply(&e(1)).unwrap(), e(0).mul(&e(1)));
        assert_eq!(nu.apply(&e(1).mul(&e(2))).unwrap(), e(0).mul(&e(1)).mul(&e(2)));
    }

    #[test]
    fn nu_is_an_odd_involution() {
        let nu = NuStructure::identity(B);
        let a = x(0).add(&e(0).mul(&e(1)).mul(&e(2)));
        assert_eq!(nu.apply(&nu.apply(&a).unwrap()).unwrap(), a);
        assert_eq!(nu.apply(&e(2)).unwrap().parity(), Parity::Even);
    }

    #[test]
    fn shift_pairing_has_nilpotent_generator_images() {
        let nu = NuStructure::shift(5).unwrap();
        for j in 0..5 {
            assert!(nu.odd_generator_body(j).is_zero());
        }
        let id = NuStructure::identity(5);
        assert!(id.odd_generator_body(0).is_one());
        assert!(NuStructure::shift(2).is_err());
    }

    #[test]
    fn singular_pairing_rejected() {
        let m = Mat::from_rows(vec![vec![Rat::one(), Rat::one()], vec![Rat::one(), Rat::one()]]);
        assert!(NuStructure::from_pairing(2, m).is_err());
        assert!(NuStructure::from_permutation(2, &[0, 0]).is_err());
    }

    #[test]
    fn pairing_files() {
        let nu = NuStructure::from_json(3, r#"{"permutation": [1, 2, 3, 0]}"#).unwrap();
        assert_eq!(nu.pairing(), NuStructure::shift(3).unwrap().pairing());
        let nu = NuStructure::from_json(2, r#"{"pairing": [[2, 0], [0, "1/2"]]}"#).unwrap();
        let one = SuperElem::one(0, 2);
        assert_eq!(nu.apply(&nu.apply(&one).unwrap()).unwrap(), one);
        assert!(NuStructure::from_json(2, r#"{"pairing": [[0, 0], [0, 1]]}"#).is_err());
        assert!(NuStructure::from_json(2, r#"{"pairing": [[1]]}"#).is_err());
        assert!(NuStructure::from_json(2, "nonsense").is_err());
    }
}
