use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::Rat;

/// Exponent vector of a monomial in the even variables `x1..xn`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono(Vec<u16>);

impl Mono {
    pub fn one(nvars: usize) -> Mono {
        Mono(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Mono {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Mono(e)
    }

    pub fn from_exponents(exps: Vec<u16>) -> Mono {
        Mono(exps)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Mono(out))
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Graded lexicographic order: total degree first, then `x1 > x2 > ...`.
    pub fn cmp_grlex(&self, other: &Mono) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted by descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: Vec<(Mono, Rat)>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Poly {
        if c.is_zero() {
            Poly::zero(nvars)
        } else {
            Poly { nvars, terms: vec![(Mono::one(nvars), c)] }
        }
    }

    pub fn one(nvars: usize) -> Poly {
        Poly::constant(nvars, Rat::one())
    }

    /// The variable `x{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Poly {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Poly { nvars, terms: vec![(Mono::var(nvars, i), Rat::one())] }
    }

    pub fn monomial(mono: Mono, c: Rat) -> Poly {
        let nvars = mono.nvars();
        if c.is_zero() {
            Poly::zero(nvars)
        } else {
            Poly { nvars, terms: vec![(mono, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Mono, Rat)>) -> Poly {
        let mut acc: HashMap<Mono, Rat> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Poly::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: HashMap<Mono, Rat>) -> Poly {
        let mut terms: Vec<(Mono, Rat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_grlex(&a.0));
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && !self.is_zero() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant term.
    pub fn constant_term(&self) -> Rat {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rat::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(Mono, Rat)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_mono(&self, mono: &Mono, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        // Multiplying by a monomial preserves the grlex order of terms.
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        assert_eq!(self.nvars, other.nvars, "polynomials over different variable sets");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_grlex(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Poly { nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "polynomials over different variable sets");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.nvars);
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return other.mul_mono(m, c);
        }
        if other.is_monomial() {
            let (m, c) = &other.terms[0];
            return self.mul_mono(m, c);
        }
        let mut acc: HashMap<Mono, Rat> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly::from_map(self.nvars, acc)
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero(self.nvars));
        }
        let (lm, lc) = d.leading().unwrap();
        if d.is_monomial() {
            let inv = lc.recip().unwrap();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                terms.push((m.div(lm)?, c * &inv));
            }
            return Some(Poly { nvars: self.nvars, terms });
        }
        if self.total_degree() < d.total_degree() {
            return None;
        }
        let lc_inv = lc.recip().unwrap();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(lm)?;
            let qc = rc * &lc_inv;
            rem = rem.sub(&d.mul_mono(&qm, &qc));
            quot.push((qm, qc));
        }
        // Quotient terms are produced in strictly descending order.
        Some(Poly { nvars: self.nvars, terms: quot })
    }

    /// Normalizes so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip().unwrap()),
        }
    }

    /// Largest monomial dividing every term.
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::one(self.nvars),
            Some((m, _)) => it.fold(m.clone(), |g, (m, _)| g.gcd(m)),
        }
    }

    /// Coefficients with respect to `x{var+1}`; entry `d` holds the
    /// coefficient of `x^d` (a polynomial not involving that variable).
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Mono, Rat)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let d = m.0[var] as usize;
            let mut e = m.0.clone();
            e[var] = 0;
            buckets[d].push((Mono(e), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_by(|a, b| b.0.cmp_grlex(&a.0));
                Poly { nvars: self.nvars, terms: ts }
            })
            .collect()
    }

    pub fn from_coeffs(nvars: usize, var: usize, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (d, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.0.clone();
                e[var] += d as u16;
                terms.push((Mono(e), a.clone()));
            }
        }
        Poly::from_terms(nvars, terms)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= &x.pow(e as u32);
                }
            }
            acc += &t;
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
