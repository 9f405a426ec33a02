use std::fmt;

use super::{gcd, Poly, Rat};
use crate::error::{Error, Result};

/// Rational function `num / den` in the even coordinates.
///
/// The denominator is nonzero and monic. Fractions are reduced by the
/// polynomial gcd after every operation, but equality never relies on
/// that: `==` compares by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero(nvars: usize) -> RatFunc {
        RatFunc { num: Poly::zero(nvars), den: Poly::one(nvars) }
    }

    pub fn one(nvars: usize) -> RatFunc {
        RatFunc { num: Poly::one(nvars), den: Poly::one(nvars) }
    }

    pub fn constant(nvars: usize, c: Rat) -> RatFunc {
        RatFunc { num: Poly::constant(nvars, c), den: Poly::one(nvars) }
    }

    pub fn var(nvars: usize, i: usize) -> RatFunc {
        RatFunc { num: Poly::var(nvars, i), den: Poly::one(nvars) }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        let nvars = p.nvars();
        RatFunc { num: p, den: Poly::one(nvars) }
    }

    /// Builds `num / den` without cancelling common factors (only the
    /// denominator is made monic).
    pub fn new_unreduced(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::ZeroInverse);
        }
        assert_eq!(num.nvars(), den.nvars(), "numerator and denominator over different variables");
        let lc = den.leading_coeff();
        let inv = lc.recip().unwrap();
        Ok(RatFunc { num: num.scale(&inv), den: den.scale(&inv) })
    }

    /// Builds `num / den` and reduces it.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        let mut r = RatFunc::new_unreduced(num, den)?;
        r.reduce();
        Ok(r)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Value as a rational when the function is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(&self.num.constant_term() / &self.den.constant_term())
        } else {
            None
        }
    }

    /// Total number of stored terms, a rough size measure.
    pub fn size(&self) -> usize {
        self.num.nterms() + self.den.nterms()
    }

    fn reduce(&mut self) {
        let nvars = self.nvars();
        if self.num.is_zero() {
            self.den = Poly::one(nvars);
            return;
        }
        if self.den.is_constant() {
            let inv = self.den.constant_term().recip().unwrap();
            self.num = self.num.scale(&inv);
            self.den = Poly::one(nvars);
            return;
        }
        let g = gcd::gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g).expect("gcd divides numerator");
            self.den = self.den.div_exact(&g).expect("gcd divides denominator");
        }
        let lc = self.den.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip().unwrap();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.combine(other, true)
    }

    // Henrici: cancel the shared part of the denominators before forming
    // the sum, so the final gcd only has to look at that shared part.
    fn combine(&self, other: &RatFunc, negate: bool) -> RatFunc {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { other.neg() } else { other.clone() };
        }
        let rhs = if negate { other.num.neg() } else { other.num.clone() };
        if self.den == other.den {
            let mut r = RatFunc { num: self.num.add(&rhs), den: self.den.clone() };
            r.reduce();
            return r;
        }
        let g = gcd::gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&rhs.mul(&self.den));
            return RatFunc::normalized(num, self.den.mul(&other.den));
        }
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&rhs.mul(&d1));
        if num.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        let h = gcd::gcd(&num, &g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        RatFunc::normalized(num, d1.mul(&d2).mul(&g))
    }

    /// Makes the denominator monic; the caller guarantees coprimality.
    fn normalized(num: Poly, den: Poly) -> RatFunc {
        let lc = den.leading_coeff();
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.recip().expect("nonzero denominator");
        let mut r = RatFunc { num: num.scale(&inv), den: den.scale(&inv) };
        if r.den.is_constant() {
            r.den = Poly::one(r.num.nvars());
        }
        r
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        let nvars = self.nvars();
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(nvars);
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc { num: self.num.mul(&other.num), den: Poly::one(nvars) };
        }
        // Both operands are reduced, so only cross cancellations remain.
        let cancel = |n: &Poly, d: &Poly| {
            if d.is_one() {
                return (n.clone(), d.clone());
            }
            let g = gcd::gcd(n, d);
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
            }
        };
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        RatFunc::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.num.is_zero() {
            return Err(Error::ZeroInverse);
        }
        RatFunc::new_unreduced(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, exp: u32) -> RatFunc {
        RatFunc { num: self.num.pow(exp), den: self.den.pow(exp) }
    }

    /// Exact equality by cross-multiplication.
    pub fn equals(&self, other: &RatFunc) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    /// Exact evaluation at a rational point.
    pub fn eval_at(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars() {
            return Err(Error::ContextMismatch(format!(
                "point of dimension {} for {} variables",
                point.len(),
                self.nvars()
            )));
        }
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(&self.num.eval(point) / &d)
    }

    /// Text form that can be embedded as a factor: parenthesized unless it
    /// is a single unsigned-safe term.
    pub fn to_factor_string(&self) -> String {
        let s = self.to_string();
        if self.den.is_one() && self.num.nterms() <= 1 {
            s
        } else {
            format!("({s})")
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &RatFunc) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.nterms() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        let den = self.den.to_string();
        let den = if den.contains([' ', '*', '/']) { format!("({den})") } else { den };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> RatFunc {
        RatFunc::var(3, i)
    }

    #[test]
    fn additive_identity() {
        let r = x(0).add(&RatFunc::zero(3));
        assert_eq!(r.to_string(), "x1");
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = x(0).div(&x(1)).unwrap();
        let b = x(1).div(&x(0)).unwrap();
        assert!(a.mul(&b).is_one());
        assert_eq!(a.mul(&b).to_string(), "1");
    }

    #[test]
    fn fraction_addition() {
        let r = x(0).inv().unwrap().add(&x(1).inv().unwrap());
        assert_eq!(r.to_string(), "(x1 + x2)/(x1*x2)");
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(x(0).inv().unwrap().to_string(), "1/x1");
        let s = x(0).add(&x(1)).div(&x(2)).unwrap();
        assert_eq!(s.inv().unwrap().to_string(), "x3/(x1 + x2)");
        assert!(matches!(RatFunc::zero(3).inv(), Err(Error::ZeroInverse)));
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let unreduced = RatFunc::new_unreduced(x(0).num().mul(x(1).num()), x(1).num().clone()).unwrap();
        assert_eq!(unreduced, x(0));
        assert_ne!(x(0), x(1));
        let diff_sq = x(0).num().mul(x(0).num()).sub(&x(1).num().mul(x(1).num()));
        let q = RatFunc::new_unreduced(diff_sq, x(0).num().sub(x(1).num())).unwrap();
        assert_eq!(q, x(0).add(&x(1)));
    }

    #[test]
    fn evaluation() {
        let r = x(0).div(&x(1)).unwrap();
        let p = |a: i64, b: i64| vec![Rat::from_int(a), Rat::from_int(b), Rat::zero()];
        assert_eq!(r.eval_at(&p(1, 2)).unwrap(), Rat::new(1, 2));
        assert!(matches!(r.eval_at(&p(1, 0)), Err(Error::PoleAtPoint)));
        assert_eq!(x(0).add(&x(1)).eval_at(&p(3, 4)).unwrap(), Rat::from_int(7));
    }

    #[test]
    fn reduced_form_cancels_gcd() {
        let f = x(0).num().mul(x(2).num()).sub(x(1).num());
        let g = x(0).num().add(&Poly::one(3));
        let r = RatFunc::new(f.mul(&g), g.mul(x(1).num())).unwrap();
        assert_eq!(r.den(), x(1).num());
        assert_eq!(r.num(), &f);
    }
}
