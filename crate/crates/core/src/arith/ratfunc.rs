//! Rational functions with canonical `num/den` form: gcd removed and the
//! denominator monic in grlex order.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::cyclo::{CycloField, CycloScalar};
use super::gcd::gcd;
use super::poly::ParamPoly;

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: ParamPoly,
    den: ParamPoly,
}

impl RatFunc {
    pub fn new(num: ParamPoly, den: ParamPoly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::from_poly(ParamPoly::zero(num.field));
        }
        if let Some(c) = den.constant_value() {
            return RatFunc { num: num.scale(&c.inv()), den: ParamPoly::one(num.field) };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_divide(&g).expect("gcd divides"), den.exact_divide(&g).expect("gcd divides"))
        };
        let lc = den.leading().expect("nonzero").1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// `num/den` with `gcd(num, den) = 1` already known; only the leading
    /// coefficient of the denominator is normalized.
    fn from_coprime(num: ParamPoly, den: ParamPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero(num.field);
        }
        let lc = den.leading().expect("nonzero").1.clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(num: ParamPoly) -> RatFunc {
        let den = ParamPoly::one(num.field);
        RatFunc { num, den }
    }

    pub fn zero(field: &'static CycloField) -> RatFunc {
        RatFunc::from_poly(ParamPoly::zero(field))
    }

    pub fn one(field: &'static CycloField) -> RatFunc {
        RatFunc::from_poly(ParamPoly::one(field))
    }

    pub fn constant(c: CycloScalar) -> RatFunc {
        RatFunc::from_poly(ParamPoly::constant(c))
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn field(&self) -> &'static CycloField {
        self.num.field
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the canonical denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        RatFunc::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &CycloScalar) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.field());
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &ParamPoly) -> RatFunc {
        RatFunc::new(&self.num * p, self.den.clone())
    }

    /// Apply the same substitution to numerator and denominator.
    pub fn substitute(&self, subs: &[Option<ParamPoly>]) -> RatFunc {
        RatFunc::new(self.num.substitute(subs), self.den.substitute(subs))
    }

    pub fn rename_vars(&self, map: &[usize]) -> RatFunc {
        RatFunc::new(self.num.rename_vars(map), self.den.rename_vars(map))
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.den.is_one() {
            self.num.fmt_with(names)
        } else {
            format!("({})/({})", self.num.fmt_with(names), self.den.fmt_with(names))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_with(&[]))
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        // Henrici: with g = gcd(b, d), the sum a/b + c/d only needs the
        // numerator reduced against g
        let g = gcd(&self.den, &rhs.den);
        let b1 = self.den.exact_divide(&g).expect("gcd divides");
        let d1 = rhs.den.exact_divide(&g).expect("gcd divides");
        let t = &(&self.num * &d1) + &(&rhs.num * &b1);
        let den = &b1 * &rhs.den;
        if g.is_one() {
            return RatFunc::from_coprime(t, den);
        }
        let h = gcd(&t, &g);
        if h.is_one() {
            return RatFunc::from_coprime(t, den);
        }
        RatFunc::from_coprime(t.exact_divide(&h).expect("gcd divides"), den.exact_divide(&h).expect("gcd divides"))
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.field());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // both sides are reduced, so only cross gcds can cancel
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let q = |f: &ParamPoly, g: &ParamPoly| if g.is_one() { f.clone() } else { f.exact_divide(g).expect("gcd divides") };
        RatFunc::from_coprime(
            &q(&self.num, &g1) * &q(&rhs.num, &g2),
            &q(&self.den, &g2) * &q(&rhs.den, &g1),
        )
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        self * &rhs.inv()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::Q;

    fn v(i: usize) -> ParamPoly {
        ParamPoly::var(CycloField::get(3), i)
    }

    #[test]
    fn normalization_is_canonical() {
        let (x, y) = (v(0), v(1));
        let a = RatFunc::new(&x * &(&x + &y), (&(&x + &y) * &y).scale_q(&Q::int(2)));
        let b = RatFunc::new(x.scale_q(&Q::int(3)), y.scale_q(&Q::int(6)));
        assert_eq!(a, b);
        assert!(b.den().leading().unwrap().1.is_one());
    }

    #[test]
    fn field_operations() {
        let (x, y) = (RatFunc::from_poly(v(0)), RatFunc::from_poly(v(1)));
        let q = &x / &y;
        assert_eq!(&q * &y, x);
        let s = &(&q + &y.inv()) - &y.inv();
        assert_eq!(s, q);
        assert!((&q * &q.inv()).is_one());
    }
}
