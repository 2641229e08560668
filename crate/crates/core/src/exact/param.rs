use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed};

use super::field::Field;
use super::matrix::Matrix;
use super::poly::Poly;
use super::rational::Rational;
use crate::{Error, Result};

/// Element of ℚ(t₁,…,t_r) as a reduced fraction of integer polynomials.
///
/// `gcd(num, den) = 1` including integer content and the leading coefficient
/// of `den` is positive, so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamScalar {
    num: Poly,
    den: Poly,
}

impl ParamScalar {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if num.is_zero() {
            den = Poly::one();
        }
        if den.leading_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        ParamScalar { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        ParamScalar { num: p, den: Poly::one() }
    }

    /// The variable `t_{v+1}`.
    pub fn var(v: usize) -> Self {
        Self::from_poly(Poly::var(v))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(Poly::from_i64(n))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn as_rational(&self) -> Option<Rational> {
        let n = self.num.constant_value()?;
        let d = self.den.constant_value()?;
        Some(Rational::new(n, d))
    }

    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn eval(&self, t: &[Rational]) -> Result<Rational> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(self.num.eval(t) / d)
    }

    /// Replaces `t_{v+1}` by the polynomial `values[v]`.
    pub fn substitute(&self, values: &[Poly]) -> Result<ParamScalar> {
        let d = self.den.substitute(values);
        if d.is_zero() {
            return Err(Error::PoleAtPoint);
        }
        Ok(ParamScalar::new(self.num.substitute(values), d))
    }

    /// Leading behaviour at `t_{v+1} → 0`: returns `(k, c)` with
    /// `self = t_{v+1}^k · (c + O(t_{v+1}))` and `c` free of `t_{v+1}`.
    /// Returns `None` for the zero function.
    pub fn lowest_order_in(&self, v: usize) -> Option<(i64, ParamScalar)> {
        if self.num.is_zero() {
            return None;
        }
        let a = self.num.min_degree_in(v);
        let b = self.den.min_degree_in(v);
        let c = ParamScalar::new(self.num.coeff_in(v, a), self.den.coeff_in(v, b));
        Some((a as i64 - b as i64, c))
    }

    /// Exact limit as `t_{v+1} → 0`, or `None` if it diverges.
    pub fn limit_at_zero(&self, v: usize) -> Option<ParamScalar> {
        match self.lowest_order_in(v) {
            None => Some(ParamScalar::zero()),
            Some((0, c)) => Some(c),
            Some((k, _)) if k > 0 => Some(ParamScalar::zero()),
            Some(_) => None,
        }
    }
}

impl From<Rational> for ParamScalar {
    fn from(q: Rational) -> Self {
        ParamScalar::from_rational(&q)
    }
}

impl Field for ParamScalar {
    fn zero() -> Self {
        ParamScalar { num: Poly::zero(), den: Poly::one() }
    }

    fn one() -> Self {
        ParamScalar { num: Poly::one(), den: Poly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn plus(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return ParamScalar::from_rational(&(a + b));
        }
        if self.den == other.den {
            return ParamScalar::new(&self.num + &other.num, self.den.clone());
        }
        let g = Poly::gcd(&self.den, &other.den);
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = other.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d) + &(&other.num * &b);
        ParamScalar::new(num, &(&b * &d) * &g)
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn times(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return ParamScalar::zero();
        }
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return ParamScalar::from_rational(&(a * b));
        }
        let g1 = Poly::gcd(&self.num, &other.den);
        let g2 = Poly::gcd(&other.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = other.den.div_exact(&g1).expect("gcd divides");
        let c = other.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        let (mut num, mut den) = (&a * &c, &b * &d);
        if den.leading_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        ParamScalar { num, den }
    }

    fn negated(&self) -> Self {
        ParamScalar { num: -&self.num, den: self.den.clone() }
    }

    fn inverse(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero");
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading_coeff().is_negative() {
            num = -&num;
            den = -&den;
        }
        ParamScalar { num, den }
    }

    fn from_rational(q: &Rational) -> Self {
        ParamScalar { num: Poly::constant(q.numer().clone()), den: Poly::constant(q.denom().clone()) }
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn scale_by(&self, q: &Rational) -> Self {
        self.scale_rational(q)
    }

    fn solve_system(a: &Matrix<Self>, b: &[Self]) -> Option<Vec<Self>> {
        super::fraction_free::solve_linear_param(a, b)
    }
}

fn needs_parens(p: &Poly) -> bool {
    !p.is_constant() || p.leading_coeff().is_negative()
}

/// Canonical text form, e.g. `0`, `1/2`, `(4*t1*t2)/(t1+t2)`.
impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.is_constant() {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if needs_parens(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl ParamScalar {
    /// Rational multiple without a polynomial gcd.
    pub fn scale_rational(&self, q: &Rational) -> ParamScalar {
        if q.is_zero() || self.num.is_zero() {
            return ParamScalar::zero();
        }
        let num = self.num.scale(q.numer());
        let den = self.den.scale(q.denom());
        let g = num.content().gcd(&den.content());
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_integer(&g), den.div_integer(&g)) };
        ParamScalar { num, den }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rational_frac, rational_int};
    use proptest::prelude::*;

    fn t1() -> ParamScalar {
        ParamScalar::var(0)
    }
    fn t2() -> ParamScalar {
        ParamScalar::var(1)
    }

    fn simple() -> ParamScalar {
        t1().times(&t2()).divide(&t1().plus(&t2()))
    }

    #[test]
    fn eval_examples() {
        assert_eq!(simple().eval(&[rational_int(1), rational_int(1)]).unwrap(), rational_frac(1, 2));
        assert_eq!(ParamScalar::zero().eval(&[rational_int(3)]).unwrap(), rational_int(0));
        assert_eq!(simple().eval(&[rational_int(1), rational_int(-1)]), Err(Error::PoleAtPoint));
    }

    #[test]
    fn display_forms() {
        assert_eq!(simple().scale_rational(&rational_int(4)).to_string(), "(4*t1*t2)/(t1+t2)");
        assert_eq!(ParamScalar::from_rational(&rational_frac(-1, 2)).to_string(), "-1/2");
        assert_eq!(ParamScalar::zero().to_string(), "0");
        let x = t1().plus(&t2()).scale_rational(&rational_frac(1, 2));
        assert_eq!(x.to_string(), "(t1+t2)/2");
        assert_eq!(t1().negated().divide(&t2().negated()).to_string(), "(t1)/(t2)");
    }

    #[test]
    fn cancellation() {
        let s = t1().plus(&t2());
        let x = s.times(&s).divide(&s.scale_rational(&rational_int(2)));
        assert_eq!(x, s.scale_rational(&rational_frac(1, 2)));
        assert_eq!(x.times(&x.inverse()), ParamScalar::one());
    }

    #[test]
    fn limits() {
        let f = simple();
        assert_eq!(f.limit_at_zero(1), Some(ParamScalar::zero()));
        let g = t1().divide(&t1().plus(&t2()));
        assert_eq!(g.limit_at_zero(1), Some(ParamScalar::one()));
        assert_eq!(ParamScalar::one().divide(&t1()).limit_at_zero(0), None);
    }

    fn arb_scalar() -> impl Strategy<Value = ParamScalar> {
        let poly = proptest::collection::vec((0u32..3, 0u32..3, -3i64..=3), 1..4).prop_map(|ts| {
            let mut p = ParamScalar::zero();
            for (a, b, k) in ts {
                let m = t1().pow_u(a).times(&t2().pow_u(b)).scale_rational(&rational_int(k));
                p = p.plus(&m);
            }
            p
        });
        (poly.clone(), poly).prop_map(|(a, b)| if b.is_zero() { a } else { a.divide(&b) })
    }

    impl ParamScalar {
        fn pow_u(&self, k: u32) -> ParamScalar {
            (0..k).fold(ParamScalar::one(), |acc, _| acc.times(self))
        }
    }

    proptest! {
        #[test]
        fn field_axioms_and_eval(f in arb_scalar(), g in arb_scalar(), x in 1i64..5, y in 1i64..5) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = f.divide(&g);
            prop_assert_eq!(fg.times(&g.divide(&f)), ParamScalar::one());
            let pt = [rational_int(x), rational_frac(y, 3)];
            if let (Ok(a), Ok(b)) = (f.eval(&pt), g.eval(&pt)) {
                if let Ok(s) = f.plus(&g).eval(&pt) {
                    prop_assert_eq!(s, &a + &b);
                }
                if let Ok(p) = f.times(&g).eval(&pt) {
                    prop_assert_eq!(p, &a * &b);
                }
            }
            prop_assert_eq!(f.plus(&g).minus(&g), f.clone());
            prop_assert_eq!(f.times(&g).times(&g.inverse()), f);
        }
    }
}
