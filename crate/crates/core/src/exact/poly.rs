use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Monomial `∏ t_{v+1}^{e}` stored sparsely as `(v, e)` pairs with `v`
/// increasing and `e > 0`.
///
/// Ordered graded-lexicographically with `t1 > t2 > …`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, &e)| (v, e)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// `t_{v+1}^e`.
    pub fn from_exponents_at(v: usize, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut d = 0;
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                d = other.0[j].1;
                j += 1;
            }
            if d > e {
                return None;
            }
            if e > d {
                out.push((v, e - d));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(v, e)| {
                    let f = other.exponent(v);
                    (f > 0).then_some((v, e.min(f)))
                })
                .collect(),
        )
    }

    fn without(&self, v: usize) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let (mut i, mut j) = (0, 0);
            loop {
                match (a.get(i), b.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va < vb {
                            return Ordering::Greater;
                        }
                        if vb < va {
                            return Ordering::Less;
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial with integer coefficients in `t1, t2, …`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn from_i64(c: i64) -> Self {
        Poly::constant(c.into())
    }

    /// The variable `t_{v+1}`.
    pub fn var(v: usize) -> Self {
        Poly::term(Monomial::var(v), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.leading_term().map_or_else(BigInt::zero, |(_, c)| c.clone())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn vars(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0)
    }

    /// Coefficient of `t_v^k`, as a polynomial in the other variables.
    pub fn coeff_in(&self, v: usize, k: u32) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                terms.insert(m.without(v), c.clone());
            }
        }
        Poly { terms }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect() }
    }

    /// Divides every coefficient by `c`; panics unless exact.
    pub fn div_integer(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    let (q, r) = x.div_rem(c);
                    assert!(r.is_zero(), "inexact integer division");
                    (m.clone(), q)
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.gcd(m))
    }

    /// `self / other` when the division is exact over ℤ.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if let Some(c) = other.constant_value() {
            return self.terms.values().all(|x| x.is_multiple_of(&c)).then(|| self.div_integer(&c));
        }
        let (lm, lc) = other.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (om, oc) in &other.terms {
                rem.add_term(om.mul(&qm), -(oc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Normalizes the sign so the leading coefficient is positive.
    pub fn with_positive_lead(self) -> Poly {
        if self.leading_coeff().is_negative() {
            -&self
        } else {
            self
        }
    }

    /// Greatest common divisor over ℤ[t], integer content included, with
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.clone().with_positive_lead();
        }
        if b.is_zero() {
            return a.clone().with_positive_lead();
        }
        if a == b || a == &-b {
            return a.clone().with_positive_lead();
        }
        if a.num_terms() == 1 || b.num_terms() == 1 {
            let m = a.monomial_content().gcd(&b.monomial_content());
            return Poly::term(m, a.content().gcd(&b.content()));
        }
        // Pull out common monomial factors first.
        let ma = a.monomial_content();
        let mb = b.monomial_content();
        if !ma.is_one() || !mb.is_one() {
            let g = ma.gcd(&mb);
            let a2 = a.div_monomial(&ma);
            let b2 = b.div_monomial(&mb);
            return Poly::gcd(&a2, &b2).mul_term(&g, &BigInt::one());
        }
        let mut va = a.vars();
        let vb = b.vars();
        let Some(&v) = va.iter().chain(vb.iter()).min() else {
            return Poly::constant(a.content().gcd(&b.content()));
        };
        va.retain(|&x| x == v);
        let a_has = !va.is_empty();
        let b_has = vb.contains(&v);
        if !a_has {
            return Poly::gcd(a, &b.content_in(v));
        }
        if !b_has {
            return Poly::gcd(&a.content_in(v), b);
        }
        if a.div_exact(b).is_some() {
            return b.clone().with_positive_lead();
        }
        if b.div_exact(a).is_some() {
            return a.clone().with_positive_lead();
        }
        let ca = a.content_in(v);
        let cb = b.content_in(v);
        let c = Poly::gcd(&ca, &cb);
        let mut p = a.div_exact(&ca).expect("content divides");
        let mut q = b.div_exact(&cb).expect("content divides");
        if p.degree_in(v) < q.degree_in(v) {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_zero() {
            if q.degree_in(v) == 0 {
                return c;
            }
            let r = p.pseudo_rem(&q, v);
            p = q;
            q = if r.is_zero() { r } else { r.primitive_in(v) };
        }
        let g = p.primitive_in(v);
        (&c * &g).with_positive_lead()
    }

    fn div_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(k, c)| (k.div(m).expect("monomial divides"), c.clone())).collect() }
    }

    /// Gcd of the coefficients with respect to `t_v`.
    pub fn content_in(&self, v: usize) -> Poly {
        let d = self.degree_in(v);
        let mut g = Poly::zero();
        for k in (0..=d).rev() {
            let c = self.coeff_in(v, k);
            if c.is_zero() {
                continue;
            }
            g = Poly::gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, v: usize) -> Poly {
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides")
    }

    /// Pseudo-remainder of `self` by `other` as polynomials in `t_v`.
    fn pseudo_rem(&self, other: &Poly, v: usize) -> Poly {
        let n = other.degree_in(v);
        let lc = other.coeff_in(v, n);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= n {
            let d = r.degree_in(v);
            let lr = r.coeff_in(v, d);
            let shift = Poly::term(Monomial::from_exponents_at(v, d - n), BigInt::one());
            r = &(&r * &lc) - &(&(&lr * &shift) * other);
        }
        r
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = Rational::from_integer(c.clone());
            for &(v, e) in &m.0 {
                assert!(v < point.len(), "evaluation point has too few coordinates");
                t *= num_traits::pow(point[v].clone(), e as usize);
            }
            acc += t;
        }
        acc
    }

    /// Replaces `t_{v+1}` by `values[v]`.
    pub fn substitute(&self, values: &[Poly]) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for &(v, e) in &m.0 {
                assert!(v < values.len(), "substitution has too few values");
                t = &t * &values[v].pow(e);
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "t{}", v + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Terms in decreasing graded-lex order, e.g. `t1^2-3*t1*t2+2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(v: usize) -> Poly {
        Poly::var(v)
    }

    fn c(x: i64) -> Poly {
        Poly::from_i64(x)
    }

    #[test]
    fn ordering_is_graded_lex() {
        let t1 = Monomial::var(0);
        let t2 = Monomial::var(1);
        assert!(t1 > t2);
        assert!(t2.mul(&t2) > t1);
        assert!(t1.mul(&t1) > t1.mul(&t2));
        assert!(t1.mul(&t2) > t2.mul(&t2));
    }

    #[test]
    fn display() {
        let p = &(&t(0) * &t(0)) - &(&c(3) * &(&t(0) * &t(1)));
        let p = &p + &c(2);
        assert_eq!(p.to_string(), "t1^2-3*t1*t2+2");
        assert_eq!((&-&t(1) + &t(0)).to_string(), "t1-t2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn gcd_examples() {
        let s = &t(0) + &t(1);
        let a = &(&s * &s) * &t(0);
        let b = &(&s * &t(1)) * &c(6);
        assert_eq!(Poly::gcd(&a, &b), s);
        let x = &(&t(0) * &t(0)) - &c(1);
        let y = &(&t(0) * &t(0)) + &(&c(2) * &t(0));
        let y = &y + &c(1);
        assert_eq!(Poly::gcd(&x, &y), &t(0) + &c(1));
        assert_eq!(Poly::gcd(&c(4), &c(6)), c(2));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((0u32..3, 0u32..3, 0u32..2, -4i64..=4), 1..5).prop_map(|ts| {
            let mut p = Poly::zero();
            for (a, b, d, k) in ts {
                p.add_term(Monomial::from_exponents(&[a, b, d]), k.into());
            }
            p
        })
    }

    proptest! {
        #[test]
        fn gcd_divides_and_recovers_common_factor(a in arb_poly(), b in arb_poly(), g in arb_poly()) {
            prop_assume!(!g.is_zero() && !a.is_zero() && !b.is_zero());
            let ag = &a * &g;
            let bg = &b * &g;
            let h = Poly::gcd(&ag, &bg);
            prop_assert!(ag.div_exact(&h).is_some());
            prop_assert!(bg.div_exact(&h).is_some());
            prop_assert!(h.div_exact(&g).is_some());
        }

        #[test]
        fn exact_division_roundtrip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let p = &a * &b;
            prop_assert_eq!(p.div_exact(&b), Some(a));
        }
    }
}
