use std::fmt::Debug;

use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::rational::Rational;

/// A commutative field with exact arithmetic.
///
/// Method names avoid `add`/`mul` so they never collide with the operator
/// traits that `BigRational` already implements.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics on zero.
    fn inverse(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn divide(&self, other: &Self) -> Self {
        self.times(&other.inverse())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn scale_by(&self, q: &Rational) -> Self {
        self.times(&Self::from_rational(q))
    }

    /// Canonical solution of `Ax = b`; implementations may override the
    /// elimination strategy but must keep the free-variables-zero convention.
    fn solve_system(a: &Matrix<Self>, b: &[Self]) -> Option<Vec<Self>> {
        a.solve_gauss(b)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        self.recip()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn divide(&self, other: &Self) -> Self {
        self / other
    }
}
