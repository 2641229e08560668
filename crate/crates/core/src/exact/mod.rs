//! Exact arithmetic and linear algebra over ℚ, ℤ and ℚ(t₁,…,t_r).
//!
//! Nothing in here uses floating point. Matrices are dense; the sizes that show
//! up downstream (a few hundred rows at most) do not warrant anything smarter.

mod field;
mod fraction_free;
mod matrix;
mod param;
mod poly;
mod rational;
mod smith;
mod subspace;

pub use field::Field;
pub use fraction_free::solve_linear_param;
pub use matrix::{ImageSolver, Matrix, MatrixQ};
pub use param::ParamScalar;
pub use poly::{Monomial, Poly};
pub use rational::{format_rational, parse_rational, rational_frac, rational_int, Rational};
pub use smith::{smith_normal_form, SmithForm};
pub use subspace::Subspace;

pub(crate) use rational::frac_part;

/// Canonical basis of `{x : Ax = 0}`.
pub fn kernel_basis(a: &MatrixQ) -> Subspace {
    Subspace::from_vectors(a.cols(), a.kernel())
}

/// Canonical solution of `Ax = b` (free variables set to zero), or `None`
/// when the system is inconsistent.
pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    F::solve_system(a, b)
}

/// Exact evaluation of a rational function at a rational point.
pub fn eval_param(f: &ParamScalar, t: &[Rational]) -> crate::Result<Rational> {
    f.eval(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_basis_examples() {
        assert!(kernel_basis(&MatrixQ::zeros(2, 2)).is_full());
        let k = kernel_basis(&MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]));
        assert_eq!(k.basis(), vec![vec![rational_int(0), rational_int(1)]]);
        assert!(kernel_basis(&MatrixQ::identity(3)).is_zero());
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rational_frac(-3, 2));
        assert_eq!(format_rational(&rational_frac(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rational_int(7)), "7");
        assert!(matches!(parse_rational("1/0"), Err(crate::Error::Parse(_))));
        assert!(parse_rational("x").is_err());
    }
}
