//! Built-in example families and random generators.

use rand::Rng;

use crate::biext::{make_mixed_extension, MixedExtension, Ring};
use crate::ceresa::CeresaModel;
use crate::exact::{Field, MatrixQ, Rational};
use crate::heights::apply_polarization;
use crate::koszul::{Cochain, MonodromyRep};
use crate::Result;

fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `Q(u, v) = 1` on `ℚ² = ⟨u, v⟩`.
pub fn symplectic_plane() -> MatrixQ {
    MatrixQ::from_i64(2, 2, &[0, 1, -1, 0])
}

/// `r` copies of the Jordan block `u ↦ v ↦ 0`, weight −1, polarized.
pub fn jordan_rep(r: usize) -> MonodromyRep {
    MonodromyRep::new(2, vec![MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]); r])
        .and_then(|rep| rep.with_weight(-1).with_polarization(symplectic_plane()))
        .expect("Jordan family is a valid rep")
}

/// `α_i = a_i v` on the Jordan rep and `β_i = b_i u*` on its dual.
pub fn jordan_classes(a: &[i64], b: &[i64]) -> (Cochain<Rational>, Cochain<Rational>) {
    assert_eq!(a.len(), b.len(), "a and b have one entry per variable");
    let r = a.len();
    let alpha = Cochain::from_components(1, r, a.iter().map(|&x| vec![rat(0), rat(x)]).collect());
    let beta = Cochain::from_components(1, r, b.iter().map(|&x| vec![rat(x), rat(0)]).collect());
    (alpha.expect("shape"), beta.expect("shape"))
}

pub fn jordan_extension(a: &[i64], b: &[i64], gamma: &[Rational]) -> Result<MixedExtension> {
    let (alpha, beta) = jordan_classes(a, b);
    make_mixed_extension(&jordan_rep(a.len()), &alpha, &beta, gamma, Ring::Rational)
}

/// Jordan extension with integral blocks, tagged as an integral variation.
pub fn jordan_integral_extension(a: &[i64], b: &[i64], gamma: &[i64]) -> Result<MixedExtension> {
    let (alpha, beta) = jordan_classes(a, b);
    let gamma: Vec<Rational> = gamma.iter().map(|&g| rat(g)).collect();
    make_mixed_extension(&jordan_rep(a.len()), &alpha, &beta, &gamma, Ring::Integer)
}

/// Mixed extension over `V^∨` glued from `(c·a_q sing, sing)` with `γ = 0`,
/// where `c = g − 1` clears the denominator of `q`. Its height is
/// `c · h_q(sing, sing)`.
pub fn ceresa_extension(model: &CeresaModel, h: usize, ring: Ring) -> Result<MixedExtension> {
    let rep = model.bounding_pair_rep(h)?;
    let s = model.sing_class(h)?;
    let c = rat(model.genus() as i64 - 1);
    let alpha = apply_polarization(rep.polarization().expect("polarized"), &s).scale(&c);
    make_mixed_extension(&rep.dual(), &alpha, &s, &[rat(0), rat(0)], ring)
}

/// The class `(0, x) ∈ B¹` of `x ∈ N·V` for a two-variable rep with `N₁ = N₂`.
pub fn second_slot_class(x: Vec<Rational>) -> Cochain<Rational> {
    let n = x.len();
    Cochain::from_components(1, 2, vec![vec![rat(0); n], x]).expect("shape")
}

/// Unimodular `L·U` with small entries.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize) -> MatrixQ {
    let l = MatrixQ::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => rat(1),
        std::cmp::Ordering::Greater => rat(rng.gen_range(-1..=1)),
        std::cmp::Ordering::Less => rat(0),
    });
    let u = MatrixQ::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => rat(1),
        std::cmp::Ordering::Less => rat(rng.gen_range(-1..=1)),
        std::cmp::Ordering::Greater => rat(0),
    });
    l.mul(&u)
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Rational> {
    (0..n).map(|_| rat(rng.gen_range(-bound..=bound))).collect()
}

/// Positive rational with small numerator and denominator.
pub fn random_positive<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(1..=9).into(), rng.gen_range(1..=4).into())
}

/// A weight −1 rep with `N₁ = N₂ = N`, `N² = 0`, polarized by a random
/// symplectic form: `N₀ = [[0,0],[A,0]]` against the standard form with `A`
/// symmetric, conjugated by a random unimodular matrix.
pub fn random_equal_log_rep<R: Rng>(rng: &mut R, half: usize) -> MonodromyRep {
    let n = 2 * half;
    let mut a = MatrixQ::zeros(half, half);
    for i in 0..half {
        for j in i..half {
            let v = rat(rng.gen_range(-3..=3));
            a[(i, j)] = v.clone();
            a[(j, i)] = v;
        }
    }
    let q0 = MatrixQ::from_fn(n, n, |i, j| {
        if i < half && j == i + half {
            rat(1)
        } else if i >= half && j + half == i {
            rat(-1)
        } else {
            rat(0)
        }
    });
    let n0 = MatrixQ::from_fn(n, n, |i, j| if i >= half && j < half { a[(i - half, j)].clone() } else { rat(0) });
    let p = random_unimodular(rng, n);
    let pinv = p.inverse().expect("unimodular");
    let q = p.transpose().mul(&q0).mul(&p);
    let nn = pinv.mul(&n0).mul(&p);
    MonodromyRep::new(n, vec![nn.clone(), nn])
        .and_then(|rep| rep.with_weight(-1).with_polarization(q))
        .expect("conjugated rep is valid")
}

/// Random commuting nilpotent logarithms of rank `n` in `r` variables: each
/// block carries polynomials without constant term in one random nilpotent,
/// and the whole is conjugated by a random unimodular matrix.
///
/// Coefficient signs are chosen so that no cancellation occurs in `N(t)` for
/// `t` in the open cone; the weight filtration of `N(t)` is constant there.
pub fn random_commuting_rep<R: Rng>(rng: &mut R, n: usize, r: usize) -> MonodromyRep {
    let split = if n >= 2 && rng.gen_bool(0.5) { rng.gen_range(1..n) } else { n };
    let sizes: Vec<usize> = if split == n { vec![n] } else { vec![split, n - split] };
    let mut logs = vec![MatrixQ::zeros(n, n); r];
    let mut offset = 0;
    for &m in &sizes {
        let base = MatrixQ::from_fn(m, m, |i, j| if i > j { rat(rng.gen_range(-2..=2)) } else { rat(0) });
        for log in logs.iter_mut() {
            let mut blk = MatrixQ::zeros(m, m);
            let mut pw = base.clone();
            let lead = rng.gen_range(0..=2);
            let low = if lead == 0 { 0 } else { -1 };
            for k in 1..m.max(2) {
                let c = if k == 1 { lead } else { rng.gen_range(low..=2) };
                blk = blk.plus(&pw.scale(&rat(c)));
                pw = pw.mul(&base);
            }
            for i in 0..m {
                for j in 0..m {
                    log[(offset + i, offset + j)] = blk[(i, j)].clone();
                }
            }
        }
        offset += m;
    }
    let p = random_unimodular(rng, n);
    let pinv = p.inverse().expect("unimodular");
    let logs = logs.iter().map(|x| p.mul(x).mul(&pinv)).collect();
    MonodromyRep::new(n, logs).expect("commuting nilpotents")
}

/// Random element of `B^p` as a combination of its canonical basis.
pub fn random_element<R: Rng>(rng: &mut R, basis: &[Vec<Rational>], ambient: usize) -> Vec<Rational> {
    let mut v = vec![rat(0); ambient];
    for b in basis {
        let c = rat(rng.gen_range(-3..=3));
        if Field::is_zero(&c) {
            continue;
        }
        for (x, y) in v.iter_mut().zip(b) {
            *x += &c * y;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heights::is_infinitesimal_isometry;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for half in 1..=3 {
            let rep = random_equal_log_rep(&mut rng, half);
            let n = &rep.logs()[0];
            assert!(n.mul(n).is_zero());
            let q = rep.polarization().unwrap();
            assert!(is_infinitesimal_isometry(&rep, q));
            assert_eq!(q.transpose(), q.negated());
            assert_eq!(q.rank(), 2 * half);
        }
        for n in 1..=6 {
            for r in 1..=3 {
                let rep = random_commuting_rep(&mut rng, n, r);
                assert_eq!((rep.rank(), rep.r()), (n, r));
                let samples: Vec<Vec<Rational>> = (0..4).map(|_| (0..r).map(|_| random_positive(&mut rng)).collect()).collect();
                assert!(crate::filtration::check_cone_constancy(rep.logs(), &samples).unwrap());
            }
        }
        let u = random_unimodular(&mut rng, 4);
        assert!(u.is_integral() && u.inverse().unwrap().is_integral());
    }

    #[test]
    fn jordan_extension_is_gluable() {
        let x = jordan_extension(&[0, 1, 4], &[2, -1, 0], &[rat(0), rat(1), rat(0)]).unwrap();
        assert_eq!(x.r(), 3);
    }
}
