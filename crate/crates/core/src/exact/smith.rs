use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::MatrixQ;
use super::rational::Rational;

/// `U·A·V = D` with `U`, `V` unimodular and `D` diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: MatrixQ,
    pub d: MatrixQ,
    pub v: MatrixQ,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].numer().clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

type IMat = Vec<Vec<BigInt>>;

fn ident(n: usize) -> IMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn to_q(m: &IMat, cols: usize) -> MatrixQ {
    MatrixQ::from_rows(
        cols,
        m.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect(),
    )
}

fn row_op(m: &mut IMat, target: usize, src: usize, c: &BigInt) {
    let (t, s) = if target < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t.iter_mut().zip(s) {
        *x -= c * y;
    }
}

fn col_op(m: &mut IMat, target: usize, src: usize, c: &BigInt) {
    for row in m.iter_mut() {
        let y = row[src].clone();
        row[target] -= c * y;
    }
}

fn swap_cols(m: &mut IMat, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// Smith normal form of an integer matrix (given with integral rational
/// entries). Panics on non-integral input.
pub fn smith_normal_form(a: &MatrixQ) -> SmithForm {
    assert!(a.is_integral(), "smith_normal_form needs an integer matrix");
    let (m, n) = (a.rows(), a.cols());
    let mut d: IMat = a.to_rows().into_iter().map(|r| r.into_iter().map(|x| x.to_integer()).collect()).collect();
    let mut u = ident(m);
    let mut v = ident(n);

    for k in 0..m.min(n) {
        // Bring the smallest nonzero entry of the trailing block to (k, k).
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in k..m {
                for j in k..n {
                    if !d[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v, m, n);
            };
            d.swap(k, pi);
            u.swap(k, pi);
            swap_cols(&mut d, k, pj);
            swap_cols(&mut v, k, pj);

            let mut clean = true;
            for i in k + 1..m {
                if d[i][k].is_zero() {
                    continue;
                }
                let q = d[i][k].div_floor(&d[k][k]);
                row_op(&mut d, i, k, &q);
                row_op(&mut u, i, k, &q);
                clean &= d[i][k].is_zero();
            }
            for j in k + 1..n {
                if d[k][j].is_zero() {
                    continue;
                }
                let q = d[k][j].div_floor(&d[k][k]);
                col_op(&mut d, j, k, &q);
                col_op(&mut v, j, k, &q);
                clean &= d[k][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            let bad = (k + 1..m).flat_map(|i| (k + 1..n).map(move |j| (i, j))).find(|&(i, j)| {
                !d[i][j].is_multiple_of(&d[k][k])
            });
            match bad {
                Some((i, _)) => {
                    let neg = -BigInt::one();
                    row_op(&mut d, k, i, &neg);
                    row_op(&mut u, k, i, &neg);
                }
                None => break,
            }
        }
        if d[k][k].is_negative() {
            for x in d[k].iter_mut() {
                *x = -x.clone();
            }
            for x in u[k].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    finish(d, u, v, m, n)
}

fn finish(d: IMat, u: IMat, v: IMat, m: usize, n: usize) -> SmithForm {
    SmithForm { u: to_q(&u, m), d: to_q(&d, n), v: to_q(&v, n) }
}
