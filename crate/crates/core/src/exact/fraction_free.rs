use super::field::Field;
use super::matrix::Matrix;
use super::param::ParamScalar;
use super::poly::Poly;

fn lcm(a: &Poly, b: &Poly) -> Poly {
    let g = Poly::gcd(a, b);
    (a * &b.div_exact(&g).expect("gcd divides")).with_positive_lead()
}

fn make_primitive(row: &mut [Poly]) {
    let mut g = Poly::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = Poly::gcd(&g, x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = x.div_exact(&g).expect("row content divides");
    }
}

fn size(p: &Poly) -> (usize, u32) {
    (p.num_terms(), p.total_degree())
}

/// Solves `Ax = b` over ℚ(t) by fraction-free elimination on the
/// polynomial matrix obtained by clearing denominators row by row.
///
/// Each eliminated row is divided by the gcd of its entries, which keeps
/// entry degrees bounded by those of the input on the structured systems
/// met downstream. Returns the canonical solution (free variables zero).
pub fn solve_linear_param(a: &Matrix<ParamScalar>, b: &[ParamScalar]) -> Option<Vec<ParamScalar>> {
    let (m, n) = (a.rows(), a.cols());
    assert_eq!(b.len(), m, "right-hand side length mismatch");
    let mut rows: Vec<Vec<Poly>> = (0..m)
        .map(|i| {
            let entries: Vec<&ParamScalar> = a.row(i).iter().chain(std::iter::once(&b[i])).collect();
            let mut l = Poly::one();
            for e in &entries {
                if !e.denominator().is_one() {
                    l = lcm(&l, e.denominator());
                }
            }
            let mut row: Vec<Poly> = entries
                .iter()
                .map(|e| {
                    if e.is_zero() {
                        Poly::zero()
                    } else {
                        e.numerator() * &l.div_exact(e.denominator()).expect("lcm divides")
                    }
                })
                .collect();
            make_primitive(&mut row);
            row
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).filter(|&i| !rows[i][c].is_zero()).min_by_key(|&i| size(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let (head, tail) = rows.split_at_mut(r + 1);
        let prow = &head[r];
        let pv = &prow[c];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let g = Poly::gcd(pv, &row[c]);
            let fp = pv.div_exact(&g).expect("gcd divides");
            let fr = row[c].div_exact(&g).expect("gcd divides");
            for j in c..=n {
                let x = &(&row[j] * &fp) - &(&prow[j] * &fr);
                row[j] = x;
            }
            make_primitive(row);
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }

    let mut x = vec![ParamScalar::zero(); n];
    for (i, &c) in pivots.iter().enumerate().rev() {
        let mut acc = ParamScalar::from_poly(rows[i][n].clone());
        for &cj in &pivots[i + 1..] {
            if !rows[i][cj].is_zero() && !x[cj].is_zero() {
                acc = acc.minus(&ParamScalar::from_poly(rows[i][cj].clone()).times(&x[cj]));
            }
        }
        x[c] = acc.divide(&ParamScalar::from_poly(rows[i][c].clone()));
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rational_frac, rational_int, Rational};
    use proptest::prelude::*;

    fn t(v: usize) -> ParamScalar {
        ParamScalar::var(v)
    }

    #[test]
    fn jordan_solve_over_function_field() {
        // N(t) = (t1+t2) [[0,0],[1,0]], α(t) = t2 v.
        let s = t(0).plus(&t(1));
        let z = ParamScalar::zero();
        let a = Matrix::from_rows(2, vec![vec![z.clone(), z.clone()], vec![s, z.clone()]]);
        let x = solve_linear_param(&a, &[z.clone(), t(1)]).unwrap();
        assert_eq!(x[0], t(1).divide(&t(0).plus(&t(1))));
        assert!(x[1].is_zero());
        assert!(solve_linear_param(&a, &[t(0), z]).is_none());
    }

    #[test]
    fn agrees_with_field_elimination_on_constants() {
        let a = Matrix::from_rows(
            2,
            vec![
                vec![rational_int(2), rational_int(1)],
                vec![rational_int(4), rational_int(2)],
                vec![rational_int(0), rational_frac(1, 3)],
            ],
        );
        let b = vec![rational_int(1), rational_int(2), rational_int(5)];
        let xq = a.solve_gauss(&b).unwrap();
        let ap: Matrix<ParamScalar> = Matrix::from_rational(&a);
        let bp: Vec<ParamScalar> = b.iter().map(ParamScalar::from_rational).collect();
        let xp = solve_linear_param(&ap, &bp).unwrap();
        let xp: Vec<Rational> = xp.iter().map(|v| v.as_rational().unwrap()).collect();
        assert_eq!(xp, xq);
    }

    proptest! {
        #[test]
        fn solution_satisfies_system(
            entries in proptest::collection::vec((-2i64..=2, -2i64..=2, -2i64..=2), 9),
            rows in 1usize..4, cols in 1usize..4,
            x0 in proptest::collection::vec(-3i64..=3, 3),
        ) {
            let a = Matrix::from_fn(rows, cols, |i, j| {
                let (c, d, e) = entries[i * 3 + j];
                t(0).scale_by(&rational_int(c)).plus(&t(1).scale_by(&rational_int(d))).plus(&ParamScalar::from_int(e))
            });
            let x: Vec<ParamScalar> = x0[..cols].iter().map(|&v| ParamScalar::from_int(v)).collect();
            let b = a.mul_vec(&x);
            let sol = solve_linear_param(&a, &b).unwrap();
            prop_assert_eq!(a.mul_vec(&sol), b.clone());
            // Canonical: agrees with plain elimination over the function field.
            prop_assert_eq!(sol, a.solve_gauss(&b).unwrap());
        }
    }
}
