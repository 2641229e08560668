//! Monodromy weight filtrations of `N(t)` on the cone, and the relative
//! weight filtration of one logarithm with respect to another.

use heightlab::exact::{rational_int, MatrixQ};
use heightlab::filtration::{check_cone_constancy, combine, monodromy_weight_filtration, relative_weight_filtration};

fn report(label: &str, n: &MatrixQ, w: &heightlab::filtration::Filtration) -> heightlab::Result<()> {
    match relative_weight_filtration(n, w)? {
        Some(m) => println!("{label}: M(N1, W(N2)) graded dims = {:?}", m.graded_dims()),
        None => println!("{label}: M(N1, W(N2)) does not exist"),
    }
    Ok(())
}

fn main() -> heightlab::Result<()> {
    // Two commuting logs on a 3-dimensional space: N₁ a full Jordan block, N₂ = N₁².
    let n1 = MatrixQ::from_i64(3, 3, &[0, 0, 0, 1, 0, 0, 0, 1, 0]);
    let n2 = n1.mul(&n1);
    let ns = [n1.clone(), n2.clone()];
    for t in [[1, 0], [0, 1], [1, 1], [3, 2]] {
        let t: Vec<_> = t.iter().map(|&v| rational_int(v)).collect();
        let w = monodromy_weight_filtration(&combine(&ns, &t), 0)?;
        println!("t = ({}, {}): graded dims of W(N(t)) = {:?}", t[0], t[1], w.graded_dims());
    }
    let samples: Vec<Vec<_>> = [[1, 1], [1, 5], [7, 2]].iter().map(|t| t.iter().map(|&v| rational_int(v)).collect()).collect();
    println!("W(N(t)) constant on the open cone (sampled): {}", check_cone_constancy(&ns, &samples)?);
    report("N1 = J3, N2 = J3^2", &n1, &monodromy_weight_filtration(&n2, 0)?)?;
    // Two Jordan blocks acting on complementary planes.
    let a = MatrixQ::from_i64(4, 4, &[0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    let b = MatrixQ::from_i64(4, 4, &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]);
    report("N1 = J2 + 0, N2 = 0 + J2", &a, &monodromy_weight_filtration(&b, 0)?)?;
    Ok(())
}
