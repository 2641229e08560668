//! Limits of the interior height along rays approaching a boundary stratum,
//! against the stratum's own height.

use heightlab::exact::Poly;
use heightlab::families::{jordan_classes, jordan_rep};
use heightlab::heights::height_pairing_symbolic;

fn main() -> heightlab::Result<()> {
    let (a, b) = ([1, -2, 3], [0, 4, 1]);
    let rep = jordan_rep(3);
    let (alpha, beta) = jordan_classes(&a, &b);
    let interior = height_pairing_symbolic(&rep, &alpha, &beta, &[0, 1, 2])?.value;
    println!("interior: {interior}");
    // t_i = τ_i + s·w_i on the stratum, s·w_i off it, with s the fourth variable.
    let w = [2, 1, 3];
    for stratum in [vec![0, 1], vec![1, 2], vec![0], vec![2], vec![]] {
        let s = Poly::var(3);
        let values: Vec<Poly> = (0..3)
            .map(|i| {
                let ray = &s * &Poly::from_i64(w[i]);
                if stratum.contains(&i) {
                    &Poly::var(i) + &ray
                } else {
                    ray
                }
            })
            .collect();
        let limit = interior.substitute(&values)?.limit_at_zero(3).expect("bounded");
        let own = height_pairing_symbolic(&rep, &alpha, &beta, &stratum)?.value;
        println!("stratum {stratum:?}: limit {limit}, stratum value {own}, equal: {}", limit == own);
    }
    Ok(())
}
