//! Polarized height of classes `(0, Nh)` for random systems with
//! `N₁ = N₂ = N`, `N² = 0`, against `t₁t₂/(t₁+t₂)·Q(h, Nk)`.

use heightlab::exact::{format_rational, Field, ParamScalar};
use heightlab::families::{random_equal_log_rep, random_vector, second_slot_class};
use heightlab::heights::h_q_symbolic;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> heightlab::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for half in 1..=3 {
        let rep = random_equal_log_rep(&mut rng, half);
        let n = rep.logs()[0].clone();
        let q = rep.polarization().expect("polarized").clone();
        let (h, k) = (random_vector(&mut rng, 2 * half, 2), random_vector(&mut rng, 2 * half, 2));
        let (x, y) = (second_slot_class(n.mul_vec(&h)), second_slot_class(n.mul_vec(&k)));
        let value = h_q_symbolic(&rep, &x, &y, &[0, 1], &q)?.value;
        let nk = n.mul_vec(&k);
        let qhnk = q.mul_vec(&nk).iter().zip(&h).map(|(a, b)| a * b).sum();
        let kernel = ParamScalar::var(0).times(&ParamScalar::var(1)).divide(&ParamScalar::var(0).plus(&ParamScalar::var(1)));
        println!(
            "rank {}: h_Q = {value}   Q(h,Nk) = {}   agrees: {}",
            2 * half,
            format_rational(&qhnk),
            value == kernel.scale_rational(&qhnk)
        );
    }
    Ok(())
}
