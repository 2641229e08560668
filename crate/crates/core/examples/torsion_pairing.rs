//! Torsion pairing of a one-variable integral system, and `τ̃` of the
//! corresponding restricted mixed extension.

use heightlab::biext::{tau_tilde_matrix, torsion_invariants, torsion_pairing, TorsionValue};
use heightlab::exact::{rational_int, MatrixQ};

fn main() -> heightlab::Result<()> {
    let t = MatrixQ::from_i64(2, 2, &[1, 0, 2, 1]);
    let invariants = torsion_invariants(&t)?;
    println!("T = [[1,0],[2,1]], torsion of H^1: {:?}", invariants.iter().map(ToString::to_string).collect::<Vec<_>>());
    for (a, b) in [([0, 1], [1, 0]), ([0, 2], [1, 0]), ([0, 3], [1, 0])] {
        let alpha: Vec<_> = a.iter().map(|&x| rational_int(x)).collect();
        let beta: Vec<_> = b.iter().map(|&x| rational_int(x)).collect();
        let tau = torsion_pairing(&t, &alpha, &beta)?;
        let block = MatrixQ::from_i64(4, 4, &[1, 0, 0, 0, a[0], 1, 0, 0, a[1], 2, 1, 0, 0, b[0], b[1], 1]);
        let via_block = TorsionValue::new(&tau_tilde_matrix(&block)?);
        println!("alpha = {a:?}, beta = {b:?}: tau = {tau}, tau~ of block matrix = {via_block}");
    }
    Ok(())
}
