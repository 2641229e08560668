//! Cohomology of the Koszul complex against intersection cohomology computed
//! by the partial Koszul complex.

use heightlab::ceresa::build_ceresa;
use heightlab::families::jordan_rep;
use heightlab::koszul::{build_complexes, Which};

fn main() -> heightlab::Result<()> {
    for r in 1..=4 {
        let c = build_complexes(&jordan_rep(r));
        let dims: Vec<String> = (0..=r)
            .map(|p| format!("p={p}: H={} IH={}", c.cohomology(Which::K, p).dim(), c.cohomology(Which::B, p).dim()))
            .collect();
        println!("jordan r={r}: {}", dims.join("; "));
    }
    let model = build_ceresa(3)?;
    let rep = model.bounding_pair_rep(1)?;
    let c = build_complexes(&rep);
    println!(
        "ceresa g=3 h=1: dim V = {}, rank N = {}, dim IH1 = {}, IH1 -> H1 injective: {}",
        model.dim_v(),
        rep.logs()[0].rank(),
        c.cohomology(Which::B, 1).dim(),
        c.ih_to_h_injective(1)
    );
    Ok(())
}
