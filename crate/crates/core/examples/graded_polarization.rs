//! The graded form `Q̄_t` on `IH¹` and the Gram matrix of `h_Q(t)`, with
//! their inertia, for the Jordan system and the Ceresa degeneration.

use heightlab::ceresa::build_ceresa;
use heightlab::exact::{format_rational, rational_int, MatrixQ};
use heightlab::families::{jordan_rep, symplectic_plane};
use heightlab::heights::{graded_qbar, h_q_gram, inertia};

fn show(m: &MatrixQ) -> String {
    m.to_rows().iter().map(|r| r.iter().map(format_rational).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" | ")
}

fn main() -> heightlab::Result<()> {
    let t = vec![rational_int(2), rational_int(3), rational_int(1)];
    let rep = jordan_rep(3);
    let q = symplectic_plane();
    let qbar = graded_qbar(&rep, 1, &t, &q)?;
    println!("jordan r=3, t=(2,3,1): Qbar = [{}], PD: {}", show(&qbar.gram), qbar.positive_definite);
    let g = h_q_gram(&rep, &t, &q)?;
    println!("  h_Q Gram = [{}], inertia {:?}", show(&g), inertia(&g));

    let model = build_ceresa(3)?;
    let rep = model.bounding_pair_rep(1)?;
    let t = &t[..2];
    let g = h_q_gram(&rep, t, &model.q)?;
    println!("ceresa g=3 h=1, t=(2,3): h_Q Gram on IH1 has inertia {:?}", inertia(&g));
    println!("  h_Q(sing, sing) = {}", model.height(1, t)?.value);
    Ok(())
}
