//! Height jump identity `h(t) = Σ t_i μ_i − μ(t)` for a Jordan mixed
//! extension, with `μ(t)` compared against `τ̃` of the pulled-back integral
//! extension.

use heightlab::biext::{jump_identity_check, jump_identity_symbolic, mu_coordinates, pullback_test_curve, tau_tilde};
use heightlab::exact::{format_rational, rational_int};
use heightlab::families::jordan_integral_extension;

fn main() -> heightlab::Result<()> {
    let x = jordan_integral_extension(&[0, 1, 3], &[2, 0, -1], &[1, 0, -2])?;
    let mu: Vec<String> = mu_coordinates(&x)?.iter().map(format_rational).collect();
    println!("mu_i = ({})", mu.join(", "));
    let sym = jump_identity_symbolic(&x, &[0, 1, 2])?;
    println!("h(t) = {}\nmu(t) = {}\nidentity holds symbolically: {}", sym.h, sym.mu, sym.holds);
    for t in [[1, 1, 1], [2, 0, 5], [0, 0, 3], [4, 1, 2]] {
        let t: Vec<_> = t.iter().map(|&v| rational_int(v)).collect();
        let rep = jump_identity_check(&x, &t)?;
        let tau = tau_tilde(&pullback_test_curve(&x, &t)?)?;
        println!(
            "t = {:?}: h = {}, mu = {}, sum t_i mu_i = {}, tau~ = {}, holds: {}",
            t.iter().map(format_rational).collect::<Vec<_>>(),
            format_rational(&rep.h),
            format_rational(&rep.mu),
            format_rational(&rep.sum_t_mu),
            format_rational(&tau),
            rep.holds
        );
    }
    Ok(())
}
