//! Symbolic height pairing on the r-fold Jordan system, on the open cone and
//! on every boundary stratum.
//!
//! Usage: `cargo run --example jordan_height -- 0,1,4 2,-1,0`

use heightlab::families::{jordan_classes, jordan_rep};
use heightlab::heights::height_pairing_symbolic;

fn ints(arg: Option<String>, default: &[i64]) -> Vec<i64> {
    arg.map(|s| s.split(',').map(|x| x.trim().parse().expect("integer list")).collect()).unwrap_or_else(|| default.to_vec())
}

fn main() -> heightlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let a = ints(args.next(), &[0, 1, 4]);
    let b = ints(args.next(), &[2, -1, 0]);
    assert_eq!(a.len(), b.len(), "a and b need the same length");
    let r = a.len();
    let rep = jordan_rep(r);
    let (alpha, beta) = jordan_classes(&a, &b);
    for mask in (1..1usize << r).rev() {
        let stratum: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
        let report = height_pairing_symbolic(&rep, &alpha, &beta, &stratum)?;
        let names: Vec<String> = stratum.iter().map(|i| format!("t{}", i + 1)).collect();
        let l: Vec<String> = report.l_t.iter().map(ToString::to_string).collect();
        println!("{{{}}}: h = {}   l(t) = ({})", names.join(","), report.value, l.join(", "));
    }
    Ok(())
}
