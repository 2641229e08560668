//! Ceresa height for every bounding-pair stratum up to a given genus.
//!
//! Usage: `cargo run --example ceresa_height -- [max_genus]`

use heightlab::ceresa::{build_ceresa, closed_form};

fn main() -> heightlab::Result<()> {
    let max_g: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for g in 3..=max_g {
        let start = std::time::Instant::now();
        let model = build_ceresa(g)?;
        for h in 1..=g / 2 {
            let report = model.height_symbolic(h, &[0, 1])?;
            let ok = report.value == closed_form(g, h);
            println!("g={g} h={h} dim V={} h(t)={} matches closed form: {ok}", model.dim_v(), report.value);
        }
        eprintln!("g={g}: {:.2?}", start.elapsed());
    }
    Ok(())
}
