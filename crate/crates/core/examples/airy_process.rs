//! Airy process samples from the discretized extended Airy kernel, and the
//! two-time distribution function from the block Fredholm determinant.
//!
//! The grid is coarse (60 cells on [-5, 2.5]); with the default 150 cells
//! and hundreds of times a single sample takes hours.

use rmtdpp::airyproc::{build_block_kernel, sample_airy_path, two_time_prob, MultitimeGrid};
use rmtdpp::samplers::Rng;

fn main() -> rmtdpp::Result<()> {
    let grid = MultitimeGrid::uniform(0.0, 0.25, 9, 60)?;
    let kernel = build_block_kernel(&grid);
    for sample in 0..3 {
        let path = sample_airy_path(&kernel, &mut Rng::with_stream(5, sample))?;
        let values: Vec<String> = path.values.iter().map(|v| format!("{v:6.3}")).collect();
        println!("sample {sample}: {}", values.join(" "));
    }

    println!("\nP(A(0) <= -1, A(t) <= -1)");
    for t in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0] {
        println!("  t={t:>4}: {:.10}", two_time_prob(t, -1.0, -1.0, 24)?);
    }
    Ok(())
}
