//! DR paths of an Aztec diamond tiling: all n paths from a full sample, and
//! the top path alone from the partial sampler, which only observes the
//! dominoes the path can continue through.

use std::time::Instant;

use rmtdpp::aztec::{classify_and_extract_paths, sample_tiling, AztecKernel, SegmentKind};
use rmtdpp::samplers::Rng;

fn heights(kinds: &[SegmentKind]) -> String {
    let mut h = 0i32;
    kinds
        .iter()
        .map(|k| {
            match k {
                SegmentKind::Rise => h += 1,
                SegmentKind::Fall => h -= 1,
                SegmentKind::Flat => {}
            }
            h.to_string()
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> rmtdpp::Result<()> {
    let mut rng = Rng::new(11);
    let tiling = sample_tiling(8, &mut rng)?;
    for (k, p) in classify_and_extract_paths(&tiling)?.iter().enumerate() {
        println!("path {k}: heights {}", heights(&p.kinds()));
    }

    for n in [8, 16, 32] {
        let t = Instant::now();
        let kernel = AztecKernel::new(n)?;
        let built = t.elapsed();
        let t = Instant::now();
        let top = kernel.sample_top_dr_path(&mut rng)?;
        println!(
            "n={n:>2}: kernel {built:.2?}, top path {:.2?}, {} segments, max height {}",
            t.elapsed(),
            top.segments.len(),
            top.segments.iter().map(|s| s.end[1]).fold(f64::MIN, f64::max)
        );
    }
    Ok(())
}
