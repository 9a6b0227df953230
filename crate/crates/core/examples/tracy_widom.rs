//! Tracy-Widom law of the largest soft-edge eigenvalue: CDF and PDF from
//! Fredholm determinants of the Airy kernel, the convergence of the PDF in
//! the quadrature order, and the first four moments.
//!
//! ```bash
//! cargo run --release --example tracy_widom
//! ```

use rmtdpp::rmtstats::{EdgeStats, EnsembleEdge};

fn main() -> rmtdpp::Result<()> {
    let tw = EdgeStats::new(EnsembleEdge::Soft);

    println!("{:>6} {:>22} {:>22}", "s", "F2(s)", "f2(s)");
    for i in 0..=8 {
        let s = -5.0 + i as f64;
        println!("{s:>6.1} {:>22.15e} {:>22.15e}", tw.extreme_cdf(s)?, tw.extreme_pdf(s)?);
    }

    // relative error of f2 against a high-order reference
    println!("\norder  max relative error on [-4, 0]");
    for m in [5, 10, 15, 20, 30] {
        let mut worst: f64 = 0.0;
        for i in 0..=8 {
            let s = -4.0 + 0.5 * i as f64;
            let reference = tw.extreme_pdf_with_order(s, 80)?;
            worst = worst.max(((tw.extreme_pdf_with_order(s, m)? - reference) / reference).abs());
        }
        println!("{m:>5}  {worst:.3e}");
    }

    let m = tw.extreme_moments()?;
    println!("\nmean {:.12}  variance {:.12}", m.mean, m.variance);
    println!("skewness {:.12}  excess kurtosis {:.12}", m.skewness, m.excess_kurtosis);
    Ok(())
}
