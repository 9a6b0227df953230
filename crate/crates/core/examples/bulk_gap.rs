//! Gap statistics in the bulk (sine kernel): the gap probability E(0; s),
//! its derivative F~(0; s) and the spacing density p(0; s), plus the
//! moments of the spacing law.

use rmtdpp::rmtstats::{bulk_gap_ccdf, bulk_gap_moments, bulk_gap_pdf, bulk_gap_probability};

fn main() -> rmtdpp::Result<()> {
    println!("{:>5} {:>20} {:>20} {:>20}", "s", "E(0;s)", "F~(0;s)", "p(0;s)");
    for i in 0..=10 {
        let s = 0.3 * i as f64;
        println!(
            "{s:>5.2} {:>20.14} {:>20.14} {:>20.14}",
            bulk_gap_probability(s, 40)?,
            bulk_gap_ccdf(s)?,
            bulk_gap_pdf(s)?
        );
    }
    let m = bulk_gap_moments(1e-12)?;
    println!("\nspacing law: mean {:.13} variance {:.13}", m.mean, m.variance);
    println!("skewness {:.13} excess kurtosis {:.13}", m.skewness, m.excess_kurtosis);
    Ok(())
}
