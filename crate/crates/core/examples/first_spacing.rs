//! Law of the gap lambda_1 - lambda_2 between the two largest soft-edge
//! eigenvalues.

use rmtdpp::rmtstats::{EdgeStats, EnsembleEdge};

fn main() -> rmtdpp::Result<()> {
    let soft = EdgeStats::new(EnsembleEdge::Soft);
    println!("{:>5} {:>18} {:>18}", "d", "pdf", "cdf");
    for i in 0..=8 {
        let d = 0.5 * i as f64;
        println!("{d:>5.2} {:>18.12} {:>18.12}", soft.spacing_pdf(d)?, soft.spacing_cdf(d)?);
    }
    let m = soft.spacing_moments()?;
    println!("\nmean {:.12} variance {:.12} skewness {:.12} excess kurtosis {:.12}", m.mean, m.variance, m.skewness, m.excess_kurtosis);
    Ok(())
}
