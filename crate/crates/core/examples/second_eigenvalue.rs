//! Laws of the second-largest soft-edge eigenvalue and the second-smallest
//! hard-edge eigenvalue, next to the extreme ones, with their moments.

use rmtdpp::rmtstats::{EdgeStats, EnsembleEdge};

fn main() -> rmtdpp::Result<()> {
    let soft = EdgeStats::new(EnsembleEdge::Soft);
    println!("soft edge: densities of lambda_1 and lambda_2");
    for i in 0..=6 {
        let s = -5.0 + i as f64;
        println!("  s={s:>5.1}  {:.10e}  {:.10e}", soft.extreme_pdf(s)?, soft.second_pdf(s)?);
    }

    for edge in [EnsembleEdge::Soft, EnsembleEdge::Hard { alpha: 0 }, EnsembleEdge::Hard { alpha: 1 }, EnsembleEdge::Hard { alpha: 2 }] {
        let st = EdgeStats::new(edge);
        let (a, b) = (st.extreme_moments()?, st.second_moments()?);
        println!("\n{}", edge.label());
        println!("  first : {:>12.6} {:>12.6} {:>12.6} {:>12.6}", a.mean, a.variance, a.skewness, a.excess_kurtosis);
        println!("  second: {:>12.6} {:>12.6} {:>12.6} {:>12.6}", b.mean, b.variance, b.skewness, b.excess_kurtosis);
    }
    Ok(())
}
