//! Correlation coefficient of the two extreme eigenvalues, from the joint
//! density det(I - K) * K(x1,x1) * K^(x1)(x2,x2) on a 2-D product rule.

use std::time::Instant;

use rmtdpp::rmtstats::{EdgeStats, EnsembleEdge};

fn main() -> rmtdpp::Result<()> {
    for edge in [EnsembleEdge::Soft, EnsembleEdge::Hard { alpha: 0 }, EnsembleEdge::Hard { alpha: 1 }, EnsembleEdge::Hard { alpha: 2 }] {
        let t = Instant::now();
        let (rho, err) = EdgeStats::new(edge).corr_coeff()?;
        println!("{:<16} rho = {rho:.12}  (est. error {err:.1e}, {:.2?})", edge.label(), t.elapsed());
    }

    // a few values of the joint density itself
    let soft = EdgeStats::new(EnsembleEdge::Soft);
    for (x1, x2) in [(-1.0, -2.0), (-1.5, -3.0), (0.0, -1.0)] {
        println!("p(lambda1={x1}, lambda2={x2}) = {:.10e}", soft.joint_pdf(&[x1, x2])?);
    }
    Ok(())
}
