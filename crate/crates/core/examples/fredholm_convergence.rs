//! Nystrom discretization of det(I - K) on an interval converges
//! exponentially in the number of Gauss-Legendre nodes for analytic kernels.

use rmtdpp::fredholm::{fredholm_det, IntervalSpec};
use rmtdpp::kernels::{airy_kernel, bessel_kernel, sine_kernel};

fn main() -> rmtdpp::Result<()> {
    let cases = [
        ("Airy on (-2, inf)", airy_kernel(), IntervalSpec::right_infinite(-2.0)),
        ("sine on (0, 2)", sine_kernel(), IntervalSpec::finite(0.0, 2.0)?),
        ("Bessel a=1 on (0, 4)", bessel_kernel(1), IntervalSpec::finite(0.0, 4.0)?),
    ];
    for (name, k, j) in cases {
        let reference = fredholm_det(k.as_ref(), &j, 120)?;
        println!("{name}: det = {reference:.15}");
        for m in [4, 8, 12, 16, 24, 32] {
            let d = fredholm_det(k.as_ref(), &j, m)?;
            println!("  m={m:>3}  error {:.2e}", (d - reference).abs());
        }
    }
    Ok(())
}
