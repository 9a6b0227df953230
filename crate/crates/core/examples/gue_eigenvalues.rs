//! GUE eigenvalues as a continuous DPP: the Hermite kernel is discretized
//! on midpoint cells and sampled exactly. The histogram of many samples
//! follows the one-point density K(x, x).

use rmtdpp::kernels::hermite_kernel;
use rmtdpp::samplers::{sample_discretized, Rng};

fn main() -> rmtdpp::Result<()> {
    let n = 6;
    let k = hermite_kernel(n);
    let mut rng = Rng::new(9);
    let draws = 2000;
    let (lo, hi, bins) = (-5.0, 5.0, 20);
    let width = (hi - lo) / bins as f64;
    let mut hist = vec![0usize; bins];
    for _ in 0..draws {
        for x in sample_discretized(k.as_ref(), -12.0, 12.0, 240, &mut rng)? {
            if (lo..hi).contains(&x) {
                hist[((x - lo) / width) as usize] += 1;
            }
        }
    }
    println!("{:>6} {:>10} {:>10}", "x", "empirical", "K(x,x)");
    for (b, &h) in hist.iter().enumerate() {
        let x = lo + (b as f64 + 0.5) * width;
        println!("{x:>6.2} {:>10.4} {:>10.4}", h as f64 / (draws as f64 * width), k.diag(x));
    }
    Ok(())
}
