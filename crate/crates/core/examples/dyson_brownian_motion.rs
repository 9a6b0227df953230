//! Largest eigenvalue of a stationary GUE diffusion, rescaled at the soft
//! edge; for large N it approaches the Airy process.

use rmtdpp::airyproc::simulate_dbm;
use rmtdpp::samplers::Rng;

fn main() -> rmtdpp::Result<()> {
    let times: Vec<f64> = (0..=10).map(|i| 0.5 * i as f64).collect();
    for run in 0..3 {
        let p = simulate_dbm(100, &times, &mut Rng::with_stream(3, run))?;
        let v: Vec<String> = p.values.iter().map(|x| format!("{x:6.3}")).collect();
        println!("run {run}: {}", v.join(" "));
    }

    let runs = 200;
    let mut rng = Rng::new(4);
    let xs: Vec<f64> = (0..runs).map(|_| simulate_dbm(100, &[0.0], &mut rng).map(|p| p.values[0])).collect::<Result<_, _>>()?;
    let mean = xs.iter().sum::<f64>() / runs as f64;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (runs - 1) as f64;
    println!("\nN=100, {runs} runs: mean {mean:.3}, variance {var:.3} (Tracy-Widom: -1.771, 0.813)");
    Ok(())
}
