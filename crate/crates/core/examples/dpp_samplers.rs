//! The discrete samplers side by side on small kernels: the sequential
//! sampler for any marginal kernel, the Hermitian spectral sampler and the
//! projection sampler. Empirical inclusion probabilities are compared with
//! the diagonal of K.

use rmtdpp::numlin::{DenseMatrix, Lu};
use rmtdpp::samplers::{sample_general, sample_hermitian, sample_nonherm_proj, Rng};

fn inclusion(n: usize, draws: usize, mut draw: impl FnMut() -> Vec<usize>) -> Vec<f64> {
    let mut hits = vec![0usize; n];
    for _ in 0..draws {
        for i in draw() {
            hits[i] += 1;
        }
    }
    hits.into_iter().map(|h| h as f64 / draws as f64).collect()
}

fn main() -> rmtdpp::Result<()> {
    // K = L (I + L)^-1 for a symmetric positive L
    let l = DenseMatrix::from_rows(&[
        vec![2.0, 0.5, 0.1, 0.0],
        vec![0.5, 1.0, 0.3, 0.2],
        vec![0.1, 0.3, 1.5, 0.4],
        vec![0.0, 0.2, 0.4, 0.8],
    ]);
    let k = l.matmul(&Lu::factor(&DenseMatrix::identity(4).add(&l)?).inverse()?)?;
    let diag: Vec<f64> = (0..4).map(|i| k[(i, i)]).collect();
    let mut rng = Rng::new(2024);
    let draws = 20_000;

    println!("K_ii                   {diag:.4?}");
    let seq = inclusion(4, draws, || sample_general(&k, &mut rng, None).unwrap());
    println!("sequential sampler     {seq:.4?}");
    let reversed = inclusion(4, draws, || sample_general(&k, &mut rng, Some(&[3, 2, 1, 0])).unwrap());
    println!("  reversed order       {reversed:.4?}");
    let spectral = inclusion(4, draws, || sample_hermitian(&k, &mut rng).unwrap());
    println!("spectral sampler       {spectral:.4?}");

    // a rank-2 non-symmetric projection: every sample has exactly 2 points
    let p = DenseMatrix::from_rows(&[
        vec![1.0, 0.0, 0.5, 0.0],
        vec![0.0, 1.0, 0.0, 0.5],
        vec![0.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 0.0, 0.0],
    ]);
    let sizes: Vec<usize> = (0..10).map(|_| sample_nonherm_proj(&p, &mut rng).unwrap().len()).collect();
    println!("projection sample sizes {sizes:?}");
    Ok(())
}
