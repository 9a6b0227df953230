//! A uniformly random domino tiling of the Aztec diamond of order 12,
//! printed with one letter per cell (N, S, E, W). The frozen corners are
//! visible even at this size.

use std::collections::HashMap;

use rmtdpp::aztec::{sample_tiling, Orientation};
use rmtdpp::samplers::Rng;

fn main() -> rmtdpp::Result<()> {
    let n = 12i64;
    let mut rng = Rng::new(7);
    let tiling = sample_tiling(n as usize, &mut rng)?;
    let mut letter = HashMap::new();
    for d in &tiling.dominoes {
        let c = format!("{:?}", d.label);
        letter.insert((d.x, d.y), c.clone());
        match d.orientation {
            Orientation::Horizontal => letter.insert((d.x + 1, d.y), c),
            Orientation::Vertical => letter.insert((d.x, d.y + 1), c),
        };
    }
    for y in (-n..n).rev() {
        let row: String = (-n..n).map(|x| letter.get(&(x, y)).map_or(" ", |s| s.as_str()).to_string()).collect();
        println!("{row}");
    }
    println!("{} dominoes", tiling.dominoes.len());
    Ok(())
}
