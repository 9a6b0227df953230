//! Pinning points of a continuous DPP: the conditional kernel K^(s) is the
//! Schur complement of K with respect to the pinned points, and the
//! determinant factorizes as K(s,s) * det K^(s).

use rmtdpp::kernels::{airy_kernel, condition_on, Kernel};
use rmtdpp::numlin::lu_det;

fn main() -> rmtdpp::Result<()> {
    let k = airy_kernel();
    let pin = -1.0;
    let pinned = condition_on(&k, &[pin])?;

    let xs = [-2.5, -1.7, 0.4];
    let mut with_pin = xs.to_vec();
    with_pin.push(pin);
    let lhs = lu_det(&k.matrix(&with_pin, &with_pin))?;
    let rhs = k.diag(pin) * lu_det(&pinned.matrix(&xs, &xs))?;
    println!("det K on {with_pin:?} = {lhs:.15e}");
    println!("K(s,s) det K^(s)        = {rhs:.15e}");

    // the pinned kernel vanishes on the pin
    println!("K^(s)(s, 0.3) = {:.3e}", pinned.eval(pin, 0.3));
    println!("K^(s)(x, x) next to the pin:");
    for h in [1.0, 0.5, 0.1, 0.01] {
        println!("  x = s + {h:<5} {:.6e}", pinned.diag(pin + h));
    }
    Ok(())
}
