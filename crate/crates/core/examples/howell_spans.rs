//! Canonical spans, kernels and solving over Z_12.

use mpc_hull::linalg;
use mpc_hull::matrix::Matrix;
use mpc_hull::ring::Ring;

fn main() -> mpc_hull::error::Result<()> {
    let z12 = Ring::new(12)?;

    // Two generator sets for the same submodule of Z_12^3.
    let g = Matrix::from_rows(z12, &[[2, 4, 6], [3, 0, 9], [0, 6, 0]])?;
    let h = Matrix::from_rows(z12, &[[5, 4, 3], [0, 6, 0], [4, 8, 0]])?;
    let hg = linalg::howell_form(&g);
    let hh = linalg::howell_form(&h);
    print!("Howell form of G:\n{}", hg.matrix());
    println!("pivot values: {:?}", hg.pivot_values());
    println!("same span as H: {}", hg == hh);

    let k = linalg::right_kernel(&g);
    print!("right kernel of G:\n{k}");
    let gk = g.mul(&k.transpose())?;
    println!("G K^t is zero: {}", gk.is_zero());

    let b = g.left_apply(&[5, 7, 1])?;
    let x = linalg::solve_left(&g, &b)?.expect("b is in the row space");
    println!("x G = {b:?} solved by x = {x:?}");
    println!("(1, 1, 1) reachable: {}", linalg::solve_left(&g, &[1, 1, 1])?.is_some());

    for a in [
        Matrix::from_rows(z12, &[[1, 5], [7, 11]])?,
        Matrix::from_rows(z12, &[[5, 2], [3, 5]])?,
    ] {
        println!(
            "det = {}, non-singular {}, full row rank {}",
            linalg::det(&a)?.value(),
            linalg::is_nonsingular(&a)?,
            linalg::is_frr(&a)
        );
    }
    Ok(())
}
