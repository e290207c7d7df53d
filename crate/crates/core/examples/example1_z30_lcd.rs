//! LCD matrix-product codes over Z_30 from an orthogonal 2x2 matrix.

use mpc_hull::code::LinearCode;
use mpc_hull::matrix::Matrix;
use mpc_hull::mpc::{self, MatrixProductSpec};
use mpc_hull::ring::Ring;

fn main() -> mpc_hull::error::Result<()> {
    let z30 = Ring::new(30)?;
    let c1 = LinearCode::from_generators(z30, 2, &[[15, 0], [0, 15]])?;
    let c2 = LinearCode::from_generators(z30, 2, &[[10, 0], [0, 10]])?;
    let a = Matrix::from_rows(z30, &[[6, 5], [5, 6]])?;

    print!("C1^perp:\n{}", c1.dual());
    print!("C2^perp:\n{}", c2.dual());
    print!("A A^t:\n{}", a.gram());

    for (n1, x, n2, y) in [("C1", &c1, "C1", &c1), ("C2", &c2, "C2", &c2), ("C1", &c1, "C2", &c2), ("C2", &c2, "C1", &c1)] {
        let spec = MatrixProductSpec::new(vec![x.clone(), y.clone()], a.clone())?;
        let (hull, via) = spec.hull()?;
        let report = spec.conditions()?;
        println!(
            "[{n1} {n2}]A: |C| = {}, lcd = {}, hull {} via {via:?}, condition 3 = {}",
            spec.build().cardinality(),
            report.mpc_lcd,
            if hull.is_zero() { "zero" } else { "nonzero" },
            report.aat_diag
        );
    }

    let swapped = MatrixProductSpec::new(vec![c1.clone(), c2.clone()], a)?.build();
    println!("[C1 C2]A = [C2 C1]: {}", swapped == mpc::direct_sum(&[c2, c1], z30));
    Ok(())
}
