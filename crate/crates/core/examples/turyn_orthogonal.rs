//! Hull bound for a matrix whose top rows are orthogonal to the rest.

use mpc_hull::code::LinearCode;
use mpc_hull::linalg;
use mpc_hull::matrix::Matrix;
use mpc_hull::mpc::MatrixProductSpec;
use mpc_hull::ring::Ring;

fn main() -> mpc_hull::error::Result<()> {
    let f2 = Ring::new(2)?;
    let t = Matrix::from_rows(f2, &[[1, 0, 1], [0, 1, 1], [1, 1, 1]])?;
    let (top, rest) = linalg::partition_blocks(&t, 2)?.expect("rows 1, 2 orthogonal to row 3");
    print!("top block:\n{top}rest:\n{rest}");

    let repetition = LinearCode::from_generators(f2, 3, &[[1, 1, 1]])?;
    let parity = LinearCode::from_generators(f2, 3, &[[1, 1, 0], [0, 1, 1]])?;
    let point = LinearCode::from_generators(f2, 3, &[[1, 0, 0]])?;
    for (n1, c1) in [("rep", &repetition), ("parity", &parity), ("point", &point)] {
        for (n2, c2) in [("rep", &repetition), ("parity", &parity), ("point", &point)] {
            let spec = MatrixProductSpec::new(vec![c1.clone(), c1.clone(), c2.clone()], t.clone())?;
            println!(
                "[{n1} {n1} {n2}]T: bound {}, inputs lcd {} {}, mpc lcd {}",
                spec.orth_hull_bound(2, c1, c2)?,
                c1.is_lcd(),
                c2.is_lcd(),
                spec.build().is_lcd()
            );
        }
    }
    Ok(())
}
