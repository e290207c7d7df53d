//! Cyclic factors of x^12 - 1 over Z_25 and an antidiagonal AA^t.

use mpc_hull::code::{self, DistanceCaps, LinearCode};
use mpc_hull::matrix::Matrix;
use mpc_hull::mpc::MatrixProductSpec;
use mpc_hull::ring::Ring;

const FACTORS: &[(&str, &[i64])] = &[
    ("x+1", &[1, 1]),
    ("x-1", &[-1, 1]),
    ("x+7", &[7, 1]),
    ("x-7", &[-7, 1]),
    ("x^2+x+1", &[1, 1, 1]),
    ("x^2+7x-1", &[-1, 7, 1]),
    ("x^2-7x-1", &[-1, -7, 1]),
    ("x^2-x+1", &[1, -1, 1]),
];

fn main() -> mpc_hull::error::Result<()> {
    let z25 = Ring::new(25)?;
    let caps = DistanceCaps::default();
    let a = Matrix::from_rows(z25, &[[1, 7], [7, 1]])?;
    print!("A A^t:\n{}", a.gram());

    let mut lcd: Vec<(&str, LinearCode)> = Vec::new();
    for &(name, f) in FACTORS {
        let c = code::cyclic_code(z25, 12, f)?;
        let free_test = code::is_lcd_free_test(c.generator_matrix())?;
        println!("<{name}>: rank {:?}, GG^t test {free_test}", c.free_rank());
        if free_test {
            lcd.push((name, c));
        }
    }

    for (name, c) in lcd {
        let d = c.min_distance(caps)?.expect("nonzero code");
        let spec = MatrixProductSpec::new(vec![c.clone(), c.clone()], a.clone())?;
        let mpc = spec.build();
        let report = spec.conditions()?;
        println!(
            "<{name}>: ({}, {}, {d}); [C C]A: ({}, {}, {}), lcd {}, conditions 4/7 {} {}",
            c.len(),
            c.cardinality_string(),
            mpc.len(),
            mpc.cardinality_string(),
            mpc.min_distance(caps)?.expect("nonzero code"),
            report.mpc_lcd,
            report.aat_adiag_palindrome,
            report.equal_codes_nonsingular
        );
    }
    Ok(())
}
