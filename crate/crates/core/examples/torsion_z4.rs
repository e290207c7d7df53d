//! Torsion codes of a free LCD code over Z_4, and binary LCD codes built
//! from them.

use mpc_hull::code::{DistanceCaps, LinearCode};
use mpc_hull::linalg;
use mpc_hull::matrix::Matrix;
use mpc_hull::oracle;
use mpc_hull::ring::Ring;
use mpc_hull::torsion::{self, TorsionVariant};

fn main() -> mpc_hull::error::Result<()> {
    let z4 = Ring::new(4)?;
    let f2 = Ring::new(2)?;
    let c = LinearCode::from_generators(
        z4,
        8,
        &[
            [1, 0, 0, 0, 0, 1, 2, 1],
            [0, 1, 0, 0, 1, 2, 3, 1],
            [0, 0, 1, 0, 0, 0, 3, 2],
            [0, 0, 0, 1, 2, 3, 1, 1],
        ],
    )?;
    println!("det(GG^t) = {}", linalg::det(&c.generator_matrix().gram())?.value());

    let family = torsion::torsion_family(&c)?;
    for (i, t) in family.members().iter().enumerate() {
        print!("T_{i}(C):\n{t}");
    }
    let t = &family.members()[0];
    let d = oracle::brute_min_distance(f2, 8, &t.generators(), oracle::DEFAULT_CAP)?;
    println!("T_0 = T_1: {}, d(T) = {d:?}, lcd {}", family.members()[0] == family.members()[1], t.is_lcd());

    let nonsingular: Vec<Matrix> = oracle::all_vectors(f2, 4)
        .map(|v| Matrix::from_residue_rows(f2, 2, &[v[..2].to_vec(), v[2..].to_vec()]).expect("2x2"))
        .filter(|a| linalg::is_nonsingular(a).expect("square"))
        .collect();
    for a in &nonsingular {
        let out = torsion::torsion_lcd_mpc(&c, &[1, 1], a, TorsionVariant::Repeated, DistanceCaps::default())?;
        let rows: Vec<String> = a.row_vecs().iter().map(|r| format!("{r:?}")).collect();
        println!(
            "A = {}: ({}, {}, {}) lcd {}",
            rows.join(""),
            out.code.len(),
            out.code.cardinality_string(),
            out.code.min_distance(DistanceCaps::default())?.expect("nonzero"),
            out.code.is_lcd()
        );
    }
    Ok(())
}
