use mpc_hull::code::LinearCode;
use mpc_hull::matrix::Matrix;
use mpc_hull::mpc::MatrixProductSpec;
use mpc_hull::oracle::{self, CodewordSet, DEFAULT_CAP};
use mpc_hull::ring::Ring;
use mpc_hull::torsion;

fn z(m: u64) -> Ring {
    Ring::new(m).unwrap()
}

fn set(c: &LinearCode) -> CodewordSet {
    oracle::brute_span(c.ring(), c.len(), &c.generators(), DEFAULT_CAP).unwrap()
}

fn vectors(rows: &[[u64; 2]]) -> CodewordSet {
    rows.iter().map(|r| r.to_vec()).collect()
}

#[test]
fn dual_of_15z30_squared() {
    let r = z(30);
    let c1 = LinearCode::from_generators(r, 2, &[[15, 0], [0, 15]]).unwrap();
    let dual = oracle::brute_dual(r, 2, &c1.generators(), DEFAULT_CAP).unwrap();
    let expected = LinearCode::from_generators(r, 2, &[[2, 0], [0, 2]]).unwrap();
    assert_eq!(dual, set(&expected));
    assert_eq!(set(&c1.dual()), dual);
    assert_eq!(set(&c1).len(), 4);
    assert!(oracle::brute_hull(r, 2, &c1.generators(), DEFAULT_CAP).unwrap().len() == 1);
}

#[test]
fn kernel_of_15_15_over_z30() {
    let r = z(30);
    let m = Matrix::from_rows(r, &[[15, 15]]).unwrap();
    let k = mpc_hull::linalg::right_kernel(&m);
    let expected: CodewordSet = oracle::all_vectors(r, 2)
        .filter(|y| (15 * y[0] + 15 * y[1]) % 30 == 0)
        .collect();
    assert_eq!(oracle::brute_span(r, 2, &k.row_vecs(), DEFAULT_CAP).unwrap(), expected);
}

#[test]
fn span_of_dependent_rows_over_z6() {
    let r = z(6);
    let c = LinearCode::from_generators(r, 2, &[[2, 4], [4, 8]]).unwrap();
    assert_eq!(set(&c), vectors(&[[0, 0], [2, 4], [4, 2]]));
}

#[test]
fn z4_code_distance() {
    let r = z(4);
    let g = [
        [1, 0, 0, 0, 0, 1, 2, 1],
        [0, 1, 0, 0, 1, 2, 3, 1],
        [0, 0, 1, 0, 0, 0, 3, 2],
        [0, 0, 0, 1, 2, 3, 1, 1],
    ];
    let c = LinearCode::from_generators(r, 8, &g).unwrap();
    assert_eq!(oracle::brute_min_distance(r, 8, &c.generators(), DEFAULT_CAP).unwrap(), Some(2));
    assert_eq!(set(&c).len(), 256);
    assert_eq!(c.cardinality_string(), "4^4");
}

#[test]
fn self_dual_hull_over_z2() {
    let r = z(2);
    let c = LinearCode::from_generators(r, 2, &[[1, 1]]).unwrap();
    let hull = oracle::brute_hull(r, 2, &c.generators(), DEFAULT_CAP).unwrap();
    assert_eq!(hull, set(&c));
    assert_eq!(set(&c.hull()), hull);
}

#[test]
fn quotient_over_z4() {
    let r = z(4);
    let c = LinearCode::from_generators(r, 2, &[[2, 2]]).unwrap();
    let brute = oracle::brute_quotient(r, 2, &c.generators(), 1, DEFAULT_CAP).unwrap();
    let expected: CodewordSet = oracle::all_vectors(r, 2).filter(|x| (x[0] + x[1]) % 2 == 0).collect();
    assert_eq!(brute, expected);
    let q = torsion::quotient_by_gamma_power(&c, 1).unwrap();
    assert_eq!(set(&q), expected);
    assert_eq!(q, LinearCode::from_generators(r, 2, &[[1, 1], [2, 0]]).unwrap());
    assert_eq!(torsion::quotient_by_gamma_power(&c, 0).unwrap(), c);
}

#[test]
fn mpc_build_matches_enumeration() {
    type Case = (u64, [[i64; 2]; 2], Vec<[i64; 2]>, Vec<[i64; 2]>);
    let cases: [Case; 3] = [
        (30, [[1, 7], [7, 1]], vec![[15, 0], [0, 15]], vec![[10, 0], [0, 10]]),
        (4, [[1, 1], [1, 3]], vec![[1, 1]], vec![[1, 3]]),
        (6, [[1, 1], [0, 1]], vec![[2, 4]], vec![[3, 3], [0, 2]]),
    ];
    for (m, a, g1, g2) in cases {
        let r = z(m);
        let a = Matrix::from_rows(r, &a).unwrap();
        let c1 = LinearCode::from_generators(r, 2, &g1).unwrap();
        let c2 = LinearCode::from_generators(r, 2, &g2).unwrap();
        let spec = MatrixProductSpec::new(vec![c1.clone(), c2.clone()], a.clone()).unwrap();
        let built = spec.build();
        let brute = oracle::brute_mpc(&[set(&c1), set(&c2)], &a, 2, DEFAULT_CAP).unwrap();
        assert_eq!(set(&built), brute, "Z_{m}");
        let dual = oracle::brute_dual(r, 4, &built.generators(), DEFAULT_CAP).unwrap();
        assert_eq!(set(&built.dual()), dual, "Z_{m}");
        assert_eq!(set(&spec.hull().unwrap().0), set(&built.hull()), "Z_{m}");
    }
}

#[test]
fn oracle_refuses_oversized_enumeration() {
    let r = z(25);
    let gens: Vec<Vec<u64>> = (0..5).map(|i| (0..5).map(|j| u64::from(i == j)).collect()).collect();
    assert!(oracle::brute_span(r, 5, &gens, 1000).is_err());
    assert!(oracle::brute_span(r, 5, &gens[..2], 1000).is_ok());
}
