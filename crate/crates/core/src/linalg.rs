//! Linear algebra over Z/mZ routed through the Howell normal form.
//!
//! Z/mZ has zero divisors, so plain echelon forms do not determine a row
//! span. The Howell form does: pivots are normalized to divisors of `m`,
//! entries above a pivot are reduced modulo it, and for every pivot `d` the
//! row multiplied by `m/d` lies in the span of the rows below. Two matrices
//! have the same row span iff their Howell forms are identical.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Ring, RingElem};

/// Largest column count accepted by [`is_nsc`].
pub const NSC_MAX_COLS: usize = 16;

/// Canonical generator matrix of a row span.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HowellForm {
    matrix: Matrix,
    pivots: Vec<usize>,
}

impl HowellForm {
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Ascending pivot columns, one per row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Pivot values; each divides the modulus.
    pub fn pivot_values(&self) -> Vec<u64> {
        self.pivots
            .iter()
            .enumerate()
            .map(|(i, &j)| self.matrix.get(i, j))
            .collect()
    }

    /// Reduces `v` against the rows. Returns the remainder and the
    /// coefficients used, or `None` at the first pivot that does not divide.
    ///
    /// Only pivots in columns `< limit` take part.
    fn reduce_prefix(&self, v: &[u64], limit: usize) -> Option<(Vec<u64>, Vec<u64>)> {
        let ring = self.matrix.ring();
        let mut rem = v.to_vec();
        let mut coeffs = vec![0u64; self.pivots.len()];
        for (i, &j) in self.pivots.iter().enumerate() {
            if j >= limit {
                break;
            }
            let d = self.matrix.get(i, j);
            if !rem[j].is_multiple_of(d) {
                return None;
            }
            let q = rem[j] / d;
            if q == 0 {
                continue;
            }
            coeffs[i] = q;
            for (c, r) in rem.iter_mut().enumerate() {
                *r = ring.sub(*r, ring.mul(q, self.matrix.get(i, c)));
            }
        }
        Some((rem, coeffs))
    }

    /// Membership of `v` in the row span.
    pub fn contains(&self, v: &[u64]) -> bool {
        if v.len() != self.matrix.cols() {
            return false;
        }
        match self.reduce_prefix(v, v.len()) {
            Some((rem, _)) => rem.iter().all(|&x| x == 0),
            None => false,
        }
    }
}

/// Howell form of the row span of `m`. Zero rows are dropped.
pub fn howell_form(m: &Matrix) -> HowellForm {
    let (rows, pivots) = howell_rows(m.ring(), m.cols(), m.row_vecs());
    HowellForm {
        matrix: Matrix::from_residue_rows(m.ring(), m.cols(), &rows).expect("row widths agree"),
        pivots,
    }
}

fn axpy(ring: Ring, a: u64, x: &[u64], b: u64, y: &[u64]) -> Vec<u64> {
    x.iter()
        .zip(y)
        .map(|(&xi, &yi)| ring.add(ring.mul(a, xi), ring.mul(b, yi)))
        .collect()
}

fn howell_rows(ring: Ring, cols: usize, mut rows: Vec<Vec<u64>>) -> (Vec<Vec<u64>>, Vec<usize>) {
    let m = ring.modulus();
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..cols {
        let Some(k) = (r..rows.len()).find(|&i| rows[i][j] != 0) else {
            continue;
        };
        rows.swap(r, k);
        // Fold column j of every lower row into row r with unimodular 2x2 steps.
        for i in r + 1..rows.len() {
            let b = rows[i][j];
            if b == 0 {
                continue;
            }
            let a = rows[r][j];
            let eg = (a as i128).extended_gcd(&(b as i128));
            let g = eg.gcd;
            let s = ring.reduce_i128(eg.x);
            let t = ring.reduce_i128(eg.y);
            let bg = ring.reduce_i128(b as i128 / g);
            let neg_ag = ring.reduce_i128(-(a as i128 / g));
            let new_r = axpy(ring, s, &rows[r], t, &rows[i]);
            let new_i = axpy(ring, bg, &rows[r], neg_ag, &rows[i]);
            rows[r] = new_r;
            rows[i] = new_i;
        }
        let a = rows[r][j];
        if a == 0 {
            // Folding can cancel to zero modulo m.
            continue;
        }
        let (u, d) = ring.unit_normalizer(a);
        for x in rows[r].iter_mut() {
            *x = ring.mul(*x, u);
        }
        debug_assert_eq!(rows[r][j], d);
        for i in 0..r {
            let q = rows[i][j] / d;
            if q != 0 {
                let pivot_row = rows[r].clone();
                for (x, &p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = ring.sub(*x, ring.mul(q, p));
                }
            }
        }
        let ann: Vec<u64> = rows[r].iter().map(|&x| ring.mul(x, m / d)).collect();
        if ann.iter().any(|&x| x != 0) {
            rows.push(ann);
        }
        pivots.push(j);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Generators of `{ y : M y^t = 0 }`.
pub fn right_kernel(m: &Matrix) -> Matrix {
    let ring = m.ring();
    let n = m.cols();
    let s = m.rows();
    // Rows (M^t row k | e_k): the span is { (y M^t, y) }.
    let aug = m
        .transpose()
        .hstack(&Matrix::identity(ring, n))
        .expect("heights agree");
    let h = howell_form(&aug);
    let gens: Vec<Vec<u64>> = h
        .pivots
        .iter()
        .enumerate()
        .filter(|(_, &j)| j >= s)
        .map(|(i, _)| h.matrix.row(i)[s..].to_vec())
        .collect();
    Matrix::from_residue_rows(ring, n, &gens).expect("kernel width")
}

/// Generators of `{ x : x M = 0 }`.
pub fn left_kernel(m: &Matrix) -> Matrix {
    right_kernel(&m.transpose())
}

/// Some `x` with `x M = b`, if one exists.
pub fn solve_left(m: &Matrix, b: &[u64]) -> Result<Option<Vec<u64>>> {
    let ring = m.ring();
    let l = m.cols();
    if b.len() != l {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} columns",
            b.len(),
            l
        )));
    }
    let aug = m
        .hstack(&Matrix::identity(ring, m.rows()))
        .expect("heights agree");
    let h = howell_form(&aug);
    let mut target: Vec<u64> = b.iter().map(|&v| ring.reduce(v)).collect();
    target.resize(l + m.rows(), 0);
    let Some((rem, _)) = h.reduce_prefix(&target, l) else {
        return Ok(None);
    };
    if rem[..l].iter().any(|&v| v != 0) {
        return Ok(None);
    }
    let x: Vec<u64> = rem[l..].iter().map(|&v| ring.neg(v)).collect();
    debug_assert_eq!(m.left_apply(&x).unwrap(), target[..l]);
    Ok(Some(x))
}

fn require_square(m: &Matrix) -> Result<()> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(())
}

/// Determinant by fraction-free (Bareiss) elimination over the integers,
/// reduced mod m at the end.
pub fn det(m: &Matrix) -> Result<RingElem> {
    require_square(m)?;
    let ring = m.ring();
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.row(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(ring.elem(0));
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let mut d = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    if negate {
        d = -d;
    }
    let md = BigInt::from(ring.modulus());
    let mut r = d % &md;
    if r.is_negative() {
        r += &md;
    }
    Ok(RingElem::from_parts(r.to_u64().expect("reduced"), ring))
}

pub fn is_nonsingular(m: &Matrix) -> Result<bool> {
    Ok(det(m)?.is_unit())
}

/// True iff the rows are linearly independent: the left kernel is zero.
pub fn is_frr(m: &Matrix) -> bool {
    left_kernel(m).is_zero()
}

/// Some `B` with `M B = I`, built column by column.
pub fn right_inverse(m: &Matrix) -> Option<Matrix> {
    let ring = m.ring();
    let s = m.rows();
    let mt = m.transpose();
    let mut b = Matrix::zeros(ring, m.cols(), s);
    for k in 0..s {
        let mut e = vec![0; s];
        e[k] = 1;
        let col = solve_left(&mt, &e).expect("dimensions agree")?;
        for (i, v) in col.into_iter().enumerate() {
            b.set(i, k, v);
        }
    }
    Some(b)
}

/// Two-sided inverse of a square non-singular matrix.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    require_square(m)?;
    if !is_nonsingular(m)? {
        return Err(Error::Singular);
    }
    Ok(right_inverse(m).expect("non-singular matrices are right-invertible"))
}

/// Non-singular by columns: every `t x t` minor of the top `t` rows is a
/// unit, for `t = 1..=rows`.
pub fn is_nsc(m: &Matrix) -> Result<bool> {
    if m.rows() > m.cols() {
        return Err(Error::Precondition(format!(
            "NSC needs rows <= cols, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    if m.cols() > NSC_MAX_COLS {
        return Err(Error::OutOfRange(format!(
            "{} columns (NSC check is capped at {NSC_MAX_COLS})",
            m.cols()
        )));
    }
    for t in 1..=m.rows() {
        let rows: Vec<usize> = (0..t).collect();
        for cols in (0..m.cols()).combinations(t) {
            if !is_nonsingular(&m.select(&rows, &cols))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Shape of `M M^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AatShape {
    /// `diag(r_1..r_s)` with every `r_i` a unit.
    DiagonalUnits(Vec<u64>),
    /// `adiag(r_1..r_s)`, `r_i` at position `(i, s-i+1)`, every `r_i` a unit.
    AntidiagonalUnits(Vec<u64>),
    Other,
}

pub fn aat_diagonal_units(m: &Matrix) -> Option<Vec<u64>> {
    let g = m.gram();
    let ring = m.ring();
    let s = g.rows();
    let diag: Vec<u64> = (0..s).map(|i| g.get(i, i)).collect();
    let ok = g.is_diagonal() && diag.iter().all(|&r| ring.is_unit(r));
    ok.then_some(diag)
}

pub fn aat_antidiagonal_units(m: &Matrix) -> Option<Vec<u64>> {
    let g = m.gram();
    let ring = m.ring();
    let s = g.rows();
    let off = (0..s).all(|i| (0..s).all(|j| i + j == s - 1 || g.get(i, j) == 0));
    let anti: Vec<u64> = (0..s).map(|i| g.get(i, s - 1 - i)).collect();
    (off && anti.iter().all(|&r| ring.is_unit(r))).then_some(anti)
}

/// Classifies `M M^t`. A 1x1 unit is reported as diagonal.
pub fn aat_classify(m: &Matrix) -> AatShape {
    if let Some(d) = aat_diagonal_units(m) {
        AatShape::DiagonalUnits(d)
    } else if let Some(a) = aat_antidiagonal_units(m) {
        AatShape::AntidiagonalUnits(a)
    } else {
        AatShape::Other
    }
}

/// Splits `M` into its top `s1` rows and the rest, provided every top row
/// is orthogonal to every bottom row.
pub fn partition_blocks(m: &Matrix, s1: usize) -> Result<Option<(Matrix, Matrix)>> {
    let s = m.rows();
    if s1 == 0 || s1 >= s {
        return Err(Error::OutOfRange(format!("s1 = {s1} for {s} rows")));
    }
    let all: Vec<usize> = (0..m.cols()).collect();
    let top = m.select(&(0..s1).collect::<Vec<_>>(), &all);
    let bottom = m.select(&(s1..s).collect::<Vec<_>>(), &all);
    let cross = top.mul(&bottom.transpose())?;
    Ok(cross.is_zero().then_some((top, bottom)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn z(m: u64) -> Ring {
        Ring::new(m).unwrap()
    }

    fn mat<const C: usize>(m: u64, rows: &[[i64; C]]) -> Matrix {
        Matrix::from_rows(z(m), rows).unwrap()
    }

    fn span(m: &Matrix) -> std::collections::BTreeSet<Vec<u64>> {
        oracle::brute_span(m.ring(), m.cols(), &m.row_vecs(), oracle::DEFAULT_CAP).unwrap()
    }

    #[test]
    fn howell_examples() {
        let a = mat(30, &[[15, 0], [0, 15]]);
        let h = howell_form(&a);
        assert_eq!(h.pivots(), &[0, 1]);
        assert_eq!(h.matrix(), &a);
        assert_eq!(span(h.matrix()).len(), 4);

        let b = mat(6, &[[2, 4], [4, 8]]);
        let h = howell_form(&b);
        let expected: std::collections::BTreeSet<Vec<u64>> =
            [vec![0, 0], vec![2, 4], vec![4, 2]].into_iter().collect();
        assert_eq!(span(h.matrix()), expected);
        assert_eq!(span(&b), expected);

        assert!(howell_form(&Matrix::zeros(z(6), 3, 2)).is_empty());
        assert!(howell_form(&Matrix::zeros(z(6), 0, 0)).is_empty());
    }

    #[test]
    fn howell_is_idempotent() {
        let a = mat(12, &[[4, 6, 3], [2, 0, 9], [8, 8, 8]]);
        let h = howell_form(&a);
        assert_eq!(howell_form(h.matrix()), h);
    }

    #[test]
    fn kernel_examples() {
        let m = mat(30, &[[15, 15]]);
        let k = right_kernel(&m);
        let brute: std::collections::BTreeSet<Vec<u64>> = (0..30u64)
            .flat_map(|a| (0..30u64).map(move |b| vec![a, b]))
            .filter(|v| (15 * v[0] + 15 * v[1]) % 30 == 0)
            .collect();
        assert_eq!(span(&k), brute);
        assert_eq!(brute.len(), 450);

        assert!(right_kernel(&Matrix::identity(z(6), 2)).is_zero());
        let k = right_kernel(&mat(4, &[[2]]));
        assert_eq!(howell_form(&k).matrix(), &mat(4, &[[2]]));
    }

    #[test]
    fn solve_examples() {
        let m = mat(30, &[[15, 15]]);
        let x = solve_left(&m, &[15, 15]).unwrap().unwrap();
        assert_eq!(m.left_apply(&x).unwrap(), vec![15, 15]);
        assert_eq!(x, vec![1]);
        assert_eq!(solve_left(&m, &[1, 0]).unwrap(), None);
        // no x in Z_30 gives (15x, 15x) = (1, 0)
        assert!((0..30).all(|x| (15 * x) % 30 != 1));
        let id = Matrix::identity(z(7), 3);
        assert_eq!(solve_left(&id, &[3, 5, 6]).unwrap(), Some(vec![3, 5, 6]));
        assert!(solve_left(&id, &[1]).is_err());
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&mat(30, &[[6, 5], [5, 6]])).unwrap().value(), 11);
        assert_eq!(det(&mat(25, &[[1, 7], [7, 1]])).unwrap().value(), 2);
        assert_eq!(det(&Matrix::identity(z(9), 4)).unwrap().value(), 1);
        assert_eq!(det(&Matrix::zeros(z(9), 0, 0)).unwrap().value(), 1);
        assert!(det(&Matrix::zeros(z(9), 2, 3)).is_err());
        // needs a row swap
        assert_eq!(det(&mat(7, &[[0, 1], [1, 0]])).unwrap().value(), 6);
    }

    #[test]
    fn nonsingularity() {
        assert!(is_nonsingular(&mat(30, &[[6, 5], [5, 6]])).unwrap());
        assert!(is_nonsingular(&mat(25, &[[1, 7], [7, 1]])).unwrap());
        assert!(!is_nonsingular(&mat(4, &[[2, 0], [0, 1]])).unwrap());
        assert!(is_nonsingular(&Matrix::zeros(z(4), 1, 2)).is_err());
    }

    #[test]
    fn frr_and_right_inverse() {
        assert!(is_frr(&Matrix::identity(z(8), 3)));
        assert!(!is_frr(&mat(30, &[[15, 15]])));
        let g = mat(2, &[[1, 0, 1], [0, 1, 1]]);
        assert!(is_frr(&g));
        // exhaustive left kernel over F_2^2: only x = 0 annihilates g
        for x in [[0u64, 1], [1, 0], [1, 1]] {
            assert_ne!(g.left_apply(&x).unwrap(), vec![0, 0, 0]);
        }

        let a = mat(30, &[[6, 5], [5, 6]]);
        let b = right_inverse(&a).unwrap();
        assert_eq!(a.mul(&b).unwrap(), Matrix::identity(z(30), 2));
        // 11^-1 = 11 mod 30, adj(A) = ((6,-5),(-5,6))
        assert_eq!(b, mat(30, &[[66, -55], [-55, 66]]));
        assert_eq!(right_inverse(&mat(30, &[[15, 15]])), None);
        let id = Matrix::identity(z(6), 3);
        assert_eq!(right_inverse(&id), Some(id.clone()));
        let r = right_inverse(&g).unwrap();
        assert_eq!(g.mul(&r).unwrap(), Matrix::identity(z(2), 2));
    }

    #[test]
    fn nsc_examples() {
        assert!(is_nsc(&mat(25, &[[1, 7], [7, 1]])).unwrap());
        assert!(!is_nsc(&mat(2, &[[1, 0], [1, 1]])).unwrap());
        assert!(is_nsc(&mat(2, &[[1, 1], [1, 0]])).unwrap());
        assert!(is_nsc(&mat(2, &[[1, 1], [0, 1]])).unwrap());
        // upper triangular with a full top row can be NSC; lower triangular cannot
        assert!(is_nsc(&mat(3, &[[1, 1, 1], [0, 1, 2], [0, 0, 1]])).unwrap());
        assert!(!is_nsc(&mat(3, &[[1, 0, 0], [1, 1, 0], [1, 2, 1]])).unwrap());
        assert!(is_nsc(&Matrix::zeros(z(2), 2, 1)).is_err());
        assert!(is_nsc(&Matrix::zeros(z(2), 1, 17)).is_err());
    }

    #[test]
    fn aat_shapes() {
        assert_eq!(
            aat_classify(&mat(30, &[[6, 5], [5, 6]])),
            AatShape::DiagonalUnits(vec![1, 1])
        );
        assert_eq!(
            aat_classify(&mat(25, &[[1, 7], [7, 1]])),
            AatShape::AntidiagonalUnits(vec![14, 14])
        );
        let m = mat(4, &[[1, 1], [0, 1]]);
        assert_eq!(m.gram(), mat(4, &[[2, 1], [1, 1]]));
        assert_eq!(aat_classify(&m), AatShape::Other);
    }

    #[test]
    fn partitions() {
        let turyn = mat(2, &[[1, 0, 1], [0, 1, 1], [1, 1, 1]]);
        let (a1, a2) = partition_blocks(&turyn, 2).unwrap().unwrap();
        assert_eq!(a1.rows(), 2);
        assert_eq!(a2, mat(2, &[[1, 1, 1]]));
        assert!(partition_blocks(&Matrix::identity(z(5), 2), 1).unwrap().is_some());
        assert!(partition_blocks(&mat(4, &[[1, 1], [1, 0]]), 1).unwrap().is_none());
        assert!(partition_blocks(&turyn, 0).is_err());
        assert!(partition_blocks(&turyn, 3).is_err());
    }
}
