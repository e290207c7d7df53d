//! Torsion codes of codes over chain rings `Z_{p^e}`.
//!
//! `(C : γ^i) = { x : γ^i x ∈ C }` and `T_i(C)` is its image over `F_p`.

use crate::code::{DistanceCaps, LinearCode};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::mpc::{DistanceBounds, MatrixProductSpec};

fn check_index(c: &LinearCode, i: u32) -> Result<u32> {
    let chain = c.ring().chain_or_err()?;
    if i >= chain.e {
        return Err(Error::OutOfRange(format!(
            "torsion index {i} for nilpotency {}",
            chain.e
        )));
    }
    Ok(chain.e)
}

/// `{ x : γ^i x ∈ C }`.
///
/// Left kernel of `[γ^i I_n ; -G]`; a kernel vector `(x | y)` says
/// `γ^i x = y G`, so the projections `x` span the quotient.
pub fn quotient_by_gamma_power(c: &LinearCode, i: u32) -> Result<LinearCode> {
    check_index(c, i)?;
    let ring = c.ring();
    let n = c.len();
    let gamma_i = ring.pow(ring.gamma().expect("chain ring"), i as u64);
    let g = c.generator_matrix();
    let stacked = Matrix::identity(ring, n)
        .scale(gamma_i)
        .vstack(&g.scale(ring.neg(1)))
        .expect("same width");
    let kernel = linalg::left_kernel(&stacked);
    let rows: Vec<Vec<u64>> = kernel.row_vecs().into_iter().map(|r| r[..n].to_vec()).collect();
    LinearCode::from_residue_rows(ring, n, &rows)
}

/// `{ x mod γ : x ∈ C }` over the residue field.
pub fn reduction_code(c: &LinearCode) -> Result<LinearCode> {
    c.ring().chain_or_err()?;
    Ok(LinearCode::from_matrix(&c.generator_matrix().reduce_mod_gamma()?))
}

/// `T_i(C)`.
pub fn torsion_code(c: &LinearCode, i: u32) -> Result<LinearCode> {
    reduction_code(&quotient_by_gamma_power(c, i)?)
}

/// `T_0(C) ⊆ T_1(C) ⊆ ... ⊆ T_{e-1}(C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionFamily {
    source: LinearCode,
    members: Vec<LinearCode>,
}

impl TorsionFamily {
    pub fn source(&self) -> &LinearCode {
        &self.source
    }

    pub fn members(&self) -> &[LinearCode] {
        &self.members
    }

    pub fn get(&self, i: usize) -> Option<&LinearCode> {
        self.members.get(i)
    }
}

pub fn torsion_family(c: &LinearCode) -> Result<TorsionFamily> {
    let e = c.ring().chain_or_err()?.e;
    let members = (0..e).map(|i| torsion_code(c, i)).collect::<Result<Vec<_>>>()?;
    for (i, w) in members.windows(2).enumerate() {
        if !w[1].contains_code(&w[0])? {
            return Err(Error::InvariantViolated(format!(
                "T_{i}(C) is not contained in T_{}(C)",
                i + 1
            )));
        }
    }
    Ok(TorsionFamily {
        source: c.clone(),
        members,
    })
}

/// `T_i(C^⊥) = T_{e-1-i}(C)^⊥`.
pub fn tor_dual_identity_check(c: &LinearCode, i: u32) -> Result<bool> {
    let e = check_index(c, i)?;
    let lhs = torsion_code(&c.dual(), i)?;
    let rhs = torsion_code(c, e - 1 - i)?.dual();
    Ok(lhs == rhs)
}

/// `H(T_i(C)) ⊆ T_{e-1}(H(C))`.
pub fn tor_hull_inclusion_check(c: &LinearCode, i: u32) -> Result<bool> {
    let e = check_index(c, i)?;
    let small = torsion_code(c, i)?.hull();
    let big = torsion_code(&c.hull(), e - 1)?;
    for g in small.generators() {
        if !big.member(&g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shape of the LCD matrix-product construction from torsion codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionVariant {
    /// `A A^t` diagonal with units, any indices.
    Diagonal,
    /// `A A^t` antidiagonal with units, palindromic indices.
    Antidiagonal,
    /// One repeated index.
    Repeated,
    /// Triangular `A`: nondecreasing indices when upper, nonincreasing
    /// when lower.
    Triangular,
}

impl TorsionVariant {
    pub fn from_number(k: u8) -> Result<Self> {
        match k {
            1 => Ok(TorsionVariant::Diagonal),
            2 => Ok(TorsionVariant::Antidiagonal),
            3 => Ok(TorsionVariant::Repeated),
            4 => Ok(TorsionVariant::Triangular),
            _ => Err(Error::OutOfRange(format!("variant {k}"))),
        }
    }

    pub fn number(self) -> u8 {
        match self {
            TorsionVariant::Diagonal => 1,
            TorsionVariant::Antidiagonal => 2,
            TorsionVariant::Repeated => 3,
            TorsionVariant::Triangular => 4,
        }
    }
}

/// What the construction licenses about distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceClaim {
    /// `A` is not NSC.
    None,
    /// Lower bounds on `d` and on the dual distance.
    Bound(DistanceBounds),
    /// The bounds hold with equality.
    Exact(DistanceBounds),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionMpc {
    pub code: LinearCode,
    pub inputs: Vec<LinearCode>,
    pub claim: DistanceClaim,
}

fn nondecreasing(xs: &[u32]) -> bool {
    xs.windows(2).all(|w| w[0] <= w[1])
}

fn nonincreasing(xs: &[u32]) -> bool {
    xs.windows(2).all(|w| w[0] >= w[1])
}

/// `[T_{i_1}(C) .. T_{i_s}(C)] A`, checked to be LCD.
pub fn torsion_lcd_mpc(
    c: &LinearCode,
    indices: &[u32],
    a: &Matrix,
    variant: TorsionVariant,
    caps: DistanceCaps,
) -> Result<TorsionMpc> {
    let ring = c.ring();
    let field = ring.residue_field().ok_or(Error::NotAChainRing(ring.modulus()))?;
    if a.ring() != field {
        return Err(Error::RingMismatch {
            left: a.ring().modulus(),
            right: field.modulus(),
        });
    }
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !linalg::is_nonsingular(a)? {
        return Err(Error::Singular);
    }
    if indices.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{} indices for a {}x{} matrix",
            indices.len(),
            a.rows(),
            a.cols()
        )));
    }
    for &i in indices {
        check_index(c, i)?;
    }
    if !c.is_lcd() {
        return Err(Error::Precondition("input code is not LCD".into()));
    }
    match variant {
        TorsionVariant::Diagonal => {
            if linalg::aat_diagonal_units(a).is_none() {
                return Err(Error::Precondition("A A^t is not diagonal with units".into()));
            }
        }
        TorsionVariant::Antidiagonal => {
            if linalg::aat_antidiagonal_units(a).is_none() {
                return Err(Error::Precondition("A A^t is not antidiagonal with units".into()));
            }
            if !indices.iter().eq(indices.iter().rev()) {
                return Err(Error::Precondition("indices are not palindromic".into()));
            }
        }
        TorsionVariant::Repeated => {
            if indices.windows(2).any(|w| w[0] != w[1]) {
                return Err(Error::Precondition("indices are not all equal".into()));
            }
        }
        TorsionVariant::Triangular => {
            let upper = a.is_upper_triangular() && nondecreasing(indices);
            let lower = a.is_lower_triangular() && nonincreasing(indices);
            if !upper && !lower {
                return Err(Error::Precondition(
                    "need upper triangular A with nondecreasing indices or lower triangular A with nonincreasing indices"
                        .into(),
                ));
            }
        }
    }
    let inputs = indices
        .iter()
        .map(|&i| torsion_code(c, i))
        .collect::<Result<Vec<_>>>()?;
    let spec = MatrixProductSpec::new(inputs.clone(), a.clone())?;
    let code = spec.build();
    if !code.is_lcd() {
        return Err(Error::InvariantViolated(
            "matrix-product of torsion codes is not LCD".into(),
        ));
    }
    let claim = if linalg::is_nsc(a)? {
        let bounds = spec.distance_bounds(caps)?;
        let equality_licensed = match variant {
            TorsionVariant::Diagonal => nonincreasing(indices),
            TorsionVariant::Repeated => true,
            _ => false,
        };
        if equality_licensed && bounds.exact() {
            DistanceClaim::Exact(bounds)
        } else {
            DistanceClaim::Bound(bounds)
        }
    } else {
        DistanceClaim::None
    };
    Ok(TorsionMpc { code, inputs, claim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::MinDistance;
    use crate::oracle::{self, DEFAULT_CAP};
    use crate::ring::Ring;

    fn z(m: u64) -> Ring {
        Ring::new(m).unwrap()
    }

    fn code<const N: usize>(m: u64, rows: &[[i64; N]]) -> LinearCode {
        LinearCode::from_generators(z(m), N, rows).unwrap()
    }

    fn z4_octet() -> LinearCode {
        code(
            4,
            &[
                [1, 0, 0, 0, 0, 1, 2, 1],
                [0, 1, 0, 0, 1, 2, 3, 1],
                [0, 0, 1, 0, 0, 0, 3, 2],
                [0, 0, 0, 1, 2, 3, 1, 1],
            ],
        )
    }

    #[test]
    fn quotient_examples() {
        let c = code(4, &[[2, 2]]);
        let q = quotient_by_gamma_power(&c, 1).unwrap();
        assert_eq!(q, code(4, &[[1, 1], [2, 0]]));
        assert_eq!(quotient_by_gamma_power(&c, 0).unwrap(), c);
        let full = LinearCode::full(z(4), 3);
        assert_eq!(quotient_by_gamma_power(&full, 1).unwrap(), full);
        assert!(quotient_by_gamma_power(&c, 2).is_err());
        assert!(quotient_by_gamma_power(&code(6, &[[1]]), 0).is_err());
    }

    #[test]
    fn quotient_matches_oracle() {
        for (m, gens) in [
            (8u64, vec![vec![2u64, 4, 0], vec![0, 4, 4]]),
            (9, vec![vec![3, 6, 0], vec![1, 3, 0]]),
            (4, vec![vec![2, 0, 2]]),
        ] {
            let ring = z(m);
            let c = LinearCode::from_residue_rows(ring, 3, &gens).unwrap();
            for i in 0..ring.chain().unwrap().e {
                let fast = quotient_by_gamma_power(&c, i).unwrap();
                let brute = oracle::brute_quotient(ring, 3, &gens, i, DEFAULT_CAP).unwrap();
                let span = oracle::brute_span(ring, 3, &fast.generators(), DEFAULT_CAP).unwrap();
                assert_eq!(span, brute, "m = {m}, i = {i}");
            }
        }
    }

    #[test]
    fn reductions_and_torsion() {
        assert!(reduction_code(&code(4, &[[2, 2]])).unwrap().is_zero());
        assert_eq!(
            reduction_code(&LinearCode::full(z(9), 2)).unwrap(),
            LinearCode::full(z(3), 2)
        );
        let c = code(4, &[[2, 0], [0, 2]]);
        let fam = torsion_family(&c).unwrap();
        assert!(fam.members()[0].is_zero());
        assert_eq!(fam.members()[1], LinearCode::full(z(2), 2));
        assert_eq!(torsion_code(&LinearCode::full(z(9), 2), 0).unwrap(), LinearCode::full(z(3), 2));
    }

    #[test]
    fn octet_torsion_codes() {
        let c = z4_octet();
        assert!(c.is_lcd());
        let fam = torsion_family(&c).unwrap();
        let bar = code(
            2,
            &[
                [1, 0, 0, 0, 0, 1, 0, 1],
                [0, 1, 0, 0, 1, 0, 1, 1],
                [0, 0, 1, 0, 0, 0, 1, 0],
                [0, 0, 0, 1, 0, 1, 1, 1],
            ],
        );
        assert_eq!(fam.members(), &[bar.clone(), bar.clone()]);
        assert_eq!(bar.min_distance(DistanceCaps::default()).unwrap(), Some(MinDistance::Exact(2)));
        assert!(bar.is_lcd());
        for i in 0..2 {
            assert!(tor_dual_identity_check(&c, i).unwrap());
            assert!(tor_hull_inclusion_check(&c, i).unwrap());
        }
    }

    #[test]
    fn octet_repeated_variant() {
        let c = z4_octet();
        let a = Matrix::from_rows(z(2), &[[1, 1], [0, 1]]).unwrap();
        let out = torsion_lcd_mpc(&c, &[1, 1], &a, TorsionVariant::Repeated, DistanceCaps::default()).unwrap();
        assert_eq!(out.code.len(), 16);
        assert_eq!(out.code.free_rank(), Some(8));
        assert!(out.code.is_lcd());
        assert_eq!(out.code.min_distance(DistanceCaps::default()).unwrap(), Some(MinDistance::Exact(2)));
        assert!(matches!(out.claim, DistanceClaim::Exact(b) if b.code == Some(2)));
        let lower = Matrix::from_rows(z(2), &[[1, 0], [1, 1]]).unwrap();
        let out = torsion_lcd_mpc(&c, &[1, 1], &lower, TorsionVariant::Repeated, DistanceCaps::default()).unwrap();
        assert_eq!(out.claim, DistanceClaim::None);

        let ident = Matrix::identity(z(2), 2);
        let out = torsion_lcd_mpc(&c, &[0, 0], &ident, TorsionVariant::Repeated, DistanceCaps::default()).unwrap();
        let t = torsion_code(&c, 0).unwrap();
        assert_eq!(out.code, crate::mpc::direct_sum(&[t.clone(), t], z(2)));
    }

    #[test]
    fn nsc_variants_claim_distances() {
        let c = z4_octet();
        let a = Matrix::from_rows(z(2), &[[1, 1], [1, 0]]).unwrap();
        let out = torsion_lcd_mpc(&c, &[1, 1], &a, TorsionVariant::Repeated, DistanceCaps::default()).unwrap();
        match out.claim {
            DistanceClaim::Exact(b) => {
                assert_eq!(b.code, Some(2));
                let d = out.code.min_distance(DistanceCaps::default()).unwrap().unwrap();
                assert_eq!(d.exact(), b.code);
                let dd = out.code.dual().min_distance(DistanceCaps::default()).unwrap().unwrap();
                assert_eq!(dd.exact(), b.dual);
            }
            other => panic!("expected exact claim, got {other:?}"),
        }
    }

    #[test]
    fn preconditions_are_checked() {
        let caps = DistanceCaps::default();
        let not_lcd = code(4, &[[1, 1]]);
        let a = Matrix::identity(z(2), 2);
        assert!(matches!(
            torsion_lcd_mpc(&not_lcd, &[0, 1], &a, TorsionVariant::Diagonal, caps),
            Err(Error::Precondition(_))
        ));
        let c = z4_octet();
        assert!(torsion_lcd_mpc(&c, &[0, 1], &a, TorsionVariant::Repeated, caps).is_err());
        assert!(torsion_lcd_mpc(&c, &[0, 2], &a, TorsionVariant::Diagonal, caps).is_err());
        let upper = Matrix::from_rows(z(2), &[[1, 1], [0, 1]]).unwrap();
        assert!(torsion_lcd_mpc(&c, &[1, 0], &upper, TorsionVariant::Triangular, caps).is_err());
        assert!(torsion_lcd_mpc(&c, &[0, 1], &upper, TorsionVariant::Triangular, caps).is_ok());
        let singular = Matrix::from_rows(z(2), &[[1, 1], [1, 1]]).unwrap();
        assert_eq!(
            torsion_lcd_mpc(&c, &[0, 0], &singular, TorsionVariant::Repeated, caps),
            Err(Error::Singular)
        );
        assert!(torsion_lcd_mpc(&c, &[0, 0], &Matrix::identity(z(4), 2), TorsionVariant::Repeated, caps).is_err());
    }
}
