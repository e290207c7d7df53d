//! Matrix-product codes `[C_1 ... C_s] A` and their duals and hulls.
//!
//! A codeword is the `n x l` matrix `(c_1 ... c_s) A` with `c_i` taken as
//! columns. It is read column by column as a vector of length `n l`, so
//! column `j` of the codeword is `sum_i a_ij c_i`. With this layout
//! `A = ((1,1),(0,1))` gives the `(u | u+v)` construction.

use crate::code::{DistanceCaps, LinearCode};
use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::ring::Ring;

/// Input codes `C_1..C_s` of a common length, and `A` of size `s x l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixProductSpec {
    codes: Vec<LinearCode>,
    a: Matrix,
}

/// Which route produced a hull.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullProvenance {
    /// Dual pushes through `A` and `A` has full row rank:
    /// `H([C]A) = [H(C_1)..H(C_s)] A`.
    DualPushFrr,
    /// `[C]A = [C]`, so `H([C]A) = [H(C_1)..H(C_s)]`.
    Identity,
    /// Computed as `C ∩ C^⊥` on the product code itself.
    Direct,
}

/// Flags for the sufficient conditions under which `[C]A` is LCD iff
/// every `C_i` is, numbered 1 to 7, plus the partitioned-orthogonality
/// condition (sufficient for LCD, one direction only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// 1: `([C]A)^⊥ = [C^⊥]A` and `A` has full row rank.
    pub frr_dual_push: bool,
    /// 2: `[C]A = [C]`.
    pub mpc_identity: bool,
    /// 3: `A` square, `A A^t` diagonal with unit diagonal.
    pub aat_diag: bool,
    /// 4: `A` square, `A A^t` antidiagonal with units, `C_i^⊥ = C_{s-i+1}^⊥`.
    pub aat_adiag_palindrome: bool,
    /// 5: `A` non-singular upper triangular, `C_1 ⊆ ... ⊆ C_s`.
    pub upper_tri_nested: bool,
    /// 6: `A` non-singular lower triangular, `C_s ⊆ ... ⊆ C_1`.
    pub lower_tri_nested: bool,
    /// 7: `A` non-singular, all `C_i` equal.
    pub equal_codes_nonsingular: bool,
    /// `Some(s1)` when `A` is non-singular with the `s1`-partitioned
    /// orthogonal property and the codes are `s1` copies of one code
    /// followed by copies of another.
    pub s1_orthogonal: Option<usize>,
    pub inputs_lcd: bool,
    pub mpc_lcd: bool,
}

impl ConditionReport {
    /// Flags 1..=7 in order.
    pub fn numbered(&self) -> [bool; 7] {
        [
            self.frr_dual_push,
            self.mpc_identity,
            self.aat_diag,
            self.aat_adiag_palindrome,
            self.upper_tri_nested,
            self.lower_tri_nested,
            self.equal_codes_nonsingular,
        ]
    }

    pub fn any_numbered(&self) -> bool {
        self.numbered().iter().any(|&b| b)
    }

    /// Whether the observed LCD status agrees with every licensed conclusion.
    pub fn consistent(&self) -> bool {
        let biconditional = !self.any_numbered() || self.mpc_lcd == self.inputs_lcd;
        let orthogonal = self.s1_orthogonal.is_none() || !self.inputs_lcd || self.mpc_lcd;
        biconditional && orthogonal
    }
}

/// Lower bounds on the distance of an MPC over a field with NSC `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceBounds {
    /// `min_i (s-i+1) d(C_i)`, skipping zero inputs.
    pub code: Option<usize>,
    /// `min_i i d(C_i^⊥)`, skipping zero duals.
    pub dual: Option<usize>,
    /// `C_s ⊆ ... ⊆ C_1`.
    pub nested: bool,
    /// Every input distance used was exact.
    pub inputs_exact: bool,
}

impl DistanceBounds {
    /// The bounds are equalities.
    pub fn exact(&self) -> bool {
        self.nested && self.inputs_exact
    }
}

/// `[C_1 .. C_s] A` for arbitrary codes and `A`, no shape checks beyond
/// agreement of `s`.
pub fn product_code(codes: &[LinearCode], a: &Matrix) -> LinearCode {
    assert_eq!(codes.len(), a.rows(), "one code per row of A");
    let ring = a.ring();
    let n = codes.first().map_or(0, LinearCode::len);
    let l = a.cols();
    let mut rows = Vec::new();
    for (i, c) in codes.iter().enumerate() {
        for g in c.generators() {
            let mut row = vec![0u64; n * l];
            for j in 0..l {
                let aij = a.get(i, j);
                for (k, &gk) in g.iter().enumerate() {
                    row[j * n + k] = ring.mul(aij, gk);
                }
            }
            rows.push(row);
        }
    }
    LinearCode::from_residue_rows(ring, n * l, &rows).expect("row width n*l")
}

/// `[C_1 .. C_s] = [C_1 .. C_s] I_s`.
pub fn direct_sum(codes: &[LinearCode], ring: Ring) -> LinearCode {
    product_code(codes, &Matrix::identity(ring, codes.len()))
}

fn is_chain(codes: &[LinearCode]) -> bool {
    codes
        .windows(2)
        .all(|w| w[1].contains_code(&w[0]).expect("compatible codes"))
}

impl MatrixProductSpec {
    pub fn new(codes: Vec<LinearCode>, a: Matrix) -> Result<Self> {
        let s = a.rows();
        if s == 0 || codes.len() != s {
            return Err(Error::DimensionMismatch(format!(
                "{} input codes for a matrix with {s} rows",
                codes.len()
            )));
        }
        if s > a.cols() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {s}x{}, need s <= l",
                a.cols()
            )));
        }
        let n = codes[0].len();
        for c in &codes {
            if c.ring() != a.ring() {
                return Err(Error::RingMismatch {
                    left: c.ring().modulus(),
                    right: a.ring().modulus(),
                });
            }
            if c.len() != n {
                return Err(Error::DimensionMismatch(format!(
                    "input codes of lengths {n} and {}",
                    c.len()
                )));
            }
        }
        Ok(MatrixProductSpec { codes, a })
    }

    pub fn codes(&self) -> &[LinearCode] {
        &self.codes
    }

    pub fn matrix(&self) -> &Matrix {
        &self.a
    }

    pub fn ring(&self) -> Ring {
        self.a.ring()
    }

    pub fn s(&self) -> usize {
        self.a.rows()
    }

    pub fn input_length(&self) -> usize {
        self.codes[0].len()
    }

    pub fn build(&self) -> LinearCode {
        product_code(&self.codes, &self.a)
    }

    pub fn duals(&self) -> Vec<LinearCode> {
        self.codes.iter().map(LinearCode::dual).collect()
    }

    pub fn hulls(&self) -> Vec<LinearCode> {
        self.codes.iter().map(LinearCode::hull).collect()
    }

    fn require_nonsingular(&self) -> Result<()> {
        if !linalg::is_nonsingular(&self.a)? {
            return Err(Error::Singular);
        }
        Ok(())
    }

    /// `[C_1^⊥ .. C_s^⊥] (A^{-1})^t`, the dual of the product when `A` is
    /// square and non-singular.
    pub fn dual_by_theorem(&self) -> Result<LinearCode> {
        let inv = linalg::inverse(&self.a)?;
        Ok(product_code(&self.duals(), &inv.transpose()))
    }

    /// `[C_1^⊥ .. C_s^⊥] A`.
    pub fn pushed_dual(&self) -> LinearCode {
        product_code(&self.duals(), &self.a)
    }

    /// Syntactic sufficient condition for `([C]A)^⊥ = [C^⊥]A`:
    /// `A A^t` is diagonal with units, or antidiagonal with units and
    /// `C_i^⊥ = C_{s-i+1}^⊥`.
    pub fn dual_push_by_shape(&self) -> bool {
        self.a.is_square()
            && (linalg::aat_diagonal_units(&self.a).is_some() || self.adiag_palindrome())
    }

    fn adiag_palindrome(&self) -> bool {
        if !self.a.is_square() || linalg::aat_antidiagonal_units(&self.a).is_none() {
            return false;
        }
        let duals = self.duals();
        let s = duals.len();
        (0..s).all(|i| duals[i] == duals[s - 1 - i])
    }

    /// `([C]A)^⊥ = [C^⊥]A`, from the shape of `A A^t` or by direct equality.
    pub fn dual_pushes(&self) -> bool {
        self.dual_push_by_shape() || self.build().dual() == self.pushed_dual()
    }

    /// Any of the four shape conditions that force `[C]A = [C]` for a
    /// non-singular square `A`.
    fn identity_by_shape(&self) -> Result<bool> {
        let a = &self.a;
        if !a.is_square() || !linalg::is_nonsingular(a)? {
            return Ok(false);
        }
        let nested_up = || is_chain(&self.codes);
        let nested_down = || {
            let rev: Vec<LinearCode> = self.codes.iter().rev().cloned().collect();
            is_chain(&rev)
        };
        let all_equal = || self.codes.windows(2).all(|w| w[0] == w[1]);
        Ok(a.is_diagonal()
            || (a.is_upper_triangular() && nested_up())
            || (a.is_lower_triangular() && nested_down())
            || all_equal())
    }

    /// `[C]A = [C]`, by shape when possible, else by direct equality.
    pub fn is_identity(&self) -> Result<bool> {
        if !self.a.is_square() {
            return Ok(false);
        }
        if self.identity_by_shape()? {
            return Ok(true);
        }
        Ok(self.build() == direct_sum(&self.codes, self.ring()))
    }

    /// `[C_1 .. C_s]` when one of the four shape conditions holds.
    pub fn lemma4_reduce(&self) -> Result<Option<LinearCode>> {
        if !self.a.is_square() {
            return Err(Error::NotSquare {
                rows: self.a.rows(),
                cols: self.a.cols(),
            });
        }
        self.require_nonsingular()?;
        Ok(self
            .identity_by_shape()?
            .then(|| direct_sum(&self.codes, self.ring())))
    }

    /// The hull of the product code, through a structural identity when
    /// its hypotheses hold.
    pub fn hull(&self) -> Result<(LinearCode, HullProvenance)> {
        if self.dual_pushes() && linalg::is_frr(&self.a) {
            return Ok((product_code(&self.hulls(), &self.a), HullProvenance::DualPushFrr));
        }
        if self.is_identity()? {
            return Ok((direct_sum(&self.hulls(), self.ring()), HullProvenance::Identity));
        }
        Ok((self.build().hull(), HullProvenance::Direct))
    }

    /// The split point `s1` if `A` is non-singular with the
    /// `s1`-partitioned orthogonal property and the codes have the shape
    /// `[C, .., C, D, .., D]` with the switch at `s1`.
    pub fn orthogonal_split(&self) -> Result<Option<usize>> {
        let s = self.s();
        if !self.a.is_square() || s < 2 || !linalg::is_nonsingular(&self.a)? {
            return Ok(None);
        }
        for s1 in 1..s {
            let shaped = self.codes[..s1].iter().all(|c| c == &self.codes[0])
                && self.codes[s1..].iter().all(|c| c == &self.codes[s1]);
            if shaped && linalg::partition_blocks(&self.a, s1)?.is_some() {
                return Ok(Some(s1));
            }
        }
        Ok(None)
    }

    pub fn conditions(&self) -> Result<ConditionReport> {
        let a = &self.a;
        let square = a.is_square();
        let nonsingular = square && linalg::is_nonsingular(a)?;
        let aat_diag = square && linalg::aat_diagonal_units(a).is_some();
        let aat_adiag_palindrome = self.adiag_palindrome();
        let upper_tri_nested = nonsingular && a.is_upper_triangular() && is_chain(&self.codes);
        let lower_tri_nested = nonsingular && a.is_lower_triangular() && {
            let rev: Vec<LinearCode> = self.codes.iter().rev().cloned().collect();
            is_chain(&rev)
        };
        let equal_codes_nonsingular = nonsingular && self.codes.windows(2).all(|w| w[0] == w[1]);
        let frr_dual_push = linalg::is_frr(a) && self.dual_pushes();
        let mpc_identity = upper_tri_nested
            || lower_tri_nested
            || equal_codes_nonsingular
            || self.is_identity()?;
        Ok(ConditionReport {
            frr_dual_push,
            mpc_identity,
            aat_diag,
            aat_adiag_palindrome,
            upper_tri_nested,
            lower_tri_nested,
            equal_codes_nonsingular,
            s1_orthogonal: self.orthogonal_split()?,
            inputs_lcd: self.codes.iter().all(LinearCode::is_lcd),
            mpc_lcd: self.build().is_lcd(),
        })
    }

    /// Checks `H([C1..C1 C2..C2] A) ⊆ [H(C1)..H(C1) H(C2)..H(C2)] (A^{-1})^t`.
    pub fn orth_hull_bound(&self, s1: usize, c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
        let s = self.s();
        if !self.a.is_square() {
            return Err(Error::NotSquare {
                rows: s,
                cols: self.a.cols(),
            });
        }
        let inv = linalg::inverse(&self.a)?;
        if linalg::partition_blocks(&self.a, s1)?.is_none() {
            return Err(Error::Precondition(format!(
                "matrix lacks the {s1}-partitioned orthogonal property"
            )));
        }
        let shaped = self.codes[..s1].iter().all(|c| c == c1) && self.codes[s1..].iter().all(|c| c == c2);
        if !shaped {
            return Err(Error::Precondition(format!(
                "input codes are not {s1} copies of C1 followed by {} copies of C2",
                s - s1
            )));
        }
        let (h1, h2) = (c1.hull(), c2.hull());
        let hulls: Vec<LinearCode> = (0..s).map(|i| if i < s1 { h1.clone() } else { h2.clone() }).collect();
        let bound = product_code(&hulls, &inv.transpose());
        bound.contains_code(&self.build().hull())
    }

    /// Distance bounds over a field with a square NSC matrix.
    pub fn distance_bounds(&self, caps: DistanceCaps) -> Result<DistanceBounds> {
        let ring = self.ring();
        if !ring.is_field() {
            return Err(Error::NotAField(ring.modulus()));
        }
        if !self.a.is_square() {
            return Err(Error::NotSquare {
                rows: self.a.rows(),
                cols: self.a.cols(),
            });
        }
        if !linalg::is_nsc(&self.a)? {
            return Err(Error::Precondition("matrix is not NSC".into()));
        }
        let s = self.s();
        let mut inputs_exact = true;
        let mut code = None::<usize>;
        let mut dual = None::<usize>;
        for (i, c) in self.codes.iter().enumerate() {
            if let Some(d) = c.min_distance(caps)? {
                inputs_exact &= d.exact().is_some();
                let v = (s - i) * d.lower();
                code = Some(code.map_or(v, |x| x.min(v)));
            }
            if let Some(d) = c.dual().min_distance(caps)? {
                inputs_exact &= d.exact().is_some();
                let v = (i + 1) * d.lower();
                dual = Some(dual.map_or(v, |x| x.min(v)));
            }
        }
        let rev: Vec<LinearCode> = self.codes.iter().rev().cloned().collect();
        Ok(DistanceBounds {
            code,
            dual,
            nested: is_chain(&rev),
            inputs_exact,
        })
    }
}
