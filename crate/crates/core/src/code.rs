//! Linear codes over Z/mZ, stored canonically by their Howell form.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{self, HowellForm};
use crate::matrix::Matrix;
use crate::ring::{Ring, RingElem};

/// Limits for [`LinearCode::min_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceCaps {
    /// Enumerate the whole code when it has at most this many codewords.
    pub enum_cap: u64,
    /// Otherwise search every vector of weight up to this bound.
    pub weight_cap: usize,
}

impl Default for DistanceCaps {
    fn default() -> Self {
        DistanceCaps {
            enum_cap: 1 << 24,
            weight_cap: 3,
        }
    }
}

/// Minimum distance, exact or bracketed when the search was capped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinDistance {
    Exact(usize),
    Bounds { lo: usize, hi: usize },
}

impl MinDistance {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            MinDistance::Exact(d) => Some(d),
            MinDistance::Bounds { .. } => None,
        }
    }

    pub fn lower(&self) -> usize {
        match *self {
            MinDistance::Exact(d) => d,
            MinDistance::Bounds { lo, .. } => lo,
        }
    }
}

/// Length, size and distance of a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    pub length: usize,
    pub cardinality: BigUint,
    /// Rank when the code is free, i.e. every Howell pivot is 1.
    pub free_rank: Option<usize>,
    /// `None` for the zero code.
    pub min_distance: Option<MinDistance>,
}

/// A submodule of `R^n`.
#[derive(Debug, Clone)]
pub struct LinearCode {
    ring: Ring,
    length: usize,
    howell: HowellForm,
    cardinality: BigUint,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.length == other.length && self.howell == other.howell
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    pub fn from_matrix(g: &Matrix) -> Self {
        let howell = linalg::howell_form(g);
        let m = g.ring().modulus();
        let cardinality = howell
            .pivot_values()
            .iter()
            .fold(BigUint::one(), |acc, &d| acc * BigUint::from(m / d));
        LinearCode {
            ring: g.ring(),
            length: g.cols(),
            howell,
            cardinality,
        }
    }

    /// Code spanned by signed rows of length `n`.
    pub fn from_generators<R: AsRef<[i64]>>(ring: Ring, n: usize, rows: &[R]) -> Result<Self> {
        Ok(Self::from_matrix(&Matrix::from_rows_with_cols(ring, n, rows)?))
    }

    pub fn from_residue_rows(ring: Ring, n: usize, rows: &[Vec<u64>]) -> Result<Self> {
        Ok(Self::from_matrix(&Matrix::from_residue_rows(ring, n, rows)?))
    }

    pub fn zero(ring: Ring, n: usize) -> Self {
        Self::from_matrix(&Matrix::zeros(ring, 0, n))
    }

    pub fn full(ring: Ring, n: usize) -> Self {
        Self::from_matrix(&Matrix::identity(ring, n))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn howell(&self) -> &HowellForm {
        &self.howell
    }

    /// Canonical generator matrix.
    pub fn generator_matrix(&self) -> &Matrix {
        self.howell.matrix()
    }

    pub fn generators(&self) -> Vec<Vec<u64>> {
        self.howell.matrix().row_vecs()
    }

    pub fn cardinality(&self) -> &BigUint {
        &self.cardinality
    }

    pub fn is_zero(&self) -> bool {
        self.howell.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.howell.pivot_values().iter().all(|&d| d == 1)
    }

    pub fn free_rank(&self) -> Option<usize> {
        self.is_free().then(|| self.howell.len())
    }

    fn compatible(&self, other: &LinearCode) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.modulus(),
                right: other.ring.modulus(),
            });
        }
        if self.length != other.length {
            return Err(Error::DimensionMismatch(format!(
                "code lengths {} and {}",
                self.length, other.length
            )));
        }
        Ok(())
    }

    pub fn member(&self, x: &[u64]) -> Result<bool> {
        if x.len() != self.length {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a code of length {}",
                x.len(),
                self.length
            )));
        }
        let x: Vec<u64> = x.iter().map(|&v| self.ring.reduce(v)).collect();
        Ok(self.howell.contains(&x))
    }

    /// Euclidean dual.
    pub fn dual(&self) -> LinearCode {
        let k = linalg::right_kernel(self.generator_matrix());
        LinearCode::from_matrix(&k)
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        let stacked = self.generator_matrix().vstack(other.generator_matrix())?;
        Ok(LinearCode::from_matrix(&stacked))
    }

    /// `C ∩ D = (C^⊥ + D^⊥)^⊥`.
    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// True iff `other ⊆ self`.
    pub fn contains_code(&self, other: &LinearCode) -> Result<bool> {
        self.compatible(other)?;
        Ok((0..other.howell.len()).all(|i| self.howell.contains(other.generator_matrix().row(i))))
    }

    pub fn hull(&self) -> LinearCode {
        self.intersect(&self.dual()).expect("dual is compatible")
    }

    pub fn is_lcd(&self) -> bool {
        self.hull().is_zero()
    }

    /// `{ r x : x in C }`.
    pub fn scale(&self, r: RingElem) -> Result<LinearCode> {
        if r.ring() != self.ring {
            return Err(Error::RingMismatch {
                left: r.ring().modulus(),
                right: self.ring.modulus(),
            });
        }
        Ok(LinearCode::from_matrix(&self.generator_matrix().scale(r.value())))
    }

    /// Calls `f` on every codeword, stopping early when it returns `false`.
    pub fn for_each_codeword(&self, mut f: impl FnMut(&[u64]) -> bool) {
        let ring = self.ring;
        let g = self.generator_matrix();
        let bounds: Vec<u64> = self
            .howell
            .pivot_values()
            .iter()
            .map(|&d| ring.modulus() / d)
            .collect();
        let k = bounds.len();
        let mut coeffs = vec![0u64; k];
        let mut cur = vec![0u64; self.length];
        loop {
            if !f(&cur) {
                return;
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if coeffs[i] + 1 < bounds[i] {
                    coeffs[i] += 1;
                    for (c, &v) in cur.iter_mut().zip(g.row(i)) {
                        *c = ring.add(*c, v);
                    }
                    break;
                }
                let back = coeffs[i];
                coeffs[i] = 0;
                for (c, &v) in cur.iter_mut().zip(g.row(i)) {
                    *c = ring.sub(*c, ring.mul(back, v));
                }
            }
        }
    }

    /// Minimum Hamming weight of a nonzero codeword; `None` for the zero code.
    ///
    /// Codes with at most `enum_cap` words are enumerated. Larger codes are
    /// searched weight by weight up to `weight_cap` via the parity checks of
    /// the dual; the first weight that hits is exact, since every lower
    /// weight was exhausted.
    pub fn min_distance(&self, caps: DistanceCaps) -> Result<Option<MinDistance>> {
        if caps.enum_cap == 0 || caps.weight_cap == 0 {
            return Err(Error::Precondition("distance caps must be at least 1".into()));
        }
        if self.is_zero() {
            return Ok(None);
        }
        if self.cardinality <= BigUint::from(caps.enum_cap) {
            return Ok(Some(MinDistance::Exact(self.enumerated_distance())));
        }
        Ok(Some(self.weight_search(caps.weight_cap)))
    }

    fn enumerated_distance(&self) -> usize {
        let mut best = self.length;
        self.for_each_codeword(|x| {
            let w = x.iter().filter(|&&v| v != 0).count();
            if w > 0 && w < best {
                best = w;
            }
            best > 1
        });
        best
    }

    /// Exhaustive search over vectors of weight `1..=weight_cap`.
    pub fn weight_search(&self, weight_cap: usize) -> MinDistance {
        let ring = self.ring;
        let m = ring.modulus();
        let n = self.length;
        let h = self.dual();
        let checks = h.generator_matrix();
        let r = checks.rows();
        let columns: Vec<Vec<u64>> = (0..n).map(|j| (0..r).map(|i| checks.get(i, j)).collect()).collect();
        for w in 1..=weight_cap.min(n) {
            for support in (0..n).combinations(w) {
                let mut values = vec![1u64; w];
                loop {
                    let mut syndrome = vec![0u64; r];
                    for (&j, &v) in support.iter().zip(&values) {
                        for (s, &c) in syndrome.iter_mut().zip(&columns[j]) {
                            *s = ring.add(*s, ring.mul(v, c));
                        }
                    }
                    if syndrome.iter().all(|&s| s == 0) {
                        return MinDistance::Exact(w);
                    }
                    // next assignment in (1..m)^w
                    let mut i = w;
                    let mut done = true;
                    while i > 0 {
                        i -= 1;
                        if values[i] + 1 < m {
                            values[i] += 1;
                            done = false;
                            break;
                        }
                        values[i] = 1;
                    }
                    if done {
                        break;
                    }
                }
            }
        }
        MinDistance::Bounds {
            lo: weight_cap + 1,
            hi: n,
        }
    }

    pub fn params(&self, caps: DistanceCaps) -> Result<CodeParams> {
        Ok(CodeParams {
            length: self.length,
            cardinality: self.cardinality.clone(),
            free_rank: self.free_rank(),
            min_distance: self.min_distance(caps)?,
        })
    }

    /// `m^k` for free codes over a chain ring, decimal otherwise.
    pub fn cardinality_string(&self) -> String {
        match (self.ring.chain(), self.free_rank()) {
            (Some(_), Some(k)) => format!("{}^{}", self.ring.modulus(), k),
            _ => self.cardinality.to_string(),
        }
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator_matrix())
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Exact(d) => write!(f, "{d}"),
            MinDistance::Bounds { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// LCD test for a free code with basis `G`: `det(G G^t)` is a unit.
pub fn is_lcd_free_test(g: &Matrix) -> Result<bool> {
    if !linalg::is_frr(g) {
        return Err(Error::NotFullRowRank);
    }
    Ok(linalg::det(&g.gram())?.is_unit())
}

/// Cyclic code of length `n` generated by the monic divisor `f` of
/// `x^n - 1`, given by ascending coefficients.
pub fn cyclic_code(ring: Ring, n: usize, f: &[i64]) -> Result<LinearCode> {
    let f: Vec<u64> = f.iter().map(|&c| ring.reduce_i128(c as i128)).collect();
    let Some(&lead) = f.last() else {
        return Err(Error::NotMonic);
    };
    if lead != 1 {
        return Err(Error::NotMonic);
    }
    let t = f.len() - 1;
    if t >= n {
        return Err(Error::OutOfRange(format!("degree {t} for length {n}")));
    }
    // x^n - 1 mod f
    let mut rem = vec![0u64; n + 1];
    rem[0] = ring.neg(1);
    rem[n] = 1;
    for top in (t..=n).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        for (k, &fk) in f.iter().enumerate() {
            let idx = top - t + k;
            rem[idx] = ring.sub(rem[idx], ring.mul(c, fk));
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return Err(Error::NotADivisor(n));
    }
    let rows: Vec<Vec<u64>> = (0..n - t)
        .map(|shift| {
            let mut row = vec![0u64; n];
            row[shift..shift + t + 1].copy_from_slice(&f);
            row
        })
        .collect();
    LinearCode::from_residue_rows(ring, n, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{self, DEFAULT_CAP};

    fn z(m: u64) -> Ring {
        Ring::new(m).unwrap()
    }

    fn code<const N: usize>(m: u64, rows: &[[i64; N]]) -> LinearCode {
        LinearCode::from_generators(z(m), N, rows).unwrap()
    }

    fn brute_size(c: &LinearCode) -> usize {
        oracle::brute_span(c.ring(), c.len(), &c.generators(), DEFAULT_CAP)
            .unwrap()
            .len()
    }

    #[test]
    fn example_codes_over_z30() {
        let c1 = code(30, &[[15, 0], [0, 15]]);
        let c2 = code(30, &[[10, 0], [0, 10]]);
        assert_eq!(c1.cardinality(), &BigUint::from(4u32));
        assert_eq!(c2.cardinality(), &BigUint::from(9u32));
        assert_eq!(brute_size(&c1), 4);
        assert_eq!(brute_size(&c2), 9);
        assert_eq!(c1.dual(), code(30, &[[2, 0], [0, 2]]));
        assert_eq!(c2.dual(), code(30, &[[3, 0], [0, 3]]));
        assert!(c1.is_lcd() && c2.is_lcd());
        assert!(c1.intersect(&c1.dual()).unwrap().is_zero());
    }

    #[test]
    fn zero_and_full_codes() {
        let zero = LinearCode::from_generators::<[i64; 0]>(z(6), 3, &[]).unwrap();
        assert_eq!(zero, LinearCode::zero(z(6), 3));
        assert_eq!(zero.cardinality(), &BigUint::one());
        assert_eq!(zero.dual(), LinearCode::full(z(6), 3));
        assert!(zero.is_lcd());
        let full = LinearCode::full(z(2), 1);
        assert!(full.dual().is_zero());
        assert!(full.hull().is_zero());
    }

    #[test]
    fn generator_order_is_irrelevant() {
        let a = code(12, &[[2, 4, 6], [3, 3, 0], [1, 1, 1]]);
        let b = code(12, &[[1, 1, 1], [5, 7, 6], [3, 3, 0], [2, 4, 6]]);
        assert_eq!(a, b);
    }

    #[test]
    fn lattice_operations() {
        let c = code(30, &[[15, 0], [0, 15]]);
        let d = code(30, &[[2, 0], [0, 2]]);
        assert_eq!(c.intersect(&c).unwrap(), c);
        assert!(c.intersect(&d).unwrap().is_zero());
        assert_eq!(c.sum(&LinearCode::zero(z(30), 2)).unwrap(), c);
        assert_eq!(c.sum(&d).unwrap(), LinearCode::full(z(30), 2));
        assert!(d.contains_code(&code(30, &[[4, 0]])).unwrap());
        assert!(!d.contains_code(&c).unwrap());
        assert!(c.member(&[15, 15]).unwrap());
        assert!(!c.member(&[1, 0]).unwrap());
        assert!(c.member(&[1]).is_err());
        assert!(c.sum(&LinearCode::zero(z(6), 2)).is_err());
        assert!(c.sum(&LinearCode::zero(z(30), 3)).is_err());
    }

    #[test]
    fn self_dual_repetition_code() {
        let c = code(2, &[[1, 1]]);
        assert_eq!(c.hull(), c);
        assert!(!c.is_lcd());
        let h = oracle::brute_hull(z(2), 2, &c.generators(), DEFAULT_CAP).unwrap();
        assert_eq!(h.len(), 2);
    }

    #[test]
    fn scaling() {
        let c = code(30, &[[15, 0], [3, 7]]);
        assert_eq!(c.scale(z(30).elem(11)).unwrap(), c);
        let full = LinearCode::full(z(4), 2);
        assert_eq!(full.scale(z(4).elem(2)).unwrap(), code(4, &[[2, 0], [0, 2]]));
        assert!(full.scale(z(4).elem(0)).unwrap().is_zero());
        assert!(full.scale(z(5).elem(1)).is_err());
    }

    #[test]
    fn lcd_free_test() {
        assert_eq!(
            is_lcd_free_test(&Matrix::from_rows(z(30), &[[15, 15]]).unwrap()),
            Err(Error::NotFullRowRank)
        );
        assert!(!is_lcd_free_test(&Matrix::from_rows(z(2), &[[1, 1]]).unwrap()).unwrap());
    }

    #[test]
    fn distances() {
        let caps = DistanceCaps::default();
        let c1 = code(30, &[[15, 0], [0, 15]]);
        assert_eq!(c1.min_distance(caps).unwrap(), Some(MinDistance::Exact(1)));
        assert_eq!(LinearCode::zero(z(3), 5).min_distance(caps).unwrap(), None);
        let p = LinearCode::zero(z(3), 5).params(caps).unwrap();
        assert_eq!((p.length, p.cardinality, p.min_distance), (5, BigUint::one(), None));
        assert!(c1.min_distance(DistanceCaps { enum_cap: 0, weight_cap: 1 }).is_err());

        // weight search capped below the true distance brackets it
        let rep = code(3, &[[1, 1, 1, 1]]);
        let capped = DistanceCaps { enum_cap: 1, weight_cap: 2 };
        assert_eq!(rep.min_distance(capped).unwrap(), Some(MinDistance::Bounds { lo: 3, hi: 4 }));
        assert_eq!(rep.weight_search(4), MinDistance::Exact(4));
    }

    #[test]
    fn cyclic_codes() {
        let z25 = z(25);
        let c = cyclic_code(z25, 12, &[1, 1]).unwrap();
        assert_eq!(c.free_rank(), Some(11));
        assert!(c.is_lcd());
        assert!(is_lcd_free_test(c.generator_matrix()).unwrap());
        assert_eq!(c.cardinality_string(), "25^11");
        let d = cyclic_code(z25, 12, &[1, 1, 1]).unwrap();
        assert_eq!(d.free_rank(), Some(10));
        let rep = cyclic_code(z(2), 2, &[1, 1]).unwrap();
        assert_eq!(rep, code(2, &[[1, 1]]));
        assert_eq!(cyclic_code(z25, 12, &[1, 2]), Err(Error::NotMonic));
        assert_eq!(cyclic_code(z25, 12, &[2, 1]), Err(Error::NotADivisor(12)));
        assert!(cyclic_code(z25, 2, &[1, 1, 1]).is_err());
    }

    #[test]
    fn cardinality_strings() {
        assert_eq!(code(30, &[[15, 0], [0, 15]]).cardinality_string(), "4");
        assert_eq!(LinearCode::full(z(30), 2).cardinality_string(), "900");
        assert_eq!(LinearCode::full(z(4), 3).cardinality_string(), "4^3");
        assert_eq!(code(4, &[[2, 0]]).cardinality_string(), "2");
    }
}
