//! Brute-force reference computations.
//!
//! Everything here works from definitions by enumerating `R^n` or a span,
//! and never touches the Howell machinery. Fast paths are checked against
//! these at small scale; a disagreement always blames the fast path.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;

/// Default enumeration cap in ring vectors.
pub const DEFAULT_CAP: u64 = 1_000_000;

pub type CodewordSet = BTreeSet<Vec<u64>>;

fn pow_sat(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

fn check_cap(needed: u128, cap: u64) -> Result<()> {
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            needed: needed.to_string(),
            cap,
        });
    }
    Ok(())
}

/// All of `R^n` in lexicographic order.
pub fn all_vectors(ring: Ring, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let m = ring.modulus();
    let mut next = Some(vec![0u64; n]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut carried = true;
        for x in succ.iter_mut().rev() {
            *x += 1;
            if *x < m {
                carried = false;
                break;
            }
            *x = 0;
        }
        if !carried {
            next = Some(succ);
        }
        Some(cur)
    })
}

pub fn dot(ring: Ring, x: &[u64], y: &[u64]) -> u64 {
    x.iter()
        .zip(y)
        .fold(0, |acc, (&a, &b)| ring.add(acc, ring.mul(a, b)))
}

pub fn weight(x: &[u64]) -> usize {
    x.iter().filter(|&&v| v != 0).count()
}

/// Every R-linear combination of `gens`.
pub fn brute_span(ring: Ring, n: usize, gens: &[Vec<u64>], cap: u64) -> Result<CodewordSet> {
    let m = ring.modulus();
    let by_gens = pow_sat(m, gens.len());
    let by_space = pow_sat(m, n);
    check_cap(by_gens.min(by_space), cap)?;
    let mut set: CodewordSet = [vec![0; n]].into_iter().collect();
    for g in gens {
        if g.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "generator of length {} for n = {n}",
                g.len()
            )));
        }
        let mut next = CodewordSet::new();
        for x in &set {
            let mut y = x.clone();
            for _ in 0..m {
                next.insert(y.clone());
                for (yi, &gi) in y.iter_mut().zip(g) {
                    *yi = ring.add(*yi, gi);
                }
            }
        }
        set = next;
    }
    Ok(set)
}

/// `{ y : <g, y> = 0 for every generator g }`.
pub fn brute_dual(ring: Ring, n: usize, gens: &[Vec<u64>], cap: u64) -> Result<CodewordSet> {
    check_cap(pow_sat(ring.modulus(), n), cap)?;
    Ok(all_vectors(ring, n)
        .filter(|y| gens.iter().all(|g| dot(ring, g, y) == 0))
        .collect())
}

pub fn brute_hull(ring: Ring, n: usize, gens: &[Vec<u64>], cap: u64) -> Result<CodewordSet> {
    let span = brute_span(ring, n, gens, cap)?;
    let dual = brute_dual(ring, n, gens, cap)?;
    Ok(span.intersection(&dual).cloned().collect())
}

/// Minimum weight of a nonzero codeword; `None` for the zero code.
pub fn brute_min_distance(ring: Ring, n: usize, gens: &[Vec<u64>], cap: u64) -> Result<Option<usize>> {
    let span = brute_span(ring, n, gens, cap)?;
    Ok(min_weight(&span))
}

pub fn min_weight(set: &CodewordSet) -> Option<usize> {
    set.iter().map(|x| weight(x)).filter(|&w| w > 0).min()
}

/// `{ x : p^i x in span(gens) }` over a chain ring.
pub fn brute_quotient(ring: Ring, n: usize, gens: &[Vec<u64>], i: u32, cap: u64) -> Result<CodewordSet> {
    let chain = ring.chain_or_err()?;
    check_cap(pow_sat(ring.modulus(), n), cap)?;
    let span = brute_span(ring, n, gens, cap)?;
    let g = ring.pow(chain.p, i as u64);
    Ok(all_vectors(ring, n)
        .filter(|x| {
            let y: Vec<u64> = x.iter().map(|&v| ring.mul(g, v)).collect();
            span.contains(&y)
        })
        .collect())
}

/// `{ (c_1 .. c_s) A }` flattened column by column, with `c_i` drawn from
/// the explicit sets `inputs[i]`.
pub fn brute_mpc(inputs: &[CodewordSet], a: &Matrix, code_len: usize, cap: u64) -> Result<CodewordSet> {
    let ring = a.ring();
    let total = inputs
        .iter()
        .fold(1u128, |acc, s| acc.saturating_mul(s.len() as u128));
    check_cap(total, cap)?;
    let l = a.cols();
    let mut acc: CodewordSet = [vec![0; code_len * l]].into_iter().collect();
    for (i, set) in inputs.iter().enumerate() {
        let mut next = CodewordSet::new();
        for partial in &acc {
            for c in set {
                let mut w = partial.clone();
                for j in 0..l {
                    let aij = a.get(i, j);
                    for (wk, &ck) in w[j * code_len..(j + 1) * code_len].iter_mut().zip(c) {
                        *wk = ring.add(*wk, ring.mul(aij, ck));
                    }
                }
                next.insert(w);
            }
        }
        acc = next;
    }
    Ok(acc)
}
