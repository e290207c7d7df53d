//! Arithmetic in Z/mZ.
//!
//! Elements are stored as canonical residues in `[0, m)`. Every product is
//! widened to 128 bits before reduction, so any modulus that fits in a `u64`
//! is safe. When `m = p^e` the ring is a finite chain ring with maximal ideal
//! `<p>`, and [`Ring::residue_field`] gives `Z/pZ`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

/// Prime-power structure of a chain ring `Z/p^eZ`. The maximal ideal is
/// generated by `gamma = p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Chain {
    pub p: u64,
    pub e: u32,
}

/// The ring Z/mZ. Identity is the modulus value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    modulus: u64,
    chain: Option<Chain>,
}

impl Ring {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(Ring {
            modulus,
            chain: prime_power(modulus),
        })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn chain(&self) -> Option<Chain> {
        self.chain
    }

    /// Generator of the maximal ideal, `p mod m`. Absent unless `m = p^e`.
    pub fn gamma(&self) -> Option<u64> {
        self.chain.map(|c| c.p % self.modulus)
    }

    /// `Z/pZ` for a chain ring `Z/p^eZ`.
    pub fn residue_field(&self) -> Option<Ring> {
        self.chain.map(|c| Ring {
            modulus: c.p,
            chain: Some(Chain { p: c.p, e: 1 }),
        })
    }

    pub fn is_field(&self) -> bool {
        matches!(self.chain, Some(Chain { e: 1, .. }))
    }

    /// Nilpotency index of gamma (1 for a field).
    pub fn nilpotency(&self) -> Option<u32> {
        self.chain.map(|c| c.e)
    }

    pub fn chain_or_err(&self) -> Result<Chain> {
        self.chain.ok_or(Error::NotAChainRing(self.modulus))
    }

    pub fn elem(&self, value: i64) -> RingElem {
        RingElem {
            value: self.reduce_i128(value as i128),
            ring: *self,
        }
    }

    #[inline]
    pub fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.modulus as i128) as u64
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u64 {
        v % self.modulus
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.modulus as u128) as u64
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let m = self.modulus as u128;
        ((a as u128 + m - (b as u128 % m)) % m) as u64
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }

    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.modulus;
        let mut b = self.reduce(base);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        acc
    }

    pub fn gcd_with_modulus(&self, a: u64) -> u64 {
        self.reduce(a).gcd(&self.modulus)
    }

    pub fn is_unit(&self, a: u64) -> bool {
        self.gcd_with_modulus(a) == 1
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        let a = self.reduce(a);
        let eg = (a as i128).extended_gcd(&(self.modulus as i128));
        if eg.gcd != 1 {
            return Err(Error::NotAUnit {
                value: a,
                modulus: self.modulus,
            });
        }
        Ok(self.reduce_i128(eg.x))
    }

    /// Returns `(u, d)` with `u` a unit, `d = gcd(a, m)` and `u * a = d`.
    ///
    /// For `a = 0` this is `(1, m)`; callers treat `d = m` as the zero ideal.
    pub fn unit_normalizer(&self, a: u64) -> (u64, u64) {
        let m = self.modulus;
        let a = self.reduce(a);
        if a == 0 {
            return (1, m);
        }
        let d = a.gcd(&m);
        let md = m / d;
        let base = if md == 1 {
            0
        } else {
            let eg = ((a / d) as i128).extended_gcd(&(md as i128));
            (eg.x.rem_euclid(md as i128)) as u64
        };
        // Lift base (mod m/d) to a unit mod m. A lift exists among base + k*m/d, k < d.
        let mut u = base;
        for _ in 0..=d {
            if u.gcd(&m) == 1 {
                return (u, d);
            }
            u = self.add(u, md);
        }
        unreachable!("no unit lift for {a} mod {m}")
    }

    /// Entry of `Z/pZ` obtained by reducing `a` modulo gamma.
    pub fn reduce_mod_gamma(&self, a: u64) -> Result<u64> {
        let c = self.chain_or_err()?;
        Ok(self.reduce(a) % c.p)
    }

    /// Iterates every residue `0..m`.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.modulus
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.modulus)
    }
}

/// Trial division: `Some(Chain)` iff `m` is a prime power.
fn prime_power(m: u64) -> Option<Chain> {
    let mut p = None;
    let mut d = 2u64;
    while (d as u128) * (d as u128) <= m as u128 {
        if m.is_multiple_of(d) {
            p = Some(d);
            break;
        }
        d += 1;
    }
    let p = p.unwrap_or(m);
    let mut rest = m;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some(Chain { p, e })
}

/// A residue tagged with its ring. Mixing rings panics in the operator
/// impls; the `try_*` methods report it as an error instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElem {
    value: u64,
    ring: Ring,
}

impl RingElem {
    pub(crate) fn from_parts(value: u64, ring: Ring) -> Self {
        RingElem {
            value: ring.reduce(value),
            ring,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(self.value)
    }

    pub fn inv(&self) -> Result<RingElem> {
        Ok(RingElem {
            value: self.ring.inv(self.value)?,
            ring: self.ring,
        })
    }

    /// Image in the residue field.
    pub fn reduce_mod_gamma(&self) -> Result<RingElem> {
        let field = self
            .ring
            .residue_field()
            .ok_or(Error::NotAChainRing(self.ring.modulus))?;
        Ok(RingElem {
            value: self.ring.reduce_mod_gamma(self.value)?,
            ring: field,
        })
    }

    fn check(&self, other: &RingElem) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.modulus,
                right: other.ring.modulus,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem {
            value: self.ring.add(self.value, other.value),
            ring: self.ring,
        })
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem {
            value: self.ring.sub(self.value, other.value),
            ring: self.ring,
        })
    }

    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem {
            value: self.ring.mul(self.value, other.value),
            ring: self.ring,
        })
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! elem_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr for RingElem {
            type Output = RingElem;
            fn $method(self, rhs: RingElem) -> RingElem {
                match self.$try(&rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    };
}

elem_op!(Add, add, try_add);
elem_op!(Sub, sub, try_sub);
elem_op!(Mul, mul, try_mul);

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            value: self.ring.neg(self.value),
            ring: self.ring,
        }
    }
}
