//! GF(2^s) arithmetic through exponent and logarithm tables.

use serde::Serialize;

use crate::{Error, Result};

/// Primitive polynomials over GF(2) for degrees 1..=16, bit `i` holding the
/// coefficient of `x^i`. Each entry has the fewest nonzero terms for its
/// degree and, among those, the smallest bitmask.
pub const PRIMITIVE_POLYNOMIALS: [u32; 16] = [
    0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11d, 0x211, 0x409, 0x805, 0x1053, 0x201b, 0x402b,
    0x8003, 0x1002d,
];

pub const MAX_DEGREE: u32 = 16;

/// The field GF(q), q = 2^s, with elements encoded as polynomial bitmasks
/// modulo the primitive polynomial. The class of `x` generates the
/// multiplicative group.
#[derive(Clone, Debug, Serialize)]
pub struct FieldTable {
    s: u32,
    q: u32,
    primitive_poly: u32,
    #[serde(skip)]
    exp_table: Vec<u32>,
    #[serde(skip)]
    log_table: Vec<u32>,
}

impl FieldTable {
    pub fn build(s: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&s) {
            return Err(Error::DegreeOutOfRange(s));
        }
        let q = 1u32 << s;
        let poly = PRIMITIVE_POLYNOMIALS[s as usize - 1];
        let order = (q - 1) as usize;
        let mut exp_table = vec![0u32; order];
        let mut log_table = vec![u32::MAX; q as usize];
        let mut x = 1u32;
        for (k, slot) in exp_table.iter_mut().enumerate() {
            if log_table[x as usize] != u32::MAX {
                return Err(Error::Internal(format!(
                    "polynomial {poly:#x} is not primitive"
                )));
            }
            *slot = x;
            log_table[x as usize] = k as u32;
            x = times_x(x, poly, s);
        }
        if x != 1 {
            return Err(Error::Internal(format!("polynomial {poly:#x} is not primitive")));
        }
        Ok(FieldTable {
            s,
            q,
            primitive_poly: poly,
            exp_table,
            log_table,
        })
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn primitive_poly(&self) -> u32 {
        self.primitive_poly
    }

    /// Order of the multiplicative group, q - 1.
    pub fn group_order(&self) -> u32 {
        self.q - 1
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    /// `g^k` for the generator g; `k` is reduced modulo q - 1.
    pub fn exp(&self, k: u64) -> u32 {
        self.exp_table[(k % self.group_order() as u64) as usize]
    }

    /// Discrete logarithm; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        match a {
            0 => None,
            _ => Some(self.log_table[a as usize]),
        }
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = self.log_table[a as usize] as u64 + self.log_table[b as usize] as u64;
        self.exp(k)
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        let l = self.log(a)? as u64;
        Some(self.exp(self.group_order() as u64 - l))
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        Some(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        match (a, e) {
            (_, 0) => 1,
            (0, _) => 0,
            _ => self.exp(self.log_table[a as usize] as u64 * e),
        }
    }

    pub fn generator(&self) -> u32 {
        self.exp(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }
}

fn times_x(a: u32, poly: u32, s: u32) -> u32 {
    let shifted = a << 1;
    if shifted >> s & 1 == 1 {
        shifted ^ poly
    } else {
        shifted
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Carry-less product reduced modulo `poly`, computed bit by bit.
    fn schoolbook(a: u32, b: u32, poly: u32, s: u32) -> u32 {
        let mut prod = 0u64;
        for i in 0..s {
            if b >> i & 1 == 1 {
                prod ^= (a as u64) << i;
            }
        }
        for bit in (s..2 * s).rev() {
            if prod >> bit & 1 == 1 {
                prod ^= (poly as u64) << (bit - s);
            }
        }
        prod as u32
    }

    #[test]
    fn gf2_is_boolean() {
        let f = FieldTable::build(1).unwrap();
        assert_eq!(f.order(), 2);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(f.mul(a, b), a & b);
            }
        }
    }

    #[test]
    fn gf4_generator_has_period_three() {
        let f = FieldTable::build(2).unwrap();
        let g = f.generator();
        assert_ne!(g, 1);
        assert_ne!(f.pow(g, 2), 1);
        assert_eq!(f.pow(g, 3), 1);
    }

    #[test]
    fn gf8_matches_schoolbook_products() {
        let f = FieldTable::build(3).unwrap();
        let distinct: std::collections::HashSet<u32> = (0..7).map(|k| f.exp(k)).collect();
        assert_eq!(distinct.len(), 7);
        assert_eq!(f.exp(7), f.exp(0));
        for a in 1..8 {
            for b in 1..8 {
                assert_eq!(f.mul(a, b), schoolbook(a, b, f.primitive_poly(), 3));
            }
        }
    }

    #[test]
    fn every_degree_builds_with_inverses() {
        for s in 1..=MAX_DEGREE {
            let f = FieldTable::build(s).unwrap();
            let n = f.group_order() as u64;
            for k in (0..n).step_by((n as usize / 97).max(1)) {
                assert_eq!(f.log(f.exp(k)), Some(k as u32));
                let a = f.exp(k);
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn degree_out_of_range() {
        assert_eq!(FieldTable::build(0).unwrap_err(), Error::DegreeOutOfRange(0));
        assert_eq!(FieldTable::build(17).unwrap_err(), Error::DegreeOutOfRange(17));
        assert!(FieldTable::build(3).unwrap().inv(0).is_none());
    }
}
