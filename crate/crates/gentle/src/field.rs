//! Arithmetic in a prime field `F_p`.

use serde::{Deserialize, Serialize};

/// A prime field of small order. Elements are represented by `u32` in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    p: u32,
}

impl Default for Field {
    fn default() -> Self {
        Field { p: 2 }
    }
}

impl Field {
    /// Returns `None` unless `p` is a prime below 2^15.
    pub fn new(p: u32) -> Option<Field> {
        if !(2..1 << 15).contains(&p) {
            return None;
        }
        let mut d = 2;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return None;
            }
            d += 1;
        }
        Some(Field { p })
    }

    pub fn order(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (self.p as i64, a as i64);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        t.rem_euclid(self.p as i64) as u32
    }

    /// Reduces an arbitrary integer into the field.
    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    /// `(-1)^k`.
    pub fn sign(self, k: i32) -> u32 {
        if k.rem_euclid(2) == 0 {
            1
        } else {
            self.neg(1)
        }
    }

    /// Nonzero elements in increasing order.
    pub fn units(self) -> impl Iterator<Item = u32> {
        1..self.p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for p in [2, 3, 5, 7, 13] {
            let f = Field::new(p).unwrap();
            for a in f.units() {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn rejects_composites() {
        assert!(Field::new(4).is_none());
        assert!(Field::new(1).is_none());
        assert!(Field::new(9).is_none());
        assert!(Field::new(11).is_some());
    }
}
