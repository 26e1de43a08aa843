//! Scalars of `GF(p)` for a runtime prime `p`.
//!
//! The prime travels with each scalar; mixing scalars from different fields
//! is a programming error and panics.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of `GF(p)`, stored as the residue `0 <= value < p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    p: u32,
}

/// Trial division; p stays below 100 in practice.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicative inverse of `a` mod `p` by Fermat; panics on 0.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(a % p != 0, "inverse of zero in GF({p})");
    // a^(p-2) mod p
    let mut base = u64::from(a % p);
    let mut exp = p - 2;
    let m = u64::from(p);
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u32
}

impl Fp {
    pub fn new(value: i64, p: u32) -> Self {
        debug_assert!(is_prime(p), "{p} is not prime");
        let m = i64::from(p);
        Fp {
            value: value.rem_euclid(m) as u32,
            p,
        }
    }

    pub fn zero(p: u32) -> Self {
        Fp { value: 0, p }
    }

    pub fn one(p: u32) -> Self {
        Fp { value: 1 % p, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn prime(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Self {
        Fp {
            value: inv_mod(self.value, self.p),
            p: self.p,
        }
    }

    fn check(self, rhs: Self) {
        assert_eq!(self.p, rhs.p, "mixed primes {} and {}", self.p, rhs.p);
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp {
            value: (self.value + rhs.value) % self.p,
            p: self.p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp {
            value: (self.value + self.p - rhs.value) % self.p,
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(rhs);
        Fp {
            value: (u64::from(self.value) * u64::from(rhs.value) % u64::from(self.p)) as u32,
            p: self.p,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv()
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(p: u32) -> Vec<Fp> {
        (0..p).map(|v| Fp::new(i64::from(v), p)).collect()
    }

    #[test]
    fn field_axioms_small_primes() {
        for p in [2u32, 3, 5, 7] {
            let elems = all(p);
            let zero = Fp::zero(p);
            let one = Fp::one(p);
            for &a in &elems {
                assert_eq!(a + zero, a);
                assert_eq!(a * one, a);
                assert_eq!(a + (-a), zero);
                if !a.is_zero() {
                    assert_eq!(a * a.inv(), one);
                }
                for &b in &elems {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for &c in &elems {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(97));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
    }
}
