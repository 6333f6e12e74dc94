use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::Group;

/// An element of F_p, stored as its canonical residue in `[0, p)`.
pub type Scalar = u64;

/// A prime modulus together with the field operations of F_p.
///
/// Moduli stay well below 2^31, so products of two residues fit in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl Serialize for PrimeModulus {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.0)
    }
}

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidPrime { p, reason: "not prime".into() });
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidPrime { p, reason: "too large".into() });
        }
        Ok(PrimeModulus(p))
    }

    /// Validates `p` for use with `group`: prime, `p ≡ 1 (mod exponent)` and
    /// `p > |G|` (which also rules out `p | |G|`).
    pub fn for_group(p: u64, group: &Group) -> Result<Self> {
        let m = Self::new(p)?;
        let exp = group.exponent() as u64;
        if !(p - 1).is_multiple_of(exp) {
            return Err(Error::InvalidPrime {
                p,
                reason: format!("not congruent to 1 mod exponent {exp}"),
            });
        }
        if p <= group.order() as u64 {
            return Err(Error::InvalidPrime {
                p,
                reason: format!("must exceed group order {}", group.order()),
            });
        }
        Ok(m)
    }

    #[inline]
    pub fn p(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce(self, a: u64) -> Scalar {
        a % self.0
    }

    pub fn from_i64(self, a: i64) -> Scalar {
        a.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: Scalar, b: Scalar) -> Scalar {
        a * b % self.0
    }

    pub fn pow(self, mut base: Scalar, mut e: u64) -> Scalar {
        let mut acc = 1 % self.0;
        base %= self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: Scalar) -> Scalar {
        assert!(!a.is_multiple_of(self.0), "inverse of zero in F_{}", self.0);
        self.pow(a, self.0 - 2)
    }

    pub fn div(self, a: Scalar, b: Scalar) -> Scalar {
        self.mul(a, self.inv(b))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(self, a: Scalar) -> u64 {
        assert!(a != 0);
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Smallest generator of F_p^*.
    pub fn primitive_root(self) -> Scalar {
        if self.0 == 2 {
            return 1;
        }
        let phi = self.0 - 1;
        let factors = prime_factors(phi);
        (2..self.0)
            .find(|&g| factors.iter().all(|&q| self.pow(g, phi / q) != 1))
            .expect("F_p^* is cyclic")
    }

    /// The element `r^((p-1)/n)` for the smallest primitive root `r`; it has
    /// multiplicative order exactly `n`. Requires `n | p - 1`.
    pub fn root_of_unity(self, n: u64) -> Scalar {
        assert!(n >= 1 && (self.0 - 1).is_multiple_of(n), "{n} does not divide p - 1");
        self.pow(self.primitive_root(), (self.0 - 1) / n)
    }

    /// Signed representative in `(-p/2, p/2]`, used only for display.
    pub fn signed(self, a: Scalar) -> i64 {
        if a > self.0 / 2 {
            a as i64 - self.0 as i64
        } else {
            a as i64
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p ≡ 1 (mod exponent(G))` with `p > |G|`.
pub fn choose_prime(group: &Group) -> PrimeModulus {
    let exp = group.exponent() as u64;
    let order = group.order() as u64;
    let mut p = exp + 1;
    loop {
        if p > order && is_prime(p) {
            return PrimeModulus(p);
        }
        p += exp;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtin;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primes_for_small_groups() {
        assert_eq!(choose_prime(&builtin("S3").unwrap()).p(), 7);
        assert_eq!(choose_prime(&builtin("C1").unwrap()).p(), 2);
        assert_eq!(choose_prime(&builtin("Q8").unwrap()).p(), 13);
        assert_eq!(choose_prime(&builtin("C4").unwrap()).p(), 5);
        assert_eq!(choose_prime(&builtin("A4").unwrap()).p(), 13);
    }

    #[test]
    fn prime_override_validation() {
        let s3 = builtin("S3").unwrap();
        assert!(PrimeModulus::for_group(13, &s3).is_ok());
        assert!(PrimeModulus::for_group(11, &s3).is_err());
        assert!(PrimeModulus::for_group(9, &s3).is_err());
        let c2 = builtin("C2").unwrap();
        assert!(PrimeModulus::for_group(3, &c2).is_ok());
        assert!(PrimeModulus::for_group(2, &c2).is_err());
    }

    #[test]
    fn roots_of_unity() {
        let f = PrimeModulus::new(7).unwrap();
        assert_eq!(f.primitive_root(), 3);
        assert_eq!(f.root_of_unity(3), 2);
        assert_eq!(f.root_of_unity(6), 3);
        assert_eq!(f.order(f.root_of_unity(6)), 6);
        assert_eq!(PrimeModulus::new(3).unwrap().root_of_unity(2), 2);
        assert_eq!(PrimeModulus::new(2).unwrap().root_of_unity(1), 1);
    }

    #[test]
    fn field_axioms_sampled() {
        for p in [2u64, 3, 7, 13, 97] {
            let f = PrimeModulus::new(p).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p);
            for _ in 0..10_000 {
                let (a, b, c) = (rng.gen_range(0..p), rng.gen_range(0..p), rng.gen_range(0..p));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
            }
        }
    }
}
