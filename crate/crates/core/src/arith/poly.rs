use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::field::{PrimeModulus, Scalar};

/// Univariate polynomial over F_p. Coefficients run low-to-high with no
/// trailing zeros, so the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeModulus,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: PrimeModulus, coeffs: Vec<Scalar>) -> Self {
        let mut coeffs: Vec<Scalar> = coeffs.into_iter().map(|c| field.reduce(c)).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_signed(field: PrimeModulus, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: PrimeModulus) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(field: PrimeModulus, c: Scalar) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: PrimeModulus) -> Self {
        Self::constant(field, 1)
    }

    /// `c · t^k`
    pub fn monomial(field: PrimeModulus, c: Scalar, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::new(field, v)
    }

    /// `1 - t`
    pub fn one_minus_t(field: PrimeModulus) -> Self {
        Self::from_signed(field, &[1, -1])
    }

    pub fn field(&self) -> PrimeModulus {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Nonzero constant multiples of a power of the variable, i.e. the units
    /// of the Laurent ring F_p[t, 1/t].
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().filter(|&&c| c != 0).count() == 1
    }

    pub fn scale(&self, c: Scalar) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    pub fn eval(&self, x: Scalar) -> Scalar {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Quotient and remainder. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let f = self.field;
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv_lead = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut quot = vec![0; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], inv_lead);
            quot[k] = c;
            if c != 0 {
                for (j, &dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = f.sub(rem[k + j], f.mul(c, dc));
                }
            }
        }
        rem.truncate(dd);
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Multiplicity of the root `t = a`.
    pub fn root_multiplicity(&self, a: Scalar) -> usize {
        assert!(!self.is_zero());
        let lin = Poly::new(self.field, vec![self.field.neg(a), 1]);
        let mut cur = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = cur.div_rem(&lin);
            if !r.is_zero() {
                return k;
            }
            cur = q;
            k += 1;
        }
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(self.field), |acc, _| &acc * self)
    }
}

/// Monic greatest common divisor. `gcd(0, 0)` is defined as zero.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        a = b;
        b = r;
    }
    a.monic()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(f, (0..n).map(|k| f.add(self.coeff(k), rhs.coeff(k))).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(f, (0..n).map(|k| f.sub(self.coeff(k), rhs.coeff(k))).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Coefficient list, low to high.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> PrimeModulus {
        PrimeModulus::new(7).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let f = f7();
        let t2m1 = Poly::from_signed(f, &[-1, 0, 1]);
        let tm1 = Poly::from_signed(f, &[-1, 1]);
        assert_eq!(poly_gcd(&t2m1, &tm1), tm1);
        let t = Poly::monomial(f, 1, 1);
        assert_eq!(poly_gcd(&t, &Poly::one(f)), Poly::one(f));
        let t3m1 = Poly::from_signed(f, &[-1, 0, 0, 1]);
        assert_eq!(poly_gcd(&t3m1, &t2m1), tm1);
        assert_eq!(poly_gcd(&Poly::zero(f), &t2m1), t2m1);
    }

    #[test]
    fn division_identity() {
        let f = f7();
        let a = Poly::from_signed(f, &[3, -2, 5, 1, 4]);
        let b = Poly::from_signed(f, &[1, 2, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn root_multiplicity_at_one() {
        let f = f7();
        let p = &Poly::one_minus_t(f).pow(3) * &Poly::from_signed(f, &[1, 1]);
        assert_eq!(p.root_multiplicity(1), 3);
        assert_eq!(p.root_multiplicity(6), 1);
        assert_eq!(p.root_multiplicity(2), 0);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Poly::new(f7(), vec![1, 7, 14]);
        assert_eq!(p.coeffs(), &[1]);
        assert!(Poly::new(f7(), vec![0, 0]).is_zero());
        assert_eq!(Poly::zero(f7()).degree(), None);
    }
}
