use std::fmt;

use serde::Serialize;

use super::field::{PrimeModulus, Scalar};
use super::poly::{poly_gcd, Poly};
use crate::error::{Error, Result};

/// A rational function `num / den` over F_p, always stored reduced with a
/// monic denominator, so structural equality is equality of functions.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Panics on a zero denominator.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let field = den.field();
        if num.is_zero() {
            return RatFunc { num, den: Poly::one(field) };
        }
        let g = poly_gcd(&num, &den);
        let num = num.exact_div(&g);
        let den = den.exact_div(&g);
        let lead = field.inv(den.leading());
        RatFunc { num: num.scale(lead), den: den.scale(lead) }
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::one(p.field());
        RatFunc { num: p, den: one }
    }

    pub fn zero(field: PrimeModulus) -> Self {
        Self::from_poly(Poly::zero(field))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> PrimeModulus {
        self.den.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        let g = poly_gcd(&self.den, &other.den);
        let a = other.den.exact_div(&g);
        let b = self.den.exact_div(&g);
        let num = &(&self.num * &a) + &(&other.num * &b);
        RatFunc::new(num, &self.den * &a)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &other.num, &self.den * &other.den)
    }

    /// Panics if `other` is zero.
    pub fn div(&self, other: &RatFunc) -> RatFunc {
        assert!(!other.is_zero(), "division by zero rational function");
        RatFunc::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, c: Scalar) -> RatFunc {
        RatFunc::new(self.num.scale(c), self.den.clone())
    }
}

/// First `bound + 1` coefficients of the power series of `f` at `t = 0`.
pub fn series_prefix(f: &RatFunc, bound: usize) -> Result<Vec<Scalar>> {
    let field = f.field();
    let d0 = f.den.coeff(0);
    if d0 == 0 {
        return Err(Error::PoleAtZero);
    }
    let inv0 = field.inv(d0);
    let mut out: Vec<Scalar> = Vec::with_capacity(bound + 1);
    for k in 0..=bound {
        let mut acc = f.num.coeff(k);
        let top = k.min(f.den.degree().unwrap_or(0));
        for j in 1..=top {
            acc = field.sub(acc, field.mul(f.den.coeff(j), out[k - j]));
        }
        out.push(field.mul(acc, inv0));
    }
    Ok(out)
}

/// Value at `t = 1` of the reduced form of `(1 - t)^n · f`.
pub fn limit_at_one(f: &RatFunc, n: usize) -> Result<Scalar> {
    let field = f.field();
    if f.is_zero() {
        return Ok(0);
    }
    let pole = f.den.root_multiplicity(1);
    if pole > n {
        return Err(Error::ResidualPole { cleared: n });
    }
    let omt = Poly::one_minus_t(field);
    let den = f.den.exact_div(&omt.pow(pole));
    let num = &f.num * &omt.pow(n - pole);
    Ok(field.div(num.eval(1), den.eval(1)))
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> PrimeModulus {
        PrimeModulus::new(7).unwrap()
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_signed(f7(), num), Poly::from_signed(f7(), den))
    }

    /// Long division of power series written out independently of
    /// `series_prefix`: subtract multiples of the shifted denominator.
    fn long_division(num: &[i64], den: &[i64], bound: usize, p: i64) -> Vec<i64> {
        let mut rem: Vec<i64> = (0..=bound + den.len()).map(|k| num.get(k).copied().unwrap_or(0)).collect();
        let d0_inv = (1..p).find(|x| (x * den[0]).rem_euclid(p) == 1).unwrap();
        let mut out = Vec::new();
        for k in 0..=bound {
            let c = (rem[k] * d0_inv).rem_euclid(p);
            out.push(c);
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] = (rem[k + j] - c * d).rem_euclid(p);
            }
        }
        out
    }

    #[test]
    fn series_examples() {
        let got = series_prefix(&rf(&[1], &[1, 0, 0, -1]), 6).unwrap();
        assert_eq!(got, vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(long_division(&[1], &[1, 0, 0, -1], 6, 7), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(series_prefix(&rf(&[1], &[1, -1]), 3).unwrap(), vec![1, 1, 1, 1]);
        let got = series_prefix(&rf(&[0, 1], &[1, 0, -1]), 4).unwrap();
        assert_eq!(got, vec![0, 1, 0, 1, 0]);
        assert_eq!(long_division(&[0, 1], &[1, 0, -1], 4, 7), vec![0, 1, 0, 1, 0]);
    }

    #[test]
    fn pole_at_zero() {
        assert_eq!(series_prefix(&rf(&[1], &[0, 1]), 3), Err(Error::PoleAtZero));
    }

    #[test]
    fn limit_examples() {
        assert_eq!(limit_at_one(&rf(&[1], &[1, -2, 1]), 2).unwrap(), 1);
        assert_eq!(limit_at_one(&rf(&[1, 1], &[1, -1]), 1).unwrap(), 2);
        assert_eq!(limit_at_one(&rf(&[1], &[1, 0, 0, -1]), 1).unwrap(), 5);
        assert_eq!(
            limit_at_one(&rf(&[1], &[1, -2, 1]), 1),
            Err(Error::ResidualPole { cleared: 1 })
        );
        // zero of order one at t = 1 with no pole
        assert_eq!(limit_at_one(&rf(&[1, -1], &[1]), 0).unwrap(), 0);
    }

    #[test]
    fn stored_reduced_with_monic_denominator() {
        let f = rf(&[-1, 0, 1], &[2, -2]);
        // (t^2 - 1) / (2 - 2t) = -(t + 1)/2
        assert_eq!(f.den().coeffs(), &[1]);
        assert_eq!(f, rf(&[-4, -4], &[1]));
        assert_eq!(f.to_string(), "[3, 3] / [1]");
    }

    fn arb_poly() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(0i64..7, 0..5)
    }

    fn arb_den() -> impl Strategy<Value = Vec<i64>> {
        (1i64..7, prop::collection::vec(0i64..7, 0..4)).prop_map(|(c0, rest)| {
            let mut v = vec![c0];
            v.extend(rest);
            v
        })
    }

    proptest! {
        #[test]
        fn series_of_product_is_cauchy_product(
            (n1, d1, n2, d2) in (arb_poly(), arb_den(), arb_poly(), arb_den()),
            bound in 0usize..10,
        ) {
            let f = rf(&n1, &d1);
            let g = rf(&n2, &d2);
            let fs = series_prefix(&f, bound).unwrap();
            let gs = series_prefix(&g, bound).unwrap();
            let fg = series_prefix(&f.mul(&g), bound).unwrap();
            let field = f7();
            for k in 0..=bound {
                let mut c = 0;
                for j in 0..=k {
                    c = field.add(c, field.mul(fs[j], gs[k - j]));
                }
                prop_assert_eq!(fg[k], c);
            }
        }

        #[test]
        fn limit_without_clearing_is_evaluation(num in arb_poly(), den in arb_den()) {
            let field = f7();
            let d = Poly::from_signed(field, &den);
            prop_assume!(d.eval(1) != 0);
            let n = Poly::from_signed(field, &num);
            let f = RatFunc::new(n.clone(), d.clone());
            prop_assert_eq!(limit_at_one(&f, 0).unwrap(), field.div(n.eval(1), d.eval(1)));
        }

        #[test]
        fn addition_matches_series(
            (n1, d1, n2, d2) in (arb_poly(), arb_den(), arb_poly(), arb_den()),
        ) {
            let f = rf(&n1, &d1);
            let g = rf(&n2, &d2);
            let field = f7();
            let s = series_prefix(&f.add(&g), 8).unwrap();
            let fs = series_prefix(&f, 8).unwrap();
            let gs = series_prefix(&g, 8).unwrap();
            for k in 0..=8 {
                prop_assert_eq!(s[k], field.add(fs[k], gs[k]));
            }
        }
    }
}
