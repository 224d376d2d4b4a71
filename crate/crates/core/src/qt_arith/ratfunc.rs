use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense;
use super::poly::{Mono, PolyQAT};
use super::rational::{div_one_minus_q, RationalQAT};
use crate::error::{Error, Result};

/// Element of `Q(q, t)` as a fraction of integer polynomials.
///
/// Values are reduced by polynomial gcd and the leading term of the
/// denominator is positive, so the representation is canonical. Equality
/// is nevertheless implemented by cross-multiplication.
#[derive(Debug, Clone)]
pub struct RatFuncQT {
    num: PolyQAT,
    den: PolyQAT,
}

impl RatFuncQT {
    pub fn new(num: PolyQAT, den: PolyQAT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(num: PolyQAT) -> Self {
        RatFuncQT { num, den: PolyQAT::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(PolyQAT::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(PolyQAT::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(PolyQAT::one())
    }

    pub fn q() -> Self {
        Self::from_poly(PolyQAT::q())
    }

    pub fn t() -> Self {
        Self::from_poly(PolyQAT::t())
    }

    pub fn num(&self) -> &PolyQAT {
        &self.num
    }

    pub fn den(&self) -> &PolyQAT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&PolyQAT> {
        self.is_polynomial().then_some(&self.num)
    }

    fn reduced(num: PolyQAT, den: PolyQAT) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_constant() || den.len() == 1 || num.len() == 1 {
            let (mn, md) = (num.min_mono(), den.min_mono());
            let m = Mono::new(mn.q.min(md.q), 0, mn.t.min(md.t));
            let c = num.content().gcd(&den.content());
            let num = num.div_mono_exact(m).and_then(|p| p.div_int_exact(&c)).expect("common factor");
            let den = den.div_mono_exact(m).and_then(|p| p.div_int_exact(&c)).expect("common factor");
            (num, den)
        } else {
            let g = dense::gcd(&num, &den);
            (
                dense::div_exact(&num, &g).expect("gcd divides numerator"),
                dense::div_exact(&den, &g).expect("gcd divides denominator"),
            )
        };
        if den.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            num = -num;
            den = -den;
        }
        RatFuncQT { num, den }
    }

    /// Cross-multiplication test.
    pub fn ratfunc_eq(&self, other: &RatFuncQT) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn inv(&self) -> Result<Self> {
        RatFuncQT::new(self.den.clone(), self.num.clone())
    }

    pub fn swap_qt(&self) -> Self {
        Self::reduced(self.num.swap_qt(), self.den.swap_qt())
    }

    /// Replaces `t` by `s` in numerator and denominator.
    pub fn subs_t(&self, s: &PolyQAT) -> Result<Self> {
        RatFuncQT::new(self.num.subs_t(s), self.den.subs_t(s))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        Self::reduced(self.num.scale(&BigInt::from(c)), self.den.clone())
    }

    pub fn mul_poly(&self, p: &PolyQAT) -> Self {
        Self::reduced(&self.num * p, self.den.clone())
    }

    /// Rewrites the value as `p / (1 - q)^k` when the denominator is
    /// `+-(1 - q)^k`.
    pub fn to_rational_qat(&self) -> Option<RationalQAT> {
        let mut den = self.den.clone();
        let mut k = 0u32;
        while !den.is_constant() {
            den = div_one_minus_q(&den)?;
            k += 1;
        }
        let c = den.coeff(&Mono::ONE);
        if c.is_one() {
            Some(RationalQAT::new(self.num.clone(), k))
        } else if c == -BigInt::one() {
            Some(RationalQAT::new(-&self.num, k))
        } else {
            None
        }
    }

    pub fn from_rational_qat(x: &RationalQAT) -> Self {
        Self::reduced(x.num().clone(), PolyQAT::one_minus_q().pow(x.dpow()))
    }

    /// Evaluates at integers; `None` when the denominator vanishes.
    pub fn eval(&self, q: i64, t: i64) -> Option<(BigInt, BigInt)> {
        let (q, t, z) = (BigInt::from(q), BigInt::from(t), BigInt::zero());
        let d = self.den.eval(&q, &z, &t);
        if d.is_zero() {
            return None;
        }
        Some((self.num.eval(&q, &z, &t), d))
    }
}

/// Common denominator of a family of fractions: returns `(D, [n_i])` with
/// `x_i = n_i / D` and `D` the lcm of the denominators.
pub fn common_denominator<'a, I>(xs: I) -> (PolyQAT, Vec<PolyQAT>)
where
    I: IntoIterator<Item = &'a RatFuncQT>,
{
    let xs: Vec<&RatFuncQT> = xs.into_iter().collect();
    let mut lcm = PolyQAT::one();
    for x in &xs {
        if x.den.is_one() || x.den == lcm {
            continue;
        }
        let g = dense::gcd(&lcm, &x.den);
        lcm = &lcm * &dense::div_exact(&x.den, &g).expect("gcd divides");
    }
    let nums = xs
        .iter()
        .map(|x| {
            if x.den == lcm {
                x.num.clone()
            } else {
                &x.num * &dense::div_exact(&lcm, &x.den).expect("denominator divides lcm")
            }
        })
        .collect();
    (lcm, nums)
}

impl PartialEq for RatFuncQT {
    fn eq(&self, other: &Self) -> bool {
        self.ratfunc_eq(other)
    }
}

impl Eq for RatFuncQT {}

impl From<PolyQAT> for RatFuncQT {
    fn from(p: PolyQAT) -> Self {
        RatFuncQT::from_poly(p)
    }
}

impl Add<&RatFuncQT> for &RatFuncQT {
    type Output = RatFuncQT;
    fn add(self, rhs: &RatFuncQT) -> RatFuncQT {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFuncQT::reduced(&self.num + &rhs.num, self.den.clone());
        }
        let (d, nums) = common_denominator([self, rhs]);
        RatFuncQT::reduced(&nums[0] + &nums[1], d)
    }
}

impl Sub<&RatFuncQT> for &RatFuncQT {
    type Output = RatFuncQT;
    fn sub(self, rhs: &RatFuncQT) -> RatFuncQT {
        self + &(-rhs)
    }
}

impl Mul<&RatFuncQT> for &RatFuncQT {
    type Output = RatFuncQT;
    fn mul(self, rhs: &RatFuncQT) -> RatFuncQT {
        if self.is_zero() || rhs.is_zero() {
            return RatFuncQT::zero();
        }
        RatFuncQT::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&RatFuncQT> for &RatFuncQT {
    type Output = RatFuncQT;
    /// Panics on division by zero.
    fn div(self, rhs: &RatFuncQT) -> RatFuncQT {
        assert!(!rhs.is_zero(), "division by zero in Q(q,t)");
        RatFuncQT::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFuncQT {
    type Output = RatFuncQT;
    fn neg(self) -> RatFuncQT {
        RatFuncQT { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFuncQT {
    type Output = RatFuncQT;
    fn neg(self) -> RatFuncQT {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFuncQT> for RatFuncQT {
            type Output = RatFuncQT;
            fn $f(self, rhs: RatFuncQT) -> RatFuncQT {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RatFuncQT> for RatFuncQT {
            type Output = RatFuncQT;
            fn $f(self, rhs: &RatFuncQT) -> RatFuncQT {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for RatFuncQT {
    fn sum<I: Iterator<Item = RatFuncQT>>(iter: I) -> Self {
        let xs: Vec<RatFuncQT> = iter.collect();
        if xs.is_empty() {
            return RatFuncQT::zero();
        }
        let (d, nums) = common_denominator(xs.iter());
        RatFuncQT::reduced(nums.into_iter().sum(), d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(terms: &[(u32, u32, i64)]) -> PolyQAT {
        PolyQAT::from_terms(terms.iter().map(|&(q, t, c)| (Mono::new(q, 0, t), c)))
    }

    fn frac(n: PolyQAT, d: PolyQAT) -> RatFuncQT {
        RatFuncQT::new(n, d).unwrap()
    }

    #[test]
    fn common_factor_cancels() {
        let x = frac(qt(&[(0, 0, 1), (2, 0, -1)]), qt(&[(0, 0, 1), (1, 0, -1)]));
        let y = RatFuncQT::from_poly(qt(&[(0, 0, 1), (1, 0, 1)]));
        assert!(x.ratfunc_eq(&y));
        assert!(x.is_polynomial());
    }

    #[test]
    fn q_over_t_differs_from_t_over_q() {
        let x = frac(PolyQAT::q(), PolyQAT::t());
        let y = frac(PolyQAT::t(), PolyQAT::q());
        assert!(!x.ratfunc_eq(&y));
    }

    #[test]
    fn factor_both_sides() {
        let x = frac(qt(&[(0, 2, 1), (0, 0, -1)]), qt(&[(0, 3, 1), (0, 0, -1)]));
        let y = frac(qt(&[(0, 1, 1), (0, 0, 1)]), qt(&[(0, 2, 1), (0, 1, 1), (0, 0, 1)]));
        assert!(x.ratfunc_eq(&y));
        assert_eq!(x.num(), y.num());
        assert_eq!(x.den(), y.den());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFuncQT::new(PolyQAT::one(), PolyQAT::zero()).unwrap_err(), Error::ZeroDenominator);
    }

    #[test]
    fn arithmetic_in_the_field() {
        // 1/(q-t) - 1/(q-t) == 0 ; (1/q + 1/t) * qt == q + t
        let x = frac(PolyQAT::one(), qt(&[(1, 0, 1), (0, 1, -1)]));
        assert!((&x - &x).is_zero());
        let s = &frac(PolyQAT::one(), PolyQAT::q()) + &frac(PolyQAT::one(), PolyQAT::t());
        let r = &s * &RatFuncQT::from_poly(qt(&[(1, 1, 1)]));
        assert_eq!(r, RatFuncQT::from_poly(qt(&[(1, 0, 1), (0, 1, 1)])));
        assert!(r.is_polynomial());
    }

    #[test]
    fn rational_qat_conversion() {
        let x = frac(PolyQAT::t(), qt(&[(0, 0, 1), (1, 0, -2), (2, 0, 1)]));
        let r = x.to_rational_qat().unwrap();
        assert_eq!(r.dpow(), 2);
        assert_eq!(r.num(), &PolyQAT::t());
        assert!(frac(PolyQAT::one(), PolyQAT::q()).to_rational_qat().is_none());
    }
}
