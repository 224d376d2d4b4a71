use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Mono, PolyQAT};

/// `num / (1 - q)^dpow`, kept normalized: `num` is not divisible by `1 - q`
/// unless `dpow == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalQAT {
    num: PolyQAT,
    dpow: u32,
}

/// Divides by `1 - q` if possible. For each `(a, t)` slice the quotient
/// coefficients are the partial sums of the slice's q-coefficients.
pub(crate) fn div_one_minus_q(p: &PolyQAT) -> Option<PolyQAT> {
    if p.is_zero() {
        return Some(PolyQAT::zero());
    }
    if !p.at_q_one().is_zero() {
        return None;
    }
    let mut out = PolyQAT::zero();
    let mut slices: std::collections::BTreeMap<(u32, u32), Vec<(u32, BigInt)>> = Default::default();
    for (m, c) in p.terms() {
        slices.entry((m.a, m.t)).or_default().push((m.q, c.clone()));
    }
    for ((ea, et), mut coeffs) in slices {
        coeffs.sort_by_key(|(e, _)| *e);
        let top = coeffs.last().map(|(e, _)| *e).unwrap_or(0);
        let mut running = BigInt::zero();
        let mut it = coeffs.into_iter().peekable();
        for k in 0..top {
            while let Some((e, _)) = it.peek() {
                if *e == k {
                    running += it.next().unwrap().1;
                } else {
                    break;
                }
            }
            out.add_term(Mono::new(k, ea, et), running.clone());
        }
    }
    Some(out)
}

impl RationalQAT {
    pub fn new(num: PolyQAT, dpow: u32) -> Self {
        RationalQAT { num, dpow }.normalize()
    }

    pub fn from_poly(num: PolyQAT) -> Self {
        RationalQAT { num, dpow: 0 }
    }

    pub fn zero() -> Self {
        Self::from_poly(PolyQAT::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(PolyQAT::one())
    }

    pub fn num(&self) -> &PolyQAT {
        &self.num
    }

    pub fn dpow(&self) -> u32 {
        self.dpow
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cancels factors of `1 - q` between numerator and denominator.
    pub fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            self.dpow = 0;
            return self;
        }
        while self.dpow > 0 {
            match div_one_minus_q(&self.num) {
                Some(n) => {
                    self.num = n;
                    self.dpow -= 1;
                }
                None => break,
            }
        }
        self
    }

    /// Multiplies by `(1 - q)^-k`.
    pub fn div_one_minus_q_pow(&self, k: u32) -> Self {
        RationalQAT { num: self.num.clone(), dpow: self.dpow + k }.normalize()
    }

    /// Multiplies by `(1 - q)^k`.
    pub fn mul_one_minus_q_pow(&self, k: u32) -> Self {
        if k <= self.dpow {
            return RationalQAT { num: self.num.clone(), dpow: self.dpow - k };
        }
        RationalQAT { num: &self.num * &PolyQAT::one_minus_q().pow(k - self.dpow), dpow: 0 }
    }

    /// Numerator over `(1 - q)^d` for some `d >= dpow`.
    pub fn numerator_at(&self, d: u32) -> PolyQAT {
        assert!(d >= self.dpow);
        &self.num * &PolyQAT::one_minus_q().pow(d - self.dpow)
    }

    pub fn mul_poly(&self, p: &PolyQAT) -> Self {
        RationalQAT { num: &self.num * p, dpow: self.dpow }.normalize()
    }

    /// Power-series expansion in `q`, truncated to q-degree `order`.
    pub fn q_series(&self, order: u32) -> PolyQAT {
        // 1/(1-q)^d = sum_k binom(k+d-1, d-1) q^k
        let mut geo = PolyQAT::zero();
        for k in 0..=order {
            geo.add_term(Mono::new(k, 0, 0), binomial(k + self.dpow.max(1) - 1, self.dpow.max(1) - 1));
        }
        if self.dpow == 0 {
            return self.num.truncate_q(order);
        }
        (&self.num.truncate_q(order) * &geo).truncate_q(order)
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

impl Add<&RationalQAT> for &RationalQAT {
    type Output = RationalQAT;
    fn add(self, rhs: &RationalQAT) -> RationalQAT {
        let d = self.dpow.max(rhs.dpow);
        RationalQAT { num: self.numerator_at(d) + rhs.numerator_at(d), dpow: d }.normalize()
    }
}

impl Add for RationalQAT {
    type Output = RationalQAT;
    fn add(self, rhs: RationalQAT) -> RationalQAT {
        &self + &rhs
    }
}

impl Mul<&RationalQAT> for &RationalQAT {
    type Output = RationalQAT;
    fn mul(self, rhs: &RationalQAT) -> RationalQAT {
        RationalQAT { num: &self.num * &rhs.num, dpow: self.dpow + rhs.dpow }.normalize()
    }
}

impl Mul for RationalQAT {
    type Output = RationalQAT;
    fn mul(self, rhs: RationalQAT) -> RationalQAT {
        &self * &rhs
    }
}

impl std::iter::Sum for RationalQAT {
    fn sum<I: Iterator<Item = RationalQAT>>(iter: I) -> Self {
        iter.fold(RationalQAT::zero(), |acc, x| &acc + &x)
    }
}
