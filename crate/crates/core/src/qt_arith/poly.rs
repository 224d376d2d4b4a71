use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent triple of a monomial `q^q a^a t^t`.
///
/// The ordering is graded: lower total degree first, and within one degree
/// the larger `(q, a, t)` tuple first, so that iteration yields
/// `1, q, a, t, q^2, q*a, ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    pub q: u32,
    pub a: u32,
    pub t: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, a: 0, t: 0 };

    pub const fn new(q: u32, a: u32, t: u32) -> Self {
        Mono { q, a, t }
    }

    pub fn degree(&self) -> u32 {
        self.q + self.a + self.t
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.q <= other.q && self.a <= other.a && self.t <= other.t
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| (other.q, other.a, other.t).cmp(&(self.q, self.a, self.t)))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `q, a, t` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so structural
/// equality is polynomial equality.
impl Mul for Mono {
    type Output = Mono;
    fn mul(self, other: Mono) -> Mono {
        Mono::new(self.q + other.q, self.a + other.a, self.t + other.t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQAT {
    terms: BTreeMap<Mono, BigInt>,
}

impl PolyQAT {
    pub fn zero() -> Self {
        PolyQAT { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn term(m: Mono, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PolyQAT { terms }
    }

    pub fn monomial(q: u32, a: u32, t: u32) -> Self {
        Self::term(Mono::new(q, a, t), 1)
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn a() -> Self {
        Self::monomial(0, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(0, 0, 1)
    }

    /// `1 - q`.
    pub fn one_minus_q() -> Self {
        Self::one() - Self::q()
    }

    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Mono, C)>,
        C: Into<BigInt>,
    {
        let mut p = PolyQAT::zero();
        for (m, c) in iter {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Mono::ONE)
    }

    /// A single term `c * q^i a^j t^k`.
    pub fn as_monomial(&self) -> Option<(Mono, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded order (lowest degree first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest term in graded order.
    pub fn leading_term(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.keys().map(|m| m.q).max().unwrap_or(0)
    }

    pub fn degree_a(&self) -> u32 {
        self.terms.keys().map(|m| m.a).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.keys().map(|m| m.t).max().unwrap_or(0)
    }

    pub fn uses_a(&self) -> bool {
        self.terms.keys().any(|m| m.a > 0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return PolyQAT::zero();
        }
        PolyQAT { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        PolyQAT { terms: self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = PolyQAT::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// gcd of all integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact division by an integer; `None` when some coefficient is not divisible.
    pub fn div_int_exact(&self, d: &BigInt) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (quo, rem) = c.div_rem(d);
            if !rem.is_zero() {
                return None;
            }
            terms.insert(*m, quo);
        }
        Some(PolyQAT { terms })
    }

    /// Exact division by a monomial; `None` when some term is not divisible.
    pub fn div_mono_exact(&self, m: Mono) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            if !m.divides(k) {
                return None;
            }
            terms.insert(Mono::new(k.q - m.q, k.a - m.a, k.t - m.t), c.clone());
        }
        Some(PolyQAT { terms })
    }

    /// Componentwise minimum exponent over all terms (the largest monomial divisor).
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Mono::ONE };
        it.fold(*first, |acc, m| Mono::new(acc.q.min(m.q), acc.a.min(m.a), acc.t.min(m.t)))
    }

    /// Drops every term of q-degree above `order`.
    pub fn truncate_q(&self, order: u32) -> Self {
        PolyQAT { terms: self.terms.iter().filter(|(m, _)| m.q <= order).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        PolyQAT { terms: self.terms.iter().map(|(m, c)| (Mono::new(m.t, m.a, m.q), c.clone())).collect() }
    }

    /// Sets `a = 0`.
    pub fn drop_a(&self) -> Self {
        PolyQAT { terms: self.terms.iter().filter(|(m, _)| m.a == 0).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Coefficient of `a^d`, as a polynomial in `q, t`.
    pub fn a_coefficient(&self, d: u32) -> Self {
        PolyQAT {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.a == d)
                .map(|(m, c)| (Mono::new(m.q, 0, m.t), c.clone()))
                .collect(),
        }
    }

    /// Replaces `t` by the polynomial `s`.
    pub fn subs_t(&self, s: &PolyQAT) -> Self {
        let max = self.degree_t() as usize;
        let mut powers = Vec::with_capacity(max + 1);
        powers.push(PolyQAT::one());
        for k in 1..=max {
            let next = &powers[k - 1] * s;
            powers.push(next);
        }
        let mut out = PolyQAT::zero();
        for (m, c) in &self.terms {
            let head = PolyQAT::term(Mono::new(m.q, m.a, 0), c.clone());
            out += &(&head * &powers[m.t as usize]);
        }
        out
    }

    /// Evaluates at `q = 1` (used for divisibility by `1 - q`).
    pub fn at_q_one(&self) -> Self {
        let mut out = PolyQAT::zero();
        for (m, c) in &self.terms {
            out.add_term(Mono::new(0, m.a, m.t), c.clone());
        }
        out
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn first_negative(&self) -> Option<(Mono, BigInt)> {
        self.terms.iter().find(|(_, c)| c.is_negative()).map(|(m, c)| (*m, c.clone()))
    }

    /// Evaluates at integer points.
    pub fn eval(&self, q: &BigInt, a: &BigInt, t: &BigInt) -> BigInt {
        use num_traits::Pow;
        self.terms.iter().map(|(m, c)| c * Pow::pow(q, m.q) * Pow::pow(a, m.a) * Pow::pow(t, m.t)).sum()
    }
}

impl From<i64> for PolyQAT {
    fn from(c: i64) -> Self {
        PolyQAT::constant(c)
    }
}

impl AddAssign<&PolyQAT> for PolyQAT {
    fn add_assign(&mut self, rhs: &PolyQAT) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&PolyQAT> for PolyQAT {
    fn sub_assign(&mut self, rhs: &PolyQAT) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add<&PolyQAT> for &PolyQAT {
    type Output = PolyQAT;
    fn add(self, rhs: &PolyQAT) -> PolyQAT {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&PolyQAT> for &PolyQAT {
    type Output = PolyQAT;
    fn sub(self, rhs: &PolyQAT) -> PolyQAT {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&PolyQAT> for &PolyQAT {
    type Output = PolyQAT;
    fn mul(self, rhs: &PolyQAT) -> PolyQAT {
        if self.is_zero() || rhs.is_zero() {
            return PolyQAT::zero();
        }
        let mut acc: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(*m1 * *m2).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        PolyQAT { terms: acc }
    }
}

impl Neg for &PolyQAT {
    type Output = PolyQAT;
    fn neg(self) -> PolyQAT {
        PolyQAT { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<PolyQAT> for PolyQAT {
            type Output = PolyQAT;
            fn $f(self, rhs: PolyQAT) -> PolyQAT {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&PolyQAT> for PolyQAT {
            type Output = PolyQAT;
            fn $f(self, rhs: &PolyQAT) -> PolyQAT {
                (&self).$f(rhs)
            }
        }
        impl $tr<PolyQAT> for &PolyQAT {
            type Output = PolyQAT;
            fn $f(self, rhs: PolyQAT) -> PolyQAT {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyQAT {
    type Output = PolyQAT;
    fn neg(self) -> PolyQAT {
        -&self
    }
}

impl std::iter::Sum for PolyQAT {
    fn sum<I: Iterator<Item = PolyQAT>>(iter: I) -> Self {
        iter.fold(PolyQAT::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let one_plus_q = PolyQAT::one() + PolyQAT::q();
        let p = &one_plus_q * &PolyQAT::one_minus_q();
        assert_eq!(p, PolyQAT::one() - PolyQAT::monomial(2, 0, 0));
    }

    #[test]
    fn additive_identity() {
        let p = PolyQAT::t() + PolyQAT::a().scale(&BigInt::from(3));
        assert_eq!(&p + &PolyQAT::zero(), p);
    }

    #[test]
    fn hand_expansion() {
        let lhs = (PolyQAT::t() + PolyQAT::a()) * (PolyQAT::one() + PolyQAT::a());
        let rhs = PolyQAT::t() + PolyQAT::a() + PolyQAT::monomial(0, 1, 1) + PolyQAT::monomial(0, 2, 0);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = PolyQAT::q() - PolyQAT::q();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn graded_order() {
        let p = PolyQAT::one() + PolyQAT::q() + PolyQAT::t() + PolyQAT::a() + PolyQAT::monomial(1, 0, 1);
        let order: Vec<Mono> = p.terms().map(|(m, _)| *m).collect();
        assert_eq!(
            order,
            vec![Mono::ONE, Mono::new(1, 0, 0), Mono::new(0, 1, 0), Mono::new(0, 0, 1), Mono::new(1, 0, 1)]
        );
    }

    #[test]
    fn subs_t_shift() {
        // t^2 -> (1+t)^2
        let p = PolyQAT::monomial(0, 0, 2);
        let s = PolyQAT::one() + PolyQAT::t();
        assert_eq!(p.subs_t(&s), PolyQAT::one() + PolyQAT::t().scale(&2.into()) + PolyQAT::monomial(0, 0, 2));
    }
}
