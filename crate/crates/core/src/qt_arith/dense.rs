//! Dense recursive representation `Z[q][t]` used for exact division and gcd.
//!
//! Polynomials here only involve `q` and `t`; the `a` exponent must be zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Mono, PolyQAT};

/// Univariate integer polynomial in `q`, coefficients low to high, no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct UPoly(pub Vec<BigInt>);

impl UPoly {
    fn zero() -> Self {
        UPoly(Vec::new())
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &BigInt {
        self.0.last().expect("lc of zero polynomial")
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn scale(&self, c: &BigInt) -> Self {
        let mut p = UPoly(self.0.iter().map(|x| x * c).collect());
        p.trim();
        p
    }

    fn div_scalar(&self, c: &BigInt) -> Self {
        UPoly(self.0.iter().map(|x| x / c).collect())
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_default();
            let b = o.0.get(i).cloned().unwrap_or_default();
            v.push(a + b);
        }
        let mut p = UPoly(v);
        p.trim();
        p
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut p = UPoly(v);
        p.trim();
        p
    }

    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        UPoly(v)
    }

    pub(crate) fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let mut r = self.0.clone();
        let dl = d.lc();
        let dd = d.deg();
        let mut quo = vec![BigInt::zero(); self.deg() - dd + 1];
        for k in (0..quo.len()).rev() {
            let top = &r[k + dd];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(dl);
            if !rem.is_zero() {
                return None;
            }
            for (i, di) in d.0.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            quo[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut q = UPoly(quo);
        q.trim();
        Some(q)
    }

    fn prem(&self, d: &Self) -> Self {
        let dd = d.deg();
        let lcd = d.lc().clone();
        let mut r = self.clone();
        if r.is_zero() || r.deg() < dd {
            return r;
        }
        let mut e = r.deg() - dd + 1;
        while !r.is_zero() && r.deg() >= dd {
            let k = r.deg() - dd;
            let lr = r.lc().clone();
            r = r.scale(&lcd).sub(&d.scale(&lr).shift(k));
            e -= 1;
        }
        r.scale(&num_traits::Pow::pow(&lcd, e))
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub(crate) fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.normalize_sign();
        }
        if o.is_zero() {
            return self.normalize_sign();
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&c)
    }

    fn normalize_sign(&self) -> Self {
        if !self.is_zero() && self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

/// Polynomial in `t` with coefficients in `Z[q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BPoly(pub Vec<UPoly>);

impl BPoly {
    pub(crate) fn from_poly(p: &PolyQAT) -> Self {
        assert!(!p.uses_a(), "dense q,t arithmetic called on a polynomial involving a");
        let dt = p.degree_t() as usize;
        let dq = p.degree_q() as usize;
        let mut rows = vec![vec![BigInt::zero(); dq + 1]; if p.is_zero() { 0 } else { dt + 1 }];
        for (m, c) in p.terms() {
            rows[m.t as usize][m.q as usize] = c.clone();
        }
        let mut out = BPoly(
            rows.into_iter()
                .map(|r| {
                    let mut u = UPoly(r);
                    u.trim();
                    u
                })
                .collect(),
        );
        out.trim();
        out
    }

    pub(crate) fn to_poly(&self) -> PolyQAT {
        let mut p = PolyQAT::zero();
        for (t, row) in self.0.iter().enumerate() {
            for (q, c) in row.0.iter().enumerate() {
                p.add_term(Mono::new(q as u32, 0, t as u32), c.clone());
            }
        }
        p
    }

    fn zero() -> Self {
        BPoly(Vec::new())
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lc(&self) -> &UPoly {
        self.0.last().expect("lc of zero polynomial")
    }

    fn scale(&self, c: &UPoly) -> Self {
        let mut p = BPoly(self.0.iter().map(|x| x.mul(c)).collect());
        p.trim();
        p
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let z = UPoly::zero();
            let a = self.0.get(i).unwrap_or(&z);
            let b = o.0.get(i).unwrap_or(&z);
            v.push(a.sub(b));
        }
        let mut p = BPoly(v);
        p.trim();
        p
    }

    fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return BPoly::zero();
        }
        let mut v = vec![UPoly::zero(); k];
        v.extend(self.0.iter().cloned());
        BPoly(v)
    }

    pub(crate) fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(BPoly::zero());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let dd = d.deg();
        let mut r = self.clone();
        let mut quo = vec![UPoly::zero(); self.deg() - dd + 1];
        while !r.is_zero() {
            if r.deg() < dd {
                return None;
            }
            let k = r.deg() - dd;
            let c = r.lc().div_exact(d.lc())?;
            r = r.sub(&d.scale(&c).shift(k));
            quo[k] = c;
        }
        let mut q = BPoly(quo);
        q.trim();
        Some(q)
    }

    fn content(&self) -> UPoly {
        self.0.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
    }

    fn primitive(&self) -> Self {
        if self.is_zero() {
            return BPoly::zero();
        }
        let mut c = self.content();
        if self.lc().lc().is_negative() {
            c = c.neg();
        }
        BPoly(self.0.iter().map(|x| x.div_exact(&c).expect("content divides")).collect())
    }

    fn prem(&self, d: &Self) -> Self {
        let dd = d.deg();
        let lcd = d.lc().clone();
        let mut r = self.clone();
        if r.is_zero() || r.deg() < dd {
            return r;
        }
        let mut e = r.deg() - dd + 1;
        while !r.is_zero() && r.deg() >= dd {
            let k = r.deg() - dd;
            let lr = r.lc().clone();
            r = r.scale(&lcd).sub(&d.scale(&lr).shift(k));
            e -= 1;
        }
        for _ in 0..e {
            r = r.scale(&lcd);
        }
        r
    }

    pub(crate) fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive_times_content();
        }
        if o.is_zero() {
            return self.primitive_times_content();
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&c)
    }

    fn primitive_times_content(&self) -> Self {
        let c = self.content();
        self.primitive().scale(&c)
    }
}

/// Exact quotient `a / b` in `Z[q, t]`, or `None` when `b` does not divide `a`.
pub fn div_exact(a: &PolyQAT, b: &PolyQAT) -> Option<PolyQAT> {
    if let Some((m, c)) = b.as_monomial() {
        if m == Mono::ONE && c.is_one() {
            return Some(a.clone());
        }
        return a.div_mono_exact(m)?.div_int_exact(c);
    }
    BPoly::from_poly(a).div_exact(&BPoly::from_poly(b)).map(|q| q.to_poly())
}

/// Greatest common divisor in `Z[q, t]`, unique up to sign.
pub fn gcd(a: &PolyQAT, b: &PolyQAT) -> PolyQAT {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    // monomial and integer factors first; the dense routine only sees the rest
    let ma = a.min_mono();
    let mb = b.min_mono();
    let m = Mono::new(ma.q.min(mb.q), 0, ma.t.min(mb.t));
    if a.len() == 1 || b.len() == 1 {
        let c = a.content().gcd(&b.content());
        return PolyQAT::term(m, c);
    }
    let a1 = a.div_mono_exact(ma).expect("min monomial divides");
    let b1 = b.div_mono_exact(mb).expect("min monomial divides");
    let g = BPoly::from_poly(&a1).gcd(&BPoly::from_poly(&b1)).to_poly();
    g.mul_mono(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> PolyQAT {
        PolyQAT::from_terms(terms.iter().map(|&(q, t, c)| (Mono::new(q, 0, t), c)))
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[(0, 0, 1), (1, 0, -1), (0, 2, 3)]);
        let b = p(&[(2, 1, 5), (0, 0, -2), (1, 1, 1)]);
        let prod = &a * &b;
        assert_eq!(div_exact(&prod, &b), Some(a.clone()));
        assert_eq!(div_exact(&prod, &a), Some(b));
        assert_eq!(div_exact(&a, &p(&[(1, 0, 1), (0, 1, 1)])), None);
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let g = p(&[(1, 0, 1), (0, 1, -1)]); // q - t
        let x = p(&[(0, 0, 1), (1, 1, 2)]);
        let y = p(&[(2, 0, 1), (0, 3, 1), (0, 0, 7)]);
        let r = gcd(&(&g * &x), &(&g * &y));
        assert!(r == g || r == -&g, "{r:?}");
    }

    #[test]
    fn gcd_with_monomial_parts() {
        let a = p(&[(2, 1, 6), (3, 1, 6)]); // 6 q^2 t (1+q)
        let b = p(&[(1, 0, 4), (2, 0, 4)]); // 4 q (1+q)
        let r = gcd(&a, &b);
        assert!(r == p(&[(1, 0, 2), (2, 0, 2)]) || r == -p(&[(1, 0, 2), (2, 0, 2)]), "{r:?}");
    }
}
