//! Symmetric functions of fixed degree, stored in the monomial basis with
//! coefficients in `Q(q, t)`.

mod bases;
mod link;
mod partition;

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qt_arith::emit::{parse_poly, poly_plain, ratfunc_latex, ratfunc_plain};
#[cfg(test)]
use crate::qt_arith::PolyQAT;
use crate::qt_arith::RatFuncQT;

pub use bases::{
    basis_e, basis_h, basis_p, e_expand, e_positivity_check, e_positivity_witness, from_e_basis, from_p_basis,
    hall_inner, p_expand, EWitness,
};
pub use link::{link_coefficient, link_sym, link_sym_normalized, link_sym_rational};
pub use partition::Partition;

/// A homogeneous symmetric function `Σ c_λ m_λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    coeffs: BTreeMap<Partition, RatFuncQT>,
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        SymFunc { degree, coeffs: BTreeMap::new() }
    }

    /// The constant `1`, of degree 0.
    pub fn one() -> Self {
        Self::monomial(Partition::empty())
    }

    /// `m_λ`.
    pub fn monomial(lambda: Partition) -> Self {
        Self::from_coeffs(lambda.size(), [(lambda, RatFuncQT::one())]).expect("homogeneous")
    }

    pub fn from_coeffs<I>(degree: usize, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, RatFuncQT)>,
    {
        let mut f = SymFunc::zero(degree);
        for (lambda, c) in coeffs {
            if lambda.size() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: lambda.size() });
            }
            f.add_coeff(lambda, c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> RatFuncQT {
        self.coeffs.get(lambda).cloned().unwrap_or_else(RatFuncQT::zero)
    }

    /// Coefficient of the monomial `x^α` for a weak composition `α`.
    pub fn monomial_coeff(&self, alpha: &[u32]) -> RatFuncQT {
        self.coeff(&Partition::from_unsorted(alpha))
    }

    /// Nonzero coefficients, `(n)` first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFuncQT)> + '_ {
        self.coeffs.iter().rev()
    }

    /// Coefficient vector in the order of `Partition::all(degree)`.
    pub fn coeff_vector(&self) -> Vec<RatFuncQT> {
        Partition::all(self.degree).iter().map(|l| self.coeff(l)).collect()
    }

    pub fn from_coeff_vector(degree: usize, v: Vec<RatFuncQT>) -> Self {
        let parts = Partition::all(degree);
        assert_eq!(parts.len(), v.len());
        let mut f = SymFunc::zero(degree);
        for (l, c) in parts.into_iter().zip(v) {
            f.add_coeff(l, c);
        }
        f
    }

    pub fn add_coeff(&mut self, lambda: Partition, c: RatFuncQT) {
        debug_assert_eq!(lambda.size(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &RatFuncQT) -> Self {
        self.map_coeffs(|x| x * c)
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&RatFuncQT) -> RatFuncQT) -> Self {
        let mut out = SymFunc::zero(self.degree);
        for (l, c) in &self.coeffs {
            out.add_coeff(l.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, mut f: impl FnMut(&RatFuncQT) -> Result<RatFuncQT>) -> Result<Self> {
        let mut out = SymFunc::zero(self.degree);
        for (l, c) in &self.coeffs {
            out.add_coeff(l.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Exchanges `q` and `t` in every coefficient.
    pub fn swap_qt(&self) -> Self {
        self.map_coeffs(RatFuncQT::swap_qt)
    }

    /// Specializes `q = t = 1`; fails if a denominator vanishes there.
    pub fn at_q_t_one(&self) -> Option<BTreeMap<Partition, num_bigint::BigInt>> {
        use num_integer::Integer;
        let mut out = BTreeMap::new();
        for (l, c) in &self.coeffs {
            let (n, d) = c.eval(1, 1)?;
            let (quo, rem) = n.div_rem(&d);
            if !num_traits::Zero::is_zero(&rem) {
                return None;
            }
            if !num_traits::Zero::is_zero(&quo) {
                out.insert(l.clone(), quo);
            }
        }
        Some(out)
    }

    /// Every coefficient is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.coeffs.values().all(RatFuncQT::is_polynomial)
    }

    /// Plain text, e.g. `m[2] + (1 + t)*m[1,1]`.
    pub fn to_plain(&self) -> String {
        render_expansion(self.degree, self.terms(), "m", false)
    }

    pub fn to_latex(&self) -> String {
        render_expansion(self.degree, self.terms(), "m", true)
    }

    pub fn to_json(&self) -> ExpansionJson {
        ExpansionJson::new(self.degree, "m", self.terms())
    }

    pub fn from_json(j: &ExpansionJson) -> Result<Self> {
        if j.basis != "m" {
            return Err(Error::Parse(format!("expected basis \"m\", got {:?}", j.basis)));
        }
        SymFunc::from_coeffs(j.degree, j.decode()?)
    }
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        assert_eq!(self.degree, rhs.degree, "adding symmetric functions of different degrees");
        let mut out = self.clone();
        for (l, c) in &rhs.coeffs {
            out.add_coeff(l.clone(), c.clone());
        }
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

/// Product of symmetric functions.
///
/// The coefficient of `x^λ` in `f·g` is `Σ_{α+β=λ} [x^α]f · [x^β]g`;
/// ℓ(λ) variables suffice for each λ.
pub fn sf_multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let d = f.degree + g.degree;
    let mut out = SymFunc::zero(d);
    if f.is_zero() || g.is_zero() {
        return out;
    }
    for lambda in Partition::all(d) {
        let mut terms = Vec::new();
        let mut alpha = vec![0u32; lambda.len()];
        split_rec(lambda.parts(), 0, f.degree as u32, &mut alpha, &mut |a| {
            let beta: Vec<u32> = lambda.parts().iter().zip(a).map(|(l, x)| l - x).collect();
            let cf = f.coeffs.get(&Partition::from_unsorted(a));
            let cg = g.coeffs.get(&Partition::from_unsorted(&beta));
            if let (Some(x), Some(y)) = (cf, cg) {
                terms.push(x * y);
            }
        });
        out.add_coeff(lambda, terms.into_iter().sum());
    }
    out
}

fn split_rec(lambda: &[u32], pos: usize, rem: u32, alpha: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if pos == lambda.len() {
        if rem == 0 {
            visit(alpha);
        }
        return;
    }
    let tail: u32 = lambda[pos + 1..].iter().sum();
    let lo = rem.saturating_sub(tail);
    for x in lo..=lambda[pos].min(rem) {
        alpha[pos] = x;
        split_rec(lambda, pos + 1, rem - x, alpha, visit);
    }
    alpha[pos] = 0;
}

/// JSON form shared by every basis: `{ "degree", "basis", "coeffs": [{partition, num, den}] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub degree: usize,
    pub basis: String,
    pub coeffs: Vec<CoeffJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub partition: Partition,
    pub num: String,
    pub den: String,
}

impl ExpansionJson {
    pub fn new<'a, I>(degree: usize, basis: &str, terms: I) -> Self
    where
        I: IntoIterator<Item = (&'a Partition, &'a RatFuncQT)>,
    {
        ExpansionJson {
            degree,
            basis: basis.to_string(),
            coeffs: terms
                .into_iter()
                .map(|(l, c)| CoeffJson { partition: l.clone(), num: poly_plain(c.num()), den: poly_plain(c.den()) })
                .collect(),
        }
    }

    pub fn decode(&self) -> Result<Vec<(Partition, RatFuncQT)>> {
        self.coeffs
            .iter()
            .map(|c| Ok((c.partition.clone(), RatFuncQT::new(parse_poly(&c.num)?, parse_poly(&c.den)?)?)))
            .collect()
    }
}

/// Renders `Σ c_λ b_λ` for a basis symbol `b`.
pub fn render_expansion<'a, I>(degree: usize, terms: I, symbol: &str, latex: bool) -> String
where
    I: IntoIterator<Item = (&'a Partition, &'a RatFuncQT)>,
{
    let mut out = String::new();
    for (l, c) in terms {
        let basis = if latex {
            let idx = if l.is_empty() { "\\varnothing".to_string() } else { l.to_string() };
            format!("{}_{{{}}}", latex_symbol(symbol), idx)
        } else {
            format!("{symbol}[{l}]")
        };
        let text = if latex { ratfunc_latex(c) } else { ratfunc_plain(c) };
        let (neg, body) = match text.strip_prefix('-') {
            Some(rest) if c.num().len() == 1 && c.is_polynomial() => (true, rest.to_string()),
            _ => (false, text),
        };
        let coeff = if body == "1" {
            String::new()
        } else if c.num().len() > 1 && c.is_polynomial() {
            if latex {
                format!("({body})")
            } else {
                format!("({body})*")
            }
        } else if latex {
            body
        } else {
            format!("{body}*")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&coeff);
        out.push_str(&basis);
    }
    if out.is_empty() {
        out.push('0');
    }
    let _ = degree;
    out
}

fn latex_symbol(symbol: &str) -> &str {
    match symbol {
        "Htilde" => "\\widetilde{H}",
        other => other,
    }
}

/// The constant polynomial `c` as an element of `Q(q, t)`.
#[cfg(test)]
pub(crate) fn rf(c: i64) -> RatFuncQT {
    RatFuncQT::from_poly(PolyQAT::constant(c))
}
