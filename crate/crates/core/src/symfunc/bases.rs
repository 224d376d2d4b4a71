//! The e, h and p bases, their transition matrices and the Hall pairing.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::{link_sym, sf_multiply, Partition, SymFunc};
use crate::error::{Error, Result};
use crate::linalg::{invert, Inverse};
use crate::qt_arith::emit::ratfunc_plain;
use crate::qt_arith::{PolyQAT, RatFuncQT};
use crate::words::BinaryWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Basis {
    E,
    P,
}

/// Rows are basis elements in the order of `Partition::all(n)`, written in
/// the monomial basis.
struct Transition {
    matrix: Vec<Vec<PolyQAT>>,
    inverse: Inverse,
}

type TransitionCache = HashMap<(Basis, usize), Arc<Transition>>;

fn transition(basis: Basis, n: usize) -> Arc<Transition> {
    static CACHE: OnceLock<Mutex<TransitionCache>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(basis, n)) {
        return t.clone();
    }
    let parts = Partition::all(n);
    let matrix: Vec<Vec<PolyQAT>> = parts
        .iter()
        .map(|l| {
            let f = match basis {
                Basis::E => basis_e(l),
                Basis::P => basis_p(l),
            };
            parts.iter().map(|mu| f.coeff(mu).as_polynomial().cloned().expect("integer entries")).collect()
        })
        .collect();
    let inverse = invert(&matrix).expect("transition matrices are invertible");
    let t = Arc::new(Transition { matrix, inverse });
    cache.lock().unwrap().insert((basis, n), t.clone());
    t
}

fn product_of(lambda: &Partition, factor: impl Fn(usize) -> SymFunc) -> SymFunc {
    lambda.parts().iter().fold(SymFunc::one(), |acc, &k| sf_multiply(&acc, &factor(k as usize)))
}

/// `e_λ` in the monomial basis.
pub fn basis_e(lambda: &Partition) -> SymFunc {
    product_of(lambda, |k| SymFunc::monomial(Partition::column(k)))
}

/// `h_λ` in the monomial basis.
pub fn basis_h(lambda: &Partition) -> SymFunc {
    product_of(lambda, |k| {
        SymFunc::from_coeffs(k, Partition::all(k).into_iter().map(|mu| (mu, RatFuncQT::one()))).expect("degree k")
    })
}

/// `p_λ` in the monomial basis.
pub fn basis_p(lambda: &Partition) -> SymFunc {
    product_of(lambda, |k| SymFunc::monomial(Partition::row(k)))
}

fn expand(f: &SymFunc, basis: Basis) -> BTreeMap<Partition, RatFuncQT> {
    let tr = transition(basis, f.degree());
    let x = tr.inverse.solve_row(&f.coeff_vector());
    Partition::all(f.degree()).into_iter().zip(x).filter(|(_, c)| !c.is_zero()).collect()
}

fn assemble(degree: usize, coords: &BTreeMap<Partition, RatFuncQT>, basis: Basis) -> Result<SymFunc> {
    let parts = Partition::all(degree);
    let mut x = vec![RatFuncQT::zero(); parts.len()];
    for (l, c) in coords {
        let i = parts.iter().position(|p| p == l).ok_or(Error::DegreeMismatch { left: degree, right: l.size() })?;
        x[i] = c.clone();
    }
    let tr = transition(basis, degree);
    Ok(SymFunc::from_coeff_vector(degree, crate::linalg::row_times_matrix(&x, &tr.matrix)))
}

/// Coordinates in the power-sum basis.
pub fn p_expand(f: &SymFunc) -> BTreeMap<Partition, RatFuncQT> {
    expand(f, Basis::P)
}

/// Coordinates in the elementary basis.
pub fn e_expand(f: &SymFunc) -> BTreeMap<Partition, RatFuncQT> {
    expand(f, Basis::E)
}

/// `Σ c_λ p_λ` back in the monomial basis.
pub fn from_p_basis(degree: usize, coords: &BTreeMap<Partition, RatFuncQT>) -> Result<SymFunc> {
    assemble(degree, coords, Basis::P)
}

/// `Σ c_λ e_λ` back in the monomial basis.
pub fn from_e_basis(degree: usize, coords: &BTreeMap<Partition, RatFuncQT>) -> Result<SymFunc> {
    assemble(degree, coords, Basis::E)
}

/// Hall inner product, `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> Result<RatFuncQT> {
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch { left: f.degree(), right: g.degree() });
    }
    let a = p_expand(f);
    let b = p_expand(g);
    Ok(a.iter()
        .filter_map(|(l, x)| b.get(l).map(|y| (x * y).mul_poly(&PolyQAT::term(crate::qt_arith::Mono::ONE, l.z()))))
        .sum())
}

/// First negative coefficient found by the e-positivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EWitness {
    pub partition: Partition,
    pub q: u32,
    pub t: u32,
    pub coeff: BigInt,
}

/// Looks for a negative coefficient of `q^i t^j e_λ` in the q-expansion of
/// `L_v(x; q, 1 + t)` up to q-degree `order`.
pub fn e_positivity_witness(v: &BinaryWord, order: u32) -> Result<Option<EWitness>> {
    let shift = PolyQAT::one() + PolyQAT::t();
    let l = link_sym(v).try_map_coeffs(|c| c.subs_t(&shift))?;
    for (lambda, c) in e_expand(&l).into_iter().rev() {
        let r = c.to_rational_qat().ok_or_else(|| Error::NotQSeries(ratfunc_plain(&c)))?;
        if let Some((m, coeff)) = r.q_series(order).first_negative() {
            return Ok(Some(EWitness { partition: lambda, q: m.q, t: m.t, coeff }));
        }
    }
    Ok(None)
}

/// True when `L_v(x; q, 1 + t)` is e-positive up to q-degree `order`.
pub fn e_positivity_check(v: &BinaryWord, order: u32) -> bool {
    e_positivity_witness(v, order).expect("coefficients are q-series").is_none()
}
