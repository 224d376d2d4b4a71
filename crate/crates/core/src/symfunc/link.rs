//! The link symmetric functions `L_v` and `L̃_v`.

use std::collections::{BTreeMap, HashMap};

use super::{Partition, SymFunc};
use crate::error::{Error, Result};
use crate::qt_arith::emit::rational_plain;
use crate::qt_arith::{PolyQAT, RatFuncQT, RationalQAT};
use crate::words::dinv_ints;
use crate::words::{enumerate_barred_fubini, BinaryWord};

/// All arrangements of the multiset with `content[k]` copies of label `k + 1`.
fn multiset_permutations(content: &[u32]) -> Vec<Vec<u8>> {
    let n: u32 = content.iter().sum();
    let mut counts = content.to_vec();
    let mut cur = Vec::with_capacity(n as usize);
    let mut out = Vec::new();
    perm_rec(&mut counts, n as usize, &mut cur, &mut out);
    out
}

fn perm_rec(counts: &mut [u32], n: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for k in 0..counts.len() {
        if counts[k] > 0 {
            counts[k] -= 1;
            cur.push(k as u8 + 1);
            perm_rec(counts, n, cur, out);
            cur.pop();
            counts[k] += 1;
        }
    }
}

/// Coefficient of `m_λ` in `L_v`: the sum over barred Fubini words `γ` and
/// labelings `π` of content `λ` of
/// `q^{area+bar} t^{dinv} (1 - q)^{-bar - χ(v = 0^n)}`.
pub fn link_coefficient(v: &BinaryWord, lambda: &Partition) -> Result<RationalQAT> {
    if lambda.size() != v.len() {
        return Err(Error::DegreeMismatch { left: v.len(), right: lambda.size() });
    }
    if v.is_empty() {
        return Ok(RationalQAT::one());
    }
    let perms = multiset_permutations(lambda.parts());
    let chi = v.is_all_zero() as u32;
    let mut by_pole: HashMap<u32, PolyQAT> = HashMap::new();
    let mut hist = Vec::new();
    for gamma in enumerate_barred_fubini(v) {
        let (levels, bars) = (gamma.levels(), gamma.bars());
        hist.clear();
        for pi in &perms {
            let d = dinv_ints(levels, bars, pi) as usize;
            if hist.len() <= d {
                hist.resize(d + 1, 0u64);
            }
            hist[d] += 1;
        }
        let b = gamma.bar_count() as u32;
        let qpow = gamma.area() + b;
        let entry = by_pole.entry(b + chi).or_default();
        for (d, &c) in hist.iter().enumerate() {
            if c > 0 {
                entry.add_term(crate::qt_arith::Mono::new(qpow, 0, d as u32), c.into());
            }
        }
    }
    let mut poles: Vec<_> = by_pole.into_iter().collect();
    poles.sort_by_key(|(d, _)| *d);
    Ok(poles.into_iter().map(|(d, p)| RationalQAT::new(p, d)).sum())
}

/// `L_v` with each coefficient kept in the form `p / (1 - q)^k`.
pub fn link_sym_rational(v: &BinaryWord) -> BTreeMap<Partition, RationalQAT> {
    Partition::all(v.len())
        .into_iter()
        .map(|l| {
            let c = link_coefficient(v, &l).expect("degree matches");
            (l, c)
        })
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// `L_v` in the monomial basis. The empty word gives `1`.
pub fn link_sym(v: &BinaryWord) -> SymFunc {
    let coeffs = link_sym_rational(v).into_iter().map(|(l, c)| (l, RatFuncQT::from_rational_qat(&c)));
    SymFunc::from_coeffs(v.len(), coeffs).expect("degree matches")
}

/// `L̃_v = (1 - q)^{n - |v|} L_v`; fails if some denominator survives.
pub fn link_sym_normalized(v: &BinaryWord) -> Result<SymFunc> {
    let k = v.zeros_count() as u32;
    let mut out = SymFunc::zero(v.len());
    for (l, c) in link_sym_rational(v) {
        let x = c.mul_one_minus_q_pow(k);
        if x.dpow() != 0 {
            return Err(Error::DenominatorNotCleared { partition: l.to_string(), value: rational_plain(&x) });
        }
        out.add_coeff(l, RatFuncQT::from_poly(x.num().clone()));
    }
    Ok(out)
}
