//! The Poincaré series `f_v(q, a, t)` by independent routes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::qt_arith::emit::{rational_json, RationalJson};
use crate::qt_arith::{Mono, PolyQAT, RatFuncQT, RationalQAT};
use crate::symfunc::{self, Partition};
use crate::words::{build_u_word, enumerate_barred_fubini, BinaryWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Recurrence,
    BarredFubini,
    TruncatedInfinite,
    InnerProduct,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::BarredFubini => "barred_fubini",
            Method::TruncatedInfinite => "truncated_infinite",
            Method::InnerProduct => "inner_product",
        }
    }
}

/// A computed value of `f_v` together with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareSeries {
    pub v: BinaryWord,
    pub method: Method,
    pub value: RationalQAT,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PoincareJson {
    pub v: BinaryWord,
    pub method: Method,
    pub value: RationalJson,
}

impl PoincareSeries {
    pub fn to_json(&self) -> PoincareJson {
        PoincareJson { v: self.v.clone(), method: self.method, value: rational_json(&self.value) }
    }

    /// Upper bound on the `(1 - q)` pole order of the exact routes.
    pub fn dpow_bound(v: &BinaryWord) -> u32 {
        (v.zeros_count() + v.is_all_zero() as usize) as u32
    }
}

/// `P_{v,w}(a, t)`: one factor `t^e + a` per one of `v`, where `e` counts
/// the 1s of `u` to the left and the 2s of `u` to the right.
pub fn pvw_product(v: &BinaryWord, w: &BinaryWord) -> Result<PolyQAT> {
    let u = build_u_word(v, w)?;
    let mut prod = PolyQAT::one();
    for (i, &b) in v.bits().iter().enumerate() {
        if b != 1 {
            continue;
        }
        let left = u[..i].iter().filter(|&&x| x == 1).count();
        let right = u[i + 1..].iter().filter(|&&x| x == 2).count();
        let factor = PolyQAT::monomial(0, 0, (left + right) as u32) + PolyQAT::a();
        prod = &prod * &factor;
    }
    Ok(prod)
}

/// Memo table for the recurrence, keyed by binary word.
#[derive(Debug, Default, Clone)]
pub struct RecurrenceMemo {
    table: HashMap<BinaryWord, RationalQAT>,
}

impl RecurrenceMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&mut self, v: &BinaryWord) -> RationalQAT {
        if let Some(x) = self.table.get(v) {
            return x.clone();
        }
        let x = recurrence_step(v, &mut |w| self.get(w));
        self.table.insert(v.clone(), x.clone());
        x
    }
}

/// One step of the recurrence; `sub` evaluates shorter words.
///
/// Terminates: for `v ≠ 0^n` every `w` has length `n - |v| < n`, and `0^n`
/// is sent to `1 0^{n-1}`.
fn recurrence_step(v: &BinaryWord, sub: &mut dyn FnMut(&BinaryWord) -> RationalQAT) -> RationalQAT {
    if v.is_empty() {
        return RationalQAT::one();
    }
    if v.is_all_zero() {
        return sub(&BinaryWord::one_then_zeros(v.len())).div_one_minus_q_pow(1);
    }
    let m = v.zeros_count();
    let mut acc = RationalQAT::zero();
    for w in BinaryWord::all(m) {
        let qpow = (m - w.weight()) as u32;
        let p = pvw_product(v, &w).expect("w has the right length").mul_mono(Mono::new(qpow, 0, 0));
        acc = &acc + &sub(&w).mul_poly(&p);
    }
    acc
}

/// `f_v` from the recurrence in `P_{v,w}`, memoized.
pub fn f_recurrence(v: &BinaryWord) -> RationalQAT {
    RecurrenceMemo::new().get(v)
}

/// The recurrence without memoization (exponential; for cross-checks).
pub fn f_recurrence_unmemoized(v: &BinaryWord) -> RationalQAT {
    recurrence_step(v, &mut |w| f_recurrence_unmemoized(w))
}

/// `f_v` as a finite sum over barred Fubini words.
pub fn f_barred_fubini(v: &BinaryWord) -> RationalQAT {
    if v.is_empty() {
        return RationalQAT::one();
    }
    let chi = v.is_all_zero() as u32;
    // numerators grouped by total pole order
    let mut by_pole: HashMap<u32, PolyQAT> = HashMap::new();
    for gamma in enumerate_barred_fubini(v) {
        let bars = gamma.bar_count() as u32;
        let mut term = PolyQAT::monomial(gamma.area() + bars, 0, 0);
        for d in gamma.dinv_vector() {
            term = &term * &(PolyQAT::a() + PolyQAT::monomial(0, 0, d));
        }
        *by_pole.entry(bars + chi).or_default() += &term;
    }
    let mut poles: Vec<_> = by_pole.into_iter().collect();
    poles.sort_by_key(|(d, _)| *d);
    poles.into_iter().map(|(d, p)| RationalQAT::new(p, d)).sum()
}

/// The infinite sum over level words, truncated to q-degree `order`.
///
/// Entries above `order + 1` are never needed: such an entry alone
/// contributes more than `order` to the area.
pub fn f_truncated_infinite(v: &BinaryWord, order: u32) -> PolyQAT {
    let n = v.len();
    let mut total = PolyQAT::zero();
    let mut gamma = Vec::with_capacity(n);
    truncated_rec(v.bits(), order, 0, &mut gamma, &mut total);
    total
}

fn truncated_rec(v: &[u8], budget: u32, area: u32, gamma: &mut Vec<u32>, total: &mut PolyQAT) {
    let pos = gamma.len();
    if pos == v.len() {
        let mut term = PolyQAT::monomial(area, 0, 0);
        for i in 0..gamma.len() {
            let x = gamma[i];
            let d =
                gamma[..i].iter().filter(|&&y| y == x).count() + gamma[i + 1..].iter().filter(|&&y| y == x + 1).count();
            term = &term * &(PolyQAT::a() + PolyQAT::monomial(0, 0, d as u32));
        }
        *total += &term;
        return;
    }
    if v[pos] == 1 {
        gamma.push(0);
        truncated_rec(v, budget, area, gamma, total);
        gamma.pop();
        return;
    }
    for x in 1..=budget - area + 1 {
        gamma.push(x);
        truncated_rec(v, budget, area + x - 1, gamma, total);
        gamma.pop();
    }
}

/// `f_v = Σ_d ⟨L_v, e_{n-d} h_d⟩ a^d`, through the symmetric-function kernel.
pub fn f_via_inner_product(v: &BinaryWord) -> Result<RationalQAT> {
    let n = v.len();
    if n == 0 {
        return Ok(RationalQAT::one());
    }
    let lv = symfunc::link_sym(v);
    let mut acc = RationalQAT::zero();
    for d in 0..=n {
        let e = symfunc::basis_e(&Partition::row(n - d));
        let h = symfunc::basis_h(&Partition::row(d));
        let pairing = symfunc::hall_inner(&lv, &symfunc::sf_multiply(&e, &h))?;
        let value = pairing
            .to_rational_qat()
            .ok_or_else(|| crate::Error::NotQSeries(crate::qt_arith::emit::ratfunc_plain(&pairing)))?;
        acc = &acc + &value.mul_poly(&PolyQAT::monomial(0, d as u32, 0));
    }
    Ok(acc)
}

/// Computes `f_v` by the requested route. `order` is used only by the
/// truncated route.
pub fn compute(v: &BinaryWord, method: Method, order: u32) -> Result<PoincareSeries> {
    let value = match method {
        Method::Recurrence => f_recurrence(v),
        Method::BarredFubini => f_barred_fubini(v),
        Method::TruncatedInfinite => RationalQAT::from_poly(f_truncated_infinite(v, order)),
        Method::InnerProduct => f_via_inner_product(v)?,
    };
    Ok(PoincareSeries { v: v.clone(), method, value })
}

/// The `a^0` part of `f_v` as an element of `Q(q, t)`.
pub fn a_free_part(x: &RationalQAT) -> RatFuncQT {
    RatFuncQT::from_rational_qat(&RationalQAT::new(x.num().drop_a(), x.dpow()))
}
