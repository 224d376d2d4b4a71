//! Modified Macdonald polynomials and the operators diagonal in their basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{invert, row_times_matrix, Inverse};
use crate::qt_arith::{Mono, PolyQAT, RatFuncQT};
use crate::symfunc::{basis_p, render_expansion, sf_multiply, ExpansionJson, Partition, SymFunc};

/// The multiset `B_μ = {q^i t^j}` over the cells `(i, j)` of `μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellAlphabet {
    pub cells: Vec<(u32, u32)>,
}

impl CellAlphabet {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn monomials(&self) -> Vec<Mono> {
        self.cells.iter().map(|&(i, j)| Mono::new(i, 0, j)).collect()
    }

    /// Product of all cell monomials.
    pub fn product(&self) -> Mono {
        let (i, j) = self.cells.iter().fold((0, 0), |(a, b), &(i, j)| (a + i, b + j));
        Mono::new(i, 0, j)
    }
}

impl fmt::Display for CellAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .monomials()
            .into_iter()
            .map(|m| crate::qt_arith::emit::poly_plain(&PolyQAT::monomial(m.q, 0, m.t)))
            .collect();
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// `B_μ`, listed row by row from the corner.
pub fn b_mu(mu: &Partition) -> CellAlphabet {
    CellAlphabet { cells: mu.cells().collect() }
}

/// `T_μ = e_{|μ|}[B_μ]`.
pub fn t_mu(mu: &Partition) -> Mono {
    b_mu(mu).product()
}

/// `F[A]`: the variables specialized to the monomials of `A`, the rest to 0.
pub fn pleth_eval(f: &SymFunc, alphabet: &CellAlphabet) -> RatFuncQT {
    let monos = alphabet.monomials();
    let mut acc = Vec::new();
    for (lambda, c) in f.terms() {
        if lambda.len() > monos.len() {
            continue;
        }
        let mut exps = lambda.parts().to_vec();
        exps.resize(monos.len(), 0);
        let mut value = PolyQAT::zero();
        for_each_arrangement(&exps, &mut |alpha| {
            let (mut q, mut t) = (0, 0);
            for (m, &e) in monos.iter().zip(alpha) {
                q += m.q * e;
                t += m.t * e;
            }
            value.add_term(Mono::new(q, 0, t), 1.into());
        });
        acc.push(c.mul_poly(&value));
    }
    acc.into_iter().sum()
}

/// Calls `visit` on every distinct rearrangement of `items`.
fn for_each_arrangement(items: &[u32], visit: &mut dyn FnMut(&[u32])) {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    let mut distinct: Vec<(u32, usize)> = Vec::new();
    for x in sorted {
        match distinct.last_mut() {
            Some((y, k)) if *y == x => *k += 1,
            _ => distinct.push((x, 1)),
        }
    }
    let mut cur = Vec::with_capacity(items.len());
    arrange_rec(&mut distinct, items.len(), &mut cur, visit);
}

fn arrange_rec(counts: &mut [(u32, usize)], n: usize, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if cur.len() == n {
        visit(cur);
        return;
    }
    for k in 0..counts.len() {
        if counts[k].1 > 0 {
            counts[k].1 -= 1;
            cur.push(counts[k].0);
            arrange_rec(counts, n, cur, visit);
            cur.pop();
            counts[k].1 += 1;
        }
    }
}

/// Diagram data for the filling sum, cells in reading order (top row
/// first, left to right within a row).
struct Diagram {
    /// Attacking pairs `(a, b)` with `a` before `b` in reading order.
    attacking: Vec<(usize, usize)>,
    /// `(cell, cell below, leg + 1, arm)` for every cell off the bottom row.
    vertical: Vec<(usize, usize, u32, u32)>,
}

impl Diagram {
    fn new(mu: &Partition) -> Self {
        let rows = mu.parts();
        let mut order: Vec<(u32, u32)> = Vec::new();
        for j in (0..rows.len()).rev() {
            for i in 0..rows[j] {
                order.push((i, j as u32));
            }
        }
        let index: HashMap<(u32, u32), usize> = order.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut attacking = Vec::new();
        for a in 0..order.len() {
            for b in a + 1..order.len() {
                let ((ia, ja), (ib, jb)) = (order[a], order[b]);
                // same row, or `a` one row above `b` and strictly to its right
                if ja == jb || (ja == jb + 1 && ia > ib) {
                    attacking.push((a, b));
                }
            }
        }
        let conj = mu.conjugate();
        let mut vertical = Vec::new();
        for (k, &(i, j)) in order.iter().enumerate() {
            if j == 0 {
                continue;
            }
            let leg = conj.parts()[i as usize] - j - 1;
            let arm = rows[j as usize] - i - 1;
            vertical.push((k, index[&(i, j - 1)], leg + 1, arm));
        }
        Diagram { attacking, vertical }
    }

    /// `(inv, maj)` of a filling given in reading order.
    fn stats(&self, sigma: &[u8]) -> (u32, u32) {
        let mut inv = self.attacking.iter().filter(|&&(a, b)| sigma[a] > sigma[b]).count() as i64;
        let mut maj = 0;
        for &(u, below, leg1, arm) in &self.vertical {
            if sigma[u] > sigma[below] {
                maj += leg1;
                inv -= arm as i64;
            }
        }
        (u32::try_from(inv).expect("inv is nonnegative"), maj)
    }
}

/// `H̃_μ(x; q, t)` in the monomial basis, from the inv/maj filling sum.
pub fn htilde(mu: &Partition) -> SymFunc {
    static CACHE: OnceLock<Mutex<HashMap<Partition, SymFunc>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(mu) {
        return f.clone();
    }
    let n = mu.size();
    let diagram = Diagram::new(mu);
    let mut f = SymFunc::zero(n);
    for lambda in Partition::all(n) {
        let labels: Vec<u32> = lambda
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(k, &m)| std::iter::repeat_n(k as u32 + 1, m as usize))
            .collect();
        let mut poly = PolyQAT::zero();
        let mut sigma = vec![0u8; n];
        for_each_arrangement(&labels, &mut |arr| {
            for (s, &x) in sigma.iter_mut().zip(arr) {
                *s = x as u8;
            }
            let (inv, maj) = diagram.stats(&sigma);
            poly.add_term(Mono::new(inv, 0, maj), 1.into());
        });
        f.add_coeff(lambda, RatFuncQT::from_poly(poly));
    }
    cache.lock().unwrap().insert(mu.clone(), f.clone());
    f
}

/// Coordinates in the `H̃_μ` basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacExpansion {
    degree: usize,
    coords: BTreeMap<Partition, RatFuncQT>,
}

impl MacExpansion {
    pub fn new<I>(degree: usize, coords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, RatFuncQT)>,
    {
        let mut out = MacExpansion { degree, coords: BTreeMap::new() };
        for (mu, c) in coords {
            if mu.size() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: mu.size() });
            }
            if !c.is_zero() {
                let s = out.coord(&mu) + c;
                if s.is_zero() {
                    out.coords.remove(&mu);
                } else {
                    out.coords.insert(mu, s);
                }
            }
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coord(&self, mu: &Partition) -> RatFuncQT {
        self.coords.get(mu).cloned().unwrap_or_else(RatFuncQT::zero)
    }

    /// Nonzero coordinates, `(n)` first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFuncQT)> + '_ {
        self.coords.iter().rev()
    }

    /// Multiplies the coordinate at `μ` by `scale(μ)`.
    pub fn map_diagonal(&self, mut scale: impl FnMut(&Partition) -> RatFuncQT) -> Self {
        let coords = self.coords.iter().map(|(mu, c)| (mu.clone(), c * &scale(mu)));
        MacExpansion::new(self.degree, coords).expect("same degree")
    }

    pub fn to_plain(&self) -> String {
        render_expansion(self.degree, self.terms(), "H", false)
    }

    pub fn to_latex(&self) -> String {
        render_expansion(self.degree, self.terms(), "Htilde", true)
    }

    pub fn to_json(&self) -> ExpansionJson {
        ExpansionJson::new(self.degree, "Htilde", self.terms())
    }

    pub fn from_json(j: &ExpansionJson) -> Result<Self> {
        if j.basis != "Htilde" {
            return Err(Error::Parse(format!("expected basis \"Htilde\", got {:?}", j.basis)));
        }
        MacExpansion::new(j.degree, j.decode()?)
    }
}

/// `H̃_μ` for `μ ⊢ n` as rows of monomial coordinates, with the inverse.
struct MacBasis {
    parts: Vec<Partition>,
    matrix: Vec<Vec<PolyQAT>>,
    inverse: Inverse,
}

fn mac_basis(n: usize) -> Arc<MacBasis> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<MacBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().unwrap().get(&n) {
        return b.clone();
    }
    let parts = Partition::all(n);
    let matrix: Vec<Vec<PolyQAT>> = parts
        .iter()
        .map(|mu| {
            let h = htilde(mu);
            parts.iter().map(|l| h.coeff(l).as_polynomial().cloned().expect("polynomial coefficients")).collect()
        })
        .collect();
    let inverse = invert(&matrix).expect("the modified Macdonald polynomials form a basis");
    let b = Arc::new(MacBasis { parts, matrix, inverse });
    cache.lock().unwrap().insert(n, b.clone());
    b
}

/// Expands `F` in the `H̃_μ` basis.
pub fn mac_expand(f: &SymFunc) -> MacExpansion {
    let basis = mac_basis(f.degree());
    let x = basis.inverse.solve_row(&f.coeff_vector());
    MacExpansion::new(f.degree(), basis.parts.iter().cloned().zip(x)).expect("same degree")
}

/// `Σ c_μ H̃_μ` in the monomial basis.
pub fn assemble(e: &MacExpansion) -> SymFunc {
    let basis = mac_basis(e.degree);
    let x: Vec<RatFuncQT> = basis.parts.iter().map(|mu| e.coord(mu)).collect();
    SymFunc::from_coeff_vector(e.degree, row_times_matrix(&x, &basis.matrix))
}

fn apply_diagonal(f: &SymFunc, scale: impl FnMut(&Partition) -> RatFuncQT) -> SymFunc {
    if f.is_zero() {
        return f.clone();
    }
    assemble(&mac_expand(f).map_diagonal(scale))
}

/// `∇`: multiplies the `H̃_μ` coordinate by `T_μ`.
pub fn nabla(f: &SymFunc) -> SymFunc {
    apply_diagonal(f, |mu| {
        let m = t_mu(mu);
        RatFuncQT::from_poly(PolyQAT::monomial(m.q, 0, m.t))
    })
}

/// `∇⁻¹`: divides the `H̃_μ` coordinate by `T_μ`.
pub fn nabla_inv(f: &SymFunc) -> SymFunc {
    apply_diagonal(f, |mu| {
        let m = t_mu(mu);
        RatFuncQT::new(PolyQAT::one(), PolyQAT::monomial(m.q, 0, m.t)).expect("monomial is nonzero")
    })
}

/// `Δ_F`: multiplies the `H̃_μ` coordinate by `F[B_μ]`.
pub fn delta(op: &SymFunc, g: &SymFunc) -> SymFunc {
    apply_diagonal(g, |mu| pleth_eval(op, &b_mu(mu)))
}

/// Coefficient of `H̃_μ` in `p_1 · H̃_ν`.
pub fn pieri_d(mu: &Partition, nu: &Partition) -> Result<RatFuncQT> {
    if !mu.covers(nu) {
        return Err(Error::NotCovering { mu: mu.to_string(), nu: nu.to_string() });
    }
    let prod = sf_multiply(&basis_p(&Partition::row(1)), &htilde(nu));
    Ok(mac_expand(&prod).coord(mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{basis_e, hall_inner, link_sym};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(f: PolyQAT) -> RatFuncQT {
        RatFuncQT::from_poly(f)
    }

    #[test]
    fn cell_alphabets() {
        assert_eq!(b_mu(&p("4,3,1")).to_string(), "{1, q, q^2, q^3, t, q*t, q^2*t, t^2}");
        assert_eq!(b_mu(&p("1")).to_string(), "{1}");
        assert_eq!(b_mu(&p("2,1")).to_string(), "{1, q, t}");
    }

    #[test]
    fn plethystic_evaluation() {
        let a = b_mu(&p("2,1"));
        assert_eq!(pleth_eval(&basis_e(&p("3")), &a), poly(PolyQAT::q() * PolyQAT::t()));
        assert_eq!(pleth_eval(&basis_e(&p("1")), &b_mu(&p("2"))), poly(PolyQAT::one() + PolyQAT::q()));
        assert_eq!(pleth_eval(&SymFunc::one(), &a), RatFuncQT::one());
    }

    #[test]
    fn small_htilde() {
        let m2 = SymFunc::monomial(p("2"));
        let m11 = SymFunc::monomial(p("1,1"));
        let h11 = &m2 + &m11.scale(&poly(PolyQAT::one() + PolyQAT::t()));
        let h2 = &m2 + &m11.scale(&poly(PolyQAT::one() + PolyQAT::q()));
        assert_eq!(htilde(&p("1,1")), h11);
        assert_eq!(htilde(&p("2")), h2);
        assert_eq!(htilde(&p("1,1")), link_sym(&"11".parse().unwrap()));
    }

    #[test]
    fn conjugation_and_collapse() {
        for n in 1..=4 {
            for mu in Partition::all(n) {
                assert_eq!(htilde(&mu).swap_qt(), htilde(&mu.conjugate()), "mu = {mu}");
                let ones = htilde(&mu).at_q_t_one().unwrap();
                let e1 = basis_e(&Partition::row(1));
                let mut power = SymFunc::one();
                for _ in 0..n {
                    power = sf_multiply(&power, &e1);
                }
                assert_eq!(Some(ones), power.at_q_t_one());
            }
        }
    }

    #[test]
    fn nabla_examples() {
        let p1 = basis_p(&p("1"));
        assert_eq!(nabla(&p1), p1);
        let p11 = basis_p(&p("1,1"));
        let want = PolyQAT::one() + PolyQAT::q() + PolyQAT::t() - PolyQAT::q() * PolyQAT::t();
        assert_eq!(hall_inner(&nabla(&p11), &p11).unwrap(), poly(want));
        let f = basis_p(&p("2,1"));
        assert_eq!(nabla_inv(&nabla(&f)), f);
    }

    #[test]
    fn delta_en_is_nabla() {
        for n in 1..=3 {
            let f = basis_p(&Partition::column(n));
            assert_eq!(delta(&basis_e(&Partition::row(n)), &f), nabla(&f));
        }
    }

    #[test]
    fn expansion_round_trip() {
        for mu in Partition::all(3) {
            let e = mac_expand(&htilde(&mu));
            assert_eq!(e, MacExpansion::new(3, [(mu.clone(), RatFuncQT::one())]).unwrap());
        }
        let f = basis_p(&p("1,1,1"));
        assert_eq!(assemble(&mac_expand(&f)), f);
    }

    #[test]
    fn pieri() {
        assert_eq!(pieri_d(&p("1"), &Partition::empty()).unwrap(), RatFuncQT::one());
        let nu = p("1");
        let sum = Partition::all(2)
            .into_iter()
            .map(|mu| htilde(&mu).scale(&pieri_d(&mu, &nu).unwrap()))
            .fold(SymFunc::zero(2), |a, b| &a + &b);
        assert_eq!(sum, sf_multiply(&basis_p(&p("1")), &htilde(&nu)));
        assert!(matches!(pieri_d(&p("3"), &p("1,1")), Err(Error::NotCovering { .. })));
    }

    #[test]
    fn json_round_trip() {
        let e = mac_expand(&basis_p(&p("1,1")));
        assert_eq!(MacExpansion::from_json(&e.to_json()).unwrap(), e);
        assert!(e.to_plain().contains("H[2]"));
    }
}
