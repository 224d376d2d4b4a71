//! Plain-text, LaTeX and JSON renderings, plus a parser for the plain-text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{Mono, PolyQAT};
use super::ratfunc::RatFuncQT;
use super::rational::RationalQAT;
use crate::error::{Error, Result};

fn plain_mono(m: &Mono) -> Vec<String> {
    let mut parts = Vec::new();
    for (name, e) in [("q", m.q), ("a", m.a), ("t", m.t)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts
}

fn latex_mono(m: &Mono) -> String {
    let mut s = String::new();
    for (name, e) in [("q", m.q), ("a", m.a), ("t", m.t)] {
        match e {
            0 => {}
            1 => s.push_str(name),
            _ => s.push_str(&format!("{name}^{{{e}}}")),
        }
    }
    s
}

fn join_signed<I: Iterator<Item = (bool, String)>>(items: I) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in items.enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `1 + q + t - q*t`, terms in graded order.
pub fn poly_plain(p: &PolyQAT) -> String {
    join_signed(p.terms().map(|(m, c)| {
        let abs = c.abs();
        let mut parts = plain_mono(m);
        if parts.is_empty() {
            return (c.is_negative(), abs.to_string());
        }
        if !abs.is_one() {
            parts.insert(0, abs.to_string());
        }
        (c.is_negative(), parts.join("*"))
    }))
}

pub fn poly_latex(p: &PolyQAT) -> String {
    join_signed(p.terms().map(|(m, c)| {
        let abs = c.abs();
        let mono = latex_mono(m);
        let body = match (mono.is_empty(), abs.is_one()) {
            (true, _) => abs.to_string(),
            (false, true) => mono,
            (false, false) => format!("{abs}{mono}"),
        };
        (c.is_negative(), body)
    }))
}

fn wrap(s: String, p: &PolyQAT) -> String {
    if p.len() > 1 {
        format!("({s})")
    } else {
        s
    }
}

pub fn rational_plain(x: &RationalQAT) -> String {
    match x.dpow() {
        0 => poly_plain(x.num()),
        1 => format!("{}/(1 - q)", wrap(poly_plain(x.num()), x.num())),
        d => format!("{}/(1 - q)^{d}", wrap(poly_plain(x.num()), x.num())),
    }
}

pub fn rational_latex(x: &RationalQAT) -> String {
    match x.dpow() {
        0 => poly_latex(x.num()),
        1 => format!("\\frac{{{}}}{{1 - q}}", poly_latex(x.num())),
        d => format!("\\frac{{{}}}{{(1 - q)^{{{d}}}}}", poly_latex(x.num())),
    }
}

pub fn ratfunc_plain(x: &RatFuncQT) -> String {
    if x.is_polynomial() {
        poly_plain(x.num())
    } else if let Some(r) = x.to_rational_qat() {
        rational_plain(&r)
    } else {
        format!("{}/{}", wrap(poly_plain(x.num()), x.num()), wrap(poly_plain(x.den()), x.den()))
    }
}

pub fn ratfunc_latex(x: &RatFuncQT) -> String {
    if x.is_polynomial() {
        poly_latex(x.num())
    } else if let Some(r) = x.to_rational_qat() {
        rational_latex(&r)
    } else {
        format!("\\frac{{{}}}{{{}}}", poly_latex(x.num()), poly_latex(x.den()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub q: u32,
    pub a: u32,
    pub t: u32,
    pub c: String,
}

/// `{ "terms": [...], "dpow": d }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub terms: Vec<TermJson>,
    pub dpow: u32,
}

pub fn poly_terms_json(p: &PolyQAT) -> Vec<TermJson> {
    p.terms().map(|(m, c)| TermJson { q: m.q, a: m.a, t: m.t, c: c.to_string() }).collect()
}

pub fn rational_json(x: &RationalQAT) -> RationalJson {
    RationalJson { terms: poly_terms_json(x.num()), dpow: x.dpow() }
}

pub fn rational_from_json(j: &RationalJson) -> Result<RationalQAT> {
    let mut p = PolyQAT::zero();
    for t in &j.terms {
        let c: BigInt = t.c.parse().map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
        p.add_term(Mono::new(t.q, t.a, t.t), c);
    }
    Ok(RationalQAT::new(p, j.dpow))
}

/// Parses the plain-text polynomial form produced by [`poly_plain`]
/// (whitespace is ignored; `*` between factors is optional).
pub fn parse_poly(s: &str) -> Result<PolyQAT> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let err = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
    let mut pos = 0;
    let mut out = PolyQAT::zero();
    let read_int = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < chars.len() && chars[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| chars[start..*pos].iter().collect::<String>().parse().unwrap())
    };
    while pos < chars.len() {
        let mut sign = BigInt::one();
        if chars[pos] == '+' || chars[pos] == '-' {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        } else if pos != 0 {
            return Err(err("expected + or -"));
        }
        let mut coeff = read_int(&mut pos).unwrap_or_else(BigInt::one);
        let mut mono = Mono::ONE;
        let mut saw_factor = !coeff.is_one() || (pos > 0 && chars[pos - 1].is_ascii_digit());
        loop {
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
            }
            let Some(&c) = chars.get(pos) else { break };
            if !matches!(c, 'q' | 'a' | 't') {
                break;
            }
            pos += 1;
            let mut e = 1u32;
            if chars.get(pos) == Some(&'^') {
                pos += 1;
                let v = read_int(&mut pos).ok_or_else(|| err("missing exponent"))?;
                e = v.try_into().map_err(|_| err("exponent too large"))?;
            }
            match c {
                'q' => mono.q += e,
                'a' => mono.a += e,
                _ => mono.t += e,
            }
            saw_factor = true;
        }
        if !saw_factor {
            return Err(err("empty term"));
        }
        coeff *= sign;
        if !coeff.is_zero() {
            out.add_term(mono, coeff);
        }
    }
    Ok(out)
}
