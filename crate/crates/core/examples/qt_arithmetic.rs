//! Exact polynomial and rational-function arithmetic in q, a, t.
//!
//! ```text
//! cargo run --example qt_arithmetic
//! ```

use linksym::qt_arith::emit::{parse_poly, poly_plain, rational_json, rational_plain};
use linksym::{PolyQAT, RatFuncQT, RationalQAT};

fn main() {
    let (q, a, t) = (PolyQAT::q(), PolyQAT::a(), PolyQAT::t());
    let one = PolyQAT::one();

    let p = (&t + &a) * (&one + &a);
    println!("(t + a)(1 + a) = {}", poly_plain(&p));

    // (1 - q^2)/(1 - q) normalizes to 1 + q
    let x = RationalQAT::new(&one - &(&q * &q), 1);
    println!("(1 - q^2)/(1 - q) = {}", rational_plain(&x));

    let f0 = RationalQAT::new(&one + &a, 1);
    println!("(1 + a)/(1 - q) = {} + O(q^4)", poly_plain(&f0.q_series(3)));
    println!("json: {}", serde_json::to_string(&rational_json(&f0)).unwrap());

    // (t^2 - 1)/(t^3 - 1) and (t + 1)/(t^2 + t + 1) are the same element of Q(q, t)
    let lhs = RatFuncQT::new(parse_poly("-1 + t^2").unwrap(), parse_poly("-1 + t^3").unwrap()).unwrap();
    let rhs = RatFuncQT::new(parse_poly("1 + t").unwrap(), parse_poly("1 + t + t^2").unwrap()).unwrap();
    println!("equal as rational functions: {}", lhs.ratfunc_eq(&rhs));
    println!("q/t == t/q: {}", RatFuncQT::q() / RatFuncQT::t() == RatFuncQT::t() / RatFuncQT::q());
}
