//! The Poincaré series f_v(q, a, t) by four routes.
//!
//! ```text
//! cargo run --release --example poincare_routes -- 0101
//! ```

use linksym::poincare::{f_barred_fubini, f_recurrence, f_truncated_infinite, f_via_inner_product};
use linksym::qt_arith::emit::{poly_plain, rational_plain};
use linksym::BinaryWord;

fn main() {
    let v: BinaryWord = std::env::args().nth(1).as_deref().unwrap_or("0101").parse().expect("a word over {0,1}");
    let order = 6;

    let rec = f_recurrence(&v);
    let fub = f_barred_fubini(&v);
    let inner = f_via_inner_product(&v).unwrap();
    let trunc = f_truncated_infinite(&v, order);

    println!("recurrence     : {}", rational_plain(&rec));
    println!("barred Fubini  : {}", rational_plain(&fub));
    println!("inner product  : {}", rational_plain(&inner));
    println!("truncated q^<={order}: {}", poly_plain(&trunc));
    let agree = rec == fub && fub == inner && fub.q_series(order) == trunc;
    println!("{}", if agree { "AGREE" } else { "DISAGREE" });
}
