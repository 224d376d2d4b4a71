//! JSON export of series, symmetric functions and Macdonald expansions.
//!
//! ```text
//! cargo run --example json_export
//! ```

use linksym::macdonald::{mac_expand, MacExpansion};
use linksym::poincare::{compute, Method};
use linksym::symfunc::{basis_p, link_sym, ExpansionJson, SymFunc};
use linksym::BinaryWord;

fn main() {
    let v: BinaryWord = "010".parse().unwrap();
    let f = compute(&v, Method::BarredFubini, 0).unwrap();
    println!("{}", serde_json::to_string_pretty(&f.to_json()).unwrap());

    let l = link_sym(&v);
    let text = serde_json::to_string(&l.to_json()).unwrap();
    println!("{text}");
    let back: ExpansionJson = serde_json::from_str(&text).unwrap();
    assert_eq!(SymFunc::from_json(&back).unwrap(), l);

    let e = mac_expand(&basis_p(&"1,1".parse().unwrap()));
    let text = serde_json::to_string(&e.to_json()).unwrap();
    println!("{text}");
    assert_eq!(MacExpansion::from_json(&serde_json::from_str(&text).unwrap()).unwrap(), e);
}
