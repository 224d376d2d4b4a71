//! Link symmetric functions, their normalization and the Hall pairing.
//!
//! ```text
//! cargo run --release --example link_symmetric_functions
//! ```

use linksym::qt_arith::emit::ratfunc_plain;
use linksym::symfunc::{
    basis_e, basis_h, basis_p, e_expand, e_positivity_check, hall_inner, link_sym, link_sym_normalized,
};
use linksym::symfunc::{sf_multiply, Partition};
use linksym::BinaryWord;

fn main() {
    for v in ["0", "11", "00", "010"] {
        let v: BinaryWord = v.parse().unwrap();
        println!("L_{v}  = {}", link_sym(&v).to_plain());
        println!("L~_{v} = {}", link_sym_normalized(&v).unwrap().to_plain());
    }

    let p11 = basis_p(&"1,1".parse().unwrap());
    let l00 = link_sym_normalized(&"00".parse().unwrap()).unwrap();
    println!("<L~_00, p_11> = {}", ratfunc_plain(&hall_inner(&l00, &p11).unwrap()));

    // f_v is recovered by pairing with e_{n-d} h_d
    let v: BinaryWord = "10".parse().unwrap();
    for d in 0..=2 {
        let eh = sf_multiply(&basis_e(&Partition::row(2 - d)), &basis_h(&Partition::row(d)));
        println!("[a^{d}] f_10 = {}", ratfunc_plain(&hall_inner(&link_sym(&v), &eh).unwrap()));
    }

    let h2 = basis_h(&Partition::row(2));
    for (lambda, c) in e_expand(&h2) {
        println!("h_2 has e_{lambda} coefficient {}", ratfunc_plain(&c));
    }

    for v in ["0", "00", "011", "0101"] {
        println!("L_{v}(q, 1 + t) e-positive to q^10: {}", e_positivity_check(&v.parse().unwrap(), 10));
    }
}
