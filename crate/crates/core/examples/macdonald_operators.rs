//! Modified Macdonald polynomials, nabla and Delta.
//!
//! ```text
//! cargo run --release --example macdonald_operators
//! ```

use linksym::macdonald::{b_mu, delta, htilde, mac_expand, nabla, nabla_inv, pieri_d};
use linksym::qt_arith::emit::ratfunc_plain;
use linksym::symfunc::{basis_e, basis_p, hall_inner, Partition};

fn main() {
    let mu: Partition = "4,3,1".parse().unwrap();
    println!("B_({mu}) = {}", b_mu(&mu));

    for mu in Partition::all(3) {
        println!("H~_({mu}) = {}", htilde(&mu).to_plain());
    }

    let p11 = basis_p(&"1,1".parse().unwrap());
    let n = nabla(&p11);
    println!("nabla p_11 = {}", n.to_plain());
    println!("<nabla p_11, p_11> = {}", ratfunc_plain(&hall_inner(&n, &p11).unwrap()));
    println!("nabla^-1 nabla p_11 == p_11: {}", nabla_inv(&n) == p11);

    let p111 = basis_p(&Partition::column(3));
    println!("p_111 = {}", mac_expand(&p111).to_plain());
    println!("Delta_e2 p_111 = {}", delta(&basis_e(&Partition::row(2)), &p111).to_plain());

    let nu: Partition = "2,1".parse().unwrap();
    for mu in nu.upper_covers() {
        println!("d_({mu}),({nu}) = {}", ratfunc_plain(&pieri_d(&mu, &nu).unwrap()));
    }
}
