//! Level-word statistics and barred Fubini words.
//!
//! ```text
//! cargo run --example fubini_words
//! ```

use linksym::words::{area, dinv, enumerate_barred_fubini, gamma_to_uw};
use linksym::{BinaryWord, LabelWord, LevelWord};

fn main() {
    let gamma: LevelWord = "20141022".parse().unwrap();
    let pi: LabelWord = "41322231".parse().unwrap();
    println!("area(20141022) = {}", area(&gamma));
    println!("dinv(20141022, 41322231) = {}", dinv(&gamma, &pi).unwrap());

    // digit 0 in a label word is the super letter, smaller than every positive label
    let superized: LabelWord = "0101".parse().unwrap();
    println!("dinv(1111, 0101 superized) = {}", dinv(&"1111".parse().unwrap(), &superized).unwrap());

    let (u, w) = gamma_to_uw(&"013021".parse().unwrap());
    println!("013021 -> u = {u:?}, w = {w}");

    for v in BinaryWord::all(3) {
        let words: Vec<String> = enumerate_barred_fubini(&v).iter().map(ToString::to_string).collect();
        println!("{v}: {}", words.join(" "));
    }

    let counts: Vec<usize> = (1..=6).map(|n| enumerate_barred_fubini(&BinaryWord::zeros(n)).len()).collect();
    println!("|F(0^n)| for n = 1..6: {counts:?}");
}
