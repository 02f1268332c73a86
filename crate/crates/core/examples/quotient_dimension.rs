//! Vector space dimension of zero-dimensional quotients.

use std::fmt::Write;

use lintype::{groebner_basis, parse_polynomial, quotient_k_dimension, MonomialOrder, RingContext};

pub fn run() -> String {
    let r = RingContext::new(["x", "y"]).unwrap();
    let mut out = String::new();
    for (a, b) in [(2, 3), (4, 5)] {
        let gens = [format!("x^{a}"), format!("y^{b}")].map(|s| parse_polynomial(&s, &r).unwrap());
        let basis = groebner_basis(&gens, &MonomialOrder::DegRevLex).unwrap();
        writeln!(out, "dim Q[x,y]/(x^{a}, y^{b}) = {:?}", quotient_k_dimension(&basis)).unwrap();
    }
    let f = parse_polynomial("x^3 + y^4 + x*y", &r).unwrap();
    let basis = groebner_basis(&f.gradient(), &MonomialOrder::DegRevLex).unwrap();
    writeln!(out, "total Milnor number of {f}: {:?}", quotient_k_dimension(&basis)).unwrap();
    let line = groebner_basis(&[parse_polynomial("x*y", &r).unwrap()], &MonomialOrder::DegRevLex).unwrap();
    writeln!(out, "dim Q[x,y]/(x*y) = {:?}", quotient_k_dimension(&line)).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
