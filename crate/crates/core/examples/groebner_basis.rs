//! Reduced Groebner bases, normal forms and ideal membership.

use std::fmt::Write;

use lintype::{groebner_basis, normal_form, parse_polynomial, MonomialOrder, RingContext};

pub fn run() -> String {
    let r = RingContext::new(["x", "y", "z"]).unwrap();
    let gens: Vec<_> = ["x^2 + y*z - 2", "x*y - z^2", "y^2 - x*z"]
        .iter()
        .map(|s| parse_polynomial(s, &r).unwrap())
        .collect();
    let mut out = String::new();
    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
        let b = groebner_basis(&gens, &order).unwrap();
        writeln!(out, "{order:?}: {} elements, confluent: {}", b.len(), b.is_confluent().unwrap()).unwrap();
        for g in b.generators() {
            writeln!(out, "  {g}").unwrap();
        }
    }
    let b = groebner_basis(&gens, &MonomialOrder::DegRevLex).unwrap();
    for probe in ["x^3*y - x*z^2", "x^3 + y^3 + z^3"] {
        let f = parse_polynomial(probe, &r).unwrap();
        writeln!(out, "NF({probe}) = {}", normal_form(&f, &b).unwrap()).unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
