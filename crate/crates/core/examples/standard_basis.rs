//! Mora standard bases for local computations at the origin.

use std::fmt::Write;

use lintype::{
    ideal_equal, parse_polynomial, quotient_k_dimension, standard_basis, MonomialOrder, Polynomial, Rational,
    RingContext,
};

pub fn run() -> String {
    let r = RingContext::new(["x", "y"]).unwrap();
    let p = |s: &str| parse_polynomial(s, &r).unwrap();
    let mut out = String::new();
    let b = standard_basis(&[p("y^2 - x^3"), p("x*y")], &MonomialOrder::NegDegRevLex).unwrap();
    let lead: Vec<String> = b
        .leading_monomials()
        .into_iter()
        .map(|m| Polynomial::monomial(&r, m, Rational::from(1)).to_string())
        .collect();
    writeln!(out, "leading ideal of (y^2 - x^3, x*y) at 0: ({})", lead.join(", ")).unwrap();
    writeln!(out, "local length: {:?}", quotient_k_dimension(&b)).unwrap();
    let b = standard_basis(&[p("x^2 + x^3"), p("y - y*x")], &MonomialOrder::NegDegRevLex).unwrap();
    writeln!(out, "x^2 in (x^2 + x^3, y - x*y) locally: {}", b.contains(&p("x^2")).unwrap()).unwrap();
    let f = p("y^2 - x^4");
    let same = ideal_equal(&f.gradient(), &[p("x^3"), p("y")], &MonomialOrder::NegDegRevLex).unwrap();
    writeln!(out, "J(y^2 - x^4) = (x^3, y) locally: {same}").unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
