//! Syzygies of a gradient ideal and the codimension of their entries.

use std::fmt::Write;

use lintype::{entries_ideal, gradient_ideal, parse_polynomial, syzygies, MonomialOrder, RingContext};

pub fn run() -> String {
    let r = RingContext::new(["x", "y", "z"]).unwrap();
    let f = parse_polynomial("y^4*z - x^5 + x^2*y^3", &r).unwrap();
    let j = gradient_ideal(&f);
    let phi = syzygies(j.generators(), &MonomialOrder::DegRevLex).unwrap();
    let mut out = String::new();
    writeln!(out, "f = {f}").unwrap();
    for (k, col) in phi.columns().iter().enumerate() {
        let entries: Vec<String> = col.iter().map(ToString::to_string).collect();
        writeln!(out, "syzygy {}: ({})", k + 1, entries.join(", ")).unwrap();
        let mut check = lintype::Polynomial::zero(&r);
        for (a, g) in col.iter().zip(j.generators()) {
            check = check.checked_add(&a.checked_mul(g).unwrap()).unwrap();
        }
        writeln!(out, "  annihilates the gradient: {}", check.is_zero()).unwrap();
    }
    let e = entries_ideal(&phi).unwrap();
    writeln!(out, "codimension of the entries: {}", 3 - e.krull_dimension().unwrap()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
