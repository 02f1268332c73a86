//! Implicitization by eliminating a parameter with a block order.

use std::fmt::Write;

use lintype::{eliminate, parse_polynomial, RingContext};

pub fn run() -> String {
    let r = RingContext::new(["t", "x", "y", "z"]).unwrap();
    let gens: Vec<_> = ["x - t", "y - t^2", "z - t^3"]
        .iter()
        .map(|s| parse_polynomial(s, &r).unwrap())
        .collect();
    let mut out = String::new();
    writeln!(out, "twisted cubic (t, t^2, t^3):").unwrap();
    for g in eliminate(&gens, &[0]).unwrap() {
        writeln!(out, "  {g}").unwrap();
    }
    let r = RingContext::new(["t", "x", "y"]).unwrap();
    let cusp: Vec<_> = ["x - t^2", "y - t^3"].iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
    writeln!(out, "cuspidal cubic (t^2, t^3):").unwrap();
    for g in eliminate(&cusp, &[0]).unwrap() {
        writeln!(out, "  {g}").unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
