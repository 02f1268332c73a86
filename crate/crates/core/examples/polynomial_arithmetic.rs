//! Exact polynomial arithmetic over the rationals.

use std::fmt::Write;

use lintype::{parse_polynomial, Rational, RingContext};

pub fn run() -> String {
    let r = RingContext::new(["x", "y", "z"]).unwrap();
    let f = parse_polynomial("(x^2 - y^2)^3 - x^2*y^2*z^2", &r).unwrap();
    let g = parse_polynomial("1/2*x + 3*y - z", &r).unwrap();
    let mut out = String::new();
    writeln!(out, "f = {f}").unwrap();
    writeln!(out, "deg f = {}, homogeneous: {}", f.total_degree().unwrap(), f.is_homogeneous()).unwrap();
    writeln!(out, "f + g = {}", f.checked_add(&g).unwrap()).unwrap();
    writeln!(out, "g^2 = {}", g.pow(2).unwrap()).unwrap();
    for (i, d) in f.gradient().iter().enumerate() {
        writeln!(out, "df/d{} = {d}", r.name(i)).unwrap();
    }
    let affine = f.dehomogenize(2).unwrap();
    writeln!(out, "f(x, y, 1) = {affine}").unwrap();
    let value = f.evaluate(&[Rational::from(1), Rational::from(2), Rational::new(1, 3)]).unwrap();
    writeln!(out, "f(1, 2, 1/3) = {value}").unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
