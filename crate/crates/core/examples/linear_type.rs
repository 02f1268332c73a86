//! Symmetric and Rees algebras of gradient ideals and the linear type verdict.

use std::fmt::Write;

use lintype::{
    gradient_ideal, gradient_linear_type, is_linear_type, parse_polynomial, rees_ideal, symmetric_ideal,
    LinearTypeOptions, RingContext,
};

pub fn run() -> String {
    let r = RingContext::new(["x", "y", "z", "w"]).unwrap();
    let f = parse_polynomial("x^4 - x*y*w^2 + z*w^3", &r).unwrap();
    let j = gradient_ideal(&f);
    let mut out = String::new();
    writeln!(out, "f = {f}").unwrap();
    let sym = symmetric_ideal(&j).unwrap();
    writeln!(out, "Sym presentation:").unwrap();
    for g in sym.generators() {
        writeln!(out, "  {g}").unwrap();
    }
    let rees = rees_ideal(&j).unwrap();
    writeln!(out, "Rees presentation:").unwrap();
    for g in rees.generators() {
        writeln!(out, "  {g}  (T-degree {})", rees.t_degree(g).unwrap()).unwrap();
    }
    let test = is_linear_type(&j).unwrap();
    writeln!(out, "linear type: {}", test.verdict).unwrap();
    if let Some(w) = &test.witness {
        writeln!(out, "witness: {w}").unwrap();
    }
    let p = RingContext::new(["x", "y", "z"]).unwrap();
    for s in ["(x^2 - y^2)^3 - x^2*y^2*z^2", "x*z*(x + z)*(x - z)"] {
        let g = parse_polynomial(s, &p).unwrap();
        let v = gradient_linear_type(&g, LinearTypeOptions { direct_rees: true }).unwrap();
        let methods: Vec<&str> = v.methods.iter().map(|m| m.tag()).collect();
        writeln!(out, "{s}: {} [{}]", v.verdict, methods.join(", ")).unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
