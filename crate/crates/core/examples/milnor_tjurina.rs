//! Local invariants of isolated singular points.

use std::fmt::Write;

use lintype::{
    is_locally_eulerian, milnor_number, multiplicity, parse_polynomial, quasi_homogeneous_weights,
    socle_module_cyclic, tjurina_number, Point, RingContext,
};

pub fn run() -> String {
    let r = RingContext::new(["x", "y"]).unwrap();
    let o = Point::origin(2);
    let mut out = String::new();
    for s in ["y^2 - x^3", "x^5 - y^6 + x^3*y^4", "y^2*x - x^3 + x^4*y"] {
        let f = parse_polynomial(s, &r).unwrap();
        let weights = quasi_homogeneous_weights(&f)
            .map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
            .unwrap_or_else(|| "none".into());
        writeln!(
            out,
            "{s}: mult {}, mu {}, tau {}, eulerian {}, socle cyclic {}, weights ({weights})",
            multiplicity(&f, &o).unwrap(),
            milnor_number(&f, &o).unwrap(),
            tjurina_number(&f, &o).unwrap(),
            is_locally_eulerian(&f, &o).unwrap(),
            socle_module_cyclic(&f, &o).unwrap(),
        )
        .unwrap();
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
