//! Simple plane curve singularities and the genus of a plane curve.

use std::fmt::Write;

use lintype::singularity::{analyze_point, delta_and_branches};
use lintype::{classify_ade, genus, parse_polynomial, singular_points, HypersurfaceInput, Point, RingContext};

pub fn run() -> String {
    let r = RingContext::new(["x", "y"]).unwrap();
    let o = Point::origin(2);
    let mut out = String::new();
    for s in ["y^2 - x^5", "x^2*y - y^4", "x^3 - y^4", "x^3 - x*y^3", "x^3 - y^5", "x^4 - y^4"] {
        let f = parse_polynomial(s, &r).unwrap();
        let t = classify_ade(&f, &o).unwrap();
        match delta_and_branches(t) {
            Ok((delta, branches)) => writeln!(out, "{s}: {t}, delta {delta}, branches {branches}").unwrap(),
            Err(_) => writeln!(out, "{s}: {t}").unwrap(),
        }
    }
    let p = RingContext::new(["x", "y", "z"]).unwrap();
    let f = parse_polynomial("x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)", &p).unwrap();
    let h = HypersurfaceInput::new(f, lintype::Setting::Projective, true).unwrap();
    let locus = singular_points(&h).unwrap();
    let reports: Vec<_> = locus.points.iter().map(|sp| analyze_point(&h, sp).unwrap()).collect();
    for rep in &reports {
        writeln!(out, "tricuspidal quartic at {}: {}", rep.point, rep.ade.unwrap()).unwrap();
    }
    writeln!(out, "genus: {}", genus(&h, &reports, locus.leftover.as_ref()).unwrap()).unwrap();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
