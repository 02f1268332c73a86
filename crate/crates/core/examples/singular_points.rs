//! Singular points of a projective curve and a projective surface.

use std::fmt::Write;

use lintype::singularity::{analyze_point, singular_locus_dimension};
use lintype::{parse_polynomial, singular_points, HypersurfaceInput, RingContext};

pub fn run() -> String {
    let mut out = String::new();
    let cases = [
        (vec!["x", "y", "z"], "(x^2 - y^2)^3 - x^2*y^2*z^2"),
        (vec!["x", "y", "z", "w"], "x*z*w + x^2*y + y^2*z - z^3"),
        (vec!["x", "y", "z", "w"], "x^2*z^2 + x^2*w^2 + y^2*z^2 + z^2*w^2"),
    ];
    for (vars, s) in cases {
        let r = RingContext::new(vars).unwrap();
        let h = HypersurfaceInput::projective(parse_polynomial(s, &r).unwrap()).unwrap();
        let dim = singular_locus_dimension(&h).unwrap();
        writeln!(out, "{s}: singular locus of dimension {dim}").unwrap();
        if dim != 0 {
            continue;
        }
        for sp in singular_points(&h).unwrap().points {
            let rep = analyze_point(&h, &sp).unwrap();
            writeln!(
                out,
                "  {}: mult {}, mu {}, tau {}, eulerian {}",
                rep.point, rep.multiplicity, rep.milnor, rep.tjurina, rep.locally_eulerian
            )
            .unwrap();
        }
    }
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run());
}
