//! Every runnable example, with its key lines checked.

#[allow(dead_code)]
#[path = "../examples/ade_classification.rs"]
mod ade_classification;
#[allow(dead_code)]
#[path = "../examples/elimination.rs"]
mod elimination;
#[allow(dead_code)]
#[path = "../examples/groebner_basis.rs"]
mod groebner_basis;
#[allow(dead_code)]
#[path = "../examples/json_report.rs"]
mod json_report;
#[allow(dead_code)]
#[path = "../examples/linear_type.rs"]
mod linear_type;
#[allow(dead_code)]
#[path = "../examples/milnor_tjurina.rs"]
mod milnor_tjurina;
#[allow(dead_code)]
#[path = "../examples/polynomial_arithmetic.rs"]
mod polynomial_arithmetic;
#[allow(dead_code)]
#[path = "../examples/quotient_dimension.rs"]
mod quotient_dimension;
#[allow(dead_code)]
#[path = "../examples/singular_points.rs"]
mod singular_points;
#[allow(dead_code)]
#[path = "../examples/standard_basis.rs"]
mod standard_basis;
#[allow(dead_code)]
#[path = "../examples/syzygies.rs"]
mod syzygies;

fn has(out: &str, line: &str) {
    assert!(out.lines().any(|l| l.trim() == line), "missing {line:?} in\n{out}");
}

#[test]
fn polynomial_arithmetic_runs() {
    let out = polynomial_arithmetic::run();
    has(&out, "deg f = 6, homogeneous: true");
    has(&out, "f(1, 2, 1/3) = -247/9");
}

#[test]
fn groebner_basis_runs() {
    let out = groebner_basis::run();
    has(&out, "lp: 4 elements, confluent: true");
    has(&out, "z^7 - z");
}

#[test]
fn standard_basis_runs() {
    let out = standard_basis::run();
    has(&out, "leading ideal of (y^2 - x^3, x*y) at 0: (x^4, y^2, x*y)");
    has(&out, "J(y^2 - x^4) = (x^3, y) locally: true");
}

#[test]
fn elimination_runs() {
    let out = elimination::run();
    has(&out, "x^3 - y^2");
    has(&out, "y^2 - x*z");
}

#[test]
fn syzygies_runs() {
    let out = syzygies::run();
    has(&out, "syzygy 1: (0, y^2, -3*x^2 - 4*y*z)");
    has(&out, "codimension of the entries: 3");
}

#[test]
fn quotient_dimension_runs() {
    let out = quotient_dimension::run();
    has(&out, "dim Q[x,y]/(x^4, y^5) = Finite(20)");
    has(&out, "dim Q[x,y]/(x*y) = Infinite");
}

#[test]
fn milnor_tjurina_runs() {
    let out = milnor_tjurina::run();
    has(&out, "x^5 - y^6 + x^3*y^4: mult 5, mu 20, tau 19, eulerian false, socle cyclic false, weights (none)");
}

#[test]
fn ade_classification_runs() {
    let out = ade_classification::run();
    has(&out, "x^3 - y^5: E8, delta 4, branches 1");
    has(&out, "x^4 - y^4: not simple");
    has(&out, "genus: 0");
}

#[test]
fn linear_type_runs() {
    let out = linear_type::run();
    has(&out, "witness: 4*x*T2^2 - w*T1*T3 - y*T3^2");
    has(&out, "x*z*(x + z)*(x - z): true [syzygy-codim, local-CI, locally-eulerian, socle-cyclic, rees-direct]");
}

#[test]
fn singular_points_runs() {
    let out = singular_points::run();
    has(&out, "[0:0:1]: mult 4, mu 13, tau 12, eulerian false");
    has(&out, "x^2*z^2 + x^2*w^2 + y^2*z^2 + z^2*w^2: singular locus of dimension 1");
}

#[test]
fn json_report_runs() {
    let out = json_report::run();
    assert!(out.starts_with("exit code 0\n"));
    let v: serde_json::Value = serde_json::from_str(out.split_once('\n').unwrap().1).unwrap();
    assert_eq!(v["linear_type"]["verdict"], true);
}
