use super::*;
use crate::ring::{Ring, RingContext};
use crate::text::parse_polynomial;

fn ring(names: &[&str]) -> Ring {
    RingContext::new(names.iter().copied()).unwrap()
}

fn poly(r: &Ring, s: &str) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

fn proj(c: &[i64]) -> Point {
    Point::projective(c.iter().map(|&x| x.into()).collect()).unwrap()
}

#[test]
fn ideals_of_f() {
    let r = ring(&["x", "y", "z"]);
    let j = gradient_ideal(&poly(&r, "x^2+y^2+z^2"));
    assert_eq!(j.generators().len(), 3);
    assert!(gradient_ideal(&poly(&r, "7")).is_zero());
    let i = jacobian_ideal(&poly(&r, "x"));
    assert!(i.is_unit().unwrap());
    let f = poly(&r, "x^3+y^3+z^3");
    assert!(jacobian_ideal(&f).equals(&gradient_ideal(&f)).unwrap());
}

#[test]
fn multiplicities() {
    let r = ring(&["x", "y"]);
    let o = Point::origin(2);
    assert_eq!(multiplicity(&poly(&r, "y^2-x^2-x^3"), &o).unwrap(), 2);
    assert_eq!(multiplicity(&poly(&r, "y^2*x-x^3"), &o).unwrap(), 3);
    assert_eq!(multiplicity(&poly(&r, "(x^2-y^2)^3-x^2*y^2"), &o).unwrap(), 4);
    assert!(matches!(
        multiplicity(&poly(&r, "x+1"), &o),
        Err(Error::NotOnHypersurface(_))
    ));
}

#[test]
fn milnor_and_tjurina() {
    let r = ring(&["x", "y"]);
    let o = Point::origin(2);
    let cusp = poly(&r, "y^2-x^3");
    assert_eq!(milnor_number(&cusp, &o).unwrap(), 2);
    assert_eq!(tjurina_number(&cusp, &o).unwrap(), 2);
    let sextic = poly(&r, "(x^2-y^2)^3-x^2*y^2");
    assert_eq!(milnor_number(&sextic, &o).unwrap(), 13);
    assert_eq!(tjurina_number(&sextic, &o).unwrap(), 12);
    assert_eq!(milnor_number_global(&sextic, &o).unwrap(), 13);
    assert_eq!(tjurina_number_global(&sextic, &o).unwrap(), 12);
    let smooth = Point::affine(vec![1.into(), 1.into()]);
    assert_eq!(milnor_number(&cusp, &smooth).unwrap(), 0);
    assert_eq!(tjurina_number(&cusp, &smooth).unwrap(), 0);
    assert!(matches!(
        milnor_number(&poly(&r, "x^2*y"), &o),
        Err(Error::NotIsolatedPoint(_))
    ));
}

#[test]
fn eulerian_and_socle() {
    let r = ring(&["x", "y"]);
    let o = Point::origin(2);
    let bad = poly(&r, "x^5-y^6+x^3*y^4");
    assert!(!is_locally_eulerian(&bad, &o).unwrap());
    assert!(!socle_module_cyclic(&bad, &o).unwrap());
    for good in ["y^2-x^3", "y^2-x^2", "x^3-y^4"] {
        let g = poly(&r, good);
        assert!(is_locally_eulerian(&g, &o).unwrap());
        assert!(socle_module_cyclic(&g, &o).unwrap());
    }
}

#[test]
fn cubic_surface_chart() {
    let r = ring(&["x", "y", "z", "w"]);
    let f = poly(&r, "x*z*w+x^2*y+y^2*z-z^3");
    let h = HypersurfaceInput::projective(f.clone()).unwrap();
    let locus = singular_points(&h).unwrap();
    assert_eq!(locus.points.len(), 1);
    assert_eq!(locus.points[0].point, proj(&[0, 0, 0, 1]));
    assert_eq!(locus.points[0].chart, Some(3));
    assert!(locus.leftover.is_none());
    let big_f = f.dehomogenize(3).unwrap();
    let o = Point::origin(3);
    assert!(is_locally_eulerian(&big_f, &o).unwrap());
    // (24yz+5)F lies in J(F) locally
    let rr = big_f.ring().clone();
    let mult = parse_polynomial("24*y*z+5", &rr).unwrap();
    let b = crate::groebner::standard_basis(&big_f.gradient(), &MonomialOrder::NegDegRevLex).unwrap();
    assert!(b.contains(&(mult * big_f)).unwrap());
}

#[test]
fn sextic_points() {
    let r = ring(&["x", "y", "z"]);
    let h = HypersurfaceInput::projective(poly(&r, "(x^2-y^2)^3-x^2*y^2*z^2")).unwrap();
    let locus = singular_points(&h).unwrap();
    let pts: Vec<Point> = locus.points.iter().map(|p| p.point.clone()).collect();
    assert_eq!(pts, vec![proj(&[1, -1, 0]), proj(&[1, 1, 0]), proj(&[0, 0, 1])]);
    assert!(locus.leftover.is_none());
    let last = analyze_point(&h, &locus.points[2]).unwrap();
    assert_eq!((last.milnor, last.tjurina), (13, 12));
    assert!(!last.locally_eulerian);
    for cusp in &locus.points[..2] {
        let rep = analyze_point(&h, cusp).unwrap();
        assert!(rep.locally_complete_intersection());
        assert_eq!(rep.ade.unwrap().to_string(), "A2");
    }
}

#[test]
fn smooth_and_non_isolated() {
    let r = ring(&["x", "y", "z"]);
    let h = HypersurfaceInput::projective(poly(&r, "x^3+y^3+z^3")).unwrap();
    assert!(singular_points(&h).unwrap().points.is_empty());
    let line = HypersurfaceInput::affine(poly(&r, "x^3*y^2+x^5*z+y^4")).unwrap();
    assert!(matches!(singular_points(&line), Err(Error::NonIsolated { dimension: 1 })));
    let doubled = HypersurfaceInput::projective(poly(&r, "x^2*(x+y+z)")).unwrap();
    assert!(matches!(singular_points(&doubled), Err(Error::NotReduced { .. })));
    assert!(HypersurfaceInput::projective(poly(&r, "x^2+y^2+z^2")).is_err());
    assert!(HypersurfaceInput::projective(poly(&r, "x^3+y")).is_err());
}

#[test]
fn irrational_points_are_left_over() {
    let r = ring(&["x", "y"]);
    // nodes at x = ±sqrt(2) on the x-axis and a rational node at the origin
    let f = poly(&r, "y^2-x^2*(x^2-2)^2");
    let h = HypersurfaceInput::affine(f).unwrap();
    let locus = singular_points(&h).unwrap();
    assert_eq!(locus.points.len(), 1);
    let rest = locus.leftover.expect("two irrational nodes");
    assert_eq!(rest.quotient_dimension().unwrap(), QuotientDim::Finite(2));
}

#[test]
fn genus_formula() {
    let r = ring(&["x", "y", "z"]);
    let smooth = HypersurfaceInput::new(poly(&r, "x^4+y^4+z^4"), Setting::Projective, true).unwrap();
    assert_eq!(genus(&smooth, &[], None).unwrap(), 3);
    // three cusps: a rational quartic
    let f = poly(&r, "x^2*y^2+y^2*z^2+z^2*x^2-2*x*y*z*(x+y+z)");
    let h = HypersurfaceInput::new(f, Setting::Projective, true).unwrap();
    let locus = singular_points(&h).unwrap();
    let reps: Vec<_> = locus.points.iter().map(|p| analyze_point(&h, p).unwrap()).collect();
    assert_eq!(reps.len(), 3);
    assert!(reps.iter().all(|r| r.ade.unwrap().to_string() == "A2"));
    assert_eq!(genus(&h, &reps, None).unwrap(), 0);
    // one node
    let g = poly(&r, "x^4+y^4+x^2*z^2-y^2*z^2");
    let h1 = HypersurfaceInput::new(g.clone(), Setting::Projective, true).unwrap();
    let locus = singular_points(&h1).unwrap();
    let reps: Vec<_> = locus.points.iter().map(|p| analyze_point(&h1, p).unwrap()).collect();
    assert_eq!(reps.len(), 1);
    assert_eq!(genus(&h1, &reps, None).unwrap(), 2);
    let unasserted = HypersurfaceInput::projective(g).unwrap();
    assert!(genus(&unasserted, &reps, None).is_err());
}

#[test]
fn high_degree_tails_at_a_cusp() {
    let r = ring(&["x", "y"]);
    let f = poly(&r, "3*x^8*y^2 - x^3 + x*y^2 + y^2");
    let o = Point::origin(2);
    assert_eq!(milnor_number(&f, &o).unwrap(), 2);
    assert_eq!(tjurina_number(&f, &o).unwrap(), 2);
    assert_eq!(tjurina_number_global(&f, &o).unwrap(), 2);
    assert!(is_locally_eulerian(&f, &o).unwrap());
    assert!(socle_module_cyclic(&f, &o).unwrap());
    assert_eq!(jacobian_generators_local(&f, &o).unwrap(), 2);
    let locus = singular_points(&HypersurfaceInput::affine(f).unwrap()).unwrap();
    assert_eq!(locus.points.len(), 1);
    assert!(locus.leftover.is_none());
}

#[test]
fn socle_with_far_critical_points() {
    let r = ring(&["x", "y"]);
    let f = poly(&r, "2*x^7*y^2 - x^7 + x^4*y^3 + y^3");
    let o = Point::origin(2);
    assert_eq!(milnor_number(&f, &o).unwrap(), 12);
    assert_eq!(socle_generators(&f, &o).unwrap(), 1);
    let g = poly(&r, "x^5 - y^6 + x^3*y^4");
    assert_eq!(socle_generators(&g, &o).unwrap(), 2);
}
