//! Singular points of hypersurfaces and their local invariants.

mod ade;
mod points;
mod weights;

use std::fmt;


use crate::error::{Error, Result};
use crate::groebner::{self, QuotientDim};
use crate::ideal::{
    ideal_quotient, minimal_generators_local_relative, poly_gcd,
    primary_component_at_point, saturation, Ideal,
};
use crate::order::MonomialOrder;
use crate::point::Point;
use crate::poly::Polynomial;
use crate::rational::Rational;

pub use ade::{classify_ade, delta_and_branches, AdeFamily, AdeType};
pub use weights::{euler_combination, quasi_homogeneous_weights};

/// Whether `f` defines an affine or a projective hypersurface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Setting {
    Affine,
    Projective,
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Setting::Affine => "affine",
            Setting::Projective => "projective",
        })
    }
}

/// A hypersurface `V(f)` together with how to read it.
#[derive(Clone, Debug)]
pub struct HypersurfaceInput {
    pub f: Polynomial,
    pub setting: Setting,
    /// Supplied by the user; never verified.
    pub assert_irreducible: bool,
}

impl HypersurfaceInput {
    pub fn new(f: Polynomial, setting: Setting, assert_irreducible: bool) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if setting == Setting::Projective {
            if !f.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            let d = f.total_degree().unwrap_or(0);
            if d < 3 {
                return Err(Error::Precondition(format!(
                    "projective hypersurfaces need degree at least 3, got {d}"
                )));
            }
        }
        Ok(HypersurfaceInput {
            f,
            setting,
            assert_irreducible,
        })
    }

    pub fn affine(f: Polynomial) -> Result<Self> {
        Self::new(f, Setting::Affine, false)
    }

    pub fn projective(f: Polynomial) -> Result<Self> {
        Self::new(f, Setting::Projective, false)
    }

    pub fn degree(&self) -> u32 {
        self.f.total_degree().unwrap_or(0)
    }
}

/// `J(f)`: the ideal of first partial derivatives.
pub fn gradient_ideal(f: &Polynomial) -> Ideal {
    Ideal::new(f.ring(), f.gradient()).expect("same ring")
}

/// `I(f) = (f) + J(f)`.
pub fn jacobian_ideal(f: &Polynomial) -> Ideal {
    Ideal::new(f.ring(), std::iter::once(f.clone()).chain(f.gradient())).expect("same ring")
}

fn on_hypersurface(f: &Polynomial, p: &Point) -> Result<Polynomial> {
    let g = f.translate_to_origin(p)?;
    if !g.constant_term().is_zero() {
        return Err(Error::NotOnHypersurface(p.to_string()));
    }
    Ok(g)
}

/// Order of vanishing of `f` at an affine point on `V(f)`.
pub fn multiplicity(f: &Polynomial, p: &Point) -> Result<u32> {
    on_hypersurface(f, p)?.initial_degree()
}

fn local_length(gens: Vec<Polynomial>, f: &Polynomial, p: &Point) -> Result<u64> {
    let b = groebner::standard_basis_in(f.ring(), &gens, &MonomialOrder::NegDegRevLex)?;
    match groebner::quotient_k_dimension(&b) {
        QuotientDim::Finite(k) => Ok(k),
        QuotientDim::Infinite => Err(Error::NotIsolatedPoint(p.to_string())),
    }
}

/// `dim_k R_m / J(f)_m` at an affine point, from a local standard basis.
pub fn milnor_number(f: &Polynomial, p: &Point) -> Result<u64> {
    let g = f.translate_to_origin(p)?;
    local_length(g.gradient(), f, p)
}

/// `dim_k R_m / I(f)_m` at an affine point, from a local standard basis.
pub fn tjurina_number(f: &Polynomial, p: &Point) -> Result<u64> {
    let g = f.translate_to_origin(p)?;
    let mut gens = vec![g.clone()];
    gens.extend(g.gradient());
    gens.extend(milnor_power(&g, 0)?);
    local_length(gens, f, p)
}

/// `m^(mu + extra)` at the origin, which lies in `J(g)` locally.
fn milnor_power(g: &Polynomial, extra: u32) -> Result<Vec<Polynomial>> {
    let mu = milnor_number(g, &Point::origin(g.nvars()))?;
    Ok(points::monomials_of_degree(g.nvars(), mu.max(1) as u32 + extra)
        .into_iter()
        .map(|m| Polynomial::monomial(g.ring(), m, Rational::one()))
        .collect())
}

/// Global dimension of `R/Q` for the primary component `Q` of `ideal` at `p`.
fn primary_length(ideal: &Ideal, p: &Point) -> Result<u64> {
    let q = primary_component_at_point(ideal, p)?;
    match q.quotient_dimension()? {
        QuotientDim::Finite(k) => Ok(k),
        QuotientDim::Infinite => Err(Error::NotIsolatedPoint(p.to_string())),
    }
}

/// Milnor number through the primary component of `J(f)` (no local orders).
pub fn milnor_number_global(f: &Polynomial, p: &Point) -> Result<u64> {
    if !gradient_vanishes(f, p)? {
        return Ok(0);
    }
    primary_length(&gradient_ideal(f), p)
}

/// Tjurina number through the primary component of `I(f)`.
pub fn tjurina_number_global(f: &Polynomial, p: &Point) -> Result<u64> {
    let c = p.coords();
    if !f.evaluate(c)?.is_zero() || !gradient_vanishes(f, p)? {
        return Ok(0);
    }
    primary_length(&jacobian_ideal(f), p)
}

fn gradient_vanishes(f: &Polynomial, p: &Point) -> Result<bool> {
    for d in f.gradient() {
        if !d.evaluate(p.coords())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f ∈ J(f)` in the local ring at `p`.
pub fn is_locally_eulerian(f: &Polynomial, p: &Point) -> Result<bool> {
    let g = f.translate_to_origin(p)?;
    let mut gens = g.gradient();
    gens.extend(milnor_power(&g, 0)?);
    let b = groebner::standard_basis_in(f.ring(), &gens, &MonomialOrder::NegDegRevLex)?;
    b.contains(&g)
}

/// `(J(f) : f) / J(f)` is generated by at most one element locally at `p`.
pub fn socle_module_cyclic(f: &Polynomial, p: &Point) -> Result<bool> {
    Ok(socle_generators(f, p)? <= 1)
}

/// Minimal number of generators of `(J(f) : f) / J(f)` locally at `p`.
pub fn socle_generators(f: &Polynomial, p: &Point) -> Result<usize> {
    let g = f.translate_to_origin(p)?;
    let o = Point::origin(g.nvars());
    let power = milnor_power(&g, 0)?;
    let j = Ideal::new(g.ring(), gradient_ideal(&g).generators().iter().cloned().chain(power))?;
    let principal = Ideal::new(g.ring(), [g.clone()])?;
    let colon = ideal_quotient(&j, &principal)?;
    minimal_generators_local_relative(&colon, &j, &o)
}

/// Minimal number of generators of `I(f)` locally at `p`.
pub fn jacobian_generators_local(f: &Polynomial, p: &Point) -> Result<usize> {
    let g = f.translate_to_origin(p)?;
    let base = Ideal::new(g.ring(), milnor_power(&g, 1)?)?;
    minimal_generators_local_relative(&jacobian_ideal(&g), &base, &Point::origin(g.nvars()))
}

/// A point of the singular locus before local analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub point: Point,
    /// Standard affine chart `x_i = 1` used for projective points.
    pub chart: Option<usize>,
    pub residue_degree: u32,
}

/// Rational singular points, and the ideal of any others.
#[derive(Clone, Debug)]
pub struct SingularLocus {
    pub points: Vec<SingularPoint>,
    pub leftover: Option<Ideal>,
}

/// `gcd(f, df/dx_1, ..., df/dx_n)`; constant iff `f` is squarefree.
pub fn repeated_factor(f: &Polynomial) -> Result<Polynomial> {
    let mut g = f.clone();
    for d in f.gradient() {
        if g.is_constant() {
            break;
        }
        g = poly_gcd(&g, &d)?;
    }
    Ok(g)
}

fn positive_dimension(f: &Polynomial, dimension: i64) -> Error {
    match repeated_factor(f) {
        Ok(g) if !g.is_constant() => Error::NotReduced {
            witness: g.to_string(),
        },
        _ => Error::NonIsolated { dimension },
    }
}

/// Rational singular points of an affine (`V(I(f))`) or projective
/// (`V(J(f))`) hypersurface with a zero-dimensional singular locus.
pub fn singular_points(h: &HypersurfaceInput) -> Result<SingularLocus> {
    match h.setting {
        Setting::Affine => affine_points(&h.f),
        Setting::Projective => projective_points(&h.f),
    }
}

/// Dimension of the singular locus (`-1` when empty).
pub fn singular_locus_dimension(h: &HypersurfaceInput) -> Result<i64> {
    match h.setting {
        Setting::Affine => jacobian_ideal(&h.f).krull_dimension(),
        Setting::Projective => Ok((gradient_ideal(&h.f).krull_dimension()? - 1).max(-1)),
    }
}

fn affine_points(f: &Polynomial) -> Result<SingularLocus> {
    let i = jacobian_ideal(f);
    let dim = i.krull_dimension()?;
    if dim > 0 {
        return Err(positive_dimension(f, dim));
    }
    if dim < 0 {
        return Ok(SingularLocus {
            points: Vec::new(),
            leftover: None,
        });
    }
    let (pts, leftover) = points::rational_points(&i)?;
    Ok(SingularLocus {
        points: pts
            .into_iter()
            .map(|c| SingularPoint {
                point: Point::affine(c),
                chart: None,
                residue_degree: 1,
            })
            .collect(),
        leftover,
    })
}

fn projective_points(f: &Polynomial) -> Result<SingularLocus> {
    let ring = f.ring().clone();
    let n = ring.nvars();
    let j = gradient_ideal(f);
    let cone = j.krull_dimension()?;
    if cone > 1 {
        return Err(positive_dimension(f, cone - 1));
    }
    let mut found = Vec::new();
    let mut incomplete = false;
    if cone == 1 {
        for chart in 0..n {
            let mut gens: Vec<Polynomial> = j.generators().to_vec();
            gens.push(Polynomial::var(&ring, chart)? - Polynomial::one(&ring));
            for k in 0..chart {
                gens.push(Polynomial::var(&ring, k)?);
            }
            let (pts, rest) = points::rational_points(&Ideal::new(&ring, gens)?)?;
            incomplete |= rest.is_some();
            for c in pts {
                found.push(SingularPoint {
                    point: Point::projective(c)?,
                    chart: Some(chart),
                    residue_degree: 1,
                });
            }
        }
    }
    let leftover = if incomplete {
        let mut rest = j.clone();
        for sp in &found {
            rest = saturation(&rest, &point_ideal(&ring, &sp.point)?)?;
        }
        let irrelevant = Ideal::new(&ring, (0..n).map(|i| Polynomial::var(&ring, i)).collect::<Result<Vec<_>>>()?)?;
        rest = saturation(&rest, &irrelevant)?;
        if rest.is_unit()? {
            None
        } else {
            Some(rest)
        }
    } else {
        None
    };
    Ok(SingularLocus {
        points: found,
        leftover,
    })
}

/// Homogeneous prime ideal of a rational projective point: the 2x2 minors
/// of the matrix with rows `x` and `p`.
fn point_ideal(ring: &crate::ring::Ring, p: &Point) -> Result<Ideal> {
    let c = p.coords();
    let mut gens = Vec::new();
    for j in 0..c.len() {
        for k in j + 1..c.len() {
            let a = Polynomial::var(ring, k)?.scale(&c[j]);
            let b = Polynomial::var(ring, j)?.scale(&c[k]);
            gens.push(a.checked_sub(&b)?);
        }
    }
    Ideal::new(ring, gens)
}

/// Affine polynomial and point for the local analysis at a singular point.
pub fn local_chart(h: &HypersurfaceInput, sp: &SingularPoint) -> Result<(Polynomial, Point)> {
    match (h.setting, sp.chart) {
        (Setting::Affine, _) => Ok((h.f.clone(), sp.point.clone())),
        (Setting::Projective, Some(chart)) => Ok((h.f.dehomogenize(chart)?, sp.point.in_chart(chart)?)),
        (Setting::Projective, None) => Err(Error::Precondition("projective point without a chart".into())),
    }
}

/// Local invariants of one singular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPointReport {
    pub point: Point,
    pub chart: Option<usize>,
    pub residue_degree: u32,
    pub multiplicity: u32,
    pub milnor: u64,
    pub tjurina: u64,
    pub locally_eulerian: bool,
    /// `(J(f):f)/J(f)` locally cyclic.
    pub socle_cyclic: bool,
    /// Minimal number of local generators of `I(f)`.
    pub jacobian_generators: usize,
    /// Number of variables of the local chart.
    pub ambient_dimension: usize,
    /// Classified only for plane curves.
    pub ade: Option<AdeType>,
    pub delta: Option<u32>,
    pub branches: Option<u32>,
}

impl SingularPointReport {
    /// `I(f)` is a complete intersection locally.
    pub fn locally_complete_intersection(&self) -> bool {
        self.jacobian_generators == self.ambient_dimension
    }

    /// Re-check the numerical invariants relating the fields.
    pub fn validate(&self) -> Result<()> {
        if self.tjurina > self.milnor {
            return Err(Error::Precondition(format!("tau {} exceeds mu {}", self.tjurina, self.milnor)));
        }
        if self.locally_eulerian != (self.milnor == self.tjurina) {
            return Err(Error::Precondition("locally Eulerian flag disagrees with mu = tau".into()));
        }
        if let (Some(d), Some(r)) = (self.delta, self.branches) {
            if 2 * d as u64 != self.milnor + r as u64 - 1 {
                return Err(Error::Precondition("delta formula violated".into()));
            }
        }
        Ok(())
    }
}

/// Compute every local invariant at `sp`.
pub fn analyze_point(h: &HypersurfaceInput, sp: &SingularPoint) -> Result<SingularPointReport> {
    let (g, p) = local_chart(h, sp)?;
    let milnor = milnor_number(&g, &p)?;
    let tjurina = tjurina_number(&g, &p)?;
    let ade = if g.nvars() == 2 { Some(classify_ade(&g, &p)?) } else { None };
    let (delta, branches) = match ade {
        Some(t) if t.is_simple() => {
            let (d, r) = delta_and_branches(t)?;
            (Some(d), Some(r))
        }
        _ => (None, None),
    };
    let report = SingularPointReport {
        point: sp.point.clone(),
        chart: sp.chart,
        residue_degree: sp.residue_degree,
        multiplicity: multiplicity(&g, &p)?,
        milnor,
        tjurina,
        locally_eulerian: is_locally_eulerian(&g, &p)?,
        socle_cyclic: socle_module_cyclic(&g, &p)?,
        jacobian_generators: jacobian_generators_local(&g, &p)?,
        ambient_dimension: g.nvars(),
        ade,
        delta,
        branches,
    };
    report.validate()?;
    Ok(report)
}

/// Geometric genus `(d-1)(d-2)/2 - sum delta_p` of an irreducible plane curve.
pub fn genus(h: &HypersurfaceInput, reports: &[SingularPointReport], leftover: Option<&Ideal>) -> Result<u32> {
    if h.setting != Setting::Projective || h.f.nvars() != 3 {
        return Err(Error::Precondition("genus needs a projective plane curve".into()));
    }
    if !h.assert_irreducible {
        return Err(Error::Precondition("genus needs the curve to be asserted irreducible".into()));
    }
    if leftover.is_some() {
        return Err(Error::Precondition("some singular points are not rational".into()));
    }
    let d = h.degree() as i64;
    let mut g = (d - 1) * (d - 2) / 2;
    for r in reports {
        match r.delta {
            Some(delta) => g -= delta as i64,
            None => {
                return Err(Error::Precondition(format!("singular point {} is not simple", r.point)));
            }
        }
    }
    u32::try_from(g).map_err(|_| Error::Precondition(format!("negative genus {g}: the curve is reducible")))
}

#[cfg(test)]
mod tests;
