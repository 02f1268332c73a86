//! Ideals with cached bases, colon ideals, saturation and local counts.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{self, dedup_nonzero, Basis, QuotientDim, SyzygyMatrix};
use crate::limits;
use crate::order::MonomialOrder;
use crate::point::Point;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;

/// An ideal given by generators; bases are computed on demand and cached.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Basis>>>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let generators = dedup_nonzero(gens);
        for g in &generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: g.ring().to_string(),
                });
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators,
            cache: Arc::default(),
        })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            cache: Arc::default(),
        }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, [Polynomial::one(ring)]).expect("same ring")
    }

    /// The maximal ideal of a rational affine point.
    pub fn maximal(ring: &Ring, p: &Point) -> Result<Ideal> {
        let c = affine_coords(ring, p)?;
        let gens = (0..ring.nvars())
            .map(|i| Ok(Polynomial::var(ring, i)? - Polynomial::constant(ring, c[i].clone())))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Basis for `order`, from the cache when available.
    pub fn basis(&self, order: &MonomialOrder) -> Result<Basis> {
        if let Some(b) = self.cache.lock().expect("cache lock").get(order) {
            return Ok(b.clone());
        }
        let b = groebner::basis_for(&self.ring, &self.generators, order)?;
        self.cache
            .lock()
            .expect("cache lock")
            .entry(order.clone())
            .or_insert(b.clone());
        Ok(b)
    }

    pub fn groebner(&self) -> Result<Basis> {
        self.basis(&MonomialOrder::DegRevLex)
    }

    /// Standard basis for the local ring at the origin.
    pub fn local(&self) -> Result<Basis> {
        self.basis(&MonomialOrder::NegDegRevLex)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner()?.contains(f)
    }

    /// Membership in the localization at the origin.
    pub fn contains_locally(&self, f: &Polynomial) -> Result<bool> {
        self.local()?.contains(f)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.is_subset(other)? && other.is_subset(self)?)
    }

    pub fn krull_dimension(&self) -> Result<i64> {
        groebner::krull_dimension_in(&self.ring, &self.generators)
    }

    /// Global vector space dimension of the quotient ring.
    pub fn quotient_dimension(&self) -> Result<QuotientDim> {
        Ok(groebner::quotient_k_dimension(&self.groebner()?))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        Ideal::new(&self.ring, self.generators.iter().chain(&other.generators).cloned())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        intersection(self, other)
    }

    /// Translate so that the affine point `p` becomes the origin.
    pub fn translate(&self, p: &Point) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.translate_to_origin(p))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// The reduced Groebner basis, as an ideal with a warm cache.
    pub fn reduced(&self) -> Result<Ideal> {
        let b = self.groebner()?;
        let out = Ideal::new(&self.ring, b.generators().to_vec())?;
        out.cache
            .lock()
            .expect("cache lock")
            .insert(MonomialOrder::DegRevLex, b);
        Ok(out)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch {
            left: a.ring.to_string(),
            right: b.ring.to_string(),
        });
    }
    Ok(())
}

fn affine_coords<'a>(ring: &Ring, p: &'a Point) -> Result<&'a [Rational]> {
    match p {
        Point::Affine(c) if c.len() == ring.nvars() => Ok(c),
        Point::Affine(c) => Err(Error::DimensionMismatch {
            expected: ring.nvars(),
            got: c.len(),
        }),
        Point::Projective(_) => Err(Error::Precondition("expected an affine point".into())),
    }
}

/// `I ∩ J` by eliminating `t` from `t*I + (1-t)*J`.
pub fn intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i, j)?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(&i.ring));
    }
    let n = i.ring.nvars();
    let big = i.ring.extend(&[i.ring.fresh_name("t")])?;
    let t = Polynomial::var(&big, n)?;
    let one_minus_t = Polynomial::one(&big) - t.clone();
    let mut gens = Vec::new();
    for g in &i.generators {
        gens.push(t.checked_mul(&g.extend_to(&big)?)?);
    }
    for g in &j.generators {
        gens.push(one_minus_t.checked_mul(&g.extend_to(&big)?)?);
    }
    let keep: Vec<Option<usize>> = (0..n).map(Some).chain([None]).collect();
    let elim = groebner::eliminate(&gens, &[n])?;
    let back = elim
        .iter()
        .map(|g| g.restrict(&i.ring, &keep))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&i.ring, back)
}

fn colon_principal(i: &Ideal, h: &Polynomial) -> Result<Ideal> {
    if h.is_zero() || i.contains(h)? {
        return Ok(Ideal::unit(&i.ring));
    }
    if i.is_zero() {
        return Ok(Ideal::zero(&i.ring));
    }
    if h.is_constant() {
        return Ok(i.clone());
    }
    let hi = Ideal::new(&i.ring, [h.clone()])?;
    let cap = intersection(i, &hi)?;
    let gens = cap
        .generators
        .iter()
        .map(|g| g.exact_div(h))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(&i.ring, gens)?.reduced()
}

/// `I : J = {g : gJ ⊆ I}`, intersecting the colons by each generator of `J`.
pub fn ideal_quotient(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i, j)?;
    let mut acc: Option<Ideal> = None;
    for h in &j.generators {
        let c = colon_principal(i, h)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersection(&a, &c)?.reduced()?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(&i.ring)))
}

/// `I : J^∞`, iterating colons until the ideal stops growing.
pub fn saturation(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_ring(i, j)?;
    let cap = limits::current().max_saturation_steps;
    let mut cur = i.reduced()?;
    for _ in 0..cap {
        let next = ideal_quotient(&cur, j)?;
        if next.is_subset(&cur)? {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::ResourceLimit(format!("saturation did not stabilize within {cap} steps")))
}

/// The `m_p`-primary component `I : (I : m_p^∞)^∞` of an isolated point.
pub fn primary_component_at_point(i: &Ideal, p: &Point) -> Result<Ideal> {
    let c = affine_coords(&i.ring, p)?;
    for g in &i.generators {
        if !g.evaluate(c)?.is_zero() {
            return Err(Error::PointNotInVariety(p.to_string()));
        }
    }
    let m = Ideal::maximal(&i.ring, p)?;
    let away = saturation(i, &m)?;
    let mut isolated = false;
    for g in &away.generators {
        if !g.evaluate(c)?.is_zero() {
            isolated = true;
            break;
        }
    }
    if !isolated {
        return Err(Error::NotIsolatedPoint(p.to_string()));
    }
    let q = saturation(i, &away)?;
    match q.quotient_dimension()? {
        QuotientDim::Finite(_) => Ok(q),
        QuotientDim::Infinite => Err(Error::NotIsolatedPoint(p.to_string())),
    }
}

/// Ideal generated by all entries of a matrix.
pub fn entries_ideal(m: &SyzygyMatrix) -> Result<Ideal> {
    Ideal::new(m.ring(), m.entries().cloned())
}

/// Minimal number of generators of `I` in the local ring at `p`.
///
/// Generators are kept greedily when they do not lie in the local ideal
/// spanned by the kept ones and `m*I`; by Nakayama the survivors form a
/// basis of `I/mI`.
pub fn minimal_generators_local(i: &Ideal, p: &Point) -> Result<usize> {
    minimal_generators_local_relative(i, &Ideal::zero(&i.ring), p)
}

/// Minimal number of generators of `(I + B)/B` locally at `p`.
pub fn minimal_generators_local_relative(i: &Ideal, base: &Ideal, p: &Point) -> Result<usize> {
    same_ring(i, base)?;
    let ti = i.translate(p)?;
    let tb = base.translate(p)?;
    let ring = &i.ring;
    let mut fixed: Vec<Polynomial> = tb.generators.clone();
    for v in 0..ring.nvars() {
        let x = Polynomial::var(ring, v)?;
        for g in &ti.generators {
            fixed.push(x.checked_mul(g)?);
        }
    }
    let mut cands = ti.generators.clone();
    cands.sort_by_key(|g| (g.initial_degree().unwrap_or(0), g.num_terms()));
    let mut kept: Vec<Polynomial> = Vec::new();
    let mut basis = groebner::standard_basis_in(ring, &fixed, &MonomialOrder::NegDegRevLex)?;
    for g in cands {
        if !basis.contains(&g)? {
            kept.push(g);
            let gens: Vec<Polynomial> = fixed.iter().chain(&kept).cloned().collect();
            basis = groebner::standard_basis_in(ring, &gens, &MonomialOrder::NegDegRevLex)?;
        }
    }
    Ok(kept.len())
}

/// Generator of `(f) ∩ (g)`.
pub fn poly_lcm(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.ring()));
    }
    let a = Ideal::new(f.ring(), [f.clone()])?;
    let b = Ideal::new(g.ring(), [g.clone()])?;
    let cap = intersection(&a, &b)?.reduced()?;
    match cap.generators() {
        [l] => Ok(l.clone()),
        other => Err(Error::Precondition(format!(
            "intersection of principal ideals has {} generators",
            other.len()
        ))),
    }
}

/// Greatest common divisor, normalized to be primitive.
pub fn poly_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Ok(g.primitive());
    }
    if g.is_zero() {
        return Ok(f.primitive());
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::one(f.ring()));
    }
    let l = poly_lcm(f, g)?;
    Ok(f.checked_mul(g)?.exact_div(&l)?.primitive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;
    use crate::text::parse_polynomial;

    fn ring(names: &[&str]) -> Ring {
        RingContext::new(names.iter().copied()).unwrap()
    }

    fn ideal(r: &Ring, src: &[&str]) -> Ideal {
        Ideal::new(r, src.iter().map(|s| parse_polynomial(s, r).unwrap())).unwrap()
    }

    #[test]
    fn generators_are_deduplicated() {
        let r = ring(&["x"]);
        let i = ideal(&r, &["x", "0", "x"]);
        assert_eq!(i.generators().len(), 1);
    }

    #[test]
    fn colons() {
        let r = ring(&["x", "y", "z"]);
        let q = ideal_quotient(&ideal(&r, &["x^2"]), &ideal(&r, &["x"])).unwrap();
        assert!(q.equals(&ideal(&r, &["x"])).unwrap());
        let i = ideal(&r, &["x*y", "x*z"]);
        assert!(ideal_quotient(&i, &Ideal::unit(&r)).unwrap().equals(&i).unwrap());
        let q = ideal_quotient(&i, &ideal(&r, &["x"])).unwrap();
        assert!(q.equals(&ideal(&r, &["y", "z"])).unwrap());
    }

    #[test]
    fn colon_laws() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^3", "x*y^2", "y^4"]);
        let j = ideal(&r, &["x", "y^2"]);
        let q = ideal_quotient(&i, &j).unwrap();
        assert!(i.is_subset(&q).unwrap());
        assert!(q.product(&j).unwrap().is_subset(&i).unwrap());
    }

    #[test]
    fn saturations() {
        let r = ring(&["x", "y"]);
        let s = saturation(&ideal(&r, &["x^2*y"]), &ideal(&r, &["y"])).unwrap();
        assert!(s.equals(&ideal(&r, &["x^2"])).unwrap());
        let i = ideal(&r, &["x^2", "x*y"]);
        assert!(saturation(&i, &Ideal::unit(&r)).unwrap().equals(&i).unwrap());
        let m2 = ideal(&r, &["x^2", "x*y", "y^2"]);
        let mixed = intersection(&m2, &ideal(&r, &["x-1"])).unwrap();
        let s = saturation(&mixed, &ideal(&r, &["x-1"])).unwrap();
        assert!(s.equals(&m2).unwrap());
        let again = ideal_quotient(&s, &ideal(&r, &["x-1"])).unwrap();
        assert!(again.equals(&s).unwrap());
    }

    #[test]
    fn primary_components() {
        let r = ring(&["x"]);
        let i = ideal(&r, &["x^2-x"]);
        let q = primary_component_at_point(&i, &Point::origin(1)).unwrap();
        assert!(q.equals(&ideal(&r, &["x"])).unwrap());
        let r2 = ring(&["x", "y"]);
        let m2 = ideal(&r2, &["x^2", "y"]);
        assert!(primary_component_at_point(&m2, &Point::origin(2)).unwrap().equals(&m2).unwrap());
        let far = Point::affine(vec![1.into(), 0.into()]);
        assert!(matches!(primary_component_at_point(&m2, &far), Err(Error::PointNotInVariety(_))));
        let line = ideal(&r2, &["x"]);
        assert!(matches!(
            primary_component_at_point(&line, &Point::origin(2)),
            Err(Error::NotIsolatedPoint(_))
        ));
    }

    #[test]
    fn local_generator_counts() {
        let r = ring(&["x", "y"]);
        let o = Point::origin(2);
        assert_eq!(minimal_generators_local(&ideal(&r, &["x", "y"]), &o).unwrap(), 2);
        assert_eq!(minimal_generators_local(&ideal(&r, &["x^2", "x*y", "y^2"]), &o).unwrap(), 3);
        assert_eq!(minimal_generators_local(&ideal(&r, &["x", "y", "x+y^2"]), &o).unwrap(), 2);
        // a unit away from the point does not count
        assert_eq!(minimal_generators_local(&ideal(&r, &["x*(1+y)", "x"]), &o).unwrap(), 1);
    }

    #[test]
    fn gcd_and_lcm() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial("(x+y)^2*(x-1)", &r).unwrap();
        let g = parse_polynomial("(x+y)*(y+2)", &r).unwrap();
        assert_eq!(poly_gcd(&f, &g).unwrap(), parse_polynomial("x+y", &r).unwrap());
        let one = poly_gcd(&parse_polynomial("x", &r).unwrap(), &parse_polynomial("y", &r).unwrap()).unwrap();
        assert!(one.is_constant());
    }

    #[test]
    fn entries() {
        let r = ring(&["x", "y"]);
        let g = vec![parse_polynomial("x", &r).unwrap(), parse_polynomial("y", &r).unwrap()];
        let s = groebner::syzygies(&g, &MonomialOrder::DegRevLex).unwrap();
        assert!(entries_ideal(&s).unwrap().equals(&ideal(&r, &["x", "y"])).unwrap());
        let zero = SyzygyMatrix::new(&r, 2, vec![]).unwrap();
        assert!(entries_ideal(&zero).unwrap().is_zero());
    }
}
