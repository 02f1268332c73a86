//! Groebner and standard bases, normal forms, syzygies and elimination.

mod kernel;
mod syzygy;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::{ModuleOrder, MonomialOrder, OrderKind};
use crate::poly::Polynomial;
use crate::ring::Ring;

pub(crate) use kernel::{Completion, Term, Vector};
pub use syzygy::{syzygies, SyzygyMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Groebner,
    Standard,
}

/// A confluent generating set of an ideal for a fixed monomial order.
#[derive(Clone)]
pub struct Basis {
    ring: Ring,
    order: MonomialOrder,
    kind: BasisKind,
    reduced: bool,
    vectors: Vec<Vector>,
    generators: Vec<Polynomial>,
}

pub(crate) fn to_vector(f: &Polynomial, comp: usize, order: &ModuleOrder) -> Vector {
    let terms = f
        .terms()
        .map(|(m, c)| Term {
            mono: m.clone(),
            comp,
            coef: c.clone(),
        })
        .collect();
    Vector::from_terms(terms, order)
}

pub(crate) fn component_poly(v: &Vector, comp: usize, ring: &Ring) -> Polynomial {
    Polynomial::from_terms(ring, v.component(comp).map(|t| (t.mono.clone(), t.coef.clone())))
}

fn check_ring(gens: &[Polynomial], ring: &Ring) -> Result<()> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch {
                left: ring.to_string(),
                right: g.ring().to_string(),
            });
        }
    }
    Ok(())
}

fn check_order_size(order: &MonomialOrder, ring: &Ring) -> Result<()> {
    let n = ring.nvars();
    let ok = match order {
        MonomialOrder::Weighted(w) => w.len() == n,
        MonomialOrder::Block { elim, rest, .. } => elim.len() + rest.len() == n,
        _ => true,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::WrongOrder(format!("order {order:?} does not fit a ring with {n} variables")))
    }
}

impl Basis {
    fn build(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder, kind: BasisKind) -> Result<Basis> {
        check_ring(gens, ring)?;
        check_order_size(order, ring)?;
        let mo = ModuleOrder::ideal(order.clone());
        let input: Vec<Vector> = gens.iter().map(|g| to_vector(g, 0, &mo)).collect();
        let how = match kind {
            BasisKind::Groebner => Completion::Buchberger,
            BasisKind::Standard => Completion::Mora,
        };
        let vectors = kernel::complete(&input, &mo, how)?;
        let generators = vectors.iter().map(|v| component_poly(v, 0, ring)).collect();
        Ok(Basis {
            ring: ring.clone(),
            order: order.clone(),
            kind,
            reduced: kind == BasisKind::Groebner,
            vectors,
            generators,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The ideal (or its localization) is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.vectors
            .iter()
            .any(|v| v.lead().map(|t| t.mono.is_one()).unwrap_or(false))
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.vectors.iter().map(|v| v.lead().unwrap().mono.clone()).collect()
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    /// Re-check that every S-polynomial reduces to zero.
    pub fn is_confluent(&self) -> Result<bool> {
        let how = match self.kind {
            BasisKind::Groebner => Completion::Buchberger,
            BasisKind::Standard => Completion::Mora,
        };
        kernel::is_confluent(&self.vectors, &ModuleOrder::ideal(self.order.clone()), how)
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Basis")
            .field("order", &self.order)
            .field("kind", &self.kind)
            .field("generators", &self.generators)
            .finish()
    }
}

fn ring_of(gens: &[Polynomial]) -> Result<Ring> {
    gens.first()
        .map(|g| g.ring().clone())
        .ok_or_else(|| Error::Precondition("empty generator list carries no ring".into()))
}

/// Reduced Groebner basis for a global order.
pub fn groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Result<Basis> {
    if !order.is_global() {
        return Err(Error::WrongOrder("groebner_basis needs a global order; use standard_basis".into()));
    }
    Basis::build(&ring_of(gens)?, gens, order, BasisKind::Groebner)
}

/// Same as [`groebner_basis`] but accepts an empty list given the ring.
pub fn groebner_basis_in(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder) -> Result<Basis> {
    if !order.is_global() {
        return Err(Error::WrongOrder("groebner_basis needs a global order; use standard_basis".into()));
    }
    Basis::build(ring, gens, order, BasisKind::Groebner)
}

/// Mora standard basis for a local or mixed order.
pub fn standard_basis(gens: &[Polynomial], order: &MonomialOrder) -> Result<Basis> {
    standard_basis_in(&ring_of(gens)?, gens, order)
}

pub fn standard_basis_in(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder) -> Result<Basis> {
    if order.kind() == OrderKind::Global {
        return Err(Error::WrongOrder("standard_basis needs a local order; use groebner_basis".into()));
    }
    Basis::build(ring, gens, order, BasisKind::Standard)
}

/// Basis of the right kind for `order`.
pub fn basis_for(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder) -> Result<Basis> {
    if order.is_global() {
        groebner_basis_in(ring, gens, order)
    } else {
        standard_basis_in(ring, gens, order)
    }
}

/// Normal form: full reduction for Groebner bases, Mora's weak normal form
/// for standard bases. Zero iff `f` lies in the (localized) ideal.
pub fn normal_form(f: &Polynomial, basis: &Basis) -> Result<Polynomial> {
    check_ring(std::slice::from_ref(f), &basis.ring)?;
    let mo = ModuleOrder::ideal(basis.order.clone());
    let v = to_vector(f, 0, &mo);
    let es = kernel::elems(&basis.vectors);
    let r = match basis.kind {
        BasisKind::Groebner => kernel::reduce_full(&v, &es, &mo)?,
        BasisKind::Standard => kernel::nf_mora(&v, &es, &mo)?,
    };
    Ok(component_poly(&r, 0, &basis.ring))
}

/// Generators of `(gens) ∩ Q[other variables]`, computed with a block
/// elimination order. Results stay in the original ring.
pub fn eliminate(gens: &[Polynomial], vars: &[usize]) -> Result<Vec<Polynomial>> {
    let ring = ring_of(gens)?;
    for &v in vars {
        if v >= ring.nvars() {
            return Err(Error::IndexOutOfRange {
                index: v,
                nvars: ring.nvars(),
            });
        }
    }
    let order = if vars.is_empty() {
        MonomialOrder::DegRevLex
    } else {
        MonomialOrder::elimination(vars, ring.nvars())?
    };
    let basis = groebner_basis_in(&ring, gens, &order)?;
    Ok(basis
        .generators
        .into_iter()
        .filter(|g| g.variables().iter().all(|v| !vars.contains(v)))
        .collect())
}

/// Largest set of variables containing the support of no leading monomial.
fn max_independent_set(lms: &[Monomial], n: usize) -> i64 {
    if lms.iter().any(Monomial::is_one) {
        return -1;
    }
    let supports: Vec<u64> = lms
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    let mut best = 0i64;
    fn search(start: usize, n: usize, chosen: u64, size: i64, supports: &[u64], best: &mut i64) {
        *best = (*best).max(size);
        if size + (n - start) as i64 <= *best {
            return;
        }
        for v in start..n {
            let next = chosen | (1 << v);
            if supports.iter().all(|s| s & !next != 0) {
                search(v + 1, n, next, size + 1, supports, best);
            }
        }
    }
    search(0, n, 0, 0, &supports, &mut best);
    best
}

/// Krull dimension of `R/(gens)`, `-1` for the unit ideal.
pub fn krull_dimension(gens: &[Polynomial]) -> Result<i64> {
    let ring = ring_of(gens)?;
    krull_dimension_in(&ring, gens)
}

pub fn krull_dimension_in(ring: &Ring, gens: &[Polynomial]) -> Result<i64> {
    let basis = groebner_basis_in(ring, gens, &MonomialOrder::DegRevLex)?;
    Ok(max_independent_set(&basis.leading_monomials(), ring.nvars()))
}

/// Dimension of a basis' quotient as a vector space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

impl QuotientDim {
    pub fn finite(self) -> Option<u64> {
        match self {
            QuotientDim::Finite(k) => Some(k),
            QuotientDim::Infinite => None,
        }
    }
}

impl fmt::Display for QuotientDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuotientDim::Finite(k) => write!(f, "{k}"),
            QuotientDim::Infinite => f.write_str("infinite"),
        }
    }
}

/// Count monomials outside the monomial ideal generated by `lms`.
pub(crate) fn staircase_size(lms: &[Monomial], n: usize) -> QuotientDim {
    if lms.iter().any(Monomial::is_one) {
        return QuotientDim::Finite(0);
    }
    let mut bounds = vec![0u32; n];
    for (i, b) in bounds.iter_mut().enumerate() {
        let pure = lms
            .iter()
            .filter(|m| m.support().all(|v| v == i))
            .map(Monomial::degree)
            .min();
        match pure {
            Some(d) => *b = d,
            None => return QuotientDim::Infinite,
        }
    }
    let mut count = 0u64;
    let mut exps = vec![0u32; n];
    fn walk(i: usize, exps: &mut Vec<u32>, bounds: &[u32], lms: &[Monomial], count: &mut u64) {
        if i == exps.len() {
            *count += 1;
            return;
        }
        for e in 0..bounds[i] {
            exps[i] = e;
            // prune: the partial exponent (rest zero) must already be outside
            let m = Monomial::from_exponents(exps);
            if lms.iter().any(|l| l.divides(&m)) {
                break;
            }
            walk(i + 1, exps, bounds, lms, count);
        }
        exps[i] = 0;
    }
    walk(0, &mut exps, &bounds, lms, &mut count);
    QuotientDim::Finite(count)
}

/// Number of standard monomials of a basis.
pub fn quotient_k_dimension(basis: &Basis) -> QuotientDim {
    staircase_size(&basis.leading_monomials(), basis.ring.nvars())
}

/// The ideals (localized, for local orders) generated by `a` and `b` agree.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial], order: &MonomialOrder) -> Result<bool> {
    let ring = ring_of(a).or_else(|_| ring_of(b))?;
    check_ring(b, &ring)?;
    let ba = basis_for(&ring, a, order)?;
    for g in b {
        if !ba.contains(g)? {
            return Ok(false);
        }
    }
    let bb = basis_for(&ring, b, order)?;
    for g in a {
        if !bb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distinct nonzero polynomials, first occurrence kept.
pub(crate) fn dedup_nonzero(gens: impl IntoIterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut seen = BTreeSet::new();
    gens.into_iter()
        .filter(|g| !g.is_zero())
        .filter(|g| seen.insert(crate::text::format_polynomial(g)))
        .collect()
}
