//! Sparse multivariate polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::limits;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::point::Point;
use crate::rational::Rational;
use crate::ring::Ring;

/// A polynomial over `Q` in the variables of its ring.
///
/// Terms are kept in a map from exponent vector to a nonzero coefficient,
/// so the zero polynomial is the empty map and structural equality is
/// mathematical equality.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

/// Which ring operation [`poly_arith`] performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, i: usize) -> Result<Self> {
        check_index(ring, i)?;
        Ok(Self::monomial(ring, Monomial::var(ring.nvars(), i), Rational::one()))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sum of terms; repeated monomials are combined.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    /// Terms sorted decreasingly with respect to `order`.
    pub fn terms_by(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exponents()[i]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars()];
        for m in self.terms.keys() {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..self.nvars()).filter(|&i| used[i]).collect()
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        limits::check_terms(out.num_terms())?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        limits::check_terms(out.num_terms())?;
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
            limits::check_terms(out.num_terms())?;
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiply by a monomial and a scalar.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// Scale so that the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        check_index(&self.ring, i)?;
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.exponents_mut()[i] = e - 1;
            out.add_term(dm, &(c * &Rational::from(e as i64)));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars())
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// Set variable `i` to one and drop it from the ring.
    pub fn dehomogenize(&self, i: usize) -> Result<Polynomial> {
        check_index(&self.ring, i)?;
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(self.set_to_one(i))
    }

    /// Substitute `x_i = 1` without a homogeneity check.
    pub(crate) fn set_to_one(&self, i: usize) -> Polynomial {
        let ring = self.ring.without(i).expect("index checked");
        let mut out = Polynomial::zero(&ring);
        for (m, c) in &self.terms {
            out.add_term(m.remove_var(i), c);
        }
        out
    }

    /// Homogenize with respect to a new variable appended to `ring`.
    pub fn homogenize_into(&self, ring: &Ring, var: usize) -> Result<Polynomial> {
        if ring.nvars() != self.nvars() + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.nvars() + 1,
                got: ring.nvars(),
            });
        }
        let d = self.total_degree().unwrap_or(0);
        let mut out = Polynomial::zero(ring);
        for (m, c) in &self.terms {
            let mut e: Vec<u32> = m.exponents().to_vec();
            e.insert(var, d - m.degree());
            out.add_term(Monomial::from_exponents(&e), c);
        }
        Ok(out)
    }

    /// Value at a rational point of matching dimension.
    pub fn evaluate(&self, values: &[Rational]) -> Result<Rational> {
        if values.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: values.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= &v.pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// `x_i -> x_i + shift`.
    pub fn shift_var(&self, i: usize, shift: &Rational) -> Polynomial {
        if shift.is_zero() {
            return self.clone();
        }
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            // (x + s)^e = sum_k binom(e, k) s^(e-k) x^k
            let mut binom = Rational::one();
            for k in (0..=e).rev() {
                let mut nm = m.clone();
                nm.exponents_mut()[i] = k;
                let coef = c * &binom * shift.pow(e - k);
                out.add_term(nm, &coef);
                // binom(e, k-1) = binom(e, k) * k / (e - k + 1)
                if k > 0 {
                    binom = &binom * &Rational::new(k as i64, (e - k + 1) as i64);
                }
            }
        }
        out
    }

    /// `g(x) = f(x + p)`; moves the affine point `p` to the origin.
    pub fn translate_to_origin(&self, p: &Point) -> Result<Polynomial> {
        let coords = match p {
            Point::Affine(c) => c,
            Point::Projective(_) => {
                return Err(Error::Precondition("translation needs an affine point".into()));
            }
        };
        if coords.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: coords.len(),
            });
        }
        let mut out = self.clone();
        for (i, c) in coords.iter().enumerate() {
            out = out.shift_var(i, c);
        }
        limits::check_terms(out.num_terms())?;
        Ok(out)
    }

    /// Minimum total degree of a term (the order of `f` at the origin).
    pub fn initial_degree(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(Monomial::degree)
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// All terms of total degree at most `d`.
    pub fn jet(&self, d: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() <= d)
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        self.filter_terms(|m| m.degree() == d)
    }

    pub(crate) fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lowest weighted-degree part and its weighted degree.
    pub fn weighted_initial_part(&self, weights: &[i64]) -> Result<(Polynomial, i64)> {
        if weights.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: weights.len(),
            });
        }
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::Precondition("weights must be strictly positive".into()));
        }
        let d = self
            .terms
            .keys()
            .map(|m| m.weighted_degree(weights))
            .min()
            .ok_or(Error::ZeroPolynomial)?;
        Ok((self.filter_terms(|m| m.weighted_degree(weights) == d), d))
    }

    /// Substitute `x_i -> images[i]`; the images may live in another ring.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return Ok(self.clone()),
        };
        for p in images {
            p.same_ring(&images[0])?;
        }
        // powers[i][k] = images[i]^k, built lazily
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(&target), p.clone()])
            .collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().checked_mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.checked_mul(&powers[i][e as usize])?;
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Re-express in `ring`, sending variable `i` to variable `map[i]`.
    pub fn embed(&self, ring: &Ring, map: &[usize]) -> Result<Polynomial> {
        if map.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= ring.nvars()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                nvars: ring.nvars(),
            });
        }
        let mut out = Polynomial::zero(ring);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(ring.nvars());
            for (i, &k) in m.exponents().iter().enumerate() {
                e.exponents_mut()[map[i]] += k;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Same polynomial viewed in a ring whose first variables are those of `self`.
    pub fn extend_to(&self, ring: &Ring) -> Result<Polynomial> {
        let map: Vec<usize> = (0..self.nvars()).collect();
        self.embed(ring, &map)
    }

    /// Drop variables that do not occur; `keep[i]` gives the new index.
    pub(crate) fn restrict(&self, ring: &Ring, keep: &[Option<usize>]) -> Result<Polynomial> {
        let mut out = Polynomial::zero(ring);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(ring.nvars());
            for (i, &k) in m.exponents().iter().enumerate() {
                match keep[i] {
                    Some(j) => e.exponents_mut()[j] = k,
                    None if k > 0 => {
                        return Err(Error::Precondition(format!(
                            "variable `{}` still occurs",
                            self.ring.name(i)
                        )))
                    }
                    None => {}
                }
            }
            out.add_term(e, c);
        }
        Ok(out)
    }

    /// Exact division; fails if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial> {
        self.same_ring(d)?;
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let order = MonomialOrder::DegRevLex;
        let (lm, lc) = d.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term(&order).map(|(m, c)| (m.clone(), c.clone())) {
            let q = m.div(&lm).ok_or_else(|| {
                Error::Precondition("polynomial division leaves a remainder".into())
            })?;
            let qc = &c / &lc;
            rem = rem.checked_sub(&d.mul_term(&q, &qc))?;
            quot.add_term(q, &qc);
        }
        Ok(quot)
    }

    /// Scale to an integer polynomial with coprime coefficients and positive
    /// leading coefficient (degrevlex).
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return self.clone();
        }
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&den / c.denom());
            g = g.gcd(&n);
        }
        let mut s = Rational::new(den, g);
        if self.leading_term(&MonomialOrder::DegRevLex).unwrap().1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }
}

fn check_index(ring: &Ring, i: usize) -> Result<()> {
    if i >= ring.nvars() {
        Err(Error::IndexOutOfRange {
            index: i,
            nvars: ring.nvars(),
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.ring)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::from(-1))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Compare two polynomials by their term lists under `order`
/// (used to make outputs deterministic).
pub(crate) fn cmp_by_terms(a: &Polynomial, b: &Polynomial, order: &MonomialOrder) -> Ordering {
    let ta = a.terms_by(order);
    let tb = b.terms_by(order);
    for (x, y) in ta.iter().zip(&tb) {
        let o = order.cmp(x.0, y.0).then_with(|| x.1.cmp(y.1));
        if o != Ordering::Equal {
            return o;
        }
    }
    ta.len().cmp(&tb.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;
    use crate::text::parse_polynomial;

    fn ring(names: &[&str]) -> Ring {
        RingContext::new(names.iter().copied()).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(&["x", "y"]);
        assert_eq!(&p(&r, "x+y") * &p(&r, "x-y"), p(&r, "x^2-y^2"));
        assert_eq!(&p(&r, "x^3-y") + &Polynomial::zero(&r), p(&r, "x^3-y"));
        let cube = p(&r, "x^2-y^2").pow(3).unwrap();
        assert_eq!(cube.num_terms(), 4);
        let coeffs: Vec<_> = cube
            .terms_by(&MonomialOrder::Lex)
            .into_iter()
            .map(|(_, c)| c.clone())
            .collect();
        assert_eq!(coeffs, vec![1.into(), (-3).into(), 3.into(), (-1).into()]);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = p(&ring(&["x", "y"]), "x");
        let b = p(&ring(&["x", "z"]), "x");
        assert!(matches!(poly_arith(&a, &b, ArithOp::Add), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn derivatives() {
        let r = ring(&["x", "y"]);
        assert_eq!(p(&r, "y^2-x^3").partial_derivative(0).unwrap(), p(&r, "-3x^2"));
        let r4 = ring(&["x", "y", "z", "w"]);
        assert_eq!(p(&r4, "x*y*z*w").partial_derivative(3).unwrap(), p(&r4, "x*y*z"));
        let f = p(&r, "(x^2-y^2)^3-x^2*y^2");
        assert_eq!(
            f.partial_derivative(0).unwrap(),
            p(&r, "6x*(x^2-y^2)^2-2x*y^2")
        );
        assert!(matches!(f.partial_derivative(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn dehomogenize_examples() {
        let r = ring(&["x", "y", "z"]);
        let a = p(&r, "y^2*z-x^3").dehomogenize(2).unwrap();
        assert_eq!(a, p(a.ring(), "y^2-x^3"));
        let r4 = ring(&["x", "y", "z", "w"]);
        let b = p(&r4, "x*z*w+x^2*y+y^2*z-z^3").dehomogenize(3).unwrap();
        assert_eq!(b, p(b.ring(), "x*z+x^2*y+y^2*z-z^3"));
        let c = p(&r, "x^4").dehomogenize(0).unwrap();
        assert_eq!(c, Polynomial::one(c.ring()));
        assert_eq!(p(&r, "x^2+y").dehomogenize(2), Err(Error::NotHomogeneous));
    }

    #[test]
    fn translation_examples() {
        let r = ring(&["x", "y"]);
        let pt = Point::affine(vec![1.into(), 0.into()]);
        assert_eq!(p(&r, "(x-1)^2").translate_to_origin(&pt).unwrap(), p(&r, "x^2"));
        let zero = Point::affine(vec![0.into(), 0.into()]);
        let f = p(&r, "x^3*y-7/2y+1");
        assert_eq!(f.translate_to_origin(&zero).unwrap(), f);
        let one = Point::affine(vec![1.into(), 1.into()]);
        assert_eq!(
            p(&r, "x^2-y^2").translate_to_origin(&one).unwrap(),
            p(&r, "x^2+2x-y^2-2y")
        );
        let bad = Point::affine(vec![1.into()]);
        assert!(matches!(f.translate_to_origin(&bad), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn order_and_jets() {
        let r = ring(&["x", "y"]);
        assert_eq!(p(&r, "y^2*x-x^3+x^4*y+y^5").initial_degree().unwrap(), 3);
        assert_eq!(p(&r, "5").initial_degree().unwrap(), 0);
        assert_eq!(p(&r, "x^5-y^6+x^3*y^4").initial_degree().unwrap(), 5);
        assert_eq!(Polynomial::zero(&r).initial_degree(), Err(Error::ZeroPolynomial));
        assert_eq!(p(&r, "y^2-x^3").jet(2), p(&r, "y^2"));
        let f = p(&r, "(x^2-y^2)^3-x^2*y^2");
        assert_eq!(f.jet(6), f);
        assert_eq!(f.jet(4), p(&r, "-x^2*y^2"));
    }

    #[test]
    fn weighted_initial_parts() {
        let r = ring(&["x", "y"]);
        let (f0, d) = p(&r, "x^5-y^6+x^3*y^4").weighted_initial_part(&[6, 5]).unwrap();
        assert_eq!((f0, d), (p(&r, "x^5-y^6"), 30));
        let q = p(&r, "x^3-y^2");
        assert_eq!(q.weighted_initial_part(&[2, 3]).unwrap(), (q.clone(), 6));
        let (g0, e) = p(&r, "y^2*x-x^3+x^4").weighted_initial_part(&[1, 1]).unwrap();
        assert_eq!((g0, e), (p(&r, "y^2*x-x^3"), 3));
    }

    #[test]
    fn exact_division_and_compose() {
        let r = ring(&["x", "y"]);
        let a = p(&r, "(x+y)^3*(x-2y)");
        assert_eq!(a.exact_div(&p(&r, "x+y")).unwrap(), p(&r, "(x+y)^2*(x-2y)"));
        assert!(a.exact_div(&p(&r, "x+3")).is_err());
        let img = vec![p(&r, "x+y"), p(&r, "x-y")];
        assert_eq!(p(&r, "x*y").compose(&img).unwrap(), p(&r, "x^2-y^2"));
        assert_eq!(p(&r, "1/2x+3/4y").primitive(), p(&r, "2x+3y"));
    }
}
