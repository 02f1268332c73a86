//! Rational points of zero-dimensional singular loci.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::{self, QuotientDim};
use crate::ideal::{saturation, Ideal};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::point::Point;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Dense univariate polynomial, lowest coefficient first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Univariate(pub Vec<Rational>);

impl Univariate {
    fn trim(mut self) -> Self {
        while self.0.last().map(Rational::is_zero).unwrap_or(false) {
            self.0.pop();
        }
        self
    }

    pub fn from_poly(f: &Polynomial, var: usize) -> Result<Univariate> {
        if f.variables().iter().any(|&v| v != var) {
            return Err(Error::Precondition("polynomial is not univariate".into()));
        }
        let mut c = vec![Rational::zero(); f.degree_in(var) as usize + 1];
        for (m, k) in f.terms() {
            c[m.exponents()[var] as usize] = k.clone();
        }
        Ok(Univariate(c).trim())
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    fn derivative(&self) -> Univariate {
        Univariate(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
        .trim()
    }

    fn div_rem(&self, d: &Univariate) -> (Univariate, Univariate) {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.0[dd].clone();
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = &r[r.len() - 1] / &lc;
            for (i, di) in d.0.iter().enumerate() {
                r[k + i] -= &(&c * di);
            }
            q[k] = c;
            r.pop();
            while r.last().map(Rational::is_zero).unwrap_or(false) {
                r.pop();
            }
        }
        (Univariate(q).trim(), Univariate(r).trim())
    }

    fn gcd(&self, other: &Univariate) -> Univariate {
        let (mut a, mut b) = (self.clone(), other.clone());
        while b.degree().is_some() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Squarefree part `p / gcd(p, p')`.
    fn squarefree(&self) -> Univariate {
        let g = self.gcd(&self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Integer coefficients with no common factor.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let den = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        ints.into_iter().map(|c| c / &g).collect()
    }

    /// All rational roots, each listed once, sorted.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        let mut p = match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Ok(Vec::new()),
            Some(_) => self.squarefree(),
        };
        let mut roots = Vec::new();
        if p.0[0].is_zero() {
            roots.push(Rational::zero());
            p = Univariate(p.0[1..].to_vec());
        }
        if p.degree().unwrap_or(0) > 0 {
            let ints = p.integer_coefficients();
            let a0 = divisors(ints.first().unwrap())?;
            let an = divisors(ints.last().unwrap())?;
            for num in &a0 {
                for den in &an {
                    for sign in [1i64, -1] {
                        let r = Rational::new(num * sign, den.clone());
                        if p.eval(&r).is_zero() && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }
}

const MAX_ROOT_SEARCH: u64 = 1_000_000_000_000_000;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n
        .abs()
        .to_u64()
        .filter(|&v| v <= MAX_ROOT_SEARCH)
        .ok_or_else(|| Error::ResourceLimit("coefficient too large for rational root search".into()))?;
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        let mut e = 0;
        while m % d == 0 {
            m /= d;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut out = vec![1u64];
    for (p, e) in primes {
        let mut next = Vec::new();
        for &x in &out {
            let mut pow = 1u64;
            for _ in 0..=e {
                next.push(x * pow);
                pow *= p;
            }
        }
        out = next;
    }
    out.sort_unstable();
    Ok(out.into_iter().map(BigInt::from).collect())
}

fn substitute(f: &Polynomial, var: usize, value: &Rational) -> Result<Polynomial> {
    let ring = f.ring();
    let images = (0..ring.nvars())
        .map(|i| {
            if i == var {
                Ok(Polynomial::constant(ring, value.clone()))
            } else {
                Polynomial::var(ring, i)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    f.compose(&images)
}

/// Rational zeros of a zero-dimensional ideal.
fn solve(gens: &[Polynomial], k: usize, fixed: &mut Vec<Rational>, out: &mut Vec<Vec<Rational>>) -> Result<()> {
    if gens.iter().any(|g| g.is_constant() && !g.is_zero()) {
        return Ok(());
    }
    let live: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let live = match live.first() {
        Some(g) => groebner::groebner_basis_in(g.ring(), &live, &MonomialOrder::DegRevLex)?
            .generators()
            .to_vec(),
        None => live,
    };
    if live.is_empty() {
        if k == 0 {
            let mut p = fixed.clone();
            p.reverse();
            out.push(p);
            return Ok(());
        }
        return Err(Error::Precondition("ideal is not zero-dimensional".into()));
    }
    let var = k - 1;
    let others: Vec<usize> = (0..var).collect();
    let uni: Vec<Polynomial> = groebner::eliminate(&live, &others)?
        .into_iter()
        .filter(|g| g.variables().iter().all(|&v| v == var))
        .collect();
    let u = match uni.first() {
        Some(u) if !u.is_constant() => Univariate::from_poly(u, var)?,
        Some(_) => return Ok(()),
        None => return Err(Error::Precondition("ideal is not zero-dimensional".into())),
    };
    for r in u.rational_roots()? {
        let next = live
            .iter()
            .map(|g| substitute(g, var, &r))
            .collect::<Result<Vec<_>>>()?;
        fixed.push(r);
        solve(&next, var, fixed, out)?;
        fixed.pop();
    }
    Ok(())
}

pub(crate) fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// Length of `R/I` at `p` for zero-dimensional `I`: the stable value of
/// `dim R/(I + m_p^N)`, reached once two consecutive values agree.
pub(crate) fn local_length(i: &Ideal, p: &Point) -> Result<u64> {
    let ring = i.ring();
    let t = i.translate(p)?;
    let mut prev = None;
    for d in 1.. {
        let power = monomials_of_degree(ring.nvars(), d)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, Rational::one()));
        let len = Ideal::new(ring, t.generators().iter().cloned().chain(power))?
            .quotient_dimension()?
            .finite()
            .ok_or_else(|| Error::Precondition("ideal is not zero-dimensional".into()))?;
        if prev == Some(len) {
            return Ok(len);
        }
        prev = Some(len);
    }
    unreachable!()
}

/// Rational points of a zero-dimensional affine ideal, plus the saturated
/// residual ideal of the remaining (non-rational) points, if any.
pub(crate) fn rational_points(i: &Ideal) -> Result<(Vec<Vec<Rational>>, Option<Ideal>)> {
    let ring = i.ring();
    let total = match i.quotient_dimension()? {
        QuotientDim::Finite(0) => return Ok((Vec::new(), None)),
        QuotientDim::Finite(k) => k,
        QuotientDim::Infinite => return Err(Error::Precondition("ideal is not zero-dimensional".into())),
    };
    let mut pts = Vec::new();
    solve(i.generators(), ring.nvars(), &mut Vec::new(), &mut pts)?;
    pts.sort();
    let mut local_sum = 0u64;
    for p in &pts {
        local_sum += local_length(i, &Point::affine(p.clone()))?;
    }
    if local_sum == total {
        return Ok((pts, None));
    }
    let mut rest = i.clone();
    for p in &pts {
        rest = saturation(&rest, &Ideal::maximal(ring, &Point::affine(p.clone()))?)?;
    }
    Ok((pts, if rest.is_unit()? { None } else { Some(rest) }))
}
