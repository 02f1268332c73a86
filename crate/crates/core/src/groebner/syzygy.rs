use std::fmt;

use super::kernel::{self, Completion, Term, Vector};
use super::{check_ring, component_poly, ring_of};
use crate::error::{Error, Result};
use crate::order::{ModuleOrder, MonomialOrder, PositionRule};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;

/// Relations among generators: one column per syzygy, one row per generator.
#[derive(Clone, PartialEq, Eq)]
pub struct SyzygyMatrix {
    ring: Ring,
    rows: usize,
    columns: Vec<Vec<Polynomial>>,
}

impl SyzygyMatrix {
    pub fn new(ring: &Ring, rows: usize, columns: Vec<Vec<Polynomial>>) -> Result<Self> {
        for c in &columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    got: c.len(),
                });
            }
            check_ring(c, ring)?;
        }
        Ok(SyzygyMatrix {
            ring: ring.clone(),
            rows,
            columns,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn num_rows(&self) -> usize {
        self.rows
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.columns[col][row]
    }

    pub fn column(&self, col: usize) -> &[Polynomial] {
        &self.columns[col]
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.columns
    }

    /// All entries, column by column.
    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.columns.iter().flatten()
    }

    /// Every column `c` satisfies `sum c_i g_i = 0`.
    pub fn annihilates(&self, gens: &[Polynomial]) -> Result<bool> {
        if gens.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: gens.len(),
            });
        }
        for c in &self.columns {
            let mut acc = Polynomial::zero(&self.ring);
            for (ci, gi) in c.iter().zip(gens) {
                acc = acc.checked_add(&ci.checked_mul(gi)?)?;
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for SyzygyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SyzygyMatrix {}x{} over {}", self.rows, self.columns.len(), self.ring)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.columns.iter().map(|c| c[r].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn column_vector(col: &[Polynomial], order: &ModuleOrder) -> Vector {
    let terms = col
        .iter()
        .enumerate()
        .flat_map(|(i, p)| {
            p.terms().map(move |(m, c)| Term {
                mono: m.clone(),
                comp: i,
                coef: c.clone(),
            })
        })
        .collect();
    Vector::from_terms(terms, order)
}

fn in_module(v: &Vector, basis: &[Vector], order: &ModuleOrder) -> Result<bool> {
    let es = kernel::elems(basis);
    Ok(kernel::reduce_full(v, &es, order)?.is_zero())
}

/// Drop columns lying in the module generated by the columns kept so far.
/// Candidates are visited by increasing degree, so for homogeneous input the
/// survivors form a minimal homogeneous generating set.
/// Integer entries with coprime coefficients; first nonzero entry has a
/// positive leading coefficient.
fn primitive_column(col: Vec<Polynomial>) -> Vec<Polynomial> {
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let mut den = num_bigint::BigInt::one();
    let mut num = num_bigint::BigInt::zero();
    for (_, c) in col.iter().flat_map(|p| p.terms()) {
        den = den.lcm(c.denom());
    }
    for (_, c) in col.iter().flat_map(|p| p.terms()) {
        num = num.gcd(&(c.numer() * (&den / c.denom())));
    }
    if num.is_zero() {
        return col;
    }
    let mut s = Rational::new(den, num);
    let lead = col
        .iter()
        .find(|p| !p.is_zero())
        .and_then(|p| p.leading_term(&MonomialOrder::DegRevLex).map(|(_, c)| c.is_negative()));
    if lead == Some(true) {
        s = -s;
    }
    col.iter().map(|p| p.scale(&s)).collect()
}

fn prune(cols: Vec<(i64, Vec<Polynomial>)>, order: &ModuleOrder) -> Result<Vec<Vec<Polynomial>>> {
    let mut sorted = cols;
    sorted.sort_by_key(|(d, _)| *d);
    let mut kept: Vec<Vec<Polynomial>> = Vec::new();
    let mut kept_vecs: Vec<Vector> = Vec::new();
    let mut basis: Vec<Vector> = Vec::new();
    for (_, col) in sorted {
        let v = column_vector(&col, order);
        if v.is_zero() || (!basis.is_empty() && in_module(&v, &basis, order)?) {
            continue;
        }
        kept_vecs.push(v);
        kept.push(primitive_column(col));
        basis = kernel::complete(&kept_vecs, order, Completion::Buchberger)?;
    }
    Ok(kept)
}

/// Generators of the first syzygy module of `gens`.
///
/// Computed from a Groebner basis of the tagged module `g_i e_0 + e_i`
/// under an order that eliminates the tag component. Redundant columns are
/// then pruned; for homogeneous input the result is minimal.
pub fn syzygies(gens: &[Polynomial], order: &MonomialOrder) -> Result<SyzygyMatrix> {
    let ring = ring_of(gens)?;
    check_ring(gens, &ring)?;
    if !order.is_global() {
        return Err(Error::WrongOrder("syzygies need a global order".into()));
    }
    let m = gens.len();
    let tagged_order = ModuleOrder::new(order.clone(), PositionRule::FirstComponent);
    let tagged: Vec<Vector> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut terms: Vec<Term> = g
                .terms()
                .map(|(mono, c)| Term {
                    mono: mono.clone(),
                    comp: 0,
                    coef: c.clone(),
                })
                .collect();
            terms.push(Term {
                mono: crate::monomial::Monomial::one(ring.nvars()),
                comp: i + 1,
                coef: Rational::one(),
            });
            Vector::from_terms(terms, &tagged_order)
        })
        .collect();
    let basis = kernel::complete(&tagged, &tagged_order, Completion::Buchberger)?;

    let homogeneous = gens.iter().all(Polynomial::is_homogeneous);
    let gdeg: Vec<i64> = gens.iter().map(|g| g.total_degree().unwrap_or(0) as i64).collect();
    let mut cols = Vec::new();
    for v in basis.iter().filter(|v| v.lead().map(|t| t.comp >= 1).unwrap_or(false)) {
        let col: Vec<Polynomial> = (1..=m).map(|c| component_poly(v, c, &ring)).collect();
        let deg = col
            .iter()
            .zip(&gdeg)
            .filter(|(p, _)| !p.is_zero())
            .map(|(p, d)| p.total_degree().unwrap() as i64 + d)
            .max()
            .unwrap_or(0);
        cols.push((if homogeneous { deg } else { 0 }, col));
    }
    let module_order = ModuleOrder::new(order.clone(), PositionRule::TermOverPosition);
    let columns = prune(cols, &module_order)?;
    SyzygyMatrix::new(&ring, m, columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{groebner_basis, ideal_equal};
    use crate::ring::RingContext;
    use crate::text::parse_polynomial;

    fn ring(names: &[&str]) -> Ring {
        RingContext::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn koszul() {
        let r = ring(&["x", "y"]);
        let g = vec![parse_polynomial("x", &r).unwrap(), parse_polynomial("y", &r).unwrap()];
        let s = syzygies(&g, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(s.num_columns(), 1);
        assert!(s.annihilates(&g).unwrap());
        let c = s.column(0);
        let expect = [c[0].clone() + parse_polynomial("y", &r).unwrap(), c[0].clone() - parse_polynomial("y", &r).unwrap()];
        assert!(expect.iter().any(Polynomial::is_zero));
    }

    #[test]
    fn three_generators_of_m_squared() {
        let r = ring(&["x", "y"]);
        let g: Vec<_> = ["x^2", "x*y", "y^2"].iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
        let s = syzygies(&g, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(s.num_columns(), 2);
        assert!(s.annihilates(&g).unwrap());
    }

    #[test]
    fn plane_curve_gradient_has_two_syzygies() {
        let r = ring(&["x", "y", "z"]);
        let f = parse_polynomial("y^4*z-x^5+x^2*y^3", &r).unwrap();
        let g = f.gradient();
        let s = syzygies(&g, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(s.num_columns(), 2);
        assert!(s.annihilates(&g).unwrap());
        // the displayed columns generate the same module
        let shown = [
            ["9*y^2", "15*x^2-20*y*z", "80*z^2-18*x*y"],
            ["0", "-y^2", "3*x^2+4*y*z"],
        ];
        for col in shown {
            let c: Vec<_> = col.iter().map(|e| parse_polynomial(e, &r).unwrap()).collect();
            let m = SyzygyMatrix::new(&r, 3, vec![c]).unwrap();
            assert!(m.annihilates(&g).unwrap());
        }
        let entries: Vec<_> = s.entries().filter(|p| !p.is_zero()).cloned().collect();
        let shown_entries: Vec<_> = ["9*y^2", "15*x^2-20*y*z", "80*z^2-18*x*y", "y^2", "3*x^2+4*y*z"]
            .iter()
            .map(|e| parse_polynomial(e, &r).unwrap())
            .collect();
        assert!(ideal_equal(&entries, &shown_entries, &MonomialOrder::DegRevLex).unwrap());
    }

    #[test]
    fn inhomogeneous_syzygies_annihilate() {
        let r = ring(&["x", "y"]);
        let f = parse_polynomial("x^5-y^6+x^3*y^4", &r).unwrap();
        let mut g = vec![f.clone()];
        g.extend(f.gradient());
        let s = syzygies(&g, &MonomialOrder::DegRevLex).unwrap();
        assert!(s.num_columns() >= 2);
        assert!(s.annihilates(&g).unwrap());
        let _ = groebner_basis(&g, &MonomialOrder::DegRevLex).unwrap();
    }

    #[test]
    fn local_order_rejected() {
        let r = ring(&["x"]);
        let g = vec![parse_polynomial("x", &r).unwrap()];
        assert!(syzygies(&g, &MonomialOrder::NegDegRevLex).is_err());
    }
}
