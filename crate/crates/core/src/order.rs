//! Monomial orders and their module extensions.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::MAX_VARS;

const fn identity_table() -> [usize; MAX_VARS] {
    let mut t = [0usize; MAX_VARS];
    let mut i = 0;
    while i < MAX_VARS {
        t[i] = i;
        i += 1;
    }
    t
}

static IDENTITY: [usize; MAX_VARS] = identity_table();

/// Total order on exponent vectors.
///
/// Global orders (`DegRevLex`, `Lex`, `Weighted`) are well-orders with `1`
/// smallest and drive Buchberger's algorithm; the local order
/// `NegDegRevLex` has `1` largest and drives Mora's tangent cone algorithm.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    Lex,
    NegDegRevLex,
    /// Positive integer weights; ties broken by degree reverse lexicographic order.
    Weighted(Vec<i64>),
    /// The `elim` variables are compared first with `inner`, the remaining
    /// ones afterwards with `outer`. Only valid at the top level.
    Block {
        elim: Vec<usize>,
        rest: Vec<usize>,
        inner: Box<MonomialOrder>,
        outer: Box<MonomialOrder>,
    },
}

/// Locality class of an order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Global,
    Local,
    Mixed,
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<i64>) -> Result<Self> {
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::WrongOrder("weights must be strictly positive".into()));
        }
        Ok(MonomialOrder::Weighted(weights))
    }

    /// Block order eliminating `elim` in a ring with `nvars` variables, with
    /// degree reverse lexicographic order inside both blocks.
    pub fn elimination(elim: &[usize], nvars: usize) -> Result<Self> {
        Self::block(elim, nvars, MonomialOrder::DegRevLex, MonomialOrder::DegRevLex)
    }

    pub fn block(
        elim: &[usize],
        nvars: usize,
        inner: MonomialOrder,
        outer: MonomialOrder,
    ) -> Result<Self> {
        if matches!(inner, MonomialOrder::Block { .. }) || matches!(outer, MonomialOrder::Block { .. }) {
            return Err(Error::WrongOrder("block orders cannot be nested".into()));
        }
        let mut elim: Vec<usize> = elim.to_vec();
        elim.sort_unstable();
        elim.dedup();
        if let Some(&bad) = elim.iter().find(|&&i| i >= nvars) {
            return Err(Error::IndexOutOfRange { index: bad, nvars });
        }
        let rest = (0..nvars).filter(|i| !elim.contains(i)).collect();
        Ok(MonomialOrder::Block {
            elim,
            rest,
            inner: Box::new(inner),
            outer: Box::new(outer),
        })
    }

    pub fn kind(&self) -> OrderKind {
        match self {
            MonomialOrder::DegRevLex | MonomialOrder::Lex | MonomialOrder::Weighted(_) => OrderKind::Global,
            MonomialOrder::NegDegRevLex => OrderKind::Local,
            MonomialOrder::Block { inner, outer, .. } => match (inner.kind(), outer.kind()) {
                (OrderKind::Global, OrderKind::Global) => OrderKind::Global,
                (OrderKind::Local, OrderKind::Local) => OrderKind::Local,
                _ => OrderKind::Mixed,
            },
        }
    }

    pub fn is_global(&self) -> bool {
        self.kind() == OrderKind::Global
    }

    pub fn is_local(&self) -> bool {
        self.kind() == OrderKind::Local
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub(crate) fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Block {
                elim,
                rest,
                inner,
                outer,
            } => inner
                .cmp_on(a, b, elim)
                .then_with(|| outer.cmp_on(a, b, rest)),
            _ => self.cmp_on(a, b, &IDENTITY[..a.len()]),
        }
    }

    /// Compare the restrictions of `a` and `b` to `vars`.
    fn cmp_on(&self, a: &[u32], b: &[u32], vars: &[usize]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => {
                let da: u64 = vars.iter().map(|&i| a[i] as u64).sum();
                let db: u64 = vars.iter().map(|&i| b[i] as u64).sum();
                da.cmp(&db).then_with(|| revlex_tail(a, b, vars))
            }
            MonomialOrder::NegDegRevLex => {
                let da: u64 = vars.iter().map(|&i| a[i] as u64).sum();
                let db: u64 = vars.iter().map(|&i| b[i] as u64).sum();
                db.cmp(&da).then_with(|| revlex_tail(a, b, vars))
            }
            MonomialOrder::Lex => {
                for &i in vars {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Weighted(w) => {
                let wa: i64 = vars.iter().zip(w).map(|(&i, &wi)| a[i] as i64 * wi).sum();
                let wb: i64 = vars.iter().zip(w).map(|(&i, &wi)| b[i] as i64 * wi).sum();
                wa.cmp(&wb).then_with(|| MonomialOrder::DegRevLex.cmp_on(a, b, vars))
            }
            MonomialOrder::Block { .. } => unreachable!("nested block order"),
        }
    }
}

/// Reverse-lexicographic tie break: scanning from the last variable, the
/// monomial with the smaller exponent is the larger one.
fn revlex_tail(a: &[u32], b: &[u32], vars: &[usize]) -> Ordering {
    for &i in vars.iter().rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "dp"),
            MonomialOrder::Lex => write!(f, "lp"),
            MonomialOrder::NegDegRevLex => write!(f, "ds"),
            MonomialOrder::Weighted(w) => write!(f, "wp{w:?}"),
            MonomialOrder::Block {
                elim, inner, outer, ..
            } => write!(f, "block({elim:?}: {inner:?}, {outer:?})"),
        }
    }
}

/// How module components are ranked against monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PositionRule {
    /// Compare monomials first, then components (lower index is larger).
    TermOverPosition,
    /// Compare components first (lower index is larger), then monomials.
    PositionOverTerm,
    /// Component 0 beats everything; the rest is term-over-position.
    /// Used to split off the syzygy part of a tagged module.
    FirstComponent,
}

/// Extension of a monomial order to free modules `R^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub position: PositionRule,
}

impl ModuleOrder {
    pub fn new(base: MonomialOrder, position: PositionRule) -> Self {
        ModuleOrder { base, position }
    }

    /// Rank-one view of a plain monomial order.
    pub fn ideal(base: MonomialOrder) -> Self {
        ModuleOrder {
            base,
            position: PositionRule::TermOverPosition,
        }
    }

    pub(crate) fn cmp(&self, a: &Monomial, ca: usize, b: &Monomial, cb: usize) -> Ordering {
        match self.position {
            PositionRule::TermOverPosition => self.base.cmp(a, b).then_with(|| cb.cmp(&ca)),
            PositionRule::PositionOverTerm => cb.cmp(&ca).then_with(|| self.base.cmp(a, b)),
            PositionRule::FirstComponent => (ca == 0)
                .cmp(&(cb == 0))
                .then_with(|| self.base.cmp(a, b))
                .then_with(|| cb.cmp(&ca)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::DegRevLex;
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        // x*z < y^2 in degrevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn local_order_has_one_largest() {
        let o = MonomialOrder::NegDegRevLex;
        assert!(o.is_local());
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn block_eliminates() {
        // eliminate variable 1 in a 3-variable ring
        let o = MonomialOrder::elimination(&[1], 3).unwrap();
        assert!(o.is_global());
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[9, 0, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn weighted_requires_positive() {
        assert!(MonomialOrder::weighted(vec![1, 0]).is_err());
        let o = MonomialOrder::weighted(vec![6, 5]).unwrap();
        // x^5 (w=30) vs y^6 (w=30): tie broken by degrevlex, y^6 has higher degree
        assert_eq!(o.cmp(&m(&[5, 0]), &m(&[0, 6])), Ordering::Less);
    }

    #[test]
    fn module_positions() {
        let top = ModuleOrder::new(MonomialOrder::DegRevLex, PositionRule::TermOverPosition);
        let pot = ModuleOrder::new(MonomialOrder::DegRevLex, PositionRule::PositionOverTerm);
        let first = ModuleOrder::new(MonomialOrder::DegRevLex, PositionRule::FirstComponent);
        let x = m(&[1, 0]);
        let one = m(&[0, 0]);
        assert_eq!(top.cmp(&x, 1, &one, 0), Ordering::Greater);
        assert_eq!(pot.cmp(&x, 1, &one, 0), Ordering::Less);
        assert_eq!(first.cmp(&x, 2, &one, 0), Ordering::Less);
        assert_eq!(first.cmp(&x, 2, &one, 1), Ordering::Greater);
    }
}
