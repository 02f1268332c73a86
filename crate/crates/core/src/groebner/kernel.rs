//! Buchberger and Mora completion over free modules `R^r`.
//!
//! Ideals are the rank-one case. Vectors keep their terms sorted
//! decreasingly with respect to a [`ModuleOrder`].

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use crate::error::{Error, Result};
use crate::limits;
use crate::monomial::Monomial;
use crate::order::ModuleOrder;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mono: Monomial,
    pub comp: usize,
    pub coef: Rational,
}

/// Element of a free module, terms sorted decreasingly.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

fn mask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
}

impl Vector {
    /// Build from unsorted terms; merges duplicates and drops zeros.
    pub fn from_terms(mut terms: Vec<Term>, order: &ModuleOrder) -> Vector {
        terms.sort_by(|a, b| order.cmp(&b.mono, b.comp, &a.mono, a.comp));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.comp == t.comp => {
                    last.coef += &t.coef;
                    if last.coef.is_zero() {
                        out.pop();
                    }
                }
                _ if t.coef.is_zero() => {}
                _ => out.push(t),
            }
        }
        Vector { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    pub fn ecart(&self) -> u32 {
        match self.lead() {
            Some(t) => self.max_degree() - t.mono.degree(),
            None => 0,
        }
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        if c.is_zero() {
            return Vector::default();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.clone(),
                    comp: t.comp,
                    coef: &t.coef * c,
                })
                .collect(),
        }
    }

    pub fn monic(&self) -> Vector {
        match self.lead() {
            Some(t) if !t.coef.is_one() => self.scale(&t.coef.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Terms in component `c`.
    pub fn component(&self, c: usize) -> impl Iterator<Item = &Term> {
        self.terms.iter().filter(move |t| t.comp == c)
    }
}

/// `a[from..] - c * m * b`, merged in order.
fn axpy(a: &[Term], c: &Rational, m: &Monomial, b: &[Term], order: &ModuleOrder) -> Result<Vec<Term>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut shifted: Option<Monomial> = b.first().map(|t| t.mono.mul(m));
    while i < a.len() && j < b.len() {
        let bm = shifted.as_ref().unwrap();
        match order.cmp(&a[i].mono, a[i].comp, bm, b[j].comp) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term {
                    mono: shifted.take().unwrap(),
                    comp: b[j].comp,
                    coef: -(c * &b[j].coef),
                });
                j += 1;
                shifted = b.get(j).map(|t| t.mono.mul(m));
            }
            Ordering::Equal => {
                let k = &a[i].coef - &(c * &b[j].coef);
                if !k.is_zero() {
                    out.push(Term {
                        mono: shifted.take().unwrap(),
                        comp: a[i].comp,
                        coef: k,
                    });
                }
                i += 1;
                j += 1;
                shifted = b.get(j).map(|t| t.mono.mul(m));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push(Term {
            mono: shifted.take().unwrap(),
            comp: b[j].comp,
            coef: -(c * &b[j].coef),
        });
        j += 1;
        shifted = b.get(j).map(|t| t.mono.mul(m));
    }
    limits::check_terms(out.len())?;
    Ok(out)
}

/// Basis element with cached data for divisibility tests.
#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub vec: Vector,
    pub lm: Monomial,
    pub comp: usize,
    pub mask: u64,
    pub sugar: u32,
    pub ecart: u32,
}

impl Elem {
    fn new(vec: Vector, sugar: u32) -> Elem {
        let lead = vec.lead().expect("nonzero element");
        Elem {
            lm: lead.mono.clone(),
            comp: lead.comp,
            mask: mask(&lead.mono),
            ecart: vec.ecart(),
            sugar,
            vec,
        }
    }

    fn divides(&self, m: &Monomial, m_mask: u64, comp: usize) -> bool {
        self.comp == comp && self.mask & !m_mask == 0 && self.lm.divides(m)
    }
}

/// Pick a reducer for `(m, comp)`: the shortest divisor, ties by index.
fn find_reducer(basis: &[Elem], m: &Monomial, comp: usize) -> Option<usize> {
    let mm = mask(m);
    let mut best: Option<usize> = None;
    for (k, e) in basis.iter().enumerate() {
        if e.divides(m, mm, comp) {
            match best {
                Some(b) if basis[b].vec.len() <= e.vec.len() => {}
                _ => best = Some(k),
            }
        }
    }
    best
}

/// Full reduction for global orders: no term of the result is divisible by
/// a leading term of `basis`. Basis elements must be monic.
pub(crate) fn reduce_full(f: &Vector, basis: &[Elem], order: &ModuleOrder) -> Result<Vector> {
    let mut p: Vec<Term> = f.terms.clone();
    let mut start = 0;
    let mut rest: Vec<Term> = Vec::new();
    while start < p.len() {
        let lt = &p[start];
        match find_reducer(basis, &lt.mono, lt.comp) {
            Some(k) => {
                let g = &basis[k];
                let q = lt.mono.div(&g.lm).expect("divides");
                let c = lt.coef.clone();
                // skip the cancelled leading term of g
                p = axpy(&p[start + 1..], &c, &q, &g.vec.terms[1..], order)?;
                start = 0;
            }
            None => {
                rest.push(p[start].clone());
                start += 1;
            }
        }
    }
    Ok(Vector { terms: rest })
}

/// Mora's weak normal form for local (or any) orders.
///
/// Returns `h` with `u*f - h` in the module generated by `basis` for some
/// unit `u`, and `h = 0` or its leading term not divisible by any leading
/// term of `basis`.
pub(crate) fn nf_mora(f: &Vector, basis: &[Elem], order: &ModuleOrder) -> Result<Vector> {
    let mut h = f.clone();
    let mut extra: Vec<Elem> = Vec::new();
    let max_steps = limits::current().max_pairs;
    let mut steps = 0usize;
    while let Some(lt) = h.lead() {
        let mm = mask(&lt.mono);
        let pick = basis
            .iter()
            .chain(extra.iter())
            .filter(|e| e.divides(&lt.mono, mm, lt.comp))
            .min_by_key(|e| e.ecart)
            .cloned();
        let g = match pick {
            None => break,
            Some(g) => g,
        };
        steps += 1;
        if steps > max_steps {
            return Err(Error::ResourceLimit("Mora normal form did not settle".into()));
        }
        let hm = h.monic();
        if g.ecart > hm.ecart() {
            extra.push(Elem::new(hm, 0));
        }
        let q = lt.mono.div(&g.lm).expect("divides");
        let c = &lt.coef / &g.vec.terms[0].coef;
        h = Vector {
            terms: axpy(&h.terms[1..], &c, &q, &g.vec.terms[1..], order)?,
        };
    }
    Ok(h)
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    lcm_degree: u32,
    sugar: u32,
    j: usize,
    i: usize,
}

struct PairQueue {
    heap: BinaryHeap<Reverse<PairKey>>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue {
            heap: BinaryHeap::new(),
            pending: HashSet::new(),
        }
    }

    fn push(&mut self, i: usize, j: usize, basis: &[Elem]) {
        let (a, b) = (&basis[i], &basis[j]);
        let lcm = a.lm.lcm(&b.lm);
        let d = lcm.degree();
        let sugar = (a.sugar + d - a.lm.degree()).max(b.sugar + d - b.lm.degree());
        self.pending.insert((i.min(j), i.max(j)));
        self.heap.push(Reverse(PairKey {
            lcm_degree: d,
            sugar,
            j: i.max(j),
            i: i.min(j),
        }));
    }

    fn pop(&mut self) -> Option<(usize, usize, u32)> {
        let Reverse(k) = self.heap.pop()?;
        self.pending.remove(&(k.i, k.j));
        Some((k.i, k.j, k.sugar))
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }
}

/// Buchberger's chain criterion: the pair is redundant if some third
/// element's leading term divides the lcm and both side pairs are done.
fn chain_criterion(i: usize, j: usize, lcm: &Monomial, basis: &[Elem], queue: &PairQueue) -> bool {
    let comp = basis[i].comp;
    let lm = mask(lcm);
    basis.iter().enumerate().any(|(k, e)| {
        k != i
            && k != j
            && e.divides(lcm, lm, comp)
            && !queue.is_pending(i, k)
            && !queue.is_pending(j, k)
    })
}

fn s_vector(a: &Elem, b: &Elem, order: &ModuleOrder) -> Result<Vector> {
    let lcm = a.lm.lcm(&b.lm);
    let qa = lcm.div(&a.lm).unwrap();
    let qb = lcm.div(&b.lm).unwrap();
    // both monic: qa*a - qb*b, leading terms cancel
    let left: Vec<Term> = a.vec.terms[1..]
        .iter()
        .map(|t| Term {
            mono: t.mono.mul(&qa),
            comp: t.comp,
            coef: t.coef.clone(),
        })
        .collect();
    Ok(Vector {
        terms: axpy(&left, &Rational::one(), &qb, &b.vec.terms[1..], order)?,
    })
}

fn check_basis_size(n: usize) -> Result<()> {
    let max = limits::current().max_basis;
    if n > max {
        Err(Error::ResourceLimit(format!("basis grew beyond {max} elements")))
    } else {
        Ok(())
    }
}

/// Which completion to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Completion {
    Buchberger,
    Mora,
}

/// Complete `gens` to a Groebner (global order) or standard (Mora) basis.
///
/// With `Buchberger` the result is the reduced basis; with `Mora` it is a
/// minimal standard basis. All elements are monic and sorted increasingly
/// by leading term.
pub(crate) fn complete(gens: &[Vector], order: &ModuleOrder, how: Completion) -> Result<Vec<Vector>> {
    let rank_one = gens.iter().all(|g| g.terms.iter().all(|t| t.comp == 0));
    let product_ok = rank_one && how == Completion::Buchberger;
    let max_pairs = limits::current().max_pairs;

    let mut inputs: Vec<&Vector> = gens.iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        order.cmp(&x.mono, x.comp, &y.mono, y.comp)
    });

    let mut basis: Vec<Elem> = Vec::new();
    let mut queue = PairQueue::new();
    let reduce = |v: &Vector, basis: &[Elem]| match how {
        Completion::Buchberger => reduce_full(v, basis, order),
        Completion::Mora => nf_mora(v, basis, order),
    };

    let add = |v: Vector, sugar: u32, basis: &mut Vec<Elem>, queue: &mut PairQueue| -> Result<()> {
        let e = Elem::new(v.monic(), sugar);
        basis.push(e);
        check_basis_size(basis.len())?;
        let n = basis.len() - 1;
        for k in 0..n {
            if basis[k].comp != basis[n].comp {
                continue;
            }
            if product_ok && basis[k].lm.is_coprime(&basis[n].lm) {
                continue;
            }
            queue.push(k, n, basis);
        }
        Ok(())
    };

    for g in inputs {
        let h = reduce(g, &basis)?;
        if !h.is_zero() {
            let sugar = g.max_degree();
            add(h, sugar, &mut basis, &mut queue)?;
        }
    }

    let mut processed = 0usize;
    while let Some((i, j, sugar)) = queue.pop() {
        processed += 1;
        if processed > max_pairs {
            return Err(Error::ResourceLimit(format!("more than {max_pairs} critical pairs")));
        }
        let lcm = basis[i].lm.lcm(&basis[j].lm);
        if chain_criterion(i, j, &lcm, &basis, &queue) {
            continue;
        }
        let s = s_vector(&basis[i], &basis[j], order)?;
        let h = reduce(&s, &basis)?;
        if !h.is_zero() {
            add(h, sugar, &mut basis, &mut queue)?;
        }
    }

    // Minimalize: drop elements whose leading term is divisible by another's.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for a in 0..basis.len() {
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            let (ea, eb) = (&basis[a], &basis[b]);
            if eb.comp == ea.comp && eb.lm.divides(&ea.lm) && (eb.lm != ea.lm || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    let minimal: Vec<Elem> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();

    let mut out: Vec<Vector> = match how {
        Completion::Buchberger => {
            let mut reduced = Vec::with_capacity(minimal.len());
            for (k, e) in minimal.iter().enumerate() {
                let others: Vec<Elem> = minimal
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != k)
                    .map(|(_, x)| x.clone())
                    .collect();
                let tail = reduce_full(
                    &Vector {
                        terms: e.vec.terms[1..].to_vec(),
                    },
                    &others,
                    order,
                )?;
                let mut terms = vec![e.vec.terms[0].clone()];
                terms.extend(tail.terms);
                reduced.push(Vector { terms });
            }
            reduced
        }
        Completion::Mora => minimal.into_iter().map(|e| e.vec).collect(),
    };
    out.sort_by(|a, b| {
        let (x, y) = (a.lead().unwrap(), b.lead().unwrap());
        order.cmp(&x.mono, x.comp, &y.mono, y.comp)
    });
    Ok(out)
}

pub(crate) fn elems(basis: &[Vector]) -> Vec<Elem> {
    basis.iter().map(|v| Elem::new(v.clone(), v.max_degree())).collect()
}

/// All S-vectors of `basis` reduce to zero.
pub(crate) fn is_confluent(basis: &[Vector], order: &ModuleOrder, how: Completion) -> Result<bool> {
    let es = elems(basis);
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            if es[i].comp != es[j].comp {
                continue;
            }
            let s = s_vector(&es[i], &es[j], order)?;
            let r = match how {
                Completion::Buchberger => reduce_full(&s, &es, order)?,
                Completion::Mora => nf_mora(&s, &es, order)?,
            };
            if !r.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
