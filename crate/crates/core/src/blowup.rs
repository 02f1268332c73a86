//! Symmetric and Rees algebra presentations and the linear type test.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{self, syzygies};
use crate::ideal::{entries_ideal, saturation, Ideal};
use crate::order::MonomialOrder;
use crate::point::Point;
use crate::poly::{cmp_by_terms, Polynomial};
use crate::ring::Ring;
use crate::singularity::{
    analyze_point, gradient_ideal, jacobian_ideal, singular_locus_dimension, singular_points,
    HypersurfaceInput, Setting, SingularPointReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresentationKind {
    Symmetric,
    Rees,
}

/// An ideal of `R[T_1..T_m]` presenting an algebra over `R`.
#[derive(Clone)]
pub struct PresentationIdeal {
    ambient: Ring,
    base_vars: usize,
    generators: Vec<Polynomial>,
    kind: PresentationKind,
}

impl PresentationIdeal {
    pub fn ambient(&self) -> &Ring {
        &self.ambient
    }

    /// Number of variables of the base ring; the rest are the `T_i`.
    pub fn base_vars(&self) -> usize {
        self.base_vars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    /// Total degree in the `T` variables, or `None` if not `T`-homogeneous.
    pub fn t_degree(&self, f: &Polynomial) -> Option<u32> {
        t_degree(f, self.base_vars)
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ambient, self.generators.iter().cloned()).expect("same ring")
    }

    /// The base ring generators mapped into the ambient ring.
    pub fn basis(&self) -> Result<groebner::Basis> {
        groebner::groebner_basis_in(&self.ambient, &self.generators, &MonomialOrder::DegRevLex)
    }
}

impl fmt::Debug for PresentationIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "{:?} over {}: ({})", self.kind, self.ambient, g.join(", "))
    }
}

fn t_degree(f: &Polynomial, base: usize) -> Option<u32> {
    let mut degs = f.terms().map(|(m, _)| m.exponents()[base..].iter().sum::<u32>());
    let first = degs.next()?;
    degs.all(|d| d == first).then_some(first)
}

/// `R[T_1..T_m]` for an ideal with `m` generators.
fn ambient_ring(base: &Ring, m: usize) -> Result<Ring> {
    let stem = base.fresh_name("T");
    let names: Vec<String> = (1..=m).map(|i| format!("{stem}{i}")).collect();
    let clash = names.iter().any(|n| base.index_of(n).is_some());
    let names = if clash {
        let stem = format!("{stem}_");
        (1..=m).map(|i| format!("{stem}{i}")).collect()
    } else {
        names
    };
    base.extend(&names)
}

/// `I_1([T_1 .. T_m] * phi)` for a presentation matrix `phi` of `I`.
pub fn symmetric_ideal(i: &Ideal) -> Result<PresentationIdeal> {
    let base = i.ring();
    let m = i.generators().len();
    let ambient = ambient_ring(base, m)?;
    let n = base.nvars();
    let mut gens = Vec::new();
    if m > 1 {
        let phi = syzygies(i.generators(), &MonomialOrder::DegRevLex)?;
        for col in phi.columns() {
            let mut acc = Polynomial::zero(&ambient);
            for (k, c) in col.iter().enumerate() {
                let t = Polynomial::var(&ambient, n + k)?;
                acc = acc.checked_add(&t.checked_mul(&c.extend_to(&ambient)?)?)?;
            }
            if !acc.is_zero() {
                gens.push(acc);
            }
        }
    }
    Ok(PresentationIdeal {
        ambient,
        base_vars: n,
        generators: gens,
        kind: PresentationKind::Symmetric,
    })
}

/// Kernel of `R[T] -> R[t]`, `T_i -> f_i t`, by eliminating `t`.
pub fn rees_ideal(i: &Ideal) -> Result<PresentationIdeal> {
    let base = i.ring();
    let m = i.generators().len();
    let ambient = ambient_ring(base, m)?;
    let n = base.nvars();
    let with_t = ambient.extend(&[ambient.fresh_name("t")])?;
    let t = Polynomial::var(&with_t, n + m)?;
    let mut gens = Vec::with_capacity(m);
    for (k, f) in i.generators().iter().enumerate() {
        let tk = Polynomial::var(&with_t, n + k)?;
        gens.push(tk.checked_sub(&t.checked_mul(&f.extend_to(&with_t)?)?)?);
    }
    let keep: Vec<Option<usize>> = (0..n + m).map(Some).chain([None]).collect();
    let generators = if gens.is_empty() {
        Vec::new()
    } else {
        groebner::eliminate(&gens, &[n + m])?
            .iter()
            .map(|g| g.restrict(&ambient, &keep))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(PresentationIdeal {
        ambient,
        base_vars: n,
        generators,
        kind: PresentationKind::Rees,
    })
}

/// Rees ideal as `Sym : g^∞` for a nonzero generator `g` of `I`; valid
/// because `R` is a domain. Independent of [`rees_ideal`].
pub fn rees_ideal_by_saturation(i: &Ideal) -> Result<PresentationIdeal> {
    let sym = symmetric_ideal(i)?;
    let ambient = sym.ambient.clone();
    let generators = match i.generators().first() {
        None => Vec::new(),
        Some(g) => {
            let g = g.extend_to(&ambient)?;
            let s = saturation(&sym.ideal(), &Ideal::new(&ambient, [g])?)?;
            s.generators().to_vec()
        }
    };
    Ok(PresentationIdeal {
        ambient,
        base_vars: sym.base_vars,
        generators,
        kind: PresentationKind::Rees,
    })
}

/// Criteria a verdict may rest on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    LocalCi,
    LocallyEulerian,
    SyzygyCodim,
    SocleCyclic,
    ReesDirect,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::LocalCi => "local-CI",
            Method::LocallyEulerian => "locally-eulerian",
            Method::SyzygyCodim => "syzygy-codim",
            Method::SocleCyclic => "socle-cyclic",
            Method::ReesDirect => "rees-direct",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug)]
pub struct LinearTypeVerdict {
    pub verdict: bool,
    /// Methods that ran; all returned `verdict`.
    pub methods: Vec<Method>,
    /// Rees generator outside the symmetric ideal, when the direct test ran.
    pub witness: Option<Polynomial>,
    pub evidence: Vec<SingularPointReport>,
    /// First singular point at which a local criterion failed.
    pub failing_point: Option<Point>,
    pub caveats: Vec<String>,
}

impl LinearTypeVerdict {
    fn from_methods(results: &[(Method, bool)]) -> Result<(bool, Vec<Method>)> {
        let first = results
            .first()
            .map(|r| r.1)
            .ok_or_else(|| Error::Precondition("no linear type criterion could run".into()))?;
        if results.iter().any(|r| r.1 != first) {
            let detail: Vec<String> = results.iter().map(|(m, v)| format!("{m}={v}")).collect();
            return Err(Error::CriteriaDisagreement(detail.join(", ")));
        }
        Ok((first, results.iter().map(|r| r.0).collect()))
    }
}

/// Outcome of the direct comparison of Rees and symmetric ideals.
#[derive(Clone, Debug)]
pub struct LinearTypeTest {
    pub linear_type: bool,
    pub witness: Option<Polynomial>,
    pub symmetric: PresentationIdeal,
    pub rees: PresentationIdeal,
}

fn witness_order(a: &Polynomial, b: &Polynomial, base: usize) -> Ordering {
    let key = |p: &Polynomial| (t_degree(p, base).unwrap_or(u32::MAX), p.total_degree().unwrap_or(0));
    key(a).cmp(&key(b)).then_with(|| cmp_by_terms(a, b, &MonomialOrder::Lex))
}

/// Every Rees generator reduces to zero modulo the symmetric ideal.
pub fn linear_type_test(i: &Ideal) -> Result<LinearTypeTest> {
    let symmetric = symmetric_ideal(i)?;
    let rees = rees_ideal(i)?;
    let sym_basis = symmetric.basis()?;
    let mut outside = Vec::new();
    for g in rees.generators() {
        if !groebner::normal_form(g, &sym_basis)?.is_zero() {
            outside.push(g.primitive());
        }
    }
    outside.sort_by(|a, b| witness_order(a, b, symmetric.base_vars));
    Ok(LinearTypeTest {
        linear_type: outside.is_empty(),
        witness: outside.into_iter().next(),
        symmetric,
        rees,
    })
}

/// Direct linear type decision for an arbitrary ideal.
pub fn is_linear_type(i: &Ideal) -> Result<LinearTypeVerdict> {
    let test = linear_type_test(i)?;
    Ok(LinearTypeVerdict {
        verdict: test.linear_type,
        methods: vec![Method::ReesDirect],
        witness: test.witness,
        evidence: Vec::new(),
        failing_point: None,
        caveats: Vec::new(),
    })
}

/// Minimal homogeneous generators of a homogeneous ideal, greedily by degree.
fn minimal_homogeneous_generators(i: &Ideal) -> Result<Vec<Polynomial>> {
    let mut gens: Vec<Polynomial> = i.generators().to_vec();
    gens.sort_by_key(|g| g.total_degree().unwrap_or(0));
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in gens {
        let inside = !kept.is_empty()
            && groebner::groebner_basis_in(i.ring(), &kept, &MonomialOrder::DegRevLex)?.contains(&g)?;
        if !inside {
            kept.push(g);
        }
    }
    Ok(kept)
}

/// The entries of a minimal presentation matrix of `I` generate an ideal
/// of codimension `n + 1` (`I` homogeneous in `n + 1` variables).
///
/// A complete intersection is accepted outright: its presentation is the
/// Koszul matrix and it is of linear type.
pub fn syzygy_entries_codim_check(i: &Ideal, n: usize) -> Result<bool> {
    let ring = i.ring();
    if ring.nvars() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            got: ring.nvars(),
        });
    }
    if i.generators().iter().any(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let gens = minimal_homogeneous_generators(i)?;
    let codim_i = ring.nvars() as i64 - i.krull_dimension()?;
    if gens.len() as i64 <= codim_i {
        return Ok(true);
    }
    let phi = syzygies(&gens, &MonomialOrder::DegRevLex)?;
    let e = entries_ideal(&phi)?;
    let dim = e.krull_dimension()?;
    Ok(dim <= 0)
}

/// Knobs for the composite verdicts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LinearTypeOptions {
    /// Also compare Rees and symmetric ideals directly.
    pub direct_rees: bool,
}

fn local_results(reports: &[SingularPointReport]) -> (Vec<(Method, bool)>, Option<Point>) {
    let ci = reports.iter().all(SingularPointReport::locally_complete_intersection);
    let euler = reports.iter().all(|r| r.locally_eulerian);
    let socle = reports.iter().all(|r| r.socle_cyclic);
    let failing = reports
        .iter()
        .find(|r| !r.locally_eulerian || !r.locally_complete_intersection() || !r.socle_cyclic)
        .map(|r| r.point.clone());
    (
        vec![
            (Method::LocalCi, ci),
            (Method::LocallyEulerian, euler),
            (Method::SocleCyclic, socle),
        ],
        failing,
    )
}

fn finish(
    mut results: Vec<(Method, bool)>,
    direct: Option<LinearTypeTest>,
    evidence: Vec<SingularPointReport>,
    failing_point: Option<Point>,
    caveats: Vec<String>,
) -> Result<LinearTypeVerdict> {
    let witness = direct.as_ref().and_then(|d| d.witness.clone());
    if let Some(d) = &direct {
        results.push((Method::ReesDirect, d.linear_type));
    }
    let (verdict, methods) = LinearTypeVerdict::from_methods(&results)?;
    Ok(LinearTypeVerdict {
        verdict,
        methods,
        witness,
        evidence,
        failing_point: if verdict { None } else { failing_point },
        caveats,
    })
}

/// Jacobian linear type of an affine hypersurface with isolated
/// singularities: local complete intersection, locally Eulerian and
/// cyclic socle module at every singular point, optionally the direct test.
pub fn jacobian_linear_type(f: &Polynomial, opts: LinearTypeOptions) -> Result<LinearTypeVerdict> {
    let h = HypersurfaceInput::affine(f.clone())?;
    let locus = singular_points(&h)?;
    let mut caveats = Vec::new();
    let mut direct = opts.direct_rees;
    if locus.leftover.is_some() {
        caveats.push("singular points over a field extension were not analyzed; decided by the direct test".into());
        direct = true;
    }
    let evidence = locus
        .points
        .iter()
        .map(|p| analyze_point(&h, p))
        .collect::<Result<Vec<_>>>()?;
    let (mut results, failing) = local_results(&evidence);
    if locus.leftover.is_some() {
        results.clear();
    }
    let test = if direct { Some(linear_type_test(&jacobian_ideal(f))?) } else { None };
    finish(results, test, evidence, failing, caveats)
}

/// Gradient linear type of a projective hypersurface: the codimension of
/// the syzygy entries, and when the singular locus is finite the local
/// criteria in affine charts; optionally the direct test.
pub fn gradient_linear_type(f: &Polynomial, opts: LinearTypeOptions) -> Result<LinearTypeVerdict> {
    let h = HypersurfaceInput::projective(f.clone())?;
    let j = gradient_ideal(f);
    let n = f.nvars() - 1;
    let codim = syzygy_entries_codim_check(&j, n)?;
    let mut results = Vec::new();
    let mut caveats = Vec::new();
    let mut evidence = Vec::new();
    let mut failing = None;
    let mut direct = opts.direct_rees;
    let dim = singular_locus_dimension(&h)?;
    if dim > 0 {
        let witness = crate::singularity::repeated_factor(f)?;
        if !witness.is_constant() {
            return Err(Error::NotReduced {
                witness: witness.to_string(),
            });
        }
        caveats.push(format!(
            "singular locus has dimension {dim}; local criteria skipped, syzygy-codim={codim} not used, decided by the direct test"
        ));
        direct = true;
    } else {
        results.push((Method::SyzygyCodim, codim));
        let locus = singular_points(&h)?;
        if locus.leftover.is_some() {
            caveats.push("singular points over a field extension were not analyzed".into());
            direct = true;
        } else {
            evidence = locus
                .points
                .iter()
                .map(|p| analyze_point(&h, p))
                .collect::<Result<Vec<_>>>()?;
            let (local, bad) = local_results(&evidence);
            results.extend(local);
            failing = bad;
        }
    }
    let test = if direct { Some(linear_type_test(&j)?) } else { None };
    finish(results, test, evidence, failing, caveats)
}

/// The hypersurface's relevant ideal: `I(f)` affinely, `J(f)` projectively.
pub fn relevant_ideal(h: &HypersurfaceInput) -> Ideal {
    match h.setting {
        Setting::Affine => jacobian_ideal(&h.f),
        Setting::Projective => gradient_ideal(&h.f),
    }
}
