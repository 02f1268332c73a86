//! Positive weights making a polynomial quasi-homogeneous of degree one.

use crate::poly::Polynomial;
use crate::rational::Rational;

/// Reduced row echelon form of `[a | b]`; `None` when inconsistent.
/// Returns a particular solution and a nullspace basis.
fn solve_affine(rows: &[Vec<Rational>], rhs: &[Rational], n: usize) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let k = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&k * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut particular = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][n].clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let null = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -m[i][f].clone();
            }
            v
        })
        .collect();
    Some((particular, null))
}

/// Strict inequality `c + a·t > 0`.
#[derive(Clone, Debug)]
struct Strict {
    a: Vec<Rational>,
    c: Rational,
}

/// A point satisfying all strict inequalities, by Fourier–Motzkin
/// elimination and back substitution.
fn strictly_feasible(ineqs: Vec<Strict>, k: usize) -> Option<Vec<Rational>> {
    if k == 0 {
        return ineqs.iter().all(|s| s.c.is_positive()).then(Vec::new);
    }
    let last = k - 1;
    let (mut lower, mut upper, mut rest) = (Vec::new(), Vec::new(), Vec::new());
    for s in ineqs {
        if s.a[last].is_positive() {
            lower.push(s);
        } else if s.a[last].is_negative() {
            upper.push(s);
        } else {
            rest.push(s);
        }
    }
    let mut reduced: Vec<Strict> = rest.clone();
    for l in &lower {
        for u in &upper {
            let (al, au) = (l.a[last].clone(), -u.a[last].clone());
            let a = l.a.iter().zip(&u.a).map(|(x, y)| &(x * &au) + &(y * &al)).collect();
            reduced.push(Strict {
                a,
                c: &(&l.c * &au) + &(&u.c * &al),
            });
        }
    }
    for s in reduced.iter_mut() {
        s.a.truncate(last);
    }
    let mut t = strictly_feasible(reduced, last)?;
    // bound on t_last from each side given earlier coordinates
    let value = |s: &Strict, t: &[Rational]| -> Rational {
        let dot = s.a[..last].iter().zip(t).fold(s.c.clone(), |acc, (x, y)| &acc + &(x * y));
        -(&dot / &s.a[last])
    };
    let lo = lower.iter().map(|s| value(s, &t)).max();
    let hi = upper.iter().map(|s| value(s, &t)).min();
    let x = match (lo, hi) {
        (Some(l), Some(h)) => &(&l + &h) / &Rational::from(2),
        (Some(l), None) => &l + &Rational::one(),
        (None, Some(h)) => &h - &Rational::one(),
        (None, None) => Rational::zero(),
    };
    t.push(x);
    Some(t)
}

/// Weights `w` with `<a, w> = 1` for every exponent `a` of `f` and all
/// `w_i > 0`; then `f = sum w_i x_i df/dx_i`. Homogeneous `f` of degree `d`
/// gets `w_i = 1/d`.
pub fn quasi_homogeneous_weights(f: &Polynomial) -> Option<Vec<Rational>> {
    let n = f.nvars();
    if f.is_zero() || n == 0 {
        return None;
    }
    if f.is_homogeneous() {
        let d = f.total_degree()?;
        return (d > 0).then(|| vec![Rational::new(1, d as i64); n]);
    }
    let rows: Vec<Vec<Rational>> = f
        .terms()
        .map(|(m, _)| m.exponents().iter().map(|&e| Rational::from(e as i64)).collect())
        .collect();
    let rhs = vec![Rational::one(); rows.len()];
    let (w0, null) = solve_affine(&rows, &rhs, n)?;
    let k = null.len();
    let ineqs = (0..n)
        .map(|i| Strict {
            a: null.iter().map(|v| v[i].clone()).collect(),
            c: w0[i].clone(),
        })
        .collect();
    let t = strictly_feasible(ineqs, k)?;
    let w: Vec<Rational> = (0..n)
        .map(|i| null.iter().zip(&t).fold(w0[i].clone(), |acc, (v, ti)| &acc + &(&v[i] * ti)))
        .collect();
    w.iter().all(Rational::is_positive).then_some(w)
}

/// `sum w_i x_i df/dx_i`.
pub fn euler_combination(f: &Polynomial, w: &[Rational]) -> crate::Result<Polynomial> {
    let ring = f.ring();
    let mut acc = Polynomial::zero(ring);
    for (i, wi) in w.iter().enumerate() {
        let term = Polynomial::var(ring, i)?.checked_mul(&f.partial_derivative(i)?)?.scale(wi);
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;
    use crate::text::parse_polynomial;

    #[test]
    fn weights_of_known_forms() {
        let r = RingContext::new(["x", "y", "z"]).unwrap();
        let f = parse_polynomial("x^3*y^2+x^5*z+y^4", &r).unwrap();
        let w = quasi_homogeneous_weights(&f).unwrap();
        assert_eq!(w, vec![Rational::new(1, 6), Rational::new(1, 4), Rational::new(1, 6)]);
        assert_eq!(euler_combination(&f, &w).unwrap(), f);

        let g = parse_polynomial("x^2+y^2+z^2", &r).unwrap();
        assert_eq!(quasi_homogeneous_weights(&g).unwrap(), vec![Rational::new(1, 2); 3]);

        let r2 = RingContext::new(["x", "y"]).unwrap();
        let h = parse_polynomial("x^5-y^6+x^3*y^4", &r2).unwrap();
        assert!(quasi_homogeneous_weights(&h).is_none());
    }

    #[test]
    fn free_directions_get_positive_values() {
        let r = RingContext::new(["x", "y", "z"]).unwrap();
        // z does not occur: its weight is unconstrained
        let f = parse_polynomial("y^2-x^3", &r).unwrap();
        let w = quasi_homogeneous_weights(&f).unwrap();
        assert_eq!(&w[..2], &[Rational::new(1, 3), Rational::new(1, 2)]);
        assert!(w[2].is_positive());
        assert_eq!(euler_combination(&f, &w).unwrap(), f);
        // one monomial: a one-parameter family
        let g = parse_polynomial("x*y^2", &r).unwrap();
        let w = quasi_homogeneous_weights(&g).unwrap();
        assert_eq!(euler_combination(&g, &w).unwrap(), g);
        // constants and non-positive solutions are rejected
        assert!(quasi_homogeneous_weights(&parse_polynomial("x+1", &r).unwrap()).is_none());
        assert!(quasi_homogeneous_weights(&parse_polynomial("x+x^2*y", &r).unwrap()).is_none());
    }
}
