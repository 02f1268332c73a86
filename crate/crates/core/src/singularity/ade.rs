//! Simple plane curve singularities.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::poly_gcd;
use crate::point::Point;
use crate::poly::Polynomial;

use super::{milnor_number, multiplicity};

/// Family of a plane curve germ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeFamily {
    A,
    D,
    E,
    NotSimple,
    Smooth,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdeType {
    pub family: AdeFamily,
    /// Zero for `NotSimple` and `Smooth`.
    pub index: u32,
}

impl AdeType {
    pub fn new(family: AdeFamily, index: u32) -> Result<Self> {
        let ok = match family {
            AdeFamily::A => index >= 1,
            AdeFamily::D => index >= 4,
            AdeFamily::E => (6..=8).contains(&index),
            AdeFamily::NotSimple | AdeFamily::Smooth => index == 0,
        };
        if ok {
            Ok(AdeType { family, index })
        } else {
            Err(Error::Precondition(format!("no simple singularity {family:?}{index}")))
        }
    }

    pub const SMOOTH: AdeType = AdeType {
        family: AdeFamily::Smooth,
        index: 0,
    };

    pub const NOT_SIMPLE: AdeType = AdeType {
        family: AdeFamily::NotSimple,
        index: 0,
    };

    pub fn is_simple(&self) -> bool {
        matches!(self.family, AdeFamily::A | AdeFamily::D | AdeFamily::E)
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            AdeFamily::A => write!(f, "A{}", self.index),
            AdeFamily::D => write!(f, "D{}", self.index),
            AdeFamily::E => write!(f, "E{}", self.index),
            AdeFamily::NotSimple => f.write_str("not simple"),
            AdeFamily::Smooth => f.write_str("smooth"),
        }
    }
}

/// Degree of the repeated part `gcd(c, dc/dx, dc/dy)` of a binary form.
fn repeated_degree(c: &Polynomial) -> Result<u32> {
    let mut g = c.clone();
    for d in c.gradient() {
        g = poly_gcd(&g, &d)?;
    }
    Ok(g.total_degree().unwrap_or(0))
}

/// Type of the germ of the plane curve `f = 0` at `p`.
pub fn classify_ade(f: &Polynomial, p: &Point) -> Result<AdeType> {
    if f.nvars() != 2 {
        return Err(Error::Precondition(format!(
            "ADE classification needs a plane curve, got {} variables",
            f.nvars()
        )));
    }
    let m = multiplicity(f, p)?;
    if m == 1 {
        return Ok(AdeType::SMOOTH);
    }
    let mu = milnor_number(f, p)? as u32;
    match m {
        2 => AdeType::new(AdeFamily::A, mu),
        3 => {
            let cubic = f.translate_to_origin(p)?.homogeneous_part(3);
            match repeated_degree(&cubic)? {
                0 => AdeType::new(AdeFamily::D, 4),
                1 => AdeType::new(AdeFamily::D, mu),
                _ if (6..=8).contains(&mu) => AdeType::new(AdeFamily::E, mu),
                _ => Ok(AdeType::NOT_SIMPLE),
            }
        }
        _ => Ok(AdeType::NOT_SIMPLE),
    }
}

/// `(delta, branches)` of a simple singularity.
pub fn delta_and_branches(t: AdeType) -> Result<(u32, u32)> {
    let k = t.index;
    let r = match t.family {
        AdeFamily::A => 1 + k % 2,
        AdeFamily::D => 3 - k % 2,
        AdeFamily::E => match k {
            7 => 2,
            _ => 1,
        },
        _ => return Err(Error::Precondition(format!("{t} has no tabulated invariants"))),
    };
    let twice = k + r - 1;
    debug_assert!(twice % 2 == 0);
    Ok((twice / 2, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;
    use crate::text::parse_polynomial;

    fn classify(src: &str) -> AdeType {
        let r = RingContext::new(["x", "y"]).unwrap();
        classify_ade(&parse_polynomial(src, &r).unwrap(), &Point::origin(2)).unwrap()
    }

    #[test]
    fn normal_forms() {
        assert_eq!(classify("y^2-x^3").to_string(), "A2");
        assert_eq!(classify("y^2*x-x^3").to_string(), "D4");
        assert_eq!(classify("x^3-y^4").to_string(), "E6");
        assert_eq!(classify("y^3-y*x^3").to_string(), "E7");
        assert_eq!(classify("x^3-y^5").to_string(), "E8");
        assert_eq!(classify("y^2*x-x^4").to_string(), "D5");
        assert_eq!(classify("x^4+y^4").to_string(), "not simple");
        assert_eq!(classify("x+y^2").to_string(), "smooth");
        assert_eq!(classify("x^3-y^6").to_string(), "not simple");
    }

    #[test]
    fn table_rows() {
        let t = |f, k| delta_and_branches(AdeType::new(f, k).unwrap()).unwrap();
        assert_eq!(t(AdeFamily::A, 1), (1, 2));
        assert_eq!(t(AdeFamily::A, 2), (1, 1));
        assert_eq!(t(AdeFamily::A, 3), (2, 2));
        assert_eq!(t(AdeFamily::D, 4), (3, 3));
        assert_eq!(t(AdeFamily::D, 5), (3, 2));
        assert_eq!(t(AdeFamily::E, 6), (3, 1));
        assert_eq!(t(AdeFamily::E, 7), (4, 2));
        assert_eq!(t(AdeFamily::E, 8), (4, 1));
        assert!(delta_and_branches(AdeType::NOT_SIMPLE).is_err());
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(AdeType::new(AdeFamily::D, 3).is_err());
        assert!(AdeType::new(AdeFamily::E, 9).is_err());
        assert!(AdeType::new(AdeFamily::A, 0).is_err());
    }
}
