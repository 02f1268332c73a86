use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A rational point, affine or projective.
///
/// Projective coordinates are normalized so that the first nonzero entry is
/// one; structural equality is therefore equality of points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Affine(Vec<Rational>),
    Projective(Vec<Rational>),
}

impl Point {
    pub fn affine(coords: Vec<Rational>) -> Self {
        Point::Affine(coords)
    }

    pub fn origin(n: usize) -> Self {
        Point::Affine(vec![Rational::zero(); n])
    }

    pub fn projective(coords: Vec<Rational>) -> Result<Self> {
        let lead = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Precondition("projective point with all coordinates zero".into()))?;
        let inv = coords[lead].inv().expect("nonzero");
        Ok(Point::Projective(coords.iter().map(|c| c * &inv).collect()))
    }

    pub fn coords(&self) -> &[Rational] {
        match self {
            Point::Affine(c) | Point::Projective(c) => c,
        }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, Point::Projective(_))
    }

    pub fn neg(&self) -> Point {
        match self {
            Point::Affine(c) => Point::Affine(c.iter().map(|x| -x).collect()),
            Point::Projective(_) => self.clone(),
        }
    }

    /// Index of the first standard affine chart `x_i != 0` containing a
    /// projective point.
    pub fn first_chart(&self) -> Option<usize> {
        match self {
            Point::Projective(c) => c.iter().position(|x| !x.is_zero()),
            Point::Affine(_) => None,
        }
    }

    /// Affine coordinates of a projective point in the chart `x_i = 1`.
    pub fn in_chart(&self, i: usize) -> Result<Point> {
        match self {
            Point::Projective(c) => {
                let inv = c
                    .get(i)
                    .and_then(Rational::inv)
                    .ok_or_else(|| Error::Precondition(format!("point {self} is not in chart {i}")))?;
                Ok(Point::Affine(
                    c.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != i)
                        .map(|(_, x)| x * &inv)
                        .collect(),
                ))
            }
            Point::Affine(_) => Err(Error::Precondition("chart of an affine point".into())),
        }
    }

    /// Inverse of [`Point::in_chart`].
    pub fn from_chart(affine: &[Rational], i: usize) -> Result<Point> {
        let mut c = affine.to_vec();
        c.insert(i, Rational::one());
        Point::projective(c)
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords().iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Affine(c) => write!(f, "({})", join(c, ", ")),
            Point::Projective(c) => write!(f, "[{}]", join(c, ":")),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn join(c: &[Rational], sep: &str) -> String {
    c.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_normalization() {
        let p = Point::projective(vec![2.into(), (-2).into(), 0.into()]).unwrap();
        assert_eq!(p.to_string(), "[1:-1:0]");
        let q = Point::projective(vec![0.into(), 0.into(), 5.into()]).unwrap();
        assert_eq!(q.to_string(), "[0:0:1]");
        assert!(Point::projective(vec![0.into(), 0.into()]).is_err());
    }

    #[test]
    fn charts() {
        let p = Point::projective(vec![1.into(), 1.into(), 0.into()]).unwrap();
        assert_eq!(p.first_chart(), Some(0));
        let a = p.in_chart(0).unwrap();
        assert_eq!(a.to_string(), "(1, 0)");
        assert_eq!(Point::from_chart(a.coords(), 0).unwrap(), p);
        assert!(p.in_chart(2).is_err());
    }
}
