use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Hard ceiling on the number of ring variables; monomial orders index
/// into a fixed identity table of this size.
pub const MAX_VARS: usize = 64;

/// Ordered list of variable names of a polynomial ring over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
}

/// Shared handle; polynomials keep one of these.
pub type Ring = Arc<RingContext>;

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<I, S>(names: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for n in &names {
            if !is_identifier(n) {
                return Err(Error::InvalidRing(format!("`{n}` is not an identifier")));
            }
        }
        Self::from_names(names)
    }

    fn from_names(names: Vec<String>) -> Result<Ring> {
        if names.len() > MAX_VARS {
            return Err(Error::InvalidRing(format!(
                "{} variables requested, at most {MAX_VARS} supported",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(RingContext { names }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Ring with `extra` variables appended after the existing ones.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring> {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Self::from_names(names)
    }

    /// Ring with variable `i` removed.
    pub fn without(&self, i: usize) -> Result<Ring> {
        if i >= self.nvars() {
            return Err(Error::IndexOutOfRange {
                index: i,
                nvars: self.nvars(),
            });
        }
        let mut names = self.names.clone();
        names.remove(i);
        Self::from_names(names)
    }

    /// A variable name starting with `stem` that does not clash with this ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        if self.index_of(stem).is_none() {
            return stem.to_string();
        }
        (0..)
            .map(|k| format!("{stem}{k}"))
            .find(|c| self.index_of(c).is_none())
            .expect("infinite supply of names")
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(RingContext::new(["x", "x"]).is_err());
        assert!(RingContext::new(["1x"]).is_err());
        assert!(RingContext::new(["x", "y_1"]).is_ok());
    }

    #[test]
    fn extend_and_drop() {
        let r = RingContext::new(["x", "y", "z"]).unwrap();
        let s = r.extend(&["T1", "T2"]).unwrap();
        assert_eq!(s.nvars(), 5);
        assert_eq!(s.index_of("T2"), Some(4));
        let t = r.without(2).unwrap();
        assert_eq!(t.names(), &["x".to_string(), "y".to_string()]);
        assert_eq!(r.fresh_name("x"), "x0");
        assert_eq!(r.fresh_name("t"), "t");
    }
}
