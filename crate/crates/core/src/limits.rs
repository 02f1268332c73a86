//! Configurable resource caps.
//!
//! Limits are per thread. Exceeding one produces
//! [`Error::ResourceLimit`](crate::Error::ResourceLimit); nothing is truncated.

use std::cell::Cell;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Terms in any single polynomial or vector.
    pub max_terms: usize,
    /// Elements of a basis under construction.
    pub max_basis: usize,
    /// Critical pairs processed by one basis computation.
    pub max_pairs: usize,
    /// Colon steps in a saturation before giving up.
    pub max_saturation_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_terms: 1_000_000,
            max_basis: 20_000,
            max_pairs: 2_000_000,
            max_saturation_steps: 50,
        }
    }
}

thread_local! {
    static CURRENT: Cell<Limits> = Cell::new(Limits::default());
}

pub fn current() -> Limits {
    CURRENT.with(Cell::get)
}

/// Run `f` with `limits` in force on this thread, restoring the previous
/// limits afterwards.
pub fn with_limits<T>(limits: Limits, f: impl FnOnce() -> T) -> T {
    struct Restore(Limits);
    impl Drop for Restore {
        fn drop(&mut self) {
            CURRENT.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(current());
    CURRENT.with(|c| c.set(limits));
    f()
}

pub(crate) fn check_terms(n: usize) -> Result<()> {
    let max = current().max_terms;
    if n > max {
        Err(Error::ResourceLimit(format!("{n} terms exceeds the cap of {max}")))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scoped_limits_restore() {
        let tight = Limits {
            max_terms: 3,
            ..Limits::default()
        };
        with_limits(tight, || {
            assert!(check_terms(4).is_err());
            assert!(check_terms(3).is_ok());
        });
        assert!(check_terms(4).is_ok());
    }
}
