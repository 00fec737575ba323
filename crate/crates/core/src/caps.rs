//! Enumeration limits. Brute-force enumerations grow superexponentially,
//! so every enumerating entry point checks its size against a cap and fails
//! with [`Error::CapExceeded`] instead of truncating.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Truncation order of the solvers when driven from the command line.
    pub degree: u32,
    /// Full (unsorted) parking-function enumeration.
    pub pf_brute_force: u32,
    /// Nondecreasing classic parking functions.
    pub ndpf_classic: u32,
    /// Nondecreasing members of the shifted and arithmetic families.
    pub ndpf: u32,
    /// Ordered trees, Dyck words and Motzkin paths.
    pub trees: u32,
    /// Shuffle graphs on generalized compositions.
    pub graph: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            degree: 8,
            pf_brute_force: 7,
            ndpf_classic: 12,
            ndpf: 7,
            trees: 9,
            graph: 9,
        }
    }
}

impl Caps {
    /// Every cap set to `n`.
    pub fn uniform(n: u32) -> Self {
        Caps {
            degree: n,
            pf_brute_force: n,
            ndpf_classic: n,
            ndpf: n,
            trees: n,
            graph: n,
        }
    }

    pub fn unlimited() -> Self {
        Self::uniform(u32::MAX)
    }

    pub fn check(what: &'static str, n: u32, cap: u32) -> Result<()> {
        if n > cap {
            Err(Error::CapExceeded {
                what,
                n: n as usize,
                cap: cap as usize,
            })
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_reports_the_limit() {
        assert!(Caps::check("trees", 9, 9).is_ok());
        assert_eq!(
            Caps::check("trees", 10, 9),
            Err(Error::CapExceeded {
                what: "trees",
                n: 10,
                cap: 9
            })
        );
    }
}
