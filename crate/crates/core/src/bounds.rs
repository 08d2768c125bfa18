use crate::error::{Error, Result};

/// Size limits guarding the exponential constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest set whose power set may be materialized.
    pub powerset: usize,
    /// Largest function space `|Y|^|X|` that may be materialized.
    pub functions: u128,
    /// Largest hom-set that may be listed.
    pub hom: u128,
    /// Largest edge set `|V|·|I|·|E|` for the incidence-matrix quiver.
    pub upsilon_star: u128,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            powerset: 16,
            functions: 4096,
            hom: 65536,
            upsilon_star: 4096,
        }
    }
}

impl Bounds {
    /// One number for every limit: function spaces, hom listings and the
    /// incidence-matrix quiver are capped at `n`, power sets at `⌊log₂ n⌋`
    /// elements so that `2^|X| ≤ n`.
    pub fn uniform(n: u128) -> Bounds {
        let log = if n == 0 { 0 } else { 127 - n.leading_zeros() as usize };
        Bounds {
            powerset: log,
            functions: n,
            hom: n,
            upsilon_star: n,
        }
    }

    pub fn check_powerset(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.powerset {
            return Err(Error::Bound {
                what,
                needed: n as u128,
                bound: self.powerset as u128,
            });
        }
        Ok(())
    }

    pub fn check_functions(&self, what: &'static str, needed: u128) -> Result<()> {
        check(what, needed, self.functions)
    }

    pub fn check_hom(&self, what: &'static str, needed: u128) -> Result<()> {
        check(what, needed, self.hom)
    }

    pub fn check_upsilon_star(&self, needed: u128) -> Result<()> {
        check("incidence-matrix quiver edges", needed, self.upsilon_star)
    }
}

fn check(what: &'static str, needed: u128, bound: u128) -> Result<()> {
    if needed > bound {
        Err(Error::Bound { what, needed, bound })
    } else {
        Ok(())
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        if base == 0 {
            return 0;
        }
        acc = acc.saturating_mul(base as u128);
    }
    acc
}
