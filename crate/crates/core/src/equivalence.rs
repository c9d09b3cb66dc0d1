//! Multiplying a label set by a unit of `Z_n` preserves minimality and yields
//! an isomorphic circulant (`u -> alpha * u`). Proportional label sets are
//! related by such a multiplier.
//!
//! Proportionality implies isomorphism but not conversely, so
//! [`canonicalize`] picks a class representative that is not a complete
//! isomorphism invariant.

use num_integer::Integer;

use crate::circulant::ReducedLabelSet;
use crate::error::{Error, Result};

/// A unit `alpha` of `Z_n`, normalized to `alpha <= n/2` since `alpha` and
/// `n - alpha` act identically on reduced label sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiplier {
    n: usize,
    alpha: usize,
}

impl Multiplier {
    pub fn new(n: usize, alpha: usize) -> Result<Self> {
        if alpha == 0 || alpha >= n || alpha.gcd(&n) != 1 {
            return Err(Error::InvalidMultiplier { n, alpha });
        }
        Ok(Multiplier {
            n,
            alpha: alpha.min(n - alpha),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// All normalized multipliers for modulus `n`, ascending.
    pub fn all(n: usize) -> impl Iterator<Item = Multiplier> {
        (1..=n / 2)
            .filter(move |a| a.gcd(&n) == 1)
            .map(move |alpha| Multiplier { n, alpha })
    }

    /// `alpha * u mod n`.
    pub fn apply(&self, u: usize) -> usize {
        self.alpha * u % self.n
    }
}

pub fn transform_labels(ls: &ReducedLabelSet, m: Multiplier) -> Result<ReducedLabelSet> {
    let n = ls.n();
    if m.n != n {
        return Err(Error::ModulusMismatch(n, m.n));
    }
    let image: Vec<usize> = ls
        .gammas()
        .iter()
        .map(|&g| {
            let p = m.apply(g);
            if 2 * p > n {
                n - p
            } else {
                p
            }
        })
        .collect();
    let out = ReducedLabelSet::new(n, image).expect("units permute the nonzero residues");
    debug_assert_eq!(out.gammas().len(), ls.gammas().len());
    Ok(out)
}

/// Smallest normalized multiplier taking `r` to `s`, if any.
pub fn proportional(
    n: usize,
    r: &ReducedLabelSet,
    s: &ReducedLabelSet,
) -> Result<Option<Multiplier>> {
    for other in [r.n(), s.n()] {
        if other != n {
            return Err(Error::ModulusMismatch(n, other));
        }
    }
    if r.gammas().len() != s.gammas().len() {
        return Ok(None);
    }
    for m in Multiplier::all(n) {
        if transform_labels(r, m)? == *s {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Lexicographically least image of `ls` under all multipliers.
pub fn canonicalize(ls: &ReducedLabelSet) -> ReducedLabelSet {
    Multiplier::all(ls.n())
        .map(|m| transform_labels(ls, m).expect("same modulus"))
        .min()
        .unwrap_or_else(|| ls.clone())
}
