//! The inhomogeneous Lie algebras as coordinate spaces: dual points, group
//! elements with their coadjoint actions, brackets, the index, the
//! involution `θ` and the embedding `M` into `gl(n+1)`.
//!
//! Every algebra is realized inside `b = gl(n) ⋉ (V ⊕ V*)`:
//! the affine algebra `a` as the triples `(x, u, 0)`, `sl(n) ⋉ V` as the
//! traceless ones, and `c = so(n) ⋉ V` through `γ(x, u) = (x, u, −uᵀ)`.

mod algebra;
mod dual;
mod group;
mod sample;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use algebra::{
    basis, bracket_b, commutator_form, contracted_bracket, embed_m, form_rank, index_of, pairing_b,
    theta, BElem,
};
pub use dual::{DualPointA, DualPointB, DualPointC};
pub use group::{
    coad_a, coad_b, coad_isl, coad_b_dual_translation, coad_b_linear, coad_b_translation, coad_c, GroupElem,
    GroupElemA, GroupElemB,
};
pub use sample::{
    cayley, random_matrix, random_skew, reflection, sample_dual_a, sample_dual_b, sample_dual_c,
    sample_dual_isl, sample_gl, sample_group, sample_o, sample_so, sample_sl, Rng, DEFAULT_BOUND,
};

/// Which of the inhomogeneous algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `gl(n) ⋉ V`, the affine algebra.
    Aff,
    /// `sl(n) ⋉ V`.
    Isl,
    /// `gl(n) ⋉ (V ⊕ V*)`.
    Glvv,
    /// `so(n) ⋉ V` with the full orthogonal group `O(n)`.
    Io,
    /// `so(n) ⋉ V` with `SO(n)`.
    Iso,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Aff, Family::Isl, Family::Glvv, Family::Io, Family::Iso];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Aff => "aff",
            Family::Isl => "isl",
            Family::Glvv => "glvv",
            Family::Io => "io",
            Family::Iso => "iso",
        }
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(self, Family::Io | Family::Iso)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

/// An algebra family at a fixed size `n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraKind {
    family: Family,
    n: usize,
}

impl AlgebraKind {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig("n must be at least 1".into()));
        }
        Ok(AlgebraKind { family, n })
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// `ℓ` with `n = 2ℓ + 1` or `n = 2ℓ + 2`.
    pub fn ell(self) -> usize {
        (self.n - 1) / 2
    }

    pub fn is_odd(self) -> bool {
        self.n % 2 == 1
    }

    /// Dimension of the algebra.
    pub fn dim(self) -> usize {
        let n = self.n;
        match self.family {
            Family::Aff => n * n + n,
            Family::Isl => n * n - 1 + n,
            Family::Glvv => n * n + 2 * n,
            Family::Io | Family::Iso => n * (n - 1) / 2 + n,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("so".parse::<Family>().is_err());
    }

    #[test]
    fn ell_parity() {
        for (n, ell) in [(1, 0), (2, 0), (3, 1), (4, 1), (5, 2), (6, 2)] {
            assert_eq!(AlgebraKind::new(Family::Io, n).unwrap().ell(), ell);
        }
        assert!(AlgebraKind::new(Family::Aff, 0).is_err());
    }
}
