//! Normal forms on the open set `Ω̃ = {f(y, w*) ≠ 0}` of `b*` and the
//! projection `π` that classifies `A`-orbits there.

use num::Zero;

use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat};
use crate::liealg::{coad_b, sample_dual_b, DualPointB, GroupElemA, Rng};

use super::{covariant_rows, glvv_invariants};

/// `ℓ₀ = (J, e_n*)` with `J` the lower shift (`e_{i+1}*J = e_i*`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalPair {
    pub j: Mat,
    pub enstar: Mat,
}

pub fn canonical_pair(n: usize) -> CanonicalPair {
    let mut j = Mat::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        j.set(i + 1, i, num::One::one());
    }
    CanonicalPair {
        j,
        enstar: Mat::basis_row(n, n - 1),
    }
}

/// `π(ℓ) = Σ_k F_k(ℓ)e_{n−k}`.
pub fn pi_projection(l: &DualPointB) -> Result<Mat> {
    let f = glvv_invariants(l)?;
    let n = l.n();
    let mut out = vec![Rat::zero(); n];
    for (k, v) in f.into_iter().enumerate() {
        out[n - 1 - k] = v;
    }
    Ok(Mat::col_vector(out))
}

/// Finds the unique `(g, u) ∈ A` moving `ℓ` to `(J, e_n*, g·ξ)`.
///
/// `g` has rows `w*B_{n−1}(y), …, w*`; `u` solves `u·e_n* = J − gyg⁻¹`,
/// whose right side must be supported on the last column. The returned
/// normal form has third component `π(ℓ)`.
pub fn orbit_normalize(l: &DualPointB) -> Result<(GroupElemA, DualPointB)> {
    let n = l.n();
    let g = covariant_rows(&l.restrict_a())?;
    if g.det()?.is_zero() {
        return Err(Error::NotInOpenOrbit);
    }
    let cp = canonical_pair(n);
    let conj = &(&g * &l.y) * &g.inverse()?;
    let residual = &cp.j - &conj;
    for i in 0..n {
        for j in 0..n - 1 {
            assert!(
                residual.get(i, j).is_zero(),
                "J − gyg⁻¹ has support outside the last column at ({i}, {j})"
            );
        }
    }
    let a = GroupElemA {
        g,
        u: residual.col(n - 1),
    };
    let normal = coad_b(&a.to_b(), l)?;
    assert_eq!(normal.y, cp.j, "normalized y is not J");
    assert_eq!(normal.wstar, cp.enstar, "normalized w* is not e_n*");
    Ok((a, normal))
}

/// Random point of `Ω̃`, by rejection on `f(y, w*) = 0`.
pub fn sample_open_point(n: usize, rng: &mut Rng, bound: i64) -> Result<DualPointB> {
    for _ in 0..64 {
        let l = sample_dual_b(n, rng, bound);
        if !covariant_rows(&l.restrict_a())?.det()?.is_zero() {
            return Ok(l);
        }
    }
    Err(Error::DegenerateRng)
}
