//! Low-dimensional slices on which restriction of invariants is injective,
//! and the frozen signs relating our generators to the slice polynomials.
//!
//! The signs were resolved by [`crate::verify::resolve_sign`] over dense
//! integer grids for every `n ≤ 6` and are pinned by regression tests.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat};
use crate::liealg::{AlgebraKind, DualPointA, DualPointC};

/// `f̄` restricted to the `sl(n)` slice equals `F_BAR_SLICE_SIGN · t`.
pub const F_BAR_SLICE_SIGN: i32 = 1;

/// `ψ_k` restricted to the `so(n)` slice equals `PSI_SLICE_SIGN · φ_k`
/// (every `k < ℓ`, and `k = ℓ` for even `n`).
pub const PSI_SLICE_SIGN: i32 = -1;

/// `Φ` restricted to the `so(n)` slice equals `EXOTIC_SLICE_SIGN · φ_ℓ`
/// (odd `n`).
pub const EXOTIC_SLICE_SIGN: i32 = -1;

/// `Φ² = EXOTIC_SQUARE_SIGN · ψ_ℓ` for odd `n`; equivalently `det Y = −ψ_ℓ`.
pub const EXOTIC_SQUARE_SIGN: i32 = -1;

/// Sign `ε_k` with `ψ_k|_h = ε_k φ_k`; the same for every `(n, k)`.
pub fn psi_slice_sign(_n: usize, _k: usize) -> i32 {
    PSI_SLICE_SIGN
}

/// Slice point `y = a₁E₂₁ + ⋯ + a_{n−1}E_{n,n−1}`, `v* = b·e_n*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlicePointIsl {
    #[serde(with = "crate::exactmat::rat_serde::vec")]
    pub a: Vec<Rat>,
    #[serde(with = "crate::exactmat::rat_serde")]
    pub b: Rat,
}

impl SlicePointIsl {
    pub fn n(&self) -> usize {
        self.a.len() + 1
    }
}

pub fn slice_isl(s: &SlicePointIsl) -> DualPointA {
    let n = s.n();
    let mut y = Mat::zeros(n, n);
    for (k, a) in s.a.iter().enumerate() {
        y.set(k + 1, k, a.clone());
    }
    DualPointA {
        y,
        vstar: Mat::basis_row(n, n - 1).scale(&s.b),
    }
}

/// `t = (∏ a_k^k)·bⁿ`.
pub fn t_slice(s: &SlicePointIsl) -> Rat {
    let prod = s
        .a
        .iter()
        .enumerate()
        .fold(Rat::one(), |acc, (k, a)| acc * num::pow(a.clone(), k + 1));
    prod * num::pow(s.b.clone(), s.n())
}

/// Slice point `(z, a₀·e_n*)` with `z` block-diagonal in `2×2` blocks
/// `[[0, a_i], [−a_i, 0]]` followed by one (`n` odd) or two (`n` even)
/// zero rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlicePointSo {
    #[serde(with = "crate::exactmat::rat_serde::vec")]
    pub a: Vec<Rat>,
    #[serde(with = "crate::exactmat::rat_serde")]
    pub a0: Rat,
}

fn check_so_kind(s: &SlicePointSo, kind: AlgebraKind) -> Result<()> {
    if !kind.family().is_orthogonal() {
        return Err(Error::ParityMismatch(format!("{kind} has no orthogonal slice")));
    }
    if s.a.len() != kind.ell() {
        return Err(Error::ParityMismatch(format!(
            "{kind} needs {} block parameters, got {}",
            kind.ell(),
            s.a.len()
        )));
    }
    Ok(())
}

pub fn slice_so(s: &SlicePointSo, kind: AlgebraKind) -> Result<DualPointC> {
    check_so_kind(s, kind)?;
    let n = kind.n();
    let mut z = Mat::zeros(n, n);
    for (i, a) in s.a.iter().enumerate() {
        z.set(2 * i, 2 * i + 1, a.clone());
        z.set(2 * i + 1, 2 * i, -a.clone());
    }
    Ok(DualPointC {
        y: z,
        wstar: Mat::basis_row(n, n - 1).scale(&s.a0),
    })
}

/// Elementary symmetric polynomial `σ_k`.
fn elementary_symmetric(k: usize, xs: &[Rat]) -> Rat {
    // e[j] holds σ_j of the prefix processed so far
    let mut e = vec![Rat::zero(); k + 1];
    e[0] = Rat::one();
    for x in xs {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * x;
            e[j] += add;
        }
    }
    e[k].clone()
}

/// `φ_k` on the slice:
/// `a₀²σ_k(a₁², …, a_ℓ²)` for `k < ℓ` (and `k = ℓ` when `n` is even),
/// `a₀a₁⋯a_ℓ` for `k = ℓ` when `n` is odd.
pub fn phi_slice(k: usize, s: &SlicePointSo, kind: AlgebraKind) -> Result<Rat> {
    check_so_kind(s, kind)?;
    let ell = kind.ell();
    if k > ell {
        return Err(Error::IndexOutOfRange { index: k, max: ell });
    }
    if k == ell && kind.is_odd() {
        return Ok(s.a.iter().fold(s.a0.clone(), |acc, a| acc * a));
    }
    let squares: Vec<Rat> = s.a.iter().map(|a| a * a).collect();
    Ok(&s.a0 * &s.a0 * elementary_symmetric(k, &squares))
}

/// Integer-valued slice parameters.
#[cfg(test)]
fn int_rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| crate::exactmat::rat(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::rat;
    use crate::liealg::Family;

    #[test]
    fn t_examples() {
        let ones = SlicePointIsl {
            a: int_rats(&[1, 1, 1]),
            b: rat(1),
        };
        assert_eq!(t_slice(&ones), rat(1));
        // n = 2: t = a₁b²
        let s = SlicePointIsl {
            a: int_rats(&[3]),
            b: rat(-2),
        };
        assert_eq!(t_slice(&s), rat(12));
        let p = slice_isl(&s);
        assert_eq!(p.y, Mat::from_i64(&[&[0, 0], &[3, 0]]));
        assert_eq!(p.vstar, Mat::from_i64(&[&[0, -2]]));
    }

    #[test]
    fn so_slice_shapes() {
        let odd = AlgebraKind::new(Family::Iso, 5).unwrap();
        let s = SlicePointSo {
            a: int_rats(&[2, 3]),
            a0: rat(1),
        };
        let p = slice_so(&s, odd).unwrap();
        assert!(p.y.is_skew());
        assert_eq!(p.y.get(2, 3), &rat(3));
        assert_eq!(p.wstar, Mat::basis_row(5, 4));
        let even = AlgebraKind::new(Family::Io, 6).unwrap();
        let p = slice_so(&s, even).unwrap();
        assert!(p.y.row(4).is_zero() && p.y.row(5).is_zero());
        let wrong = AlgebraKind::new(Family::Io, 3).unwrap();
        assert!(matches!(slice_so(&s, wrong), Err(Error::ParityMismatch(_))));
        let not_so = AlgebraKind::new(Family::Glvv, 5).unwrap();
        assert!(matches!(slice_so(&s, not_so), Err(Error::ParityMismatch(_))));
    }

    #[test]
    fn phi_examples() {
        let n3 = AlgebraKind::new(Family::Iso, 3).unwrap();
        let s = SlicePointSo {
            a: int_rats(&[5]),
            a0: rat(2),
        };
        assert_eq!(phi_slice(0, &s, n3).unwrap(), rat(4));
        assert_eq!(phi_slice(1, &s, n3).unwrap(), rat(10));
        let n6 = AlgebraKind::new(Family::Io, 6).unwrap();
        let s = SlicePointSo {
            a: int_rats(&[1, 2]),
            a0: rat(3),
        };
        assert_eq!(phi_slice(0, &s, n6).unwrap(), rat(9));
        assert_eq!(phi_slice(1, &s, n6).unwrap(), rat(9 * 5));
        assert_eq!(phi_slice(2, &s, n6).unwrap(), rat(9 * 4));
        assert!(phi_slice(3, &s, n6).is_err());
    }

    #[test]
    fn symmetric_functions() {
        let xs = int_rats(&[1, 2, 3]);
        assert_eq!(elementary_symmetric(0, &xs), rat(1));
        assert_eq!(elementary_symmetric(1, &xs), rat(6));
        assert_eq!(elementary_symmetric(2, &xs), rat(11));
        assert_eq!(elementary_symmetric(3, &xs), rat(6));
    }
}
