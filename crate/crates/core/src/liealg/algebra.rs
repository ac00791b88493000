//! Brackets on `b`, the involution `θ`, the embedding `M` and the index.

use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat};

use super::dual::DualPointB;
use super::sample::{sample_dual_a, sample_dual_b, sample_dual_c, sample_dual_isl, Rng, DEFAULT_BOUND};
use super::{AlgebraKind, Family};

/// An element `(x, u, v*)` of `b = gl(n) × V × V*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BElem {
    pub x: Mat,
    pub u: Mat,
    pub vstar: Mat,
}

impl BElem {
    pub fn new(x: Mat, u: Mat, vstar: Mat) -> Result<Self> {
        let n = x.rows();
        if !x.is_square() || u.shape() != (n, 1) || vstar.shape() != (1, n) {
            return Err(Error::DimensionMismatch {
                op: "b element",
                left: x.shape(),
                right: (u.rows(), vstar.cols()),
            });
        }
        Ok(BElem { x, u, vstar })
    }

    pub fn zero(n: usize) -> Self {
        BElem {
            x: Mat::zeros(n, n),
            u: Mat::zeros(n, 1),
            vstar: Mat::zeros(1, n),
        }
    }

    /// `γ(x, u) = (x, u, −uᵀ)`.
    pub fn gamma(x: Mat, u: Mat) -> Result<Self> {
        let vstar = -&u.transpose();
        BElem::new(x, u, vstar)
    }

    pub fn n(&self) -> usize {
        self.x.rows()
    }

    pub fn add(&self, rhs: &BElem) -> BElem {
        BElem {
            x: &self.x + &rhs.x,
            u: &self.u + &rhs.u,
            vstar: &self.vstar + &rhs.vstar,
        }
    }

    pub fn scale(&self, c: &Rat) -> BElem {
        BElem {
            x: self.x.scale(c),
            u: self.u.scale(c),
            vstar: self.vstar.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.u.is_zero() && self.vstar.is_zero()
    }

    fn same_n(&self, rhs: &BElem) -> Result<()> {
        if self.n() == rhs.n() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                op: "bracket",
                left: self.x.shape(),
                right: rhs.x.shape(),
            })
        }
    }
}

/// `[(x₁,u₁,v₁*), (x₂,u₂,v₂*)] = ([x₁,x₂], x₁u₂ − x₂u₁, v₁*x₂ − v₂*x₁)`.
pub fn bracket_b(a: &BElem, b: &BElem) -> Result<BElem> {
    a.same_n(b)?;
    Ok(BElem {
        x: a.x.commutator(&b.x)?,
        u: &(&a.x * &b.u) - &(&b.x * &a.u),
        vstar: &(&a.vstar * &b.x) - &(&b.vstar * &a.x),
    })
}

/// `θ(x, u, v*) = −(xᵀ, v*ᵀ, uᵀ)`.
pub fn theta(a: &BElem) -> BElem {
    BElem {
        x: -&a.x.transpose(),
        u: -&a.vstar.transpose(),
        vstar: -&a.u.transpose(),
    }
}

/// `M(x, u, v*) = [[x, u], [v*, 0]]` in `gl(n+1)`.
pub fn embed_m(a: &BElem) -> Mat {
    Mat::bordered(&a.x, &a.u, &a.vstar, &Rat::zero()).expect("b element shapes")
}

/// Bracket of `k = g₀ ⋉ g₁` on `gl(n+1)`, where `g₀` is the block-diagonal
/// part (`gl(n) × C`), `g₁` the border, and `[g₁, g₁] = 0`.
pub fn contracted_bracket(a: &Mat, b: &Mat) -> Result<Mat> {
    if !a.is_square() || a.shape() != b.shape() || a.rows() == 0 {
        return Err(Error::DimensionMismatch {
            op: "contracted bracket",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let (a0, a1) = split_symmetric(a);
    let (b0, b1) = split_symmetric(b);
    let even = a0.commutator(&b0)?;
    let mixed = a0.commutator(&b1)?.checked_add(&a1.commutator(&b0)?)?;
    even.checked_add(&mixed)
}

fn split_symmetric(m: &Mat) -> (Mat, Mat) {
    let k = m.rows() - 1;
    let mut even = m.clone();
    let mut odd = Mat::zeros(k + 1, k + 1);
    for i in 0..k {
        odd.set(i, k, m.get(i, k).clone());
        odd.set(k, i, m.get(k, i).clone());
        even.set(i, k, Rat::zero());
        even.set(k, i, Rat::zero());
    }
    (even, odd)
}

/// `⟨ℓ, (x,u,v*)⟩ = tr(yx) + w*u + v*ξ`.
pub fn pairing_b(l: &DualPointB, a: &BElem) -> Rat {
    (&l.y * &a.x).trace() + (&l.wstar * &a.u).get(0, 0) + (&a.vstar * &l.xi).get(0, 0)
}

/// Fixed basis of the algebra, as elements of `b`.
///
/// `gl(n)`: `E_ij` row-major. `sl(n)`: off-diagonal `E_ij` row-major, then
/// `E_ii − E_{i+1,i+1}`. `so(n)`: `E_ij − E_ji` for `i < j`, lexicographic.
/// Then `e_1..e_n` (through `γ` for `so(n) ⋉ V`), then `e_1*..e_n*` for `b`.
pub fn basis(kind: AlgebraKind) -> Vec<BElem> {
    let n = kind.n();
    let lin = |x: Mat| BElem {
        x,
        u: Mat::zeros(n, 1),
        vstar: Mat::zeros(1, n),
    };
    let mut out = Vec::with_capacity(kind.dim());
    match kind.family() {
        Family::Aff | Family::Glvv => {
            for i in 0..n {
                for j in 0..n {
                    out.push(lin(Mat::unit(n, i, j)));
                }
            }
        }
        Family::Isl => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        out.push(lin(Mat::unit(n, i, j)));
                    }
                }
            }
            for i in 0..n.saturating_sub(1) {
                out.push(lin(&Mat::unit(n, i, i) - &Mat::unit(n, i + 1, i + 1)));
            }
        }
        Family::Io | Family::Iso => {
            for i in 0..n {
                for j in i + 1..n {
                    out.push(lin(&Mat::unit(n, i, j) - &Mat::unit(n, j, i)));
                }
            }
        }
    }
    for i in 0..n {
        let u = Mat::basis_col(n, i);
        out.push(match kind.family() {
            Family::Io | Family::Iso => BElem::gamma(Mat::zeros(n, n), u).expect("shapes"),
            _ => BElem {
                x: Mat::zeros(n, n),
                u,
                vstar: Mat::zeros(1, n),
            },
        });
    }
    if kind.family() == Family::Glvv {
        for i in 0..n {
            out.push(BElem {
                x: Mat::zeros(n, n),
                u: Mat::zeros(n, 1),
                vstar: Mat::basis_row(n, i),
            });
        }
    }
    debug_assert_eq!(out.len(), kind.dim());
    out
}

/// The skew matrix `ℓ([e_i, e_j])` over `basis`.
pub fn commutator_form(basis: &[BElem], l: &DualPointB) -> Result<Mat> {
    let d = basis.len();
    let mut m = Mat::zeros(d, d);
    for i in 0..d {
        for j in i + 1..d {
            let v = pairing_b(l, &bracket_b(&basis[i], &basis[j])?);
            m.set(j, i, -v.clone());
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Rank of the commutator form of `kind` at `l`.
pub fn form_rank(kind: AlgebraKind, l: &DualPointB) -> Result<usize> {
    Ok(commutator_form(&basis(kind), l)?.rank())
}

/// `dim − max rank` of the commutator form over `samples` random rational
/// forms with entries in `[−3, 3]`.
pub fn index_of(kind: AlgebraKind, samples: usize, rng: &mut Rng) -> Result<usize> {
    if samples == 0 {
        return Err(Error::InvalidConfig("index needs at least one sample".into()));
    }
    let n = kind.n();
    let b = basis(kind);
    let mut best = 0;
    for _ in 0..samples {
        let l = match kind.family() {
            Family::Aff => sample_dual_a(n, rng, DEFAULT_BOUND).to_b(),
            Family::Isl => sample_dual_isl(n, rng, DEFAULT_BOUND).to_b(),
            Family::Glvv => sample_dual_b(n, rng, DEFAULT_BOUND),
            Family::Io | Family::Iso => sample_dual_c(n, rng, DEFAULT_BOUND).to_b(),
        };
        best = best.max(commutator_form(&b, &l)?.rank());
    }
    Ok(kind.dim() - best)
}

impl BElem {
    /// Is this element in `γ(c)`, i.e. `x` skew and `v* = −uᵀ`?
    pub fn in_gamma_c(&self) -> bool {
        self.x.is_skew() && self.vstar == -&self.u.transpose()
    }
}

impl fmt::Display for BElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x = {}, u = {}, v* = {})", self.x, self.u, self.vstar)
    }
}
