//! Group elements and coadjoint actions.
//!
//! `B = GL(n) ⋉ (V ⊕ V*)` has law
//! `(g₁,u₁,v₁*)(g₂,u₂,v₂*) = (g₁g₂, u₁ + g₁u₂, v₁* + v₂*g₁⁻¹)`, and every
//! element factors as `(g,u,v*) = (e,u,0)·(e,0,v*)·(g,0,0)`. The coadjoint
//! action is the matching composite of
//!
//! * `Ad*(g,0,0)(y,w*,ξ) = (gyg⁻¹, w*g⁻¹, gξ)`
//! * `Ad*(e,0,v*)(y,w*,ξ) = (y − ξv*, w*, ξ)`
//! * `Ad*(e,u,0)(y,w*,ξ) = (y + uw*, w*, ξ)`
//!
//! The affine group `A` is the subgroup `v* = 0`; `IO(n)` acts on `c*`
//! through the elements `(g, u, −uᵀ)` with `g` orthogonal.

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::Mat;

use super::dual::{DualPointA, DualPointB, DualPointC};

fn check_invertible(g: &Mat) -> Result<()> {
    if !g.is_square() {
        return Err(Error::NotSquare {
            op: "group element",
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    if g.det()?.is_zero() {
        return Err(Error::Singular);
    }
    Ok(())
}

/// `(g, u)` in `A = GL(n) ⋉ V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElemA {
    pub g: Mat,
    pub u: Mat,
}

impl GroupElemA {
    pub fn new(g: Mat, u: Mat) -> Result<Self> {
        check_invertible(&g)?;
        if u.shape() != (g.rows(), 1) {
            return Err(Error::DimensionMismatch {
                op: "group element",
                left: g.shape(),
                right: u.shape(),
            });
        }
        Ok(GroupElemA { g, u })
    }

    pub fn identity(n: usize) -> Self {
        GroupElemA {
            g: Mat::identity(n),
            u: Mat::zeros(n, 1),
        }
    }

    pub fn linear(g: Mat) -> Result<Self> {
        let n = g.rows();
        GroupElemA::new(g, Mat::zeros(n, 1))
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }

    pub fn compose(&self, rhs: &GroupElemA) -> GroupElemA {
        GroupElemA {
            g: &self.g * &rhs.g,
            u: &self.u + &(&self.g * &rhs.u),
        }
    }

    pub fn inverse(&self) -> Result<GroupElemA> {
        let gi = self.g.inverse()?;
        let u = -&(&gi * &self.u);
        Ok(GroupElemA { g: gi, u })
    }

    pub fn is_orthogonal(&self) -> bool {
        &self.g.transpose() * &self.g == Mat::identity(self.n())
    }

    /// `(g, u, 0)` in `B`.
    pub fn to_b(&self) -> GroupElemB {
        GroupElemB {
            g: self.g.clone(),
            u: self.u.clone(),
            vstar: Mat::zeros(1, self.n()),
        }
    }

    /// `(g, u, −uᵀ)` in `B`, the image of an `IO(n)` element.
    pub fn to_b_orthogonal(&self) -> GroupElemB {
        GroupElemB {
            g: self.g.clone(),
            u: self.u.clone(),
            vstar: -&self.u.transpose(),
        }
    }
}

/// `(g, u, v*)` in `B = GL(n) ⋉ (V ⊕ V*)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupElemB {
    pub g: Mat,
    pub u: Mat,
    pub vstar: Mat,
}

impl GroupElemB {
    pub fn new(g: Mat, u: Mat, vstar: Mat) -> Result<Self> {
        let a = GroupElemA::new(g, u)?;
        if vstar.shape() != (1, a.n()) {
            return Err(Error::DimensionMismatch {
                op: "group element",
                left: a.g.shape(),
                right: vstar.shape(),
            });
        }
        Ok(GroupElemB {
            g: a.g,
            u: a.u,
            vstar,
        })
    }

    pub fn identity(n: usize) -> Self {
        GroupElemA::identity(n).to_b()
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }

    pub fn compose(&self, rhs: &GroupElemB) -> Result<GroupElemB> {
        let gi = self.g.inverse()?;
        Ok(GroupElemB {
            g: &self.g * &rhs.g,
            u: &self.u + &(&self.g * &rhs.u),
            vstar: &self.vstar + &(&rhs.vstar * &gi),
        })
    }

    pub fn inverse(&self) -> Result<GroupElemB> {
        let gi = self.g.inverse()?;
        Ok(GroupElemB {
            u: -&(&gi * &self.u),
            vstar: -&(&self.vstar * &self.g),
            g: gi,
        })
    }
}

/// A sampled group element of whichever group acts on the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupElem {
    A(GroupElemA),
    B(GroupElemB),
}

/// `Ad*(g, u)(y, v*) = (gyg⁻¹ + u·v*g⁻¹, v*g⁻¹)`.
pub fn coad_a(a: &GroupElemA, l: &DualPointA) -> Result<DualPointA> {
    check_action_shape(a.n(), l.n())?;
    let gi = a.g.inverse()?;
    let vstar = &l.vstar * &gi;
    let y = &(&(&a.g * &l.y) * &gi) + &(&a.u * &vstar);
    Ok(DualPointA { y, vstar })
}

/// Coadjoint action of `SL(n) ⋉ V` on `sl(n)* × V*`, with `sl(n)*`
/// realized as traceless matrices: [`coad_a`] followed by removal of the
/// trace `v*g⁻¹u` that the translation part introduces.
pub fn coad_isl(a: &GroupElemA, l: &DualPointA) -> Result<DualPointA> {
    if !a.g.det()?.is_one() {
        return Err(Error::InvalidConfig("group element is not in SL(n)".into()));
    }
    Ok(coad_a(a, l)?.traceless_part())
}

/// `Ad*(g,0,0)`.
pub fn coad_b_linear(g: &Mat, l: &DualPointB) -> Result<DualPointB> {
    check_action_shape(g.rows(), l.n())?;
    let gi = g.inverse()?;
    Ok(DualPointB {
        y: &(g * &l.y) * &gi,
        wstar: &l.wstar * &gi,
        xi: g * &l.xi,
    })
}

/// `Ad*(e,0,v*)`: `y ↦ y − ξv*`.
pub fn coad_b_dual_translation(vstar: &Mat, l: &DualPointB) -> Result<DualPointB> {
    check_action_shape(vstar.cols(), l.n())?;
    Ok(DualPointB {
        y: &l.y - &(&l.xi * vstar),
        wstar: l.wstar.clone(),
        xi: l.xi.clone(),
    })
}

/// `Ad*(e,u,0)`: `y ↦ y + uw*`.
pub fn coad_b_translation(u: &Mat, l: &DualPointB) -> Result<DualPointB> {
    check_action_shape(u.rows(), l.n())?;
    Ok(DualPointB {
        y: &l.y + &(u * &l.wstar),
        wstar: l.wstar.clone(),
        xi: l.xi.clone(),
    })
}

/// Coadjoint action of `B` on `b*`.
pub fn coad_b(b: &GroupElemB, l: &DualPointB) -> Result<DualPointB> {
    let l = coad_b_linear(&b.g, l)?;
    let l = coad_b_dual_translation(&b.vstar, &l)?;
    coad_b_translation(&b.u, &l)
}

/// Coadjoint action of `IO(n)` on `c*`: act by `(g, u, −uᵀ)` in `b*` and
/// read the result back on `c*`.
pub fn coad_c(a: &GroupElemA, l: &DualPointC) -> Result<DualPointC> {
    check_action_shape(a.n(), l.n())?;
    if !a.is_orthogonal() {
        return Err(Error::NotOrthogonal);
    }
    let image = coad_b(&a.to_b_orthogonal(), &l.to_b())?;
    debug_assert_eq!(image.xi, -&image.wstar.transpose());
    Ok(DualPointC {
        y: image.y,
        wstar: image.wstar,
    })
}

fn check_action_shape(group_n: usize, point_n: usize) -> Result<()> {
    if group_n == point_n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op: "coadjoint action",
            left: (group_n, group_n),
            right: (point_n, point_n),
        })
    }
}
