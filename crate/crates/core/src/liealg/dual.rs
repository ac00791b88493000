use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::charpoly::Coordinates;
use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat};

fn check_square(y: &Mat) -> Result<usize> {
    if y.is_square() && y.rows() > 0 {
        Ok(y.rows())
    } else {
        Err(Error::NotSquare {
            op: "dual point",
            rows: y.rows(),
            cols: y.cols(),
        })
    }
}

fn check_shape(y: &Mat, m: &Mat, shape: (usize, usize)) -> Result<()> {
    if m.shape() == shape {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            op: "dual point",
            left: y.shape(),
            right: m.shape(),
        })
    }
}

/// A point `(y, v*)` of `a* = gl(n) × V*`, pairing as `tr(yx) + v*u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPointA {
    pub y: Mat,
    pub vstar: Mat,
}

impl DualPointA {
    pub fn new(y: Mat, vstar: Mat) -> Result<Self> {
        let n = check_square(&y)?;
        check_shape(&y, &vstar, (1, n))?;
        Ok(DualPointA { y, vstar })
    }

    /// A point of `sl(n) × V*`; rejects `tr(y) ≠ 0`.
    pub fn traceless(y: Mat, vstar: Mat) -> Result<Self> {
        let p = DualPointA::new(y, vstar)?;
        if !p.y.trace().is_zero() {
            return Err(Error::NotTraceless);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.y.rows()
    }

    /// Representative of the restriction to `sl(n) ⋉ V`: `y − (tr y / n)I`,
    /// the traceless matrix inducing the same form on `sl(n)`.
    pub fn traceless_part(&self) -> DualPointA {
        let n = self.n();
        let shift = self.y.trace() / Rat::from_integer((n as i64).into());
        DualPointA {
            y: &self.y - &Mat::identity(n).scale(&shift),
            vstar: self.vstar.clone(),
        }
    }

    /// The same form seen in `b*` as `(y, v*, 0)`.
    pub fn to_b(&self) -> DualPointB {
        DualPointB {
            y: self.y.clone(),
            wstar: self.vstar.clone(),
            xi: Mat::zeros(self.n(), 1),
        }
    }
}

/// A point `(y, w*, ξ)` of `b* = gl(n) × V* × V`, pairing as
/// `tr(yx) + w*u + v*ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPointB {
    pub y: Mat,
    pub wstar: Mat,
    pub xi: Mat,
}

impl DualPointB {
    pub fn new(y: Mat, wstar: Mat, xi: Mat) -> Result<Self> {
        let n = check_square(&y)?;
        check_shape(&y, &wstar, (1, n))?;
        check_shape(&y, &xi, (n, 1))?;
        Ok(DualPointB { y, wstar, xi })
    }

    pub fn n(&self) -> usize {
        self.y.rows()
    }

    /// The `a*` component `(y, w*)`.
    pub fn restrict_a(&self) -> DualPointA {
        DualPointA {
            y: self.y.clone(),
            vstar: self.wstar.clone(),
        }
    }
}

/// A point `(y, w*)` of `c*` with `y` skew; inside `b*` it is
/// `(y, w*, −w*ᵀ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPointC {
    pub y: Mat,
    pub wstar: Mat,
}

impl DualPointC {
    pub fn new(y: Mat, wstar: Mat) -> Result<Self> {
        let n = check_square(&y)?;
        check_shape(&y, &wstar, (1, n))?;
        if !y.is_skew() {
            return Err(Error::NotSkew);
        }
        Ok(DualPointC { y, wstar })
    }

    pub fn n(&self) -> usize {
        self.y.rows()
    }

    pub fn to_b(&self) -> DualPointB {
        DualPointB {
            y: self.y.clone(),
            wstar: self.wstar.clone(),
            xi: -&self.wstar.transpose(),
        }
    }

    /// Projects a point of `b*` lying on `c*` back; errors if it does not lie
    /// there.
    pub fn from_b(p: &DualPointB) -> Result<Self> {
        if p.xi != -&p.wstar.transpose() {
            return Err(Error::Parse("point is not on c* (ξ ≠ −w*ᵀ)".into()));
        }
        DualPointC::new(p.y.clone(), p.wstar.clone())
    }
}

impl Coordinates for DualPointA {
    fn coords(&self) -> Vec<Rat> {
        let mut c = self.y.coords();
        c.extend(self.vstar.coords());
        c
    }

    fn with_coords(&self, c: &[Rat]) -> Self {
        let n = self.n();
        DualPointA {
            y: self.y.with_coords(&c[..n * n]),
            vstar: self.vstar.with_coords(&c[n * n..]),
        }
    }
}

impl Coordinates for DualPointB {
    fn coords(&self) -> Vec<Rat> {
        let mut c = self.y.coords();
        c.extend(self.wstar.coords());
        c.extend(self.xi.coords());
        c
    }

    fn with_coords(&self, c: &[Rat]) -> Self {
        let n = self.n();
        DualPointB {
            y: self.y.with_coords(&c[..n * n]),
            wstar: self.wstar.with_coords(&c[n * n..n * n + n]),
            xi: self.xi.with_coords(&c[n * n + n..]),
        }
    }
}

/// Coordinates: `y_ij` for `i < j` in lexicographic order, then `w*`.
impl Coordinates for DualPointC {
    fn coords(&self) -> Vec<Rat> {
        let n = self.n();
        let mut c = Vec::with_capacity(n * (n - 1) / 2 + n);
        for i in 0..n {
            for j in i + 1..n {
                c.push(self.y.get(i, j).clone());
            }
        }
        c.extend(self.wstar.coords());
        c
    }

    fn with_coords(&self, c: &[Rat]) -> Self {
        let n = self.n();
        let mut y = Mat::zeros(n, n);
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                y.set(i, j, c[idx].clone());
                y.set(j, i, -c[idx].clone());
                idx += 1;
            }
        }
        DualPointC {
            y,
            wstar: self.wstar.with_coords(&c[idx..]),
        }
    }
}

impl fmt::Display for DualPointA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(y = {}, v* = {})", self.y, self.vstar)
    }
}

impl fmt::Display for DualPointB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(y = {}, w* = {}, xi = {})", self.y, self.wstar, self.xi)
    }
}

impl fmt::Display for DualPointC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(y = {}, w* = {})", self.y, self.wstar)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::rat;

    #[test]
    fn constructors_validate() {
        assert!(DualPointA::new(Mat::identity(2), Mat::zeros(1, 3)).is_err());
        assert_eq!(
            DualPointA::traceless(Mat::identity(2), Mat::zeros(1, 2)),
            Err(Error::NotTraceless)
        );
        assert!(DualPointB::new(Mat::identity(2), Mat::zeros(1, 2), Mat::zeros(1, 2)).is_err());
        assert_eq!(DualPointC::new(Mat::identity(2), Mat::zeros(1, 2)), Err(Error::NotSkew));
    }

    #[test]
    fn skew_coordinates_round_trip() {
        let y = Mat::from_i64(&[&[0, 1, 2], &[-1, 0, 3], &[-2, -3, 0]]);
        let p = DualPointC::new(y, Mat::from_i64(&[&[4, 5, 6]])).unwrap();
        let c = p.coords();
        assert_eq!(c, (1..=6).map(rat).collect::<Vec<_>>());
        assert_eq!(p.with_coords(&c), p);
        assert_eq!(DualPointC::from_b(&p.to_b()).unwrap(), p);
    }
}
