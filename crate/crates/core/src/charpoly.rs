//! Characteristic-polynomial coefficients, their trace-form gradients and
//! exact directional derivatives.
//!
//! Coefficients follow the convention
//! `det(tI − x) = tⁿ − p₁(x)tⁿ⁻¹ − ⋯ − pₙ(x)`, and `B_k(x)` is the gradient of
//! `p_{k+1}` for the trace form, `B_k(x) = x^k − p₁x^{k−1} − ⋯ − p_k·I`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{rat, Mat, Rat};

/// `p_1..p_n` and `B_0..B_{n−1}` of a square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharData {
    n: usize,
    p: Vec<Rat>,
    b: Vec<Mat>,
}

impl CharData {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `p_k` for `1 ≤ k`; coefficients beyond `n` are zero.
    pub fn p(&self, k: usize) -> Rat {
        assert!(k >= 1, "p_k is indexed from 1");
        self.p.get(k - 1).cloned().unwrap_or_else(Rat::zero)
    }

    /// All coefficients `p_1..p_n`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.p
    }

    /// `B_k` for `0 ≤ k ≤ n − 1`.
    pub fn b(&self, k: usize) -> Result<&Mat> {
        self.b.get(k).ok_or(Error::IndexOutOfRange {
            index: k,
            max: self.n.saturating_sub(1),
        })
    }

    pub fn gradients(&self) -> &[Mat] {
        &self.b
    }

    /// `x·B_{n−1}(x) − p_n(x)·I`, which vanishes by Cayley–Hamilton.
    pub fn cayley_hamilton_residue(&self, x: &Mat) -> Mat {
        let n = self.n;
        let top = x * &self.b[n - 1];
        &top - &Mat::identity(n).scale(&self.p(n))
    }
}

/// Runs the trace recursion `p_k = tr(x·B_{k−1})/k`, `B_k = x·B_{k−1} − p_k·I`.
pub fn char_data(x: &Mat) -> Result<CharData> {
    if !x.is_square() || x.rows() == 0 {
        return Err(Error::NotSquare {
            op: "char_data",
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    let n = x.rows();
    let id = Mat::identity(n);
    let mut b = Vec::with_capacity(n);
    let mut p = Vec::with_capacity(n);
    b.push(id.clone());
    for k in 1..=n {
        let xb = x * &b[k - 1];
        let pk = xb.trace() / rat(k as i64);
        if k < n {
            b.push(&xb - &id.scale(&pk));
        }
        p.push(pk);
    }
    Ok(CharData { n, p, b })
}

/// `p_k(x)`; zero for `k > n`.
pub fn char_coeff(x: &Mat, k: usize) -> Result<Rat> {
    Ok(char_data(x)?.p(k))
}

/// A point of a finite-dimensional rational vector space with a fixed
/// coordinate system.
pub trait Coordinates: Sized {
    fn coords(&self) -> Vec<Rat>;
    /// Rebuilds a point shaped like `self` from coordinates.
    fn with_coords(&self, coords: &[Rat]) -> Self;

    fn dim(&self) -> usize {
        self.coords().len()
    }

    /// `self + t·dir`.
    fn along(&self, dir: &Self, t: &Rat) -> Self {
        let c: Vec<Rat> = self
            .coords()
            .iter()
            .zip(dir.coords())
            .map(|(a, d)| a + t * d)
            .collect();
        self.with_coords(&c)
    }

    /// The `i`-th coordinate direction.
    fn unit_direction(&self, i: usize) -> Self {
        let mut c = vec![Rat::zero(); self.dim()];
        c[i] = Rat::one();
        self.with_coords(&c)
    }
}

impl Coordinates for Mat {
    fn coords(&self) -> Vec<Rat> {
        self.entries().to_vec()
    }

    fn with_coords(&self, coords: &[Rat]) -> Self {
        Mat::from_vec(self.rows(), self.cols(), coords.to_vec()).expect("coordinate count")
    }
}

/// Exact coefficient of `t^order` in `t ↦ f(base + t·dir)`.
///
/// Evaluates at the nodes `t = 0, 1, …, degree_bound` and applies the
/// inverse Vandermonde row for `order` (cached per thread). `degree_bound`
/// must be at least the true degree; an underestimate is not detectable.
/// Bounds used in this crate: `deg f = n(n+1)/2`, `deg F_k = k + 2`,
/// `deg ψ_k = 2k + 2`, `deg p_k = k`.
pub fn directional_coeff<P, F>(
    f: F,
    base: &P,
    dir: &P,
    order: usize,
    degree_bound: usize,
) -> Result<Rat>
where
    P: Coordinates,
    F: Fn(&P) -> Result<Rat>,
{
    if order > degree_bound {
        return Ok(Rat::zero());
    }
    let weights = interpolation_weights(order, degree_bound)?;
    let mut acc = Rat::zero();
    for (t, w) in weights.iter().enumerate() {
        if !w.is_zero() {
            acc += w * f(&base.along(dir, &rat(t as i64)))?;
        }
    }
    Ok(acc)
}

thread_local! {
    static WEIGHTS: RefCell<HashMap<(usize, usize), Rc<Vec<Rat>>>> = RefCell::new(HashMap::new());
}

/// Row `order` of the inverse Vandermonde matrix on the nodes
/// `0, 1, …, degree_bound`: the coefficient of `t^order` of a polynomial of
/// degree at most `degree_bound` is the dot product of this row with its
/// values at the nodes.
fn interpolation_weights(order: usize, degree_bound: usize) -> Result<Rc<Vec<Rat>>> {
    if let Some(w) = WEIGHTS.with(|c| c.borrow().get(&(order, degree_bound)).cloned()) {
        return Ok(w);
    }
    let nodes = degree_bound + 1;
    let mut vandermonde = Mat::zeros(nodes, nodes);
    for t in 0..nodes {
        let mut pow = Rat::one();
        for j in 0..nodes {
            vandermonde.set(t, j, pow.clone());
            pow *= rat(t as i64);
        }
    }
    let inv = vandermonde.inverse()?;
    let mut rows = Vec::with_capacity(nodes);
    for k in 0..nodes {
        rows.push(Rc::new(inv.row(k).into_entries()));
    }
    let w = rows[order].clone();
    WEIGHTS.with(|c| {
        let mut cache = c.borrow_mut();
        for (k, row) in rows.into_iter().enumerate() {
            cache.insert((k, degree_bound), row);
        }
    });
    Ok(w)
}

/// Gradient of `f` at `base` in the coordinate basis: one first-order
/// directional coefficient per coordinate.
pub fn gradient<P, F>(f: F, base: &P, degree_bound: usize) -> Result<Vec<Rat>>
where
    P: Coordinates,
    F: Fn(&P) -> Result<Rat>,
{
    (0..base.dim())
        .map(|i| directional_coeff(&f, base, &base.unit_direction(i), 1, degree_bound))
        .collect()
}

/// One side-by-side comparison of a bordered-matrix identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityWitness {
    /// `"p1"`, `"k=<k>"` for the middle family or `"top"` for `p_{n+1}`.
    pub family: String,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Outcome of [`bordered_char_identities`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderedCheck {
    pub checks: usize,
    pub first_failure: Option<IdentityWitness>,
}

impl BorderedCheck {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks the characteristic coefficients of `X = [[y, v], [w*, a]]` against
/// those of `y`:
///
/// * `p₁(X) = p₁(y) + a`
/// * `p_{k+2}(X) = p_{k+2}(y) − a·p_{k+1}(y) + w*B_k(y)v` for `0 ≤ k ≤ n − 2`
/// * `p_{n+1}(X) = −a·p_n(y) + w*B_{n−1}(y)v`
pub fn bordered_char_identities(y: &Mat, v: &Mat, wstar: &Mat, a: &Rat) -> Result<BorderedCheck> {
    let x = Mat::bordered(y, v, wstar, a)?;
    let n = y.rows();
    let cy = char_data(y)?;
    let cx = char_data(&x)?;
    let mut checks = 0;
    let mut first_failure = None;
    let mut record = |family: String, lhs: Rat, rhs: Rat| {
        checks += 1;
        if lhs != rhs && first_failure.is_none() {
            first_failure = Some(IdentityWitness { family, lhs, rhs });
        }
    };
    record("p1".into(), cx.p(1), cy.p(1) + a);
    for k in 0..n {
        let wbv = (&(wstar * cy.b(k)?) * v).get(0, 0).clone();
        // p_{n+1}(y) = 0, so the top identity is the k = n − 1 member.
        let rhs = cy.p(k + 2) - a * cy.p(k + 1) + wbv;
        let family = if k + 1 == n { "top".to_string() } else { format!("k={k}") };
        record(family, cx.p(k + 2), rhs);
    }
    Ok(BorderedCheck {
        checks,
        first_failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::frac;

    #[test]
    fn nilpotent() {
        let x = Mat::from_i64(&[&[0, 1], &[0, 0]]);
        let cd = char_data(&x).unwrap();
        assert_eq!(cd.coeffs(), &[rat(0), rat(0)]);
        assert_eq!(cd.b(1).unwrap(), &x);
    }

    #[test]
    fn diagonal_and_identity() {
        // det(tI − diag(2,3)) = t² − 5t + 6
        let cd = char_data(&Mat::diag(&[rat(2), rat(3)])).unwrap();
        assert_eq!(cd.p(1), rat(5));
        assert_eq!(cd.p(2), rat(-6));
        assert_eq!(cd.b(1).unwrap(), &Mat::diag(&[rat(-3), rat(-2)]));
        // det(tI − I) = t² − 2t + 1
        let cd = char_data(&Mat::identity(2)).unwrap();
        assert_eq!((cd.p(1), cd.p(2)), (rat(2), rat(-1)));
        assert_eq!(cd.p(3), rat(0));
        assert!(cd.b(2).is_err());
    }

    #[test]
    fn non_square_rejected() {
        assert!(char_data(&Mat::zeros(2, 3)).is_err());
    }

    #[test]
    fn directional_coefficients() {
        for n in 1..=4 {
            let zero = Mat::zeros(n, n);
            let c = directional_coeff(|x| char_coeff(x, 1), &zero, &Mat::identity(n), 1, 1).unwrap();
            assert_eq!(c, rat(n as i64));
        }
        // p_2(tI₂) = −t²
        let c = directional_coeff(|x| char_coeff(x, 2), &Mat::zeros(2, 2), &Mat::identity(2), 2, 2)
            .unwrap();
        assert_eq!(c, rat(-1));
        // orders past the bound vanish
        let c = directional_coeff(|x| char_coeff(x, 2), &Mat::zeros(2, 2), &Mat::identity(2), 3, 2)
            .unwrap();
        assert_eq!(c, rat(0));
    }

    #[test]
    fn bordered_one_by_one() {
        // n = 1: p₂(X) = −det X = −a·y₁₁ + w·v
        let (y, v, w, a) = (rat(3), rat(5), rat(-2), frac(1, 2));
        let x = Mat::from_rows(vec![vec![y.clone(), v.clone()], vec![w.clone(), a.clone()]]).unwrap();
        assert_eq!(char_coeff(&x, 2).unwrap(), -&a * &y + &w * &v);
        let check = bordered_char_identities(
            &Mat::from_rows(vec![vec![y]]).unwrap(),
            &Mat::col_vector(vec![v]),
            &Mat::row_vector(vec![w]),
            &a,
        )
        .unwrap();
        assert!(check.holds());
        assert_eq!(check.checks, 2);
    }

    #[test]
    fn bordered_shape_errors() {
        let err = bordered_char_identities(&Mat::zeros(2, 2), &Mat::zeros(3, 1), &Mat::zeros(1, 2), &rat(0));
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }
}
