//! Generator polynomials of the coadjoint invariant algebras, evaluated
//! exactly at rational points.
//!
//! | algebra            | generators                                  |
//! |--------------------|---------------------------------------------|
//! | `gl(n) ⋉ V`        | `f` (semi-invariant, character `det(g)⁻¹`)  |
//! | `sl(n) ⋉ V`        | `f̄`, the restriction of `f`                 |
//! | `gl(n) ⋉ (V ⊕ V*)` | `F_0, …, F_{n−1}`                           |
//! | `so(n) ⋉ V`, `O(n)`  | `ψ_0, …, ψ_ℓ`                              |
//! | `so(n) ⋉ V`, `SO(n)` | `ψ_0, …, ψ_ℓ` (n even), `ψ_0, …, ψ_{ℓ−1}, Φ` (n odd) |
//!
//! Generation itself is not checkable pointwise; what is checked is the
//! normalize-and-reconstruct argument ([`orbit_normalize`]) plus invariance
//! and Jacobian-rank independence.

mod orbit;
mod slices;

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::charpoly::{char_data, gradient};
use crate::error::{Error, Result};
use crate::exactmat::{Mat, Rat};
use crate::liealg::{AlgebraKind, DualPointA, DualPointB, DualPointC, Family};

pub use orbit::{canonical_pair, orbit_normalize, pi_projection, sample_open_point, CanonicalPair};
pub use slices::{
    phi_slice, psi_slice_sign, slice_isl, slice_so, t_slice, SlicePointIsl, SlicePointSo,
    EXOTIC_SLICE_SIGN, EXOTIC_SQUARE_SIGN, F_BAR_SLICE_SIGN, PSI_SLICE_SIGN,
};

/// `f(y, v*) = det(v*B_{n−1}(y), …, v*B_1(y), v*)`.
pub fn f_invariant(l: &DualPointA) -> Result<Rat> {
    covariant_rows(l)?.det()
}

/// `f` through the Krylov rows `(v*y^{n−1}, …, v*y, v*)`. The two row
/// systems differ by a unitriangular change of basis.
pub fn f_krylov(l: &DualPointA) -> Result<Rat> {
    let n = l.n();
    let mut rows = vec![l.vstar.clone()];
    for _ in 1..n {
        let next = rows.last().expect("nonempty") * &l.y;
        rows.push(next);
    }
    rows.reverse();
    Mat::vstack(&rows)?.det()
}

/// `f̄`: `f` on `sl(n) × V*`.
pub fn f_bar(l: &DualPointA) -> Result<Rat> {
    if !l.y.trace().is_zero() {
        return Err(Error::NotTraceless);
    }
    f_invariant(l)
}

/// The `n×n` matrix with rows `v*B_{n−1}(y), …, v*`.
pub fn covariant_rows(l: &DualPointA) -> Result<Mat> {
    let cd = char_data(&l.y)?;
    let rows: Vec<Mat> = cd.gradients().iter().rev().map(|b| &l.vstar * b).collect();
    Mat::vstack(&rows)
}

fn check_index(k: usize, max: usize) -> Result<()> {
    if k > max {
        Err(Error::IndexOutOfRange { index: k, max })
    } else {
        Ok(())
    }
}

/// Covariant `Φ_k(y, v*) = v*B_k(y)`, `0 ≤ k ≤ n − 1`.
pub fn phi_covariant(k: usize, l: &DualPointA) -> Result<Mat> {
    check_index(k, l.n() - 1)?;
    Ok(&l.vstar * char_data(&l.y)?.b(k)?)
}

/// `F_k(y, w*, ξ) = w*B_k(y)ξ`, `0 ≤ k ≤ n − 1`.
pub fn glvv_invariant(k: usize, l: &DualPointB) -> Result<Rat> {
    check_index(k, l.n() - 1)?;
    let b = char_data(&l.y)?.b(k)?.clone();
    Ok((&(&l.wstar * &b) * &l.xi).get(0, 0).clone())
}

/// `F_0, …, F_{n−1}` from a single characteristic-data pass.
pub fn glvv_invariants(l: &DualPointB) -> Result<Vec<Rat>> {
    let cd = char_data(&l.y)?;
    Ok(cd
        .gradients()
        .iter()
        .map(|b| (&(&l.wstar * b) * &l.xi).get(0, 0).clone())
        .collect())
}

/// `F_k` through the bordered matrix `X = [[y, ξ], [w*, 0]]`:
/// `p_{k+2}(X) − p_{k+2}(y)` (the second term vanishes for `k = n − 1`).
pub fn glvv_invariant_bordered(k: usize, l: &DualPointB) -> Result<Rat> {
    check_index(k, l.n() - 1)?;
    let x = Mat::bordered(&l.y, &l.xi, &l.wstar, &Rat::zero())?;
    Ok(char_data(&x)?.p(k + 2) - char_data(&l.y)?.p(k + 2))
}

/// Largest valid `k` for `ψ_k`: `ℓ` with `n = 2ℓ + 1` or `2ℓ + 2`.
pub fn psi_max_index(n: usize) -> usize {
    (n - 1) / 2
}

/// `ψ_k(y, w*) = −w*B_{2k}(y)w*ᵀ`, `0 ≤ k ≤ ℓ`.
pub fn psi_invariant(k: usize, l: &DualPointC) -> Result<Rat> {
    check_index(k, psi_max_index(l.n()))?;
    let b = char_data(&l.y)?.b(2 * k)?.clone();
    Ok(-(&(&l.wstar * &b) * &l.wstar.transpose()).get(0, 0).clone())
}

/// `Y = [[y, −w*ᵀ], [w*, 0]]`, skew of size `n + 1`.
pub fn bordered_skew(l: &DualPointC) -> Mat {
    Mat::bordered(&l.y, &-&l.wstar.transpose(), &l.wstar, &Rat::zero()).expect("shapes")
}

/// `ψ_k` through `p_{2k+2}(Y) − p_{2k+2}(y)`.
pub fn psi_invariant_bordered(k: usize, l: &DualPointC) -> Result<Rat> {
    check_index(k, psi_max_index(l.n()))?;
    let y = bordered_skew(l);
    Ok(char_data(&y)?.p(2 * k + 2) - char_data(&l.y)?.p(2 * k + 2))
}

/// The exotic invariant `Φ(y, w*) = Pf([[y, −w*ᵀ], [w*, 0]])` for odd `n`.
///
/// `Φ(Ad*(g,u)ℓ) = det(g)·Φ(ℓ)` on `O(n) ⋉ V`, and
/// `Φ² = det Y = EXOTIC_SQUARE_SIGN · ψ_ℓ`.
pub fn exotic_phi(l: &DualPointC) -> Result<Rat> {
    if l.n() % 2 == 0 {
        return Err(Error::ExoticNeedsOddN);
    }
    bordered_skew(l).pfaffian()
}

/// Vector Pfaffian `pf(y)`: the column with `w*·pf(y) = Φ(y, w*)` for every
/// `w*`, read off at `w* = e_1*, …, e_n*`.
pub fn pfaff_vector(y: &Mat) -> Result<Mat> {
    if !y.is_square() {
        return Err(Error::NotSquare {
            op: "pfaff_vector",
            rows: y.rows(),
            cols: y.cols(),
        });
    }
    let n = y.rows();
    if n % 2 == 0 {
        return Err(Error::ExoticNeedsOddN);
    }
    if !y.is_skew() {
        return Err(Error::NotSkew);
    }
    let entries = (0..n)
        .map(|i| {
            exotic_phi(&DualPointC {
                y: y.clone(),
                wstar: Mat::basis_row(n, i),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Mat::col_vector(entries))
}

/// One generator of an invariant algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Generator {
    /// Semi-invariant `f` of the affine algebra.
    F,
    /// `f̄` on `sl(n) ⋉ V`.
    FBar,
    /// `F_k` on `b`.
    Glvv(usize),
    /// `ψ_k` on `c`.
    Psi(usize),
    /// Exotic `Φ` on `c`, odd `n`.
    Exotic,
}

impl Generator {
    /// Name used in JSON output.
    pub fn name(self) -> &'static str {
        match self {
            Generator::F => "f",
            Generator::FBar => "fbar",
            Generator::Glvv(_) => "F",
            Generator::Psi(_) => "psi",
            Generator::Exotic => "Phi",
        }
    }

    pub fn index(self) -> Option<usize> {
        match self {
            Generator::Glvv(k) | Generator::Psi(k) => Some(k),
            _ => None,
        }
    }

    /// Upper bound for the total degree, as needed by
    /// [`crate::charpoly::directional_coeff`].
    pub fn degree_bound(self, n: usize) -> usize {
        match self {
            Generator::F | Generator::FBar => n * (n + 1) / 2,
            Generator::Glvv(k) => k + 2,
            Generator::Psi(k) => 2 * k + 2,
            Generator::Exotic => psi_max_index(n) + 1,
        }
    }
}

/// The generating set for `kind`.
pub fn generators(kind: AlgebraKind) -> Vec<Generator> {
    let n = kind.n();
    let ell = kind.ell();
    match kind.family() {
        Family::Aff => vec![Generator::F],
        Family::Isl => vec![Generator::FBar],
        Family::Glvv => (0..n).map(Generator::Glvv).collect(),
        Family::Io => (0..=ell).map(Generator::Psi).collect(),
        Family::Iso if kind.is_odd() => (0..ell)
            .map(Generator::Psi)
            .chain(std::iter::once(Generator::Exotic))
            .collect(),
        Family::Iso => (0..=ell).map(Generator::Psi).collect(),
    }
}

/// A point of whichever dual space an algebra lives on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualPoint {
    A(DualPointA),
    B(DualPointB),
    C(DualPointC),
}

impl DualPoint {
    pub fn n(&self) -> usize {
        match self {
            DualPoint::A(p) => p.n(),
            DualPoint::B(p) => p.n(),
            DualPoint::C(p) => p.n(),
        }
    }
}

/// Evaluates one generator, checking that the point lives on the right
/// dual space.
pub fn evaluate(gen: Generator, point: &DualPoint) -> Result<Rat> {
    let mismatch = || Error::Parse(format!("generator `{}` does not apply to this point", gen.name()));
    match (gen, point) {
        (Generator::F, DualPoint::A(p)) => f_invariant(p),
        (Generator::FBar, DualPoint::A(p)) => f_bar(p),
        (Generator::Glvv(k), DualPoint::B(p)) => glvv_invariant(k, p),
        (Generator::Psi(k), DualPoint::C(p)) => psi_invariant(k, p),
        (Generator::Exotic, DualPoint::C(p)) => exotic_phi(p),
        _ => Err(mismatch()),
    }
}

/// Jacobian of the generators of `kind` at `point` (one row per generator,
/// one column per coordinate), by exact first-order directional
/// coefficients.
pub fn generator_jacobian(kind: AlgebraKind, point: &DualPoint) -> Result<Mat> {
    let n = kind.n();
    let rows = generators(kind)
        .into_iter()
        .map(|gen| {
            let bound = gen.degree_bound(n);
            let grad = match point {
                // f̄ is read through the traceless projection, so the gradient
                // is taken in all of gl(n)* without leaving sl(n)*
                DualPoint::A(p) if gen == Generator::FBar => gradient(|q: &DualPointA| f_bar(&q.traceless_part()), p, bound),
                DualPoint::A(p) => gradient(|q: &DualPointA| evaluate(gen, &DualPoint::A(q.clone())), p, bound),
                DualPoint::B(p) => gradient(|q: &DualPointB| evaluate(gen, &DualPoint::B(q.clone())), p, bound),
                DualPoint::C(p) => gradient(|q: &DualPointC| evaluate(gen, &DualPoint::C(q.clone())), p, bound),
            }?;
            Ok(Mat::row_vector(grad))
        })
        .collect::<Result<Vec<_>>>()?;
    Mat::vstack(&rows)
}
