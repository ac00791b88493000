//! Seeded sampling of group elements and dual points.
//!
//! All entries are integers in `[−bound, bound]` except where a group
//! construction forces rationals (Cayley transforms).

use num::Zero;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactmat::{rat, Mat};

use super::dual::{DualPointA, DualPointB, DualPointC};
use super::group::{GroupElem, GroupElemA, GroupElemB};
use super::{AlgebraKind, Family};

/// Default coefficient bound for sampled entries.
pub const DEFAULT_BOUND: i64 = 3;

const MAX_RETRIES: usize = 64;

/// Deterministic, splittable random stream (ChaCha8).
///
/// `Rng::new(seed).split(k)` depends only on `seed`, the split path and `k`,
/// never on how much the parent has been consumed.
#[derive(Clone, Debug)]
pub struct Rng {
    seed: u64,
    path: u64,
    inner: ChaCha8Rng,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng::at(seed, 0)
    }

    fn at(seed: u64, path: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(path);
        Rng { seed, path, inner }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent child stream number `stream`.
    pub fn split(&self, stream: u64) -> Rng {
        Rng::at(self.seed, splitmix(self.path ^ splitmix(stream)))
    }

    /// Uniform integer in `[−bound, bound]`.
    pub fn int(&mut self, bound: i64) -> i64 {
        self.inner.gen_range(-bound..=bound)
    }

    /// Uniform index in `0..n`.
    pub fn index(&mut self, n: usize) -> usize {
        self.inner.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.inner.gen()
    }
}

pub fn random_matrix(rows: usize, cols: usize, rng: &mut Rng, bound: i64) -> Mat {
    let data = (0..rows * cols).map(|_| rat(rng.int(bound))).collect();
    Mat::from_vec(rows, cols, data).expect("shape")
}

pub fn random_skew(n: usize, rng: &mut Rng, bound: i64) -> Mat {
    let mut s = Mat::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = rat(rng.int(bound));
            s.set(j, i, -v.clone());
            s.set(i, j, v);
        }
    }
    s
}

/// Random invertible integer matrix, by rejection.
pub fn sample_gl(n: usize, rng: &mut Rng, bound: i64) -> Result<Mat> {
    for _ in 0..MAX_RETRIES {
        let g = random_matrix(n, n, rng, bound);
        if !g.det()?.is_zero() {
            return Ok(g);
        }
    }
    Err(Error::DegenerateRng)
}

/// Product of `2n` random transvections `I + c·E_ij` (`i ≠ j`); the
/// determinant is exactly one.
pub fn sample_sl(n: usize, rng: &mut Rng, bound: i64) -> Mat {
    let mut g = Mat::identity(n);
    if n < 2 {
        return g;
    }
    for _ in 0..2 * n {
        let i = rng.index(n);
        let j = (i + 1 + rng.index(n - 1)) % n;
        let mut t = Mat::identity(n);
        t.set(i, j, rat(rng.int(bound)));
        g = &g * &t;
    }
    g
}

/// Cayley transform `(I − S)(I + S)⁻¹`; orthogonal with determinant one for
/// skew `S`.
pub fn cayley(s: &Mat) -> Result<Mat> {
    if !s.is_skew() {
        return Err(Error::NotSkew);
    }
    let id = Mat::identity(s.rows());
    Ok(&(&id - s) * &(&id + s).inverse()?)
}

pub fn sample_so(n: usize, rng: &mut Rng, bound: i64) -> Result<Mat> {
    cayley(&random_skew(n, rng, bound))
}

/// `diag(1, …, 1, −1)`.
pub fn reflection(n: usize) -> Mat {
    let mut r = Mat::identity(n);
    r.set(n - 1, n - 1, rat(-1));
    r
}

/// Uniformly one of the two components of `O(n)`.
pub fn sample_o(n: usize, rng: &mut Rng, bound: i64) -> Result<Mat> {
    let q = sample_so(n, rng, bound)?;
    Ok(if rng.coin() { &q * &reflection(n) } else { q })
}

/// A random element of the group acting on `kind`: `GL(n) ⋉ V` for the
/// affine algebra, `SL(n) ⋉ V`, `GL(n) ⋉ (V ⊕ V*)`, `O(n) ⋉ V` or
/// `SO(n) ⋉ V`.
pub fn sample_group(kind: AlgebraKind, rng: &mut Rng, bound: i64) -> Result<GroupElem> {
    if bound < 1 {
        return Err(Error::InvalidConfig("bound must be at least 1".into()));
    }
    let n = kind.n();
    let g = match kind.family() {
        Family::Aff | Family::Glvv => sample_gl(n, rng, bound)?,
        Family::Isl => sample_sl(n, rng, bound),
        Family::Io => sample_o(n, rng, bound)?,
        Family::Iso => sample_so(n, rng, bound)?,
    };
    let u = random_matrix(n, 1, rng, bound);
    let a = GroupElemA { g, u };
    Ok(match kind.family() {
        Family::Glvv => GroupElem::B(GroupElemB {
            g: a.g,
            u: a.u,
            vstar: random_matrix(1, n, rng, bound),
        }),
        _ => GroupElem::A(a),
    })
}

pub fn sample_dual_a(n: usize, rng: &mut Rng, bound: i64) -> DualPointA {
    DualPointA {
        y: random_matrix(n, n, rng, bound),
        vstar: random_matrix(1, n, rng, bound),
    }
}

/// Random point of `sl(n) × V*`: the last diagonal entry balances the trace.
pub fn sample_dual_isl(n: usize, rng: &mut Rng, bound: i64) -> DualPointA {
    let mut p = sample_dual_a(n, rng, bound);
    let t = p.y.trace() - p.y.get(n - 1, n - 1);
    p.y.set(n - 1, n - 1, -t);
    p
}

pub fn sample_dual_b(n: usize, rng: &mut Rng, bound: i64) -> DualPointB {
    DualPointB {
        y: random_matrix(n, n, rng, bound),
        wstar: random_matrix(1, n, rng, bound),
        xi: random_matrix(n, 1, rng, bound),
    }
}

pub fn sample_dual_c(n: usize, rng: &mut Rng, bound: i64) -> DualPointC {
    DualPointC {
        y: random_skew(n, rng, bound),
        wstar: random_matrix(1, n, rng, bound),
    }
}
