//! Exact coadjoint invariants of the inhomogeneous linear Lie algebras
//! `gl(n) ⋉ V`, `sl(n) ⋉ V`, `gl(n) ⋉ (V ⊕ V*)` and `so(n) ⋉ V`.
//!
//! All arithmetic is over arbitrary-precision rationals; no operation
//! rounds and every comparison is structural equality.
//!
//! * [`exactmat`]: rational matrices, determinant, rank, inverse, Pfaffian.
//! * [`charpoly`]: characteristic coefficients `p_k`, gradients `B_k`,
//!   exact directional derivatives.
//! * [`liealg`]: dual points, group elements, coadjoint actions, brackets,
//!   the index.
//! * [`invariants`]: the generating invariants, slices and orbit normal forms.
//! * [`verify`]: seeded property suites and the sign-resolution oracle.
//! * [`io`]: JSON encodings.

pub mod charpoly;
pub mod error;
pub mod exactmat;
pub mod invariants;
pub mod io;
pub mod liealg;
pub mod verify;

pub use charpoly::{char_coeff, char_data, directional_coeff, gradient, CharData, Coordinates};
pub use error::{Error, Result};
pub use exactmat::{format_rat, frac, parse_rat, rat, Mat, Rat};
pub use invariants::{evaluate, generators, DualPoint, Generator};
pub use liealg::{
    AlgebraKind, BElem, DualPointA, DualPointB, DualPointC, Family, GroupElem, GroupElemA,
    GroupElemB, Rng,
};
pub use verify::{resolve_sign, run_suite, SignPair, Suite, SuiteConfig, VerifyReport};
