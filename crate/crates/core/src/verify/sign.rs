//! Brute-force resolution of the sign relating a generator to its slice
//! polynomial.

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::exactmat::{rat, Rat};
use crate::invariants::{
    exotic_phi, f_bar, phi_slice, psi_invariant, slice_isl, slice_so, t_slice, SlicePointIsl,
    SlicePointSo,
};
use crate::liealg::{AlgebraKind, Family};

/// Largest `n` accepted by [`resolve_sign`].
pub const MAX_SIGN_N: usize = 6;

/// Grid half-width: every slice parameter ranges over `−2..=2`.
const GRID: i64 = 2;

/// Which generator is compared with which slice polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignPair {
    /// `f̄` on the `sl(n)` slice against `t`.
    FVsT,
    /// `ψ_k` on the `so(n)` slice against `φ_k`.
    PsiVsPhi(usize),
    /// `Φ` on the `so(n)` slice against `φ_ℓ`, odd `n`.
    ExoticVsSlice,
}

impl fmt::Display for SignPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignPair::FVsT => f.write_str("f-vs-t"),
            SignPair::PsiVsPhi(k) => write!(f, "psi-vs-phi({k})"),
            SignPair::ExoticVsSlice => f.write_str("exotic-vs-slice"),
        }
    }
}

impl std::str::FromStr for SignPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "f-vs-t" => Ok(SignPair::FVsT),
            "exotic-vs-slice" => Ok(SignPair::ExoticVsSlice),
            _ => s
                .strip_prefix("psi-vs-phi(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|k| k.parse().ok())
                .map(SignPair::PsiVsPhi)
                .ok_or_else(|| Error::Parse(format!("unknown sign pair `{s}`"))),
        }
    }
}

/// Every point of `{−GRID..=GRID}^len`, in lexicographic order.
fn grid(len: usize) -> impl Iterator<Item = Vec<Rat>> {
    let side = (2 * GRID + 1) as usize;
    let total = side.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut point = vec![Rat::zero(); len];
        for slot in point.iter_mut().rev() {
            *slot = rat((code % side) as i64 - GRID);
            code /= side;
        }
        point
    })
}

/// Returns `ε ∈ {+1, −1}` with `lhs = ε·rhs` on the whole grid.
///
/// Errors with [`Error::NotProportional`] when neither sign fits every
/// point, or when both sides vanish identically.
pub fn resolve_sign(pair: SignPair, n: usize) -> Result<i32> {
    if n < 2 || n > MAX_SIGN_N {
        return Err(Error::InvalidConfig(format!(
            "sign resolution needs 2 <= n <= {MAX_SIGN_N}, got {n}"
        )));
    }
    let values: Vec<(Rat, Rat)> = match pair {
        SignPair::FVsT => grid(n)
            .map(|v| {
                let s = SlicePointIsl {
                    a: v[..n - 1].to_vec(),
                    b: v[n - 1].clone(),
                };
                Ok((f_bar(&slice_isl(&s))?, t_slice(&s)))
            })
            .collect::<Result<_>>()?,
        SignPair::PsiVsPhi(_) | SignPair::ExoticVsSlice => {
            let kind = AlgebraKind::new(Family::Io, n)?;
            let ell = kind.ell();
            let exotic = matches!(pair, SignPair::ExoticVsSlice);
            if exotic && !kind.is_odd() {
                return Err(Error::ExoticNeedsOddN);
            }
            let k = match pair {
                SignPair::PsiVsPhi(k) => k,
                _ => ell,
            };
            let limit = if kind.is_odd() { ell.saturating_sub(1) } else { ell };
            if !exotic && k > limit {
                return Err(Error::IndexOutOfRange { index: k, max: limit });
            }
            grid(ell + 1)
                .map(|v| {
                    let s = SlicePointSo {
                        a: v[..ell].to_vec(),
                        a0: v[ell].clone(),
                    };
                    let point = slice_so(&s, kind)?;
                    let lhs = if exotic { exotic_phi(&point)? } else { psi_invariant(k, &point)? };
                    Ok((lhs, phi_slice(k, &s, kind)?))
                })
                .collect::<Result<_>>()?
        }
    };
    let plus = values.iter().all(|(l, r)| l == r);
    let minus = values.iter().all(|(l, r)| *l == -r.clone());
    match (plus, minus) {
        (true, false) => Ok(1),
        (false, true) => Ok(-1),
        (true, true) => Err(Error::NotProportional(format!("{pair} vanishes on the grid at n = {n}"))),
        (false, false) => {
            let (l, r) = values
                .iter()
                .find(|(l, r)| l != r && *l != -r.clone())
                .or_else(|| values.iter().find(|(l, r)| l != r))
                .expect("a mismatch exists");
            Err(Error::NotProportional(format!("{pair} at n = {n}: {l} vs {r}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_enumerates_every_point() {
        let pts: Vec<_> = grid(2).collect();
        assert_eq!(pts.len(), 25);
        assert_eq!(pts[0], vec![rat(-2), rat(-2)]);
        assert_eq!(pts[24], vec![rat(2), rat(2)]);
    }

    #[test]
    fn pair_names_round_trip() {
        for p in [SignPair::FVsT, SignPair::PsiVsPhi(3), SignPair::ExoticVsSlice] {
            assert_eq!(p.to_string().parse::<SignPair>().unwrap(), p);
        }
        assert!("psi-vs-phi(x)".parse::<SignPair>().is_err());
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(resolve_sign(SignPair::FVsT, 7).is_err());
        assert!(resolve_sign(SignPair::ExoticVsSlice, 4).is_err());
        assert!(resolve_sign(SignPair::PsiVsPhi(1), 3).is_err());
        assert!(resolve_sign(SignPair::PsiVsPhi(2), 4).is_err());
    }

    #[test]
    fn small_signs() {
        assert_eq!(resolve_sign(SignPair::FVsT, 2).unwrap(), 1);
        assert_eq!(resolve_sign(SignPair::PsiVsPhi(0), 3).unwrap(), -1);
        assert_eq!(resolve_sign(SignPair::ExoticVsSlice, 3).unwrap(), -1);
    }
}
