//! JSON encodings of dual points, group elements and evaluation results.
//!
//! A dual point is `{"algebra": "glvv", "n": 3, "y": Mat, "wstar": Mat,
//! "xi": Mat}`. The affine and `sl(n) ⋉ V` algebras use `"y"` and
//! `"vstar"`; the orthogonal ones `"y"` and `"wstar"`. Group elements carry
//! `"g"`, `"u"` and, for `gl(n) ⋉ (V ⊕ V*)`, `"vstar"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::{format_rat, Mat, Rat};
use crate::invariants::{evaluate, generators, DualPoint, Generator};
use crate::liealg::{AlgebraKind, DualPointA, DualPointB, DualPointC, Family, GroupElemA, GroupElemB};

/// Wire form of a dual point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DualPointJson {
    pub algebra: Family,
    pub n: usize,
    pub y: Mat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vstar: Option<Mat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wstar: Option<Mat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<Mat>,
}

fn missing(field: &str, family: Family) -> Error {
    Error::Parse(format!("field `{field}` is required for algebra `{family}`"))
}

fn unexpected(field: &str, family: Family) -> Error {
    Error::Parse(format!("field `{field}` does not apply to algebra `{family}`"))
}

impl DualPointJson {
    /// Validates shapes and membership, returning the algebra and point.
    pub fn decode(self) -> Result<(AlgebraKind, DualPoint)> {
        let family = self.algebra;
        let kind = AlgebraKind::new(family, self.n)?;
        let point = match family {
            Family::Aff | Family::Isl => {
                if self.wstar.is_some() {
                    return Err(unexpected("wstar", family));
                }
                if self.xi.is_some() {
                    return Err(unexpected("xi", family));
                }
                let vstar = self.vstar.ok_or_else(|| missing("vstar", family))?;
                let p = if family == Family::Isl {
                    DualPointA::traceless(self.y, vstar)?
                } else {
                    DualPointA::new(self.y, vstar)?
                };
                DualPoint::A(p)
            }
            Family::Glvv => {
                if self.vstar.is_some() {
                    return Err(unexpected("vstar", family));
                }
                let wstar = self.wstar.ok_or_else(|| missing("wstar", family))?;
                let xi = self.xi.ok_or_else(|| missing("xi", family))?;
                DualPoint::B(DualPointB::new(self.y, wstar, xi)?)
            }
            Family::Io | Family::Iso => {
                if self.vstar.is_some() {
                    return Err(unexpected("vstar", family));
                }
                if self.xi.is_some() {
                    return Err(unexpected("xi", family));
                }
                let wstar = self.wstar.ok_or_else(|| missing("wstar", family))?;
                DualPoint::C(DualPointC::new(self.y, wstar)?)
            }
        };
        if point.n() != kind.n() {
            return Err(Error::DimensionMismatch {
                op: "dual point",
                left: (kind.n(), kind.n()),
                right: (point.n(), point.n()),
            });
        }
        Ok((kind, point))
    }

    /// Wire form of `point` as a point of `family`.
    pub fn encode(family: Family, point: &DualPoint) -> Result<Self> {
        let n = point.n();
        let out = match (family, point) {
            (Family::Aff | Family::Isl, DualPoint::A(p)) => DualPointJson {
                algebra: family,
                n,
                y: p.y.clone(),
                vstar: Some(p.vstar.clone()),
                wstar: None,
                xi: None,
            },
            (Family::Glvv, DualPoint::B(p)) => DualPointJson {
                algebra: family,
                n,
                y: p.y.clone(),
                vstar: None,
                wstar: Some(p.wstar.clone()),
                xi: Some(p.xi.clone()),
            },
            (Family::Io | Family::Iso, DualPoint::C(p)) => DualPointJson {
                algebra: family,
                n,
                y: p.y.clone(),
                vstar: None,
                wstar: Some(p.wstar.clone()),
                xi: None,
            },
            _ => return Err(Error::Parse(format!("point does not live on the dual of `{family}`"))),
        };
        Ok(out)
    }
}

/// Parses a dual point from JSON text.
pub fn parse_dual_point(text: &str) -> Result<(AlgebraKind, DualPoint)> {
    let raw: DualPointJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.decode()
}

/// Wire form of a group element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupElemJson {
    pub algebra: Family,
    pub n: usize,
    pub g: Mat,
    pub u: Mat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vstar: Option<Mat>,
}

impl GroupElemJson {
    pub fn from_a(family: Family, a: &GroupElemA) -> Self {
        GroupElemJson {
            algebra: family,
            n: a.n(),
            g: a.g.clone(),
            u: a.u.clone(),
            vstar: None,
        }
    }

    pub fn from_b(b: &GroupElemB) -> Self {
        GroupElemJson {
            algebra: Family::Glvv,
            n: b.n(),
            g: b.g.clone(),
            u: b.u.clone(),
            vstar: Some(b.vstar.clone()),
        }
    }

    /// The element as a member of `B`; `v*` defaults to zero.
    pub fn to_b(&self) -> Result<GroupElemB> {
        let vstar = self.vstar.clone().unwrap_or_else(|| Mat::zeros(1, self.n));
        GroupElemB::new(self.g.clone(), self.u.clone(), vstar)
    }
}

/// One evaluated generator: `{"invariant": "F", "k": 2, "value": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalResult {
    pub invariant: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub value: String,
}

impl EvalResult {
    pub fn new(gen: Generator, value: &Rat) -> Self {
        EvalResult {
            invariant: gen.name().to_string(),
            k: gen.index(),
            value: format_rat(value),
        }
    }
}

/// Generators selected by `which`: `all`, a family name (`f`, `fbar`, `F`,
/// `psi`, `Phi`) or an indexed one (`F_2`, `psi_1`).
pub fn select_generators(kind: AlgebraKind, which: &str) -> Result<Vec<Generator>> {
    let all = generators(kind);
    if which == "all" {
        return Ok(all);
    }
    let (name, index) = match which.split_once('_') {
        Some((name, k)) => {
            let k: usize = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad invariant index in `{which}`")))?;
            (name, Some(k))
        }
        None => (which, None),
    };
    let chosen: Vec<Generator> = all
        .into_iter()
        .filter(|g| g.name() == name && (index.is_none() || g.index() == index))
        .collect();
    if chosen.is_empty() {
        return Err(Error::Parse(format!("invariant `{which}` is not a generator of {kind}")));
    }
    Ok(chosen)
}

/// Evaluates the generators selected by `which` at `point`.
pub fn evaluate_selected(kind: AlgebraKind, point: &DualPoint, which: &str) -> Result<Vec<EvalResult>> {
    select_generators(kind, which)?
        .into_iter()
        .map(|gen| Ok(EvalResult::new(gen, &evaluate(gen, point)?)))
        .collect()
}
