//! Seeded property suites that turn each algebraic identity into a
//! pass/fail report.
//!
//! Every comparison is exact. A suite is deterministic in its
//! configuration: sample `i` at size `n` draws from the stream
//! `Rng::new(seed).split(n).split(i)`, samples run in parallel and results
//! are merged in `(n, i)` order, so reports are identical across runs apart
//! from `elapsed_ms`. Failures carry the full JSON input so they can be
//! replayed.

mod sign;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::liealg::{AlgebraKind, Family, Rng, DEFAULT_BOUND};

pub use sign::{resolve_sign, SignPair};

/// Largest `n` any suite accepts.
pub const MAX_N: usize = 8;

/// Identifier of a property suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    SemiInvarianceF,
    CovariancePhi,
    InvarianceF,
    InvariancePsi,
    ExoticSign,
    DualPath,
    Independence,
    Index,
    Slices,
    OrbitFibration,
    Theta,
    EmbedM,
    CayleyHamilton,
    GradientBk,
    SkewParity,
    SbgGenerators,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::SemiInvarianceF,
        Suite::CovariancePhi,
        Suite::InvarianceF,
        Suite::InvariancePsi,
        Suite::ExoticSign,
        Suite::DualPath,
        Suite::Independence,
        Suite::Index,
        Suite::Slices,
        Suite::OrbitFibration,
        Suite::Theta,
        Suite::EmbedM,
        Suite::CayleyHamilton,
        Suite::GradientBk,
        Suite::SkewParity,
        Suite::SbgGenerators,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::SemiInvarianceF => "semi-invariance-f",
            Suite::CovariancePhi => "covariance-phi",
            Suite::InvarianceF => "invariance-F",
            Suite::InvariancePsi => "invariance-psi",
            Suite::ExoticSign => "exotic-sign",
            Suite::DualPath => "dual-path",
            Suite::Independence => "independence",
            Suite::Index => "index",
            Suite::Slices => "slices",
            Suite::OrbitFibration => "orbit-fibration",
            Suite::Theta => "theta",
            Suite::EmbedM => "embed-M",
            Suite::CayleyHamilton => "cayley-hamilton",
            Suite::GradientBk => "gradient-Bk",
            Suite::SkewParity => "skew-parity",
            Suite::SbgGenerators => "sbg-generators",
        }
    }

    /// The identity the suite checks, emitted in every report.
    pub fn anchor(self) -> &'static str {
        match self {
            Suite::SemiInvarianceF => {
                "f(Ad*(g,u)l) = det(g)^-1 f(l); fbar is SL(n)-invariant and f(y+cI,v*) = f(y,v*); Ad* is an action"
            }
            Suite::CovariancePhi => "Phi_k(Ad*(g,u)l) = Phi_k(l) g^-1 for 0 <= k < n",
            Suite::InvarianceF => {
                "F_k(Ad*_B(b)l) = F_k(l); B_k(y + xi v*)xi = B_k(y)xi; v*B_k(y + u v*) = v*B_k(y); Ad*_B is an action"
            }
            Suite::InvariancePsi => "psi_k(Ad*(c)l) = psi_k(l); Ad*(c) preserves c* and is an action",
            Suite::ExoticSign => {
                "Phi(Ad*(g,u)l) = det(g) Phi(l); a reflection flips Phi; pf(g y g^-1) = det(g) g pf(y)"
            }
            Suite::DualPath => {
                "F_k = p_{k+2}(X) - p_{k+2}(y); bordered charpoly identities; psi_k = p_{2k+2}(Y) - p_{2k+2}(y); \
                 f via B-rows = f via Krylov rows; w*pf(y) = Pf(Y); Pf(Y)^2 = det Y = -psi_l"
            }
            Suite::Independence => "Jacobian of the generating invariants has full rank",
            Suite::Index => "index of gl(n)+V is 0, of gl(n)+(V+V*) is n; forms with f(y,w*) != 0 are regular",
            Suite::Slices => "slice restrictions: fbar = t, psi_k = phi_k, Phi = phi_l, each up to a frozen sign",
            Suite::OrbitFibration => {
                "Ad*(g,u)l = (J, e_n*, pi(l)) with g rows w*B_{n-1}(y),...,w*; pi(l1) = pi(l2) iff A-conjugate"
            }
            Suite::Theta => "theta is an order-2 automorphism of b whose fixed points are gamma(c)",
            Suite::EmbedM => {
                "M is a Lie monomorphism b -> k onto an ideal of codimension 1; Jacobi identity in b"
            }
            Suite::CayleyHamilton => "x B_{n-1}(x) = p_n(x) I; B_k = x^k - p_1 x^{k-1} - ... - p_k I; det(tI - x) coefficients",
            Suite::GradientBk => "tr(B_k(x) y) = d/dt p_{k+1}(x + t y) at t = 0",
            Suite::SkewParity => "y skew: p_k(y) = 0 and B_k(y) skew for odd k; F_k vanishes on c* for odd k",
            Suite::SbgGenerators => {
                "p_i(y) and w* y^j xi are GL(n)-invariant; F_k = w*y^k xi - sum p_i(y) w*y^(k-i) xi"
            }
        }
    }

    pub fn supports(self, family: Family) -> bool {
        use Family::*;
        match self {
            Suite::SemiInvarianceF => matches!(family, Aff | Isl),
            Suite::CovariancePhi => family == Aff,
            Suite::InvarianceF | Suite::OrbitFibration | Suite::EmbedM | Suite::SbgGenerators => {
                family == Glvv
            }
            Suite::InvariancePsi | Suite::ExoticSign | Suite::SkewParity => family.is_orthogonal(),
            Suite::Slices => matches!(family, Isl | Io | Iso),
            Suite::Theta => matches!(family, Glvv | Io | Iso),
            Suite::DualPath
            | Suite::Independence
            | Suite::Index
            | Suite::CayleyHamilton
            | Suite::GradientBk => true,
        }
    }

    /// Families this suite runs on.
    pub fn families(self) -> Vec<Family> {
        Family::ALL.into_iter().filter(|&f| self.supports(f)).collect()
    }

    /// Upper end of the default size range: 5 for degree-heavy suites, 6
    /// elsewhere.
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::SemiInvarianceF | Suite::Independence | Suite::Index | Suite::DualPath => 5,
            _ => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Parameters of one suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub algebra: Family,
    pub n_min: usize,
    pub n_max: usize,
    pub samples: usize,
    pub bound: i64,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(algebra: Family, n_min: usize, n_max: usize) -> Self {
        SuiteConfig {
            algebra,
            n_min,
            n_max,
            samples: 100,
            bound: DEFAULT_BOUND,
            seed: 0,
        }
    }

    pub fn samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn bound(mut self, bound: i64) -> Self {
        self.bound = bound;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be at least 1".into()));
        }
        if self.bound < 1 {
            return Err(Error::InvalidConfig("bound must be at least 1".into()));
        }
        if self.n_min < 1 || self.n_min > self.n_max || self.n_max > MAX_N {
            return Err(Error::InvalidConfig(format!(
                "n range {}..={} must lie within 1..={MAX_N}",
                self.n_min, self.n_max
            )));
        }
        Ok(())
    }
}

/// A failed comparison, with everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub n: usize,
    pub sample: usize,
    pub check: String,
    pub input: Value,
    pub lhs: String,
    pub rhs: String,
}

/// A value computed by a suite that is worth reporting even on success
/// (an index, a resolved sign, a rank).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub n: usize,
    pub key: String,
    pub value: Value,
}

/// Outcome of one suite on one algebra family.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    pub anchor: String,
    pub algebra: Family,
    pub n_min: usize,
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub checks_run: usize,
    pub passed: bool,
    pub failures: Vec<Witness>,
    pub details: Vec<Detail>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Details with the given key, in `n` order.
    pub fn detail(&self, key: &str) -> Vec<(usize, &Value)> {
        self.details
            .iter()
            .filter(|d| d.key == key)
            .map(|d| (d.n, &d.value))
            .collect()
    }
}

/// Collects comparisons for one unit of work.
#[derive(Debug, Default)]
pub(crate) struct Checks {
    n: usize,
    sample: usize,
    run: usize,
    failures: Vec<Witness>,
    details: Vec<Detail>,
}

impl Checks {
    fn new(n: usize, sample: usize) -> Self {
        Checks {
            n,
            sample,
            ..Default::default()
        }
    }

    /// Records `lhs == rhs`.
    pub(crate) fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        check: &str,
        lhs: &T,
        rhs: &T,
        input: impl FnOnce() -> Value,
    ) {
        self.run += 1;
        if lhs != rhs {
            self.fail(check, input(), lhs.to_string(), rhs.to_string());
        }
    }

    /// Records a boolean property; `describe` renders the observed side.
    pub(crate) fn holds(&mut self, check: &str, ok: bool, describe: impl FnOnce() -> (String, Value)) {
        self.run += 1;
        if !ok {
            let (observed, input) = describe();
            self.fail(check, input, observed, "true".into());
        }
    }

    fn fail(&mut self, check: &str, input: Value, lhs: String, rhs: String) {
        self.failures.push(Witness {
            n: self.n,
            sample: self.sample,
            check: check.to_string(),
            input,
            lhs,
            rhs,
        });
    }

    pub(crate) fn detail(&mut self, key: &str, value: Value) {
        self.details.push(Detail {
            n: self.n,
            key: key.to_string(),
            value,
        });
    }
}

/// How a suite is scheduled.
pub(crate) enum Plan {
    /// Independent random samples.
    PerSample,
    /// One unit of work per size.
    PerSize,
}

/// Runs one suite.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    if !suite.supports(cfg.algebra) {
        return Err(Error::Unsupported {
            suite: suite.to_string(),
            algebra: cfg.algebra.to_string(),
        });
    }
    let sizes: Vec<usize> = (cfg.n_min..=cfg.n_max)
        .filter(|&n| suites::applies(suite, n))
        .collect();
    if sizes.is_empty() {
        return Err(Error::InvalidConfig(format!(
            "suite `{suite}` has no applicable size in {}..={}",
            cfg.n_min, cfg.n_max
        )));
    }
    let start = Instant::now();
    let root = Rng::new(cfg.seed);
    let units: Vec<(usize, usize)> = match suites::plan(suite) {
        Plan::PerSample => sizes
            .iter()
            .flat_map(|&n| (0..cfg.samples).map(move |i| (n, i)))
            .collect(),
        Plan::PerSize => sizes.iter().map(|&n| (n, 0)).collect(),
    };
    let results = units
        .par_iter()
        .map(|&(n, i)| {
            let kind = AlgebraKind::new(cfg.algebra, n)?;
            let mut rng = root.split(n as u64).split(i as u64);
            let mut checks = Checks::new(n, i);
            suites::run_unit(suite, kind, cfg, &mut rng, &mut checks)?;
            Ok(checks)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = VerifyReport {
        suite: suite.to_string(),
        anchor: suite.anchor().to_string(),
        algebra: cfg.algebra,
        n_min: cfg.n_min,
        n_max: cfg.n_max,
        samples: cfg.samples,
        seed: cfg.seed,
        checks_run: 0,
        passed: true,
        failures: Vec::new(),
        details: Vec::new(),
        elapsed_ms: 0,
    };
    for c in results {
        report.checks_run += c.run;
        report.failures.extend(c.failures);
        report.details.extend(c.details);
    }
    report.passed = report.failures.is_empty();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Runs a suite given by name.
pub fn run_suite_named(name: &str, cfg: &SuiteConfig) -> Result<VerifyReport> {
    run_suite(name.parse()?, cfg)
}

/// Runs every suite on every family it supports, over `1..=n_max` (capped at
/// each suite's default range).
pub fn run_all(n_max: usize, samples: usize, bound: i64, seed: u64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for suite in Suite::ALL {
        for family in suite.families() {
            let cfg = SuiteConfig::new(family, 1, n_max.min(suite.default_n_max()))
                .samples(samples)
                .bound(bound)
                .seed(seed);
            out.push(run_suite(suite, &cfg)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
            assert!(!s.families().is_empty());
        }
        assert!(matches!("unknown".parse::<Suite>(), Err(Error::UnknownSuite(_))));
    }

    #[test]
    fn config_validation() {
        let bad = SuiteConfig::new(Family::Glvv, 1, 9);
        assert!(run_suite(Suite::InvarianceF, &bad).is_err());
        let bad = SuiteConfig::new(Family::Glvv, 1, 2).samples(0);
        assert!(run_suite(Suite::InvarianceF, &bad).is_err());
        let cfg = SuiteConfig::new(Family::Aff, 1, 2);
        assert!(matches!(run_suite(Suite::InvarianceF, &cfg), Err(Error::Unsupported { .. })));
        let even_only = SuiteConfig::new(Family::Iso, 2, 2);
        assert!(matches!(run_suite(Suite::ExoticSign, &even_only), Err(Error::InvalidConfig(_))));
    }
}
