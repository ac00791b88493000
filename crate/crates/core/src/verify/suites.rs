//! Per-sample bodies of the property suites.

use num::Zero;
use serde::Serialize;
use serde_json::{json, Value};

use crate::charpoly::{bordered_char_identities, char_data, directional_coeff};
use crate::error::{Error, Result};
use crate::exactmat::{rat, Mat, Rat};
use crate::invariants::{
    covariant_rows, exotic_phi, f_bar, f_invariant, f_krylov, generator_jacobian, generators,
    glvv_invariant, glvv_invariant_bordered, glvv_invariants, orbit_normalize, pfaff_vector,
    phi_covariant, pi_projection, psi_invariant, psi_invariant_bordered, psi_max_index,
    sample_open_point, bordered_skew, DualPoint, EXOTIC_SQUARE_SIGN, F_BAR_SLICE_SIGN,
    PSI_SLICE_SIGN, EXOTIC_SLICE_SIGN,
};
use crate::liealg::{
    basis, bracket_b, coad_a, coad_b, coad_isl, coad_b_dual_translation, coad_c, contracted_bracket, embed_m,
    form_rank, index_of, random_matrix, random_skew, reflection, sample_dual_a, sample_dual_b,
    sample_dual_c, sample_dual_isl, sample_gl, sample_group, sample_o, sample_so, theta,
    AlgebraKind, BElem, DualPointA, DualPointB, Family, GroupElem, GroupElemA, GroupElemB, Rng,
};

use super::sign::{resolve_sign, SignPair};
use super::{Checks, Plan, Suite, SuiteConfig};

/// Samples drawn by `index_of` inside the index suite; a generic form is
/// hit with overwhelming probability on the first draw.
const INDEX_DRAWS: usize = 8;

/// Points tried per independence sample.
const INDEPENDENCE_DRAWS: usize = 4;

pub(crate) fn plan(suite: Suite) -> Plan {
    match suite {
        Suite::Slices => Plan::PerSize,
        _ => Plan::PerSample,
    }
}

/// Sizes at which a suite has something to check.
pub(crate) fn applies(suite: Suite, n: usize) -> bool {
    match suite {
        Suite::ExoticSign => n % 2 == 1,
        Suite::Slices => n >= 2,
        _ => true,
    }
}

fn js<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).unwrap_or(Value::Null)
}

fn point_of(kind: AlgebraKind, rng: &mut Rng, bound: i64) -> DualPoint {
    let n = kind.n();
    match kind.family() {
        Family::Aff => DualPoint::A(sample_dual_a(n, rng, bound)),
        Family::Isl => DualPoint::A(sample_dual_isl(n, rng, bound)),
        Family::Glvv => DualPoint::B(sample_dual_b(n, rng, bound)),
        Family::Io | Family::Iso => DualPoint::C(sample_dual_c(n, rng, bound)),
    }
}

fn point_json(p: &DualPoint) -> Value {
    match p {
        DualPoint::A(p) => js(p),
        DualPoint::B(p) => js(p),
        DualPoint::C(p) => js(p),
    }
}

fn group_a(kind: AlgebraKind, rng: &mut Rng, bound: i64) -> Result<GroupElemA> {
    match sample_group(kind, rng, bound)? {
        GroupElem::A(a) => Ok(a),
        GroupElem::B(b) => Ok(GroupElemA { g: b.g, u: b.u }),
    }
}

fn group_b(n: usize, rng: &mut Rng, bound: i64) -> Result<GroupElemB> {
    Ok(GroupElemB {
        g: sample_gl(n, rng, bound)?,
        u: random_matrix(n, 1, rng, bound),
        vstar: random_matrix(1, n, rng, bound),
    })
}

fn random_b(n: usize, rng: &mut Rng, bound: i64) -> BElem {
    BElem {
        x: random_matrix(n, n, rng, bound),
        u: random_matrix(n, 1, rng, bound),
        vstar: random_matrix(1, n, rng, bound),
    }
}

pub(crate) fn run_unit(
    suite: Suite,
    kind: AlgebraKind,
    cfg: &SuiteConfig,
    rng: &mut Rng,
    c: &mut Checks,
) -> Result<()> {
    let bound = cfg.bound;
    match suite {
        Suite::SemiInvarianceF => semi_invariance_f(kind, rng, bound, c),
        Suite::CovariancePhi => covariance_phi(kind, rng, bound, c),
        Suite::InvarianceF => invariance_glvv(kind, rng, bound, c),
        Suite::InvariancePsi => invariance_psi(kind, rng, bound, c),
        Suite::ExoticSign => exotic_sign(kind, rng, bound, c),
        Suite::DualPath => dual_path(kind, rng, bound, c),
        Suite::Independence => independence(kind, rng, bound, c),
        Suite::Index => index(kind, c.sample, rng, bound, c),
        Suite::Slices => slices(kind, c),
        Suite::OrbitFibration => orbit_fibration(kind, rng, bound, c),
        Suite::Theta => theta_suite(kind, rng, bound, c),
        Suite::EmbedM => embed_suite(kind, rng, bound, c),
        Suite::CayleyHamilton => cayley_hamilton(kind, rng, bound, c),
        Suite::GradientBk => gradient_bk(kind, rng, bound, c),
        Suite::SkewParity => skew_parity(kind, rng, bound, c),
        Suite::SbgGenerators => sbg_generators(kind, rng, bound, c),
    }
}

fn semi_invariance_f(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let a1 = group_a(kind, rng, bound)?;
    let a2 = group_a(kind, rng, bound)?;
    let special = kind.family() == Family::Isl;
    let act = |a: &GroupElemA, l: &DualPointA| if special { coad_isl(a, l) } else { coad_a(a, l) };
    let l = if special {
        sample_dual_isl(n, rng, bound)
    } else {
        sample_dual_a(n, rng, bound)
    };
    let input = || json!({"g": js(&a1), "l": js(&l)});
    let moved = act(&a1, &l)?;
    if special {
        c.eq("fbar(Ad*(a)l) = fbar(l)", &f_bar(&moved)?, &f_bar(&l)?, input);
    } else {
        let det = a1.g.det()?;
        c.eq("f(Ad*(a)l) det(g) = f(l)", &(f_invariant(&moved)? * &det), &f_invariant(&l)?, input);
    }
    let shift = rat(rng.int(bound));
    let shifted = DualPointA {
        y: &l.y + &Mat::identity(n).scale(&shift),
        vstar: l.vstar.clone(),
    };
    c.eq("f(y + cI, v*) = f(y, v*)", &f_invariant(&shifted)?, &f_invariant(&l)?, || {
        json!({"l": js(&l), "c": shift.to_string()})
    });
    let lhs = act(&a1.compose(&a2), &l)?;
    let rhs = act(&a1, &act(&a2, &l)?)?;
    c.holds("Ad*(a1 a2) = Ad*(a1) Ad*(a2)", lhs == rhs, || {
        ("action law violated".into(), json!({"a1": js(&a1), "a2": js(&a2), "l": js(&l)}))
    });
    Ok(())
}

fn covariance_phi(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let a = group_a(kind, rng, bound)?;
    let l = sample_dual_a(n, rng, bound);
    let moved = coad_a(&a, &l)?;
    let gi = a.g.inverse()?;
    for k in 0..n {
        let lhs = phi_covariant(k, &moved)?;
        let rhs = &phi_covariant(k, &l)? * &gi;
        c.eq(&format!("Phi_{k}(Ad*(a)l) = Phi_{k}(l) g^-1"), &lhs, &rhs, || {
            json!({"g": js(&a), "l": js(&l)})
        });
    }
    Ok(())
}

fn invariance_glvv(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let b1 = group_b(n, rng, bound)?;
    let b2 = group_b(n, rng, bound)?;
    let l = sample_dual_b(n, rng, bound);
    let moved = coad_b(&b1, &l)?;
    let before = glvv_invariants(&l)?;
    let after = glvv_invariants(&moved)?;
    for k in 0..n {
        c.eq(&format!("F_{k}(Ad*(b)l) = F_{k}(l)"), &after[k], &before[k], || {
            json!({"b": js(&b1), "l": js(&l)})
        });
    }
    let dual_only = coad_b_dual_translation(&b1.vstar, &l)?;
    let cy = char_data(&l.y)?;
    let cs = char_data(&dual_only.y)?;
    let shifted = &l.y + &(&b1.u * &b1.vstar);
    let ch = char_data(&shifted)?;
    for k in 0..n {
        c.eq(&format!("B_{k}(y + xi v*)xi = B_{k}(y)xi"), &(cs.b(k)? * &l.xi), &(cy.b(k)? * &l.xi), || {
            json!({"v*": js(&b1.vstar), "l": js(&l)})
        });
        c.eq(
            &format!("v*B_{k}(y + u v*) = v*B_{k}(y)"),
            &(&b1.vstar * ch.b(k)?),
            &(&b1.vstar * cy.b(k)?),
            || json!({"u": js(&b1.u), "v*": js(&b1.vstar), "y": js(&l.y)}),
        );
    }
    let lhs = coad_b(&b1.compose(&b2)?, &l)?;
    let rhs = coad_b(&b1, &coad_b(&b2, &l)?)?;
    c.holds("Ad*(b1 b2) = Ad*(b1) Ad*(b2)", lhs == rhs, || {
        ("action law violated".into(), json!({"b1": js(&b1), "b2": js(&b2), "l": js(&l)}))
    });
    Ok(())
}

fn invariance_psi(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let a1 = group_a(kind, rng, bound)?;
    let a2 = group_a(kind, rng, bound)?;
    let l = sample_dual_c(n, rng, bound);
    let moved = coad_c(&a1, &l)?;
    let input = || json!({"g": js(&a1), "l": js(&l)});
    c.holds("Ad*(a) preserves c*", moved.y.is_skew(), || ("image not skew".into(), input()));
    for k in 0..=psi_max_index(n) {
        c.eq(&format!("psi_{k}(Ad*(a)l) = psi_{k}(l)"), &psi_invariant(k, &moved)?, &psi_invariant(k, &l)?, input);
    }
    if kind.family() == Family::Iso && kind.is_odd() {
        c.eq("Phi(Ad*(a)l) = Phi(l) on SO(n)", &exotic_phi(&moved)?, &exotic_phi(&l)?, input);
    }
    let lhs = coad_c(&a1.compose(&a2), &l)?;
    let rhs = coad_c(&a1, &coad_c(&a2, &l)?)?;
    c.holds("Ad*(a1 a2) = Ad*(a1) Ad*(a2)", lhs == rhs, || {
        ("action law violated".into(), json!({"a1": js(&a1), "a2": js(&a2), "l": js(&l)}))
    });
    Ok(())
}

fn exotic_sign(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let l = sample_dual_c(n, rng, bound);
    let phi = exotic_phi(&l)?;
    let a = group_a(kind, rng, bound)?;
    let det = a.g.det()?;
    c.eq("Phi(Ad*(a)l) = det(g) Phi(l)", &exotic_phi(&coad_c(&a, &l)?)?, &(&det * &phi), || {
        json!({"g": js(&a), "l": js(&l)})
    });
    let r = GroupElemA {
        g: reflection(n),
        u: random_matrix(n, 1, rng, bound),
    };
    c.eq("Phi(Ad*(reflection)l) = -Phi(l)", &exotic_phi(&coad_c(&r, &l)?)?, &-phi.clone(), || {
        json!({"g": js(&r), "l": js(&l)})
    });
    let q = sample_so(n, rng, bound)?;
    let rot = GroupElemA { g: q.clone(), u: Mat::zeros(n, 1) };
    c.eq("Phi(Ad*(SO)l) = Phi(l)", &exotic_phi(&coad_c(&rot, &l)?)?, &phi, || {
        json!({"g": js(&rot), "l": js(&l)})
    });
    let o = sample_o(n, rng, bound)?;
    let conj = &(&o * &l.y) * &o.transpose();
    let lhs = pfaff_vector(&conj)?;
    let rhs = (&o * &pfaff_vector(&l.y)?).scale(&o.det()?);
    c.eq("pf(g y g^-1) = det(g) g pf(y)", &lhs, &rhs, || json!({"g": js(&o), "y": js(&l.y)}));
    Ok(())
}

fn dual_path(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    match kind.family() {
        Family::Aff | Family::Isl => {
            let l = match kind.family() {
                Family::Isl => sample_dual_isl(n, rng, bound),
                _ => sample_dual_a(n, rng, bound),
            };
            c.eq("f via B-rows = f via Krylov rows", &f_invariant(&l)?, &f_krylov(&l)?, || js(&l));
        }
        Family::Glvv => {
            let l = sample_dual_b(n, rng, bound);
            for k in 0..n {
                c.eq(
                    &format!("F_{k} via B_{k} = F_{k} via bordered charpoly"),
                    &glvv_invariant(k, &l)?,
                    &glvv_invariant_bordered(k, &l)?,
                    || js(&l),
                );
            }
            let v = random_matrix(n, 1, rng, bound);
            let a = rat(rng.int(bound));
            let check = bordered_char_identities(&l.y, &v, &l.wstar, &a)?;
            c.run += check.checks - 1;
            c.holds("bordered charpoly identities", check.holds(), || {
                let w = check.first_failure.clone().expect("failure");
                (
                    format!("{}: {} vs {}", w.family, w.lhs, w.rhs),
                    json!({"y": js(&l.y), "v": js(&v), "w*": js(&l.wstar), "a": a.to_string()}),
                )
            });
        }
        Family::Io | Family::Iso => {
            let l = sample_dual_c(n, rng, bound);
            for k in 0..=psi_max_index(n) {
                c.eq(
                    &format!("psi_{k} via B_{} = psi_{k} via bordered charpoly", 2 * k),
                    &psi_invariant(k, &l)?,
                    &psi_invariant_bordered(k, &l)?,
                    || js(&l),
                );
            }
            if kind.is_odd() {
                let y = bordered_skew(&l);
                let phi = exotic_phi(&l)?;
                let det = y.det()?;
                let via_vector = (&l.wstar * &pfaff_vector(&l.y)?).get(0, 0).clone();
                c.eq("w* pf(y) = Pf(Y)", &via_vector, &phi, || js(&l));
                c.eq("Pf(Y)^2 = det Y", &(&phi * &phi), &det, || js(&l));
                let psi = psi_invariant(psi_max_index(n), &l)?;
                c.eq("Phi^2 = -psi_l", &(&phi * &phi), &(rat(EXOTIC_SQUARE_SIGN as i64) * psi), || js(&l));
            }
        }
    }
    Ok(())
}

fn independence(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    // generators are independent iff the Jacobian has full rank somewhere;
    // a single draw can land on the degeneracy locus (w* = 0, say), so up
    // to INDEPENDENCE_DRAWS points are tried
    let expected = generators(kind).len();
    let mut best = 0;
    let mut first = None;
    for _ in 0..INDEPENDENCE_DRAWS {
        let p = point_of(kind, rng, bound);
        let rank = generator_jacobian(kind, &p)?.rank();
        c.holds("Jacobian rank <= number of generators", rank <= expected, || {
            (format!("rank {rank}"), point_json(&p))
        });
        first.get_or_insert_with(|| point_json(&p));
        best = best.max(rank);
        if best == expected {
            break;
        }
    }
    c.eq("max Jacobian rank = number of generators", &best, &expected, || first.unwrap_or(Value::Null));
    Ok(())
}

/// Expected index of `kind`.
pub(crate) fn expected_index(kind: AlgebraKind) -> usize {
    match kind.family() {
        Family::Aff => 0,
        Family::Isl => 1,
        Family::Glvv => kind.n(),
        Family::Io | Family::Iso => kind.ell() + 1,
    }
}

fn index(kind: AlgebraKind, sample: usize, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    if sample == 0 {
        let ind = index_of(kind, INDEX_DRAWS, rng)?;
        c.detail("index", json!(ind));
        c.eq("index", &ind, &expected_index(kind), || json!({"algebra": kind.to_string()}));
    }
    if kind.family() == Family::Glvv {
        let l = sample_open_point(kind.n(), rng, bound)?;
        let rank = form_rank(kind, &l)?;
        c.eq("rank of l([.,.]) on the open set = dim b - n", &rank, &(kind.dim() - kind.n()), || js(&l));
    }
    Ok(())
}

fn slices(kind: AlgebraKind, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let record = |c: &mut Checks, pair: SignPair, expected: i32| -> Result<()> {
        let got = resolve_sign(pair, n);
        let got = match got {
            Ok(s) => s,
            Err(Error::NotProportional(msg)) => {
                c.holds(&format!("{pair} proportional"), false, || (msg, json!({"n": n})));
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        c.detail(&pair.to_string(), json!(got));
        c.eq(&format!("{pair} sign"), &got, &expected, || json!({"n": n}));
        Ok(())
    };
    match kind.family() {
        Family::Isl => record(c, SignPair::FVsT, F_BAR_SLICE_SIGN)?,
        Family::Io | Family::Iso => {
            let ell = kind.ell();
            let top = if kind.is_odd() { ell } else { ell + 1 };
            for k in 0..top {
                record(c, SignPair::PsiVsPhi(k), PSI_SLICE_SIGN)?;
            }
            if kind.is_odd() {
                record(c, SignPair::ExoticVsSlice, EXOTIC_SLICE_SIGN)?;
            }
        }
        _ => unreachable!("slices suite is restricted to isl, io and iso"),
    }
    Ok(())
}

fn orbit_fibration(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let l = sample_open_point(n, rng, bound)?;
    let pi = pi_projection(&l)?;
    let (_, normal) = orbit_normalize(&l)?;
    c.eq("normal form carries pi(l)", &normal.xi, &pi, || js(&l));
    c.eq("F_k(normal form) = F_k(l)", &Mat::row_vector(glvv_invariants(&normal)?), &Mat::row_vector(glvv_invariants(&l)?), || js(&l));
    let h = group_a(AlgebraKind::new(Family::Aff, n)?, rng, bound)?;
    let moved = coad_b(&h.to_b(), &l)?;
    let (_, renormal) = orbit_normalize(&moved)?;
    c.eq("normal form is A-invariant", &renormal, &normal, || json!({"a": js(&h), "l": js(&l)}));
    let vstar = random_matrix(1, n, rng, bound);
    let slid = coad_b_dual_translation(&vstar, &l)?;
    c.eq("pi is V*-invariant", &pi_projection(&slid)?, &pi, || json!({"v*": js(&vstar), "l": js(&l)}));
    // an independent point of the same fiber: random (y, w*) in the open
    // set, with xi solving g xi = pi(l) where g has rows w*B_{n-1}(y), ..., w*
    let base = sample_open_point(n, rng, bound)?;
    let g2 = covariant_rows(&base.restrict_a())?;
    let fiber = DualPointB { xi: g2.solve(&pi)?, ..base };
    c.eq("constructed point lies in the fiber", &pi_projection(&fiber)?, &pi, || js(&fiber));
    let (a_l, _) = orbit_normalize(&l)?;
    let (a_f, fiber_normal) = orbit_normalize(&fiber)?;
    c.eq("equal pi gives equal normal form", &fiber_normal, &normal, || {
        json!({"l": js(&l), "other": js(&fiber)})
    });
    let conj = a_f.inverse()?.compose(&a_l);
    c.eq("A-element joining the fiber", &coad_b(&conj.to_b(), &l)?, &fiber, || {
        json!({"l": js(&l), "other": js(&fiber)})
    });
    Ok(())
}

fn theta_suite(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let x = random_b(n, rng, bound);
    let y = random_b(n, rng, bound);
    let input = || json!({"X": js(&x), "Y": js(&y)});
    c.eq("theta^2 = id", &theta(&theta(&x)), &x, input);
    c.eq("theta[X,Y] = [theta X, theta Y]", &theta(&bracket_b(&x, &y)?), &bracket_b(&theta(&x), &theta(&y))?, input);
    let z = BElem::gamma(random_skew(n, rng, bound), random_matrix(n, 1, rng, bound))?;
    c.eq("theta fixes gamma(c)", &theta(&z), &z, || js(&z));
    c.holds("theta X = X iff X in gamma(c)", (theta(&x) == x) == x.in_gamma_c(), || {
        ("fixed-point set mismatch".into(), js(&x))
    });
    let sym = x.add(&theta(&x)).scale(&Rat::new(1.into(), 2.into()));
    c.holds("(X + theta X)/2 lies in gamma(c)", sym.in_gamma_c(), || ("projection leaves gamma(c)".into(), js(&x)));
    let z2 = BElem::gamma(random_skew(n, rng, bound), random_matrix(n, 1, rng, bound))?;
    c.holds("gamma(c) is a subalgebra", bracket_b(&z, &z2)?.in_gamma_c(), || {
        ("bracket leaves gamma(c)".into(), json!({"Z1": js(&z), "Z2": js(&z2)}))
    });
    Ok(())
}

fn embed_suite(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let x = random_b(n, rng, bound);
    let y = random_b(n, rng, bound);
    let z = random_b(n, rng, bound);
    let input = || json!({"X": js(&x), "Y": js(&y), "Z": js(&z)});
    c.eq("M[X,Y] = [MX, MY]_k", &embed_m(&bracket_b(&x, &y)?), &contracted_bracket(&embed_m(&x), &embed_m(&y))?, input);
    let jacobi = bracket_b(&x, &bracket_b(&y, &z)?)?
        .add(&bracket_b(&y, &bracket_b(&z, &x)?)?)
        .add(&bracket_b(&z, &bracket_b(&x, &y)?)?);
    c.holds("Jacobi identity", jacobi.is_zero(), || ("nonzero Jacobiator".into(), input()));
    c.holds("[X,Y] = -[Y,X]", bracket_b(&x, &y)?.add(&bracket_b(&y, &x)?).is_zero(), || {
        ("bracket not antisymmetric".into(), input())
    });
    c.holds("M is injective", !embed_m(&x).is_zero() || x.is_zero(), || ("kernel".into(), input()));
    let k = random_matrix(n + 1, n + 1, rng, bound);
    let br = contracted_bracket(&k, &embed_m(&x))?;
    c.holds("M(b) is an ideal of k", br.get(n, n).is_zero(), || {
        ("corner of [K, MX] is nonzero".into(), json!({"K": js(&k), "X": js(&x)}))
    });
    if c.sample == 0 {
        let images: Vec<Mat> = basis(kind)
            .iter()
            .map(|e| Mat::row_vector(embed_m(e).into_entries()))
            .collect();
        let rank = Mat::vstack(&images)?.rank();
        c.eq("codim M(b) = 1", &((n + 1) * (n + 1) - rank), &1, || json!({"n": n}));
    }
    Ok(())
}

fn random_square(kind: AlgebraKind, rng: &mut Rng, bound: i64) -> Mat {
    let n = kind.n();
    match kind.family() {
        Family::Io | Family::Iso => random_skew(n, rng, bound),
        Family::Isl => sample_dual_isl(n, rng, bound).y,
        _ => random_matrix(n, n, rng, bound),
    }
}

fn cayley_hamilton(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let x = random_square(kind, rng, bound);
    let cd = char_data(&x)?;
    c.holds("x B_{n-1}(x) = p_n(x) I", cd.cayley_hamilton_residue(&x).is_zero(), || {
        ("nonzero residue".into(), js(&x))
    });
    for k in 1..n {
        let mut closed = x.pow(k)?;
        for i in 1..=k {
            closed = &closed - &x.pow(k - i)?.scale(&cd.p(i));
        }
        c.eq(&format!("B_{k} closed form"), cd.b(k)?, &closed, || js(&x));
    }
    // det(tI - x) = t^n - p_1 t^{n-1} - ... - p_n
    let base = -&x;
    let id = Mat::identity(n);
    for k in 1..=n {
        let coeff = directional_coeff(|m: &Mat| m.det(), &base, &id, n - k, n)?;
        c.eq(&format!("coefficient of t^{} in det(tI - x)", n - k), &coeff, &-cd.p(k), || js(&x));
    }
    Ok(())
}

fn gradient_bk(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let x = random_square(kind, rng, bound);
    let y = random_matrix(n, n, rng, bound);
    let cd = char_data(&x)?;
    for k in 0..n {
        let lhs = (cd.b(k)? * &y).trace();
        let rhs = directional_coeff(|m: &Mat| Ok(char_data(m)?.p(k + 1)), &x, &y, 1, k + 1)?;
        c.eq(&format!("tr(B_{k}(x) y) = d/dt p_{}(x + t y)", k + 1), &lhs, &rhs, || {
            json!({"x": js(&x), "y": js(&y)})
        });
    }
    Ok(())
}

fn skew_parity(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let l = sample_dual_c(n, rng, bound);
    let cd = char_data(&l.y)?;
    for k in (1..=n).filter(|k| k % 2 == 1) {
        c.eq(&format!("p_{k}(y) = 0"), &cd.p(k), &Rat::zero(), || js(&l.y));
    }
    for k in 0..n {
        let b = cd.b(k)?;
        let expected = if k % 2 == 1 { -b } else { b.clone() };
        c.eq(&format!("B_{k}(y)^T parity"), &b.transpose(), &expected, || js(&l.y));
    }
    let restricted = l.to_b();
    for k in 0..n {
        let f = glvv_invariant(k, &restricted)?;
        if k % 2 == 1 {
            c.eq(&format!("F_{k} vanishes on c*"), &f, &Rat::zero(), || js(&l));
        } else {
            c.eq(&format!("F_{k} on c* = psi_{}", k / 2), &f, &psi_invariant(k / 2, &l)?, || js(&l));
        }
    }
    Ok(())
}

fn sbg_generators(kind: AlgebraKind, rng: &mut Rng, bound: i64, c: &mut Checks) -> Result<()> {
    let n = kind.n();
    let l = sample_dual_b(n, rng, bound);
    let g = sample_gl(n, rng, bound)?;
    let moved = coad_b(&GroupElemB { g: g.clone(), u: Mat::zeros(n, 1), vstar: Mat::zeros(1, n) }, &l)?;
    let input = || json!({"g": js(&g), "l": js(&l)});
    let (c0, c1) = (char_data(&l.y)?, char_data(&moved.y)?);
    for i in 1..=n {
        c.eq(&format!("p_{i}(g y g^-1) = p_{i}(y)"), &c1.p(i), &c0.p(i), input);
    }
    let krylov = |p: &DualPointB, j: usize| -> Result<Rat> {
        Ok((&(&p.wstar * &p.y.pow(j)?) * &p.xi).get(0, 0).clone())
    };
    for j in 0..n {
        c.eq(&format!("w* y^{j} xi is GL(n)-invariant"), &krylov(&moved, j)?, &krylov(&l, j)?, input);
    }
    for k in 0..n {
        let mut rhs = krylov(&l, k)?;
        for i in 1..=k {
            rhs -= c0.p(i) * krylov(&l, k - i)?;
        }
        c.eq(&format!("F_{k} in terms of p_i and w* y^j xi"), &glvv_invariant(k, &l)?, &rhs, || js(&l));
    }
    Ok(())
}
