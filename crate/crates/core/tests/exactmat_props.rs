//! Properties of the exact matrix kernel against independent oracles:
//! Leibniz expansion for the determinant, plain Gaussian elimination for the
//! rank and the perfect-matching sum for the Pfaffian.

use num::{One, Signed, Zero};
use proptest::prelude::*;

use coinvar::exactmat::{format_rat, frac, parse_rat, Mat, Rat};
use coinvar::{rat, Error};

fn int_mat(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-bound..=bound, rows * cols)
        .prop_map(move |v| Mat::from_vec(rows, cols, v.into_iter().map(rat).collect()).unwrap())
}

fn square(max_n: usize) -> impl Strategy<Value = Mat> {
    (1..=max_n).prop_flat_map(|n| int_mat(n, n, 3))
}

fn frac_mat(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec((-9i64..=9, 1i64..=5), rows * cols).prop_map(move |v| {
        Mat::from_vec(rows, cols, v.into_iter().map(|(p, q)| frac(p, q)).collect()).unwrap()
    })
}

fn skew(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-3i64..=3, n * (n.saturating_sub(1)) / 2).prop_map(move |v| {
        let mut m = Mat::zeros(n, n);
        let mut it = v.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let x = rat(it.next().unwrap());
                m.set(j, i, -x.clone());
                m.set(i, j, x);
            }
        }
        m
    })
}

/// Leibniz expansion over all permutations.
fn leibniz(m: &Mat) -> Rat {
    fn go(m: &Mat, row: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, acc: &mut Rat) {
        let n = m.rows();
        if row == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let mut term = Rat::one();
            for (i, &j) in perm.iter().enumerate() {
                term *= m.get(i, j);
            }
            if inversions % 2 == 1 {
                term = -term;
            }
            *acc += term;
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                perm.push(j);
                go(m, row + 1, used, perm, acc);
                perm.pop();
                used[j] = false;
            }
        }
    }
    let mut acc = Rat::zero();
    go(m, 0, &mut vec![false; m.rows()], &mut Vec::new(), &mut acc);
    acc
}

/// Rank by textbook row reduction over the rationals.
fn rank_oracle(m: &Mat) -> usize {
    let mut rows: Vec<Vec<Rat>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &rows[rank][col];
                for c in 0..m.cols() {
                    let sub = &f * &rows[rank][c];
                    rows[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Pfaffian as the signed sum over perfect matchings, expanding along the
/// first index.
fn pfaffian_oracle(m: &Mat) -> Rat {
    fn go(m: &Mat, idx: &[usize]) -> Rat {
        if idx.is_empty() {
            return Rat::one();
        }
        let first = idx[0];
        let mut acc = Rat::zero();
        for k in 1..idx.len() {
            let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
            let term = m.get(first, idx[k]) * go(m, &rest);
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
    let idx: Vec<usize> = (0..m.rows()).collect();
    go(m, &idx)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn det_matches_leibniz(m in square(5)) {
        prop_assert_eq!(m.det().unwrap(), leibniz(&m));
    }

    #[test]
    fn det_with_fractions_matches_leibniz(m in (1usize..=4).prop_flat_map(|n| frac_mat(n, n))) {
        prop_assert_eq!(m.det().unwrap(), leibniz(&m));
    }

    #[test]
    fn det_is_multiplicative(pair in (1usize..=5).prop_flat_map(|n| (int_mat(n, n, 3), int_mat(n, n, 3)))) {
        let (a, b) = pair;
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn rank_matches_elimination(m in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| int_mat(r, c, 2))) {
        prop_assert_eq!(m.rank(), rank_oracle(&m));
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn low_rank_products(pair in (2usize..=5, 1usize..=3).prop_flat_map(|(n, k)| (int_mat(n, k, 3), int_mat(k, n, 3)))) {
        let (a, b) = pair;
        let p = &a * &b;
        prop_assert!(p.rank() <= a.cols());
        prop_assert_eq!(p.rank(), rank_oracle(&p));
    }

    #[test]
    fn inverse_or_singular(m in (1usize..=5).prop_flat_map(|n| frac_mat(n, n))) {
        let n = m.rows();
        match m.inverse() {
            Ok(inv) => {
                prop_assert!(!m.det().unwrap().is_zero());
                prop_assert_eq!(&m * &inv, Mat::identity(n));
                prop_assert_eq!(&inv * &m, Mat::identity(n));
                prop_assert_eq!(inv.det().unwrap() * m.det().unwrap(), Rat::one());
            }
            Err(e) => {
                prop_assert_eq!(e, Error::Singular);
                prop_assert!(m.det().unwrap().is_zero());
            }
        }
    }

    #[test]
    fn solve_inverts_products(pair in (1usize..=5).prop_flat_map(|n| (int_mat(n, n, 3), int_mat(n, 1, 3)))) {
        let (a, x) = pair;
        if !a.det().unwrap().is_zero() {
            let b = &a * &x;
            prop_assert_eq!(a.solve(&b).unwrap(), x);
        }
    }

    #[test]
    fn pfaffian_matches_matchings(m in (0usize..=3).prop_flat_map(|h| skew(2 * h))) {
        prop_assert_eq!(m.pfaffian().unwrap(), pfaffian_oracle(&m));
    }

    #[test]
    fn pfaffian_squares_to_det(m in (1usize..=4).prop_flat_map(|h| skew(2 * h))) {
        let pf = m.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, m.det().unwrap());
    }

    #[test]
    fn pfaffian_congruence(pair in (1usize..=3).prop_flat_map(|h| (skew(2 * h), int_mat(2 * h, 2 * h, 2)))) {
        let (a, b) = pair;
        let congruent = &(&b * &a) * &b.transpose();
        prop_assert_eq!(congruent.pfaffian().unwrap(), b.det().unwrap() * a.pfaffian().unwrap());
    }

    #[test]
    fn odd_skew_is_singular(m in (0usize..=2).prop_flat_map(|h| skew(2 * h + 1))) {
        prop_assert!(m.det().unwrap().is_zero());
        prop_assert_eq!(m.pfaffian(), Err(Error::OddSize(m.rows())));
    }

    #[test]
    fn json_round_trip(m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| frac_mat(r, c))) {
        let text = serde_json::to_string(&m).unwrap();
        let back: Mat = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn rational_text_round_trip(p in -1000i64..=1000, q in 1i64..=1000) {
        let r = frac(p, q);
        let text = format_rat(&r);
        prop_assert_eq!(parse_rat(&text).unwrap(), r.clone());
        prop_assert_eq!(text.contains('/'), !r.is_integer());
        if r.is_negative() {
            prop_assert!(text.starts_with('-'));
        }
    }
}
