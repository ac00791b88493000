//! Characteristic data against independent oracles: sums of principal
//! minors for `p_k`, Newton forward differences for derivatives.

use num::{One, Zero};
use proptest::prelude::*;

use coinvar::charpoly::{bordered_char_identities, char_data, directional_coeff};
use coinvar::exactmat::{Mat, Rat};
use coinvar::invariants::canonical_pair;
use coinvar::rat;

fn int_mat(rows: usize, cols: usize, bound: i64) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-bound..=bound, rows * cols)
        .prop_map(move |v| Mat::from_vec(rows, cols, v.into_iter().map(rat).collect()).unwrap())
}

fn square(max_n: usize) -> impl Strategy<Value = Mat> {
    (1..=max_n).prop_flat_map(|n| int_mat(n, n, 3))
}

fn skew(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-3i64..=3, n * (n - 1) / 2).prop_map(move |v| {
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

/// Sum of the principal `k × k` minors.
fn principal_minor_sum(x: &Mat, k: usize) -> Rat {
    fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            subsets(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    subsets(x.rows(), k, 0, &mut Vec::new(), &mut all);
    all.iter()
        .map(|idx| {
            let mut m = Mat::zeros(k, k);
            for (a, &i) in idx.iter().enumerate() {
                for (b, &j) in idx.iter().enumerate() {
                    m.set(a, b, x.get(i, j).clone());
                }
            }
            m.det().unwrap()
        })
        .fold(Rat::zero(), |acc, d| acc + d)
}

/// `f'(0)` of a polynomial of degree at most `d` from its values at
/// `0..=d`: `Σ_{m=1}^{d} (−1)^{m+1} Δ^m f(0) / m`.
fn derivative_at_zero(values: &[Rat]) -> Rat {
    let mut diffs = values.to_vec();
    let mut acc = Rat::zero();
    for m in 1..values.len() {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        let term = &diffs[0] / rat(m as i64);
        if m % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coefficients_are_signed_minor_sums(x in square(5)) {
        let cd = char_data(&x).unwrap();
        for k in 1..=x.rows() {
            // det(tI − x) = Σ (−1)^k E_k t^{n−k} = t^n − Σ p_k t^{n−k}
            let e = principal_minor_sum(&x, k);
            let expected = if k % 2 == 1 { e } else { -e };
            prop_assert_eq!(cd.p(k), expected);
        }
    }

    #[test]
    fn closed_form_and_cayley_hamilton(x in square(5)) {
        let n = x.rows();
        let cd = char_data(&x).unwrap();
        prop_assert_eq!(cd.b(0).unwrap(), &Mat::identity(n));
        for k in 1..n {
            let mut closed = x.pow(k).unwrap();
            for i in 1..=k {
                closed = &closed - &x.pow(k - i).unwrap().scale(&cd.p(i));
            }
            prop_assert_eq!(cd.b(k).unwrap(), &closed);
        }
        prop_assert!(cd.cayley_hamilton_residue(&x).is_zero());
        let mut top = x.pow(n).unwrap();
        for i in 1..=n {
            top = &top - &x.pow(n - i).unwrap().scale(&cd.p(i));
        }
        prop_assert!(top.is_zero());
    }

    #[test]
    fn gradient_of_coefficients(pair in (1usize..=4).prop_flat_map(|n| (int_mat(n, n, 3), int_mat(n, n, 3)))) {
        let (x, y) = pair;
        let cd = char_data(&x).unwrap();
        for k in 0..x.rows() {
            let values: Vec<Rat> = (0..=k + 1)
                .map(|t| char_data(&(&x + &y.scale(&rat(t as i64)))).unwrap().p(k + 1))
                .collect();
            prop_assert_eq!((cd.b(k).unwrap() * &y).trace(), derivative_at_zero(&values));
        }
    }

    #[test]
    fn directional_coefficients_of_a_known_polynomial(coeffs in prop::collection::vec(-5i64..=5, 1..7)) {
        // f(m) = Σ c_j m^j on 1×1 matrices, so f(0 + t·1) has coefficients c_j
        let cs: Vec<Rat> = coeffs.iter().map(|&c| rat(c)).collect();
        let f = |m: &Mat| -> coinvar::Result<Rat> {
            let x = m.get(0, 0).clone();
            let mut acc = Rat::zero();
            let mut pow = Rat::one();
            for c in &cs {
                acc += c * &pow;
                pow *= &x;
            }
            Ok(acc)
        };
        let base = Mat::zeros(1, 1);
        let dir = Mat::identity(1);
        let d = cs.len() - 1;
        for (j, c) in cs.iter().enumerate() {
            prop_assert_eq!(&directional_coeff(&f, &base, &dir, j, d + 2).unwrap(), c);
        }
        prop_assert!(directional_coeff(&f, &base, &dir, d + 1, d + 2).unwrap().is_zero());
    }

    #[test]
    fn skew_parity(y in (1usize..=6).prop_flat_map(skew)) {
        let cd = char_data(&y).unwrap();
        for k in 1..=y.rows() {
            if k % 2 == 1 {
                prop_assert!(cd.p(k).is_zero());
            }
        }
        for k in 0..y.rows() {
            let b = cd.b(k).unwrap();
            if k % 2 == 1 {
                prop_assert!(b.is_skew());
            } else {
                prop_assert_eq!(&b.transpose(), b);
            }
        }
    }

    #[test]
    fn bordered_identities(data in (1usize..=5).prop_flat_map(|n| (int_mat(n, n, 3), int_mat(n, 1, 3), int_mat(1, n, 3), -3i64..=3))) {
        let (y, v, w, a) = data;
        let check = bordered_char_identities(&y, &v, &w, &rat(a)).unwrap();
        prop_assert!(check.holds(), "{:?}", check.first_failure);
        prop_assert_eq!(check.checks, y.rows() + 1);
    }
}

#[test]
fn canonical_covector_shifts_under_j() {
    for n in 1..=6 {
        let cp = canonical_pair(n);
        let cd = char_data(&cp.j).unwrap();
        for k in 0..n {
            // J nilpotent: every p_k(J) vanishes and B_k(J) = J^k
            assert_eq!(cd.b(k).unwrap(), &cp.j.pow(k).unwrap());
            assert_eq!(&cp.enstar * &cp.j.pow(k).unwrap(), Mat::basis_row(n, n - 1 - k));
        }
        assert!((&cp.enstar * &cp.j.pow(n).unwrap()).is_zero());
    }
}
