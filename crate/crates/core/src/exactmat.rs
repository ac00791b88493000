//! Exact rational scalars and dense matrices.
//!
//! Every scalar in the crate is a [`Rat`], a normalized arbitrary-precision
//! fraction, so equality is structural and no operation rounds. Determinant
//! and rank clear row denominators and run fraction-free (Bareiss)
//! elimination over the integers; inverse and solve use Gauss–Jordan over
//! the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; zero is `0/1`.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Rational `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    if let Some((_, d)) = s.split_once('/') {
        if d.trim().parse::<BigInt>().map(|d| d.is_zero()).unwrap_or(false) {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
    }
    Rat::from_str(s).map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
}

/// `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Dense row-major matrix of rationals.
///
/// Row vectors (`1×n`) and column vectors (`n×1`) are ordinary matrices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rat::one();
        }
        m
    }

    /// Builds a matrix from row-major entries. Fails if the length is not
    /// `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Parse(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged rows".into()));
        }
        Mat::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer matrix literal. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows.iter().flat_map(|row| row.iter().map(|&v| rat(v))).collect();
        Mat { rows: r, cols: c, data }
    }

    pub fn diag(entries: &[Rat]) -> Self {
        let n = entries.len();
        let mut m = Mat::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Row vector `(v_1, …, v_n)`.
    pub fn row_vector(entries: Vec<Rat>) -> Self {
        Mat {
            rows: 1,
            cols: entries.len(),
            data: entries,
        }
    }

    /// Column vector with the given entries.
    pub fn col_vector(entries: Vec<Rat>) -> Self {
        Mat {
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    /// The `i`-th standard basis row `e_i*` (0-based `i`).
    pub fn basis_row(n: usize, i: usize) -> Self {
        let mut m = Mat::zeros(1, n);
        m.data[i] = Rat::one();
        m
    }

    /// The `i`-th standard basis column `e_i` (0-based `i`).
    pub fn basis_col(n: usize, i: usize) -> Self {
        let mut m = Mat::zeros(n, 1);
        m.data[i] = Rat::one();
        m
    }

    /// Elementary matrix `E_ij` (0-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        m.data[i * n + j] = Rat::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Rat> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> Mat {
        Mat::row_vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn col(&self, j: usize) -> Mat {
        Mat::col_vector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).fold(Rat::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (i..self.cols).all(|j| *self.get(i, j) == -self.get(j, i).clone())
            })
    }

    /// Stacks rows (all of equal width) vertically.
    pub fn vstack(parts: &[Mat]) -> Result<Mat> {
        let cols = parts.first().map_or(0, Mat::cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(Error::DimensionMismatch {
                    op: "vstack",
                    left: (rows, cols),
                    right: p.shape(),
                });
            }
            rows += p.rows;
            data.extend_from_slice(&p.data);
        }
        Ok(Mat { rows, cols, data })
    }

    /// The `(n+1)×(n+1)` matrix `[[y, col], [row, corner]]`.
    pub fn bordered(y: &Mat, col: &Mat, row: &Mat, corner: &Rat) -> Result<Mat> {
        let n = y.rows;
        if !y.is_square() {
            return Err(Error::NotSquare {
                op: "bordered",
                rows: y.rows,
                cols: y.cols,
            });
        }
        if col.shape() != (n, 1) {
            return Err(Error::DimensionMismatch {
                op: "bordered",
                left: y.shape(),
                right: col.shape(),
            });
        }
        if row.shape() != (1, n) {
            return Err(Error::DimensionMismatch {
                op: "bordered",
                left: y.shape(),
                right: row.shape(),
            });
        }
        let mut x = Mat::zeros(n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                x.set(i, j, y.get(i, j).clone());
            }
            x.set(i, n, col.data[i].clone());
            x.set(n, i, row.data[i].clone());
        }
        x.set(n, n, corner.clone());
        Ok(x)
    }

    /// Top-left `k×k` block.
    pub fn leading_block(&self, k: usize) -> Mat {
        let mut m = Mat::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Matrix product; errors when `self.cols != rhs.rows`.
    pub fn matmul(&self, rhs: &Mat) -> Result<Mat> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Mat, op: &'static str, f: impl Fn(&Rat, &Rat) -> Rat) -> Result<Mat> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, rhs: &Mat) -> Result<Mat> {
        self.zip_with(rhs, "add", |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Mat) -> Result<Mat> {
        self.zip_with(rhs, "sub", |a, b| a - b)
    }

    /// `self^k` for a square matrix.
    pub fn pow(&self, k: usize) -> Result<Mat> {
        self.require_square("pow")?;
        let mut out = Mat::identity(self.rows);
        for _ in 0..k {
            out = out.matmul(self)?;
        }
        Ok(out)
    }

    /// Commutator `self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Mat) -> Result<Mat> {
        self.matmul(rhs)?.checked_sub(&rhs.matmul(self)?)
    }

    fn require_square(&self, op: &'static str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant.
    pub fn det(&self) -> Result<Rat> {
        self.require_square("det")?;
        if self.rows == 0 {
            return Ok(Rat::one());
        }
        let (mut ints, scale) = self.integer_rows();
        let echelon = bareiss(&mut ints, self.cols);
        if echelon.rank < self.rows {
            return Ok(Rat::zero());
        }
        let n = self.rows;
        let mut d = ints[n - 1][n - 1].clone();
        if echelon.swaps % 2 == 1 {
            d = -d;
        }
        Ok(Rat::new(d, scale))
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let (mut ints, _) = self.integer_rows();
        bareiss(&mut ints, self.cols).rank
    }

    /// Multiplies every row by the lcm of its denominators. Returns the
    /// integer rows and the product of the multipliers.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let l = row.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                scale *= &l;
                row.iter().map(|r| r.numer() * (&l / r.denom())).collect()
            })
            .collect();
        (rows, scale)
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Mat> {
        self.require_square("inverse")?;
        self.solve(&Mat::identity(self.rows))
    }

    /// Solves `self · X = rhs` for square nonsingular `self`.
    pub fn solve(&self, rhs: &Mat) -> Result<Mat> {
        self.require_square("solve")?;
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch {
                op: "solve",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let n = self.rows;
        let m = rhs.cols;
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row = self.data[i * n..(i + 1) * n].to_vec();
                row.extend_from_slice(&rhs.data[i * m..(i + 1) * m]);
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(c, p);
            let inv = a[c][c].recip();
            for x in a[c].iter_mut() {
                *x *= &inv;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                let (pivot, target) = if r < c {
                    let (lo, hi) = a.split_at_mut(c);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[c], &mut hi[0])
                };
                for (t, p) in target.iter_mut().zip(pivot.iter()).skip(c) {
                    if !p.is_zero() {
                        *t -= &f * p;
                    }
                }
            }
        }
        let data = a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
        Ok(Mat { rows: n, cols: m, data })
    }

    /// Pfaffian of an even skew-symmetric matrix, normalized so that
    /// `Pf([[0, a], [-a, 0]]) = a`.
    ///
    /// Skew elimination by unimodular congruences: each step pivots a
    /// nonzero `(k, k+1)` entry into place (a transposition flips the sign),
    /// clears rows `k` and `k+1` beyond the pivot block and multiplies the
    /// pivot into the result.
    pub fn pfaffian(&self) -> Result<Rat> {
        self.require_square("pfaffian")?;
        if self.rows % 2 == 1 {
            return Err(Error::OddSize(self.rows));
        }
        if !self.is_skew() {
            return Err(Error::NotSkew);
        }
        let m = self.rows;
        let mut a: Vec<Vec<Rat>> = (0..m).map(|i| self.data[i * m..(i + 1) * m].to_vec()).collect();
        let mut pf = Rat::one();
        let mut k = 0;
        while k < m {
            let Some(j) = (k + 1..m).find(|&j| !a[k][j].is_zero()) else {
                return Ok(Rat::zero());
            };
            if j != k + 1 {
                a.swap(j, k + 1);
                for row in a.iter_mut() {
                    row.swap(j, k + 1);
                }
                pf = -pf;
            }
            let p = a[k][k + 1].clone();
            pf *= &p;
            for i in k + 2..m {
                // row_i -= c1·row_{k+1}, col_i -= c1·col_{k+1}
                let c1 = &a[k][i] / &p;
                if !c1.is_zero() {
                    congruence_axpy(&mut a, i, k + 1, &c1);
                }
                // row_i -= c2·row_k, col_i -= c2·col_k
                let c2 = -(&a[k + 1][i] / &p);
                if !c2.is_zero() {
                    congruence_axpy(&mut a, i, k, &c2);
                }
            }
            k += 2;
        }
        Ok(pf)
    }
}

/// Applies `row_i -= c·row_src` then `col_i -= c·col_src`.
fn congruence_axpy(a: &mut [Vec<Rat>], i: usize, src: usize, c: &Rat) {
    let m = a.len();
    for j in 0..m {
        let v = c * &a[src][j];
        a[i][j] -= v;
    }
    for row in a.iter_mut() {
        let v = c * &row[src];
        row[i] -= v;
    }
}

struct Echelon {
    rank: usize,
    swaps: usize,
}

/// In-place fraction-free row echelon form. Every division is exact.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> Echelon {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot.clone();
        r += 1;
    }
    Echelon { rank: r, swaps }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;
    /// Panics on shape mismatch; use [`Mat::checked_add`] for fallible input.
    fn add(self, rhs: &'a Mat) -> Mat {
        self.checked_add(rhs).expect("matrix add shape mismatch")
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn sub(self, rhs: &'a Mat) -> Mat {
        self.checked_sub(rhs).expect("matrix sub shape mismatch")
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &'a Mat) -> Mat {
        self.matmul(rhs).expect("matrix mul shape mismatch")
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

/// Exact product `a·b`.
pub fn mat_mul(a: &Mat, b: &Mat) -> Result<Mat> {
    a.matmul(b)
}

/// Exact determinant of a square matrix.
pub fn det(a: &Mat) -> Result<Rat> {
    a.det()
}

pub fn rank(a: &Mat) -> usize {
    a.rank()
}

pub fn inverse(a: &Mat) -> Result<Mat> {
    a.inverse()
}

pub fn pfaffian(a: &Mat) -> Result<Rat> {
    a.pfaffian()
}

/// Sign of a rational as `-1`, `0` or `1`.
pub fn signum(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Serialize, Deserialize)]
struct MatJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| (0..self.cols).map(|j| format_rat(self.get(i, j))).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MatJson::deserialize(d)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(D::Error::custom(format!(
                "entries do not match declared shape {}x{}",
                raw.rows, raw.cols
            )));
        }
        let data = raw
            .entries
            .iter()
            .flatten()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(Mat {
            rows: raw.rows,
            cols: raw.cols,
            data,
        })
    }
}

/// Serde adapters encoding [`Rat`] as `"p/q"` strings, for use with
/// `#[serde(with = "...")]`.
pub mod rat_serde {
    use super::{format_rat, parse_rat, Rat};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        format_rat(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rat(&raw).map_err(serde::de::Error::custom)
    }

    /// The same encoding for sequences.
    pub mod vec {
        use super::{format_rat, parse_rat, Rat};
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
            v.iter().map(format_rat).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rat>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|x| parse_rat(x).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let i2 = Mat::identity(2);
        assert_eq!(mat_mul(&i2, &i2).unwrap(), i2);
        let nil = Mat::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(mat_mul(&nil, &nil).unwrap().is_zero());
        // e_2* J = e_1* for the lower shift J
        let j = Mat::from_i64(&[&[0, 0], &[1, 0]]);
        assert_eq!(mat_mul(&Mat::basis_row(2, 1), &j).unwrap(), Mat::basis_row(2, 0));
        assert!(matches!(
            mat_mul(&Mat::zeros(2, 3), &Mat::zeros(2, 3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn determinants() {
        assert_eq!(det(&Mat::identity(3)).unwrap(), rat(1));
        assert_eq!(det(&Mat::from_i64(&[&[0, 1], &[1, 0]])).unwrap(), rat(-1));
        assert_eq!(det(&Mat::diag(&[rat(2), frac(1, 2)])).unwrap(), rat(1));
        assert_eq!(det(&Mat::zeros(0, 0)).unwrap(), rat(1));
        assert!(matches!(det(&Mat::zeros(2, 3)), Err(Error::NotSquare { .. })));
        let m = Mat::from_rows(vec![
            vec![frac(1, 3), frac(2, 5), rat(1)],
            vec![rat(0), frac(-7, 2), rat(4)],
            vec![rat(2), rat(1), frac(1, 6)],
        ])
        .unwrap();
        // cofactor expansion along the first row
        let expected = frac(1, 3) * (frac(-7, 2) * frac(1, 6) - rat(4))
            - frac(2, 5) * (rat(0) * frac(1, 6) - rat(4) * rat(2))
            + rat(1) * (rat(0) - frac(-7, 2) * rat(2));
        assert_eq!(det(&m).unwrap(), expected);
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&Mat::zeros(3, 3)), 0);
        assert_eq!(rank(&Mat::identity(4)), 4);
        let rows = Mat::vstack(&[Mat::basis_row(3, 0), Mat::basis_row(3, 0)]).unwrap();
        assert_eq!(rank(&rows), 1);
        assert_eq!(rank(&Mat::from_i64(&[&[0, 0, 1, 2], &[0, 0, 2, 4], &[1, 0, 0, 0]])), 2);
    }

    #[test]
    fn inverses() {
        assert_eq!(inverse(&Mat::identity(3)).unwrap(), Mat::identity(3));
        assert_eq!(
            inverse(&Mat::diag(&[rat(2), rat(3)])).unwrap(),
            Mat::diag(&[frac(1, 2), frac(1, 3)])
        );
        assert_eq!(
            inverse(&Mat::from_i64(&[&[1, 1], &[0, 1]])).unwrap(),
            Mat::from_i64(&[&[1, -1], &[0, 1]])
        );
        assert_eq!(inverse(&Mat::from_i64(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
    }

    #[test]
    fn pfaffians() {
        assert_eq!(pfaffian(&Mat::from_i64(&[&[0, 5], &[-5, 0]])).unwrap(), rat(5));
        assert_eq!(pfaffian(&Mat::zeros(4, 4)).unwrap(), rat(0));
        assert_eq!(pfaffian(&Mat::zeros(0, 0)).unwrap(), rat(1));
        assert_eq!(pfaffian(&Mat::zeros(3, 3)), Err(Error::OddSize(3)));
        assert_eq!(pfaffian(&Mat::from_i64(&[&[0, 1], &[2, 0]])), Err(Error::NotSkew));
    }

    #[test]
    fn json_encoding() {
        let m = Mat::from_rows(vec![vec![frac(1, 2), rat(-3)], vec![rat(0), frac(-4, 6)]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":2,"cols":2,"entries":[["1/2","-3"],["0","-2/3"]]}"#);
        let back: Mat = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Mat>(r#"{"rows":1,"cols":2,"entries":[["1"]]}"#).is_err());
        assert!(serde_json::from_str::<Mat>(r#"{"rows":1,"cols":1,"entries":[["1/0"]]}"#).is_err());
        assert!(serde_json::from_str::<Mat>(r#"{"rows":1,"cols":1,"entries":[["x"]]}"#).is_err());
    }
}
