//! Exact rational linear algebra: subsets, dense matrices, minors and
//! echelon forms.
//!
//! Every matrix here is small (at most ~10×10), so everything is dense and
//! row-major. Determinants are computed fraction-free with Bareiss
//! elimination after lifting each row to the integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{bail_arg, Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rat = BigRational;

pub fn rat(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p"` or `"p/q"` (surrounding whitespace allowed).
pub fn parse_rat(text: &str) -> Result<Rat> {
    let text = text.trim();
    let parse_int = |s: &str| {
        BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("not a rational number: {text:?}")))
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rat::new(parse_int(p)?, q))
        }
        None => Ok(Rat::from_integer(parse_int(text)?)),
    }
}

/// Integer power of a rational, `0^0 = 1`.
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// A `k`-element subset of `[n] = {1, …, n}`, stored as a strictly
/// increasing list of 1-based members.
///
/// The derived ordering compares member lists lexicographically, which is the
/// canonical iteration order for subsets of equal size.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetIndex {
    n: usize,
    members: Vec<usize>,
}

impl SubsetIndex {
    pub fn new(n: usize, members: Vec<usize>) -> Result<Self> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            bail_arg!("subset members {members:?} are not strictly increasing");
        }
        if members.iter().any(|&m| m == 0 || m > n) {
            bail_arg!("subset members {members:?} not within [1, {n}]");
        }
        Ok(SubsetIndex { n, members })
    }

    /// Builds a subset from unsorted members.
    pub fn from_unsorted(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        Self::new(n, members)
    }

    /// The interval `[1, k]` inside `[n]`.
    pub fn initial(n: usize, k: usize) -> Self {
        assert!(k <= n);
        SubsetIndex { n, members: (1..=k).collect() }
    }

    /// Parses a comma-separated list such as `"1,2,4"`; the empty string is
    /// the empty subset.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Self::new(n, Vec::new());
        }
        let members = text
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad subset {text:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, members)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Sum of the members.
    pub fn sum(&self) -> usize {
        self.members.iter().sum()
    }

    /// `[n] ∖ self`.
    pub fn complement(&self) -> Self {
        let members = (1..=self.n).filter(|i| !self.contains(*i)).collect();
        SubsetIndex { n: self.n, members }
    }

    /// Zero-based positions, convenient for indexing matrices.
    pub fn zero_based(&self) -> Vec<usize> {
        self.members.iter().map(|m| m - 1).collect()
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<SubsetIndex> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        out.push(SubsetIndex { n, members: current.clone() });
        // Advance the rightmost member that still has room.
        let mut pos = k;
        while pos > 0 && current[pos - 1] == n - k + pos {
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
        current[pos - 1] += 1;
        for j in pos..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            bail_arg!("{} entries given for a {rows}x{cols} matrix", entries.len());
        }
        Ok(Mat { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, entries: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rat::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rat]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            bail_arg!("ragged rows");
        }
        let nrows = rows.len();
        Ok(Mat { rows: nrows, cols, entries: rows.into_iter().flatten().collect() })
    }

    /// Integer matrix literal, e.g. `Mat::from_ints(&[[1, 2], [3, 4]])`.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows = rows.iter().map(|r| r.as_ref().iter().map(|&x| rat(x)).collect()).collect();
        Self::from_rows(rows).expect("integer literal rows must be rectangular")
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            bail_arg!("column length differs from {rows}");
        }
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rat) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rat>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            bail_arg!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols
            );
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if v.len() != self.cols {
            bail_arg!("vector of length {} against {} columns", v.len(), self.cols);
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Submatrix on zero-based row and column positions, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// The leading `k` columns.
    pub fn first_columns(&self, k: usize) -> Mat {
        let cols: Vec<usize> = (0..k.min(self.cols)).collect();
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, &cols)
    }

    pub fn push_column(&mut self, column: &[Rat]) -> Result<()> {
        if column.len() != self.rows {
            bail_arg!("column of length {} for {} rows", column.len(), self.rows);
        }
        let mut cols = self.columns();
        cols.push(column.to_vec());
        *self = Mat::from_columns(self.rows, &cols)?;
        Ok(())
    }

    pub fn scale_column(&mut self, j: usize, factor: &Rat) {
        for i in 0..self.rows {
            let v = self.get(i, j) * factor;
            self.set(i, j, v);
        }
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            bail_arg!("determinant of a non-square {}x{} matrix", self.rows, self.cols);
        }
        Ok(bareiss_det(self))
    }

    /// `Δ_{I,J}(A)`: the determinant of the rows `I` and columns `J`.
    pub fn minor(&self, rows: &SubsetIndex, cols: &SubsetIndex) -> Result<Rat> {
        if rows.len() != cols.len() {
            bail_arg!("minor with {} rows and {} columns", rows.len(), cols.len());
        }
        if rows.members().last().is_some_and(|&r| r > self.rows) {
            bail_arg!("row subset {rows} exceeds {} rows", self.rows);
        }
        if cols.members().last().is_some_and(|&c| c > self.cols) {
            bail_arg!("column subset {cols} exceeds {} columns", self.cols);
        }
        Ok(bareiss_det(&self.select(&rows.zero_based(), &cols.zero_based())))
    }

    /// The left-justified minor `Δ_{I,[k]}(A)` with `k = |I|`.
    pub fn left_minor(&self, rows: &SubsetIndex) -> Result<Rat> {
        if rows.len() > self.cols {
            bail_arg!("left-justified minor of order {} with {} columns", rows.len(), self.cols);
        }
        self.minor(rows, &SubsetIndex::initial(self.cols, rows.len()))
    }

    /// Every minor of the given order as `(I, J, Δ_{I,J})`, lexicographic in
    /// `(I, J)`.
    pub fn all_minors(&self, order: usize) -> Result<Vec<(SubsetIndex, SubsetIndex, Rat)>> {
        if order == 0 || order > self.rows.min(self.cols) {
            bail_arg!(
                "minor order {order} outside [1, {}]",
                self.rows.min(self.cols)
            );
        }
        let row_sets = subsets(self.rows, order);
        let col_sets = subsets(self.cols, order);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for i in &row_sets {
            for j in &col_sets {
                let value = bareiss_det(&self.select(&i.zero_based(), &j.zero_based()));
                out.push((i.clone(), j.clone(), value));
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the zero-based pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &factor * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced column echelon form and its pivot rows.
    ///
    /// Uses left-to-right column operations only, so the column span is
    /// unchanged. Zero columns are dropped: the result has exactly
    /// `rank(A)` columns, and column `j` has a 1 in pivot row `I_j` and zeros
    /// in every other pivot row and above `I_j`. The pivot set `I` is the
    /// lexicographically minimal row set with a nonzero maximal minor.
    pub fn column_echelon(&self) -> (Mat, SubsetIndex) {
        let (r, pivots) = self.transpose().rref();
        let kept: Vec<usize> = (0..pivots.len()).collect();
        let all: Vec<usize> = (0..r.cols).collect();
        let echelon = r.select(&kept, &all).transpose();
        let pivot_rows = SubsetIndex { n: self.rows, members: pivots.iter().map(|p| p + 1).collect() };
        (echelon, pivot_rows)
    }

    /// Basis of `{x : A x = 0}` as the columns of a `cols × d` matrix.
    pub fn nullspace(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(self.cols, free.len());
        for (b, &f) in free.iter().enumerate() {
            basis.set(f, b, Rat::one());
            for (row, &p) in pivots.iter().enumerate() {
                basis.set(p, b, -r.get(row, f).clone());
            }
        }
        basis
    }

    /// Coefficients `x` with `A x = v`, if `v` lies in the column span.
    pub fn solve(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        if v.len() != self.rows {
            return None;
        }
        let mut aug = self.columns();
        aug.push(v.to_vec());
        let aug = Mat::from_columns(self.rows, &aug).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn in_column_span(&self, v: &[Rat]) -> bool {
        self.solve(v).is_some()
    }

    /// Whether every column of `other` lies in the column span of `self`.
    pub fn column_span_contains(&self, other: &Mat) -> bool {
        other.rows == self.rows && other.columns().iter().all(|c| self.in_column_span(c))
    }

    pub fn column_span_eq(&self, other: &Mat) -> bool {
        self.column_span_contains(other) && other.column_span_contains(self)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Serializes any `Display` value as its string form, for use with
/// `#[serde(serialize_with = "...")]`.
pub fn serialize_display<T: fmt::Display, S: Serializer>(
    value: &T,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}

impl Serialize for Mat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Mat::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Least common multiple of the denominators in a row.
fn row_denominator(row: &[Rat]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn bareiss_det(m: &Mat) -> Rat {
    let n = m.rows;
    if n == 0 {
        return Rat::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let d = row_denominator(row);
        a.push(row.iter().map(|x| x.numer() * (&d / x.denom())).collect());
        scale *= d;
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    let det = if negate { -det } else { det };
    Rat::new(det, scale)
}

/// Checks `Δ_{I,J}(AB) = Σ_K Δ_{I,K}(A) Δ_{K,J}(B)` for every `I`, `J` of
/// size `k`.
pub fn cauchy_binet_check(a: &Mat, b: &Mat, k: usize) -> Result<bool> {
    if a.cols() != b.rows() {
        bail_arg!("inner dimensions {} and {} differ", a.cols(), b.rows());
    }
    if k == 0 || k > a.rows().min(b.cols()) {
        bail_arg!("order {k} outside [1, {}]", a.rows().min(b.cols()));
    }
    let ab = a.mul(b)?;
    let middle = subsets(a.cols(), k);
    for i in subsets(a.rows(), k) {
        for j in subsets(b.cols(), k) {
            let lhs = ab.minor(&i, &j)?;
            let mut rhs = Rat::zero();
            for m in &middle {
                rhs += a.minor(&i, m)? * b.minor(m, &j)?;
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sign of a rational: -1, 0 or 1.
pub fn signum(x: &Rat) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
