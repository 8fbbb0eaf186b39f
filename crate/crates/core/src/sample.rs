//! Seeded random generators for totally positive matrices, positive flags,
//! Grassmannian points, nested pairs and cells.

use rand::Rng;

use crate::coxeter::{reduced_word, Perm};
use crate::error::Result;
use crate::exact::{rat, ratio, Mat, Rat};
use crate::flags::Flag;
use crate::positivity::{unit, GrPoint};
use crate::strata::{enumerate_cells, CellIndex};

/// A positive rational `p/q` with `1 ≤ p ≤ 5`, `1 ≤ q ≤ 3`.
pub fn positive_rat<R: Rng>(rng: &mut R) -> Rat {
    ratio(rng.gen_range(1..=5), rng.gen_range(1..=3))
}

fn elementary(n: usize, row: usize, col: usize, value: Rat) -> Mat {
    let mut m = Mat::identity(n);
    m.set(row, col, value);
    m
}

/// `∏ y_i(b) · D · ∏ x_i(a)` over a reduced word of the longest element,
/// with parameters drawn by `param`.
fn bidiagonal_product<R: Rng>(n: usize, rng: &mut R, mut param: impl FnMut(&mut R) -> Rat) -> Mat {
    let word = reduced_word(&Perm::longest(n));
    let mut g = Mat::identity(n);
    for &i in word.letters() {
        g = g.mul(&elementary(n, i, i - 1, param(rng))).expect("square");
    }
    let diag: Vec<Rat> = (0..n).map(|_| positive_rat(rng)).collect();
    g = g.mul(&Mat::diagonal(&diag)).expect("square");
    for &i in word.letters().iter().rev() {
        g = g.mul(&elementary(n, i - 1, i, param(rng))).expect("square");
    }
    g
}

/// A totally positive `n × n` matrix.
pub fn random_tp_matrix<R: Rng>(n: usize, rng: &mut R) -> Mat {
    bidiagonal_product(n, rng, |r| positive_rat(r))
}

/// A totally nonnegative invertible `n × n` matrix; about a third of the
/// bidiagonal parameters are zero.
pub fn random_tnn_matrix<R: Rng>(n: usize, rng: &mut R) -> Mat {
    bidiagonal_product(n, rng, |r| if r.gen_ratio(1, 3) { rat(0) } else { positive_rat(r) })
}

/// A matrix with integer entries in `[-bound, bound]`.
pub fn random_int_mat<R: Rng>(rows: usize, cols: usize, bound: i64, rng: &mut R) -> Mat {
    let entries = (0..rows * cols).map(|_| rat(rng.gen_range(-bound..=bound))).collect();
    Mat::new(rows, cols, entries).expect("sizes agree")
}

/// An `n × cols` matrix whose first `cols − 1` columns come from a totally
/// positive matrix and whose last column has integer entries in `[-3, 3]`.
/// Such matrices pass the Fekete test often without being trivially positive.
pub fn fekete_candidate<R: Rng>(n: usize, cols: usize, rng: &mut R) -> Mat {
    let mut a = random_tp_matrix(n, rng).first_columns(cols);
    for i in 0..n {
        a.set(i, cols - 1, rat(rng.gen_range(-3..=3)));
    }
    a
}

/// A unit upper triangular matrix with small integer entries.
fn random_unipotent<R: Rng>(n: usize, rng: &mut R) -> Mat {
    let mut m = Mat::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            m.set(i, j, rat(rng.gen_range(-3..=3)));
        }
    }
    m
}

/// A Plücker-positive flag: leading columns of a totally positive matrix,
/// mixed by a random unipotent column operation.
pub fn random_positive_flag<R: Rng>(n: usize, dims: &[usize], rng: &mut R) -> Result<Flag> {
    let top = dims.iter().copied().max().unwrap_or(0);
    let g = random_tp_matrix(n, rng).mul(&random_unipotent(n, rng))?;
    Flag::new(n, dims.to_vec(), g.first_columns(top))
}

/// A `k`-dimensional subspace of `ℚⁿ` with a small integer representative.
pub fn random_gr_point<R: Rng>(n: usize, k: usize, rng: &mut R) -> GrPoint {
    loop {
        if let Ok(p) = GrPoint::new(random_int_mat(n, k, 3, rng)) {
            return p;
        }
    }
}

/// A Plücker-positive point of `Gr_{k,n}`.
pub fn random_positive_gr_point<R: Rng>(n: usize, k: usize, rng: &mut R) -> GrPoint {
    GrPoint::new(random_tp_matrix(n, rng).first_columns(k)).expect("TP columns are independent")
}

/// Plücker-nonnegative `V ⊂ W` with `dim W = dim V + 1`, and `c` with
/// `e₁ + c·e_n ∈ V`. Needs `n ≥ 2`.
///
/// `V` is spanned by `e₁ + c·e_n` and a positive subspace of
/// `span(e₂, …, e_{n−1})`; `W` adds a random vector when that keeps it
/// nonnegative and `e_n` otherwise.
pub fn random_nested_pair<R: Rng>(n: usize, rng: &mut R) -> (GrPoint, GrPoint, Rat) {
    assert!(n >= 2, "nested pairs need n ≥ 2");
    let d = rng.gen_range(1..=n - 1);
    let inner = if d > 1 { Some(random_positive_gr_point(n - 2, d - 1, rng)) } else { None };
    let magnitude = if rng.gen_ratio(1, 4) { rat(0) } else { positive_rat(rng) };
    let c = if (d - 1) % 2 == 0 { magnitude } else { -magnitude };
    let mut first = unit(n, 1);
    first[n - 1] = c.clone();
    let mut columns = vec![first];
    if let Some(u) = &inner {
        for col in u.rep().columns() {
            let mut padded = vec![rat(0)];
            padded.extend(col);
            padded.push(rat(0));
            columns.push(padded);
        }
    }
    let v = GrPoint::span(n, &columns).expect("independent columns");
    for _ in 0..8 {
        let extra: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-2..=2))).collect();
        let mut wider = columns.clone();
        wider.push(extra);
        if let Ok(w) = GrPoint::new(Mat::from_columns(n, &wider).expect("n rows")) {
            if w.k() == d + 1 && w.is_plucker_nonnegative() {
                return (v, w, c);
            }
        }
    }
    let mut wider = columns;
    wider.push(unit(n, n));
    let w = GrPoint::span(n, &wider).expect("independent columns");
    (v, w, c)
}

/// A uniformly random cell for `(n, K)`.
pub fn random_cell<R: Rng>(n: usize, dims: &[usize], rng: &mut R) -> Result<CellIndex> {
    let cells = enumerate_cells(n, dims)?;
    Ok(cells[rng.gen_range(0..cells.len())].clone())
}
