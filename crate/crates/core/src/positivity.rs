//! Total positivity of matrices and Plücker positivity of Grassmannian
//! points, together with the constructions used to move between
//! Grassmannians while keeping all Plücker coordinates positive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{bail_arg, bail_state, Result};
use crate::exact::{rat, rat_pow, subsets, Mat, Rat, SubsetIndex};

/// A `k`-dimensional subspace of `ℝⁿ`, given by an `n × k` representative
/// of full column rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GrPointRepr", into = "GrPointRepr")]
pub struct GrPoint {
    n: usize,
    k: usize,
    rep: Mat,
}

#[derive(Serialize, Deserialize)]
struct GrPointRepr {
    n: usize,
    k: usize,
    rep: Mat,
}

impl TryFrom<GrPointRepr> for GrPoint {
    type Error = crate::Error;

    fn try_from(r: GrPointRepr) -> Result<Self> {
        let point = GrPoint::new(r.rep)?;
        if point.n != r.n || point.k != r.k {
            bail_arg!("declared shape ({}, {}) does not match representative", r.n, r.k);
        }
        Ok(point)
    }
}

impl From<GrPoint> for GrPointRepr {
    fn from(p: GrPoint) -> Self {
        GrPointRepr { n: p.n, k: p.k, rep: p.rep }
    }
}

impl GrPoint {
    /// Column span of `rep`, which must have full column rank.
    pub fn new(rep: Mat) -> Result<Self> {
        let (n, k) = (rep.rows(), rep.cols());
        if rep.rank() != k {
            bail_arg!("representative {n}x{k} does not have full column rank");
        }
        Ok(GrPoint { n, k, rep })
    }

    /// Span of arbitrary vectors in `ℝⁿ`; dependent vectors are dropped.
    pub fn span(n: usize, vectors: &[Vec<Rat>]) -> Result<Self> {
        let m = Mat::from_columns(n, vectors)?;
        let (echelon, _) = m.column_echelon();
        Ok(GrPoint { n, k: echelon.cols(), rep: echelon })
    }

    pub fn zero(n: usize) -> Self {
        GrPoint { n, k: 0, rep: Mat::zeros(n, 0) }
    }

    pub fn full(n: usize) -> Self {
        GrPoint { n, k: n, rep: Mat::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rep(&self) -> &Mat {
        &self.rep
    }

    /// All `k × k` minors of the representative, lexicographic in `I`.
    pub fn plucker_coords(&self) -> Vec<(SubsetIndex, Rat)> {
        let cols = SubsetIndex::initial(self.k, self.k);
        subsets(self.n, self.k)
            .into_iter()
            .map(|i| {
                let v = self.rep.minor(&i, &cols).expect("subset sizes match");
                (i, v)
            })
            .collect()
    }

    /// Sign shared by every nonzero Plücker coordinate, if they agree.
    fn common_sign(&self) -> Option<i8> {
        let coords = self.plucker_coords();
        let pos = coords.iter().any(|(_, v)| v.is_positive());
        let neg = coords.iter().any(|(_, v)| v.is_negative());
        match (pos, neg) {
            (true, false) => Some(1),
            (false, true) => Some(-1),
            _ => None,
        }
    }

    /// All Plücker coordinates nonzero and of one sign.
    pub fn is_plucker_positive(&self) -> bool {
        self.common_sign().is_some() && self.plucker_coords().iter().all(|(_, v)| !v.is_zero())
    }

    /// All Plücker coordinates weakly of one sign.
    pub fn is_plucker_nonnegative(&self) -> bool {
        self.common_sign().is_some()
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        self.rep.in_column_span(v)
    }

    pub fn contains(&self, other: &GrPoint) -> bool {
        self.n == other.n && self.rep.column_span_contains(&other.rep)
    }

    pub fn same_subspace(&self, other: &GrPoint) -> bool {
        self.n == other.n && self.k == other.k && self.contains(other)
    }

    /// Representative with the first column negated when the coordinates
    /// are all nonpositive, so that nonzero coordinates become positive.
    fn sign_normalized(&self) -> Mat {
        let mut rep = self.rep.clone();
        if self.k > 0 && self.common_sign() == Some(-1) {
            rep.scale_column(0, &rat(-1));
        }
        rep
    }
}

/// Whether every minor of the square matrix is strictly positive.
pub fn is_totally_positive(a: &Mat) -> Result<bool> {
    if !a.is_square() {
        bail_arg!("total positivity of a non-square {}x{} matrix", a.rows(), a.cols());
    }
    for order in 1..=a.rows() {
        if a.all_minors(order)?.iter().any(|(_, _, v)| !v.is_positive()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every minor is nonnegative.
pub fn is_totally_nonnegative(a: &Mat) -> bool {
    (1..=a.rows().min(a.cols()))
        .all(|order| a.all_minors(order).expect("order in range").iter().all(|(_, _, v)| !v.is_negative()))
}

/// The matrix `(t^{(i−j)²})`, which is the identity at `t = 0` and totally
/// positive for `0 < t < 1`.
pub fn f_family(n: usize, t: &Rat) -> Result<Mat> {
    if t.is_negative() || *t >= Rat::one() {
        bail_arg!("f_family parameter {t} outside [0, 1)");
    }
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let d = i.abs_diff(j) as u32;
            m.set(i, j, rat_pow(t, d * d));
        }
    }
    Ok(m)
}

/// Fekete's criterion for an `n × (k+1)` matrix: positive left-justified
/// `k × k` minors plus positive consecutive-row `(k+1) × (k+1)` minors.
pub fn fekete_positive(a: &Mat) -> Result<bool> {
    let (n, cols) = (a.rows(), a.cols());
    if cols == 0 || n < cols {
        bail_arg!("fekete_positive needs n >= k+1 >= 1, got {n}x{cols}");
    }
    let k = cols - 1;
    let left = SubsetIndex::initial(cols, k);
    for rows in subsets(n, k) {
        if !a.minor(&rows, &left)?.is_positive() {
            return Ok(false);
        }
    }
    let all = SubsetIndex::initial(cols, cols);
    for start in 1..=n - k {
        let rows = SubsetIndex::new(n, (start..=start + k).collect())?;
        if !a.minor(&rows, &all)?.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest positive integer `x` with `coef·x + rest > 0`, for `coef > 0`.
fn least_positive_integer(coef: &Rat, rest: &Rat) -> BigInt {
    // coef·x + rest > 0  ⇔  x > −rest/coef
    let bound = -(rest / coef);
    let floor: BigInt = bound.numer().div_floor(bound.denom());
    std::cmp::max(floor + BigInt::one(), BigInt::one())
}

/// A `(k+1)`-dimensional Plücker-positive superspace of a Plücker-positive
/// `V ∈ Gr_{k,n}`, `k < n`.
///
/// The new column `w` is zero in its first `k` entries; each later entry is
/// the least positive integer making the consecutive-row minor ending at that
/// row positive. Fekete's criterion then gives positivity of every minor.
/// A nonnegative `V` is accepted when the same construction still yields a
/// positive `W`.
pub fn extend_up(v: &GrPoint) -> Result<GrPoint> {
    let (n, k) = (v.n, v.k);
    if k >= n {
        bail_state!("cannot extend a {k}-dimensional subspace of R^{n} upwards");
    }
    let plucker_positive = v.is_plucker_positive();
    if !plucker_positive && !v.is_plucker_nonnegative() {
        bail_state!("extend_up requires a Plücker-positive subspace");
    }
    let mut b = v.sign_normalized();
    b.push_column(&vec![Rat::zero(); n])?;
    let cols = SubsetIndex::initial(k + 1, k + 1);
    for i in k + 1..=n {
        let rows = SubsetIndex::new(n, (i - k..=i).collect())?;
        // The minor is affine in w_i; its slope is the left-justified
        // k-minor on rows i−k..i−1, which is positive.
        let rest = b.minor(&rows, &cols)?;
        b.set(i - 1, k, rat(1));
        let slope = b.minor(&rows, &cols)? - &rest;
        if !slope.is_positive() {
            bail_state!("extend_up requires a Plücker-positive subspace");
        }
        let w = Rat::from_integer(least_positive_integer(&slope, &rest));
        b.set(i - 1, k, w);
    }
    let w = GrPoint::new(b)?;
    // nonnegative inputs can still succeed, e.g. when W is the whole space
    if !plucker_positive && !w.is_plucker_positive() {
        bail_state!("extend_up requires a Plücker-positive subspace");
    }
    debug_assert!(w.is_plucker_positive());
    Ok(w)
}

/// Orthogonal complement under `⟨v,w⟩ = v₁w₁ − v₂w₂ + v₃w₃ − ⋯`.
///
/// `Δ_I(V)` and `Δ_{[n]∖I}(V^⊥)` agree up to one global scalar.
pub fn perp(v: &GrPoint) -> GrPoint {
    let n = v.n;
    let mut pairing = v.rep.transpose();
    for j in (1..n).step_by(2) {
        pairing.scale_column(j, &rat(-1));
    }
    let basis = pairing.nullspace();
    GrPoint { n, k: basis.cols(), rep: basis }
}

/// A `(k−1)`-dimensional Plücker-positive subspace of a Plücker-positive
/// `V ∈ Gr_{k,n}`, `k ≥ 1`, obtained as `perp ∘ extend_up ∘ perp`.
pub fn extend_down(v: &GrPoint) -> Result<GrPoint> {
    if v.k == 0 {
        bail_state!("cannot extend the zero subspace downwards");
    }
    if !v.is_plucker_positive() {
        bail_state!("extend_down requires a Plücker-positive subspace");
    }
    Ok(perp(&extend_up(&perp(v))?))
}

/// `V ∩ span(e₁, …, e_m)` as a point of `Gr_{d,m}`.
pub fn restrict(v: &GrPoint, m: usize) -> Result<GrPoint> {
    let n = v.n;
    if m > n {
        bail_arg!("restriction size {m} exceeds ambient dimension {n}");
    }
    let tail: Vec<usize> = (m..n).collect();
    let all_cols: Vec<usize> = (0..v.k).collect();
    let kernel = v.rep.select(&tail, &all_cols).nullspace();
    let inside = v.rep.mul(&kernel)?;
    let head: Vec<usize> = (0..m).collect();
    let inner_cols: Vec<usize> = (0..inside.cols()).collect();
    GrPoint::new(inside.select(&head, &inner_cols))
}

/// Checks the nested-pair lemma: if `V ⊆ W` are Plücker-nonnegative with
/// `dim W = dim V + 1` and `e₁ + c·e_n ∈ V`, then `e₁ ∈ W`.
///
/// Returns whether `e₁ ∈ W`; on valid input this is always true.
pub fn counterexample_lemma_check(v: &GrPoint, w: &GrPoint, c: &Rat) -> Result<bool> {
    let n = v.n;
    if w.n != n || n == 0 {
        bail_arg!("ambient dimensions {} and {} differ", v.n, w.n);
    }
    if w.k != v.k + 1 {
        bail_arg!("dim W = {} is not dim V + 1 = {}", w.k, v.k + 1);
    }
    if !w.contains(v) {
        bail_arg!("V is not contained in W");
    }
    if !v.is_plucker_nonnegative() || !w.is_plucker_nonnegative() {
        bail_arg!("V and W must both be Plücker-nonnegative");
    }
    let mut probe = unit(n, 1);
    probe[n - 1] += c;
    if !v.contains_vector(&probe) {
        bail_arg!("e_1 + ({c}) e_{n} is not in V");
    }
    Ok(w.contains_vector(&unit(n, 1)))
}

/// The standard basis vector `e_i` (1-based) in `ℝⁿ`.
pub fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut e = vec![Rat::zero(); n];
    e[i - 1] = Rat::one();
    e
}
