//! Points of partial flag varieties `Fl_{K;n}`: Plücker embedding,
//! positivity classification, totally positive witnesses, completion to
//! complete flags, the signed cyclic shift, and the two counterexample
//! families with checkable obstruction certificates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{bail_arg, bail_state, Error, Result};
use crate::exact::{rat, rat_pow, serialize_display, Mat, Rat, SubsetIndex};
use crate::positivity::{extend_down, extend_up, is_totally_positive, restrict, unit, GrPoint};

/// Largest `t = 2^j` tried when searching for a totally positive witness.
pub const WITNESS_MAX_DOUBLINGS: u32 = 64;

/// A partial flag `(V_k)_{k∈K}` in `ℝⁿ`, represented by a matrix whose
/// first `k` columns span `V_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FlagRepr", into = "FlagRepr")]
pub struct Flag {
    n: usize,
    dims: Vec<usize>,
    rep: Mat,
}

#[derive(Serialize, Deserialize)]
struct FlagRepr {
    n: usize,
    #[serde(rename = "K")]
    dims: Vec<usize>,
    rep: Mat,
}

impl TryFrom<FlagRepr> for Flag {
    type Error = Error;

    fn try_from(r: FlagRepr) -> Result<Self> {
        Flag::new(r.n, r.dims, r.rep)
    }
}

impl From<Flag> for FlagRepr {
    fn from(f: Flag) -> Self {
        FlagRepr { n: f.n, dims: f.dims, rep: f.rep }
    }
}

/// Checks that `dims` is a strictly increasing subset of `[1, n−1]`.
///
/// The empty set is accepted only for `n ≤ 1`, where it is the complete
/// flag of `ℝ¹`.
pub fn validate_dims(n: usize, dims: &[usize]) -> Result<()> {
    if dims.is_empty() && n > 1 {
        bail_arg!("K must be nonempty");
    }
    if dims.windows(2).any(|w| w[0] >= w[1]) {
        bail_arg!("K = {dims:?} is not strictly increasing");
    }
    if dims.iter().any(|&k| k == 0 || k >= n) {
        bail_arg!("K = {dims:?} is not inside [1, {}]", n.saturating_sub(1));
    }
    Ok(())
}

/// Whether `dims` is an integer interval `[k, l]`.
pub fn is_interval(dims: &[usize]) -> bool {
    dims.windows(2).all(|w| w[1] == w[0] + 1)
}

impl Flag {
    pub fn new(n: usize, dims: Vec<usize>, rep: Mat) -> Result<Self> {
        validate_dims(n, &dims)?;
        if rep.rows() != n {
            bail_arg!("representative has {} rows, expected {n}", rep.rows());
        }
        let top = dims.last().copied().unwrap_or(0);
        if rep.cols() < top {
            bail_arg!("representative has {} columns, need at least {top}", rep.cols());
        }
        for &k in &dims {
            if rep.first_columns(k).rank() != k {
                bail_arg!("first {k} columns of the representative are dependent");
            }
        }
        Ok(Flag { n, dims, rep })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rep(&self) -> &Mat {
        &self.rep
    }

    pub fn is_complete(&self) -> bool {
        self.dims.len() + 1 == self.n.max(1)
    }

    /// `V_k` as a Grassmannian point.
    pub fn subspace(&self, k: usize) -> Result<GrPoint> {
        if !self.dims.contains(&k) {
            bail_arg!("{k} is not in K = {:?}", self.dims);
        }
        GrPoint::new(self.rep.first_columns(k))
    }

    /// The same representative read as a flag on a different index set.
    pub fn with_dims(&self, dims: Vec<usize>) -> Result<Flag> {
        Flag::new(self.n, dims, self.rep.clone())
    }

    /// Left-justified minors `Δ_{I,[k]}` of the representative of one order.
    pub fn left_minors(&self, order: usize) -> Result<Vec<(SubsetIndex, Rat)>> {
        if order == 0 || order > self.rep.cols().min(self.n) {
            bail_arg!("order {order} out of range for a {}x{} representative", self.n, self.rep.cols());
        }
        crate::exact::subsets(self.n, order)
            .into_iter()
            .map(|i| self.rep.left_minor(&i).map(|v| (i, v)))
            .collect()
    }

    /// A flag through the nested subspaces `chain[i] ⊂ chain[i+1]`, one per
    /// entry of `dims`.
    ///
    /// Columns are chosen by extending a basis level by level, and each new
    /// column is negated when needed so that the nonzero left-justified
    /// minors at every level are positive whenever they share a sign.
    pub fn from_chain(n: usize, dims: Vec<usize>, chain: &[GrPoint]) -> Result<Flag> {
        validate_dims(n, &dims)?;
        if chain.len() != dims.len() {
            bail_arg!("{} subspaces for {} dimensions", chain.len(), dims.len());
        }
        let mut rep = Mat::zeros(n, 0);
        for (space, &k) in chain.iter().zip(&dims) {
            if space.k() != k || space.n() != n {
                bail_arg!("chain entry has shape ({}, {}), expected ({n}, {k})", space.n(), space.k());
            }
            if !space.rep().column_span_contains(&rep) {
                bail_arg!("chain is not nested at dimension {k}");
            }
            for col in space.rep().columns() {
                if rep.cols() == k {
                    break;
                }
                if !rep.in_column_span(&col) {
                    rep.push_column(&col)?;
                    let level = GrPoint::new(rep.clone())?;
                    let coords = level.plucker_coords();
                    if coords.iter().all(|(_, v)| !v.is_positive()) {
                        let last = rep.cols() - 1;
                        rep.scale_column(last, &rat(-1));
                    }
                }
            }
        }
        Flag::new(n, dims, rep)
    }
}

/// Normalized Plücker vector of one subspace of a flag: a primitive integer
/// vector whose lexicographically first nonzero coordinate is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PluckerVector {
    n: usize,
    k: usize,
    coords: BTreeMap<SubsetIndex, BigInt>,
}

impl PluckerVector {
    /// Normalizes projective rational coordinates; fails if all are zero.
    pub fn from_coords(n: usize, k: usize, coords: Vec<(SubsetIndex, Rat)>) -> Result<Self> {
        if coords.iter().all(|(_, v)| v.is_zero()) {
            bail_arg!("all Plücker coordinates vanish");
        }
        let denom = coords.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
        let ints: Vec<(SubsetIndex, BigInt)> =
            coords.into_iter().map(|(i, v)| (i, v.numer() * (&denom / v.denom()))).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
        let mut sorted: BTreeMap<SubsetIndex, BigInt> = ints.into_iter().collect();
        if sorted.values().find(|v| !v.is_zero()).is_some_and(Signed::is_negative) {
            g = -g;
        }
        for v in sorted.values_mut() {
            *v = &*v / &g;
        }
        Ok(PluckerVector { n, k, coords: sorted })
    }

    pub fn of(space: &GrPoint) -> Self {
        Self::from_coords(space.n(), space.k(), space.plucker_coords()).expect("full rank subspace")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coords(&self) -> &BTreeMap<SubsetIndex, BigInt> {
        &self.coords
    }

    pub fn get(&self, index: &SubsetIndex) -> Option<&BigInt> {
        self.coords.get(index)
    }

    pub fn is_positive(&self) -> bool {
        self.coords.values().all(Signed::is_positive)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.values().all(|v| !v.is_negative())
    }

    /// Subsets with nonzero coordinate.
    pub fn support(&self) -> Vec<SubsetIndex> {
        self.coords.iter().filter(|(_, v)| !v.is_zero()).map(|(i, _)| i.clone()).collect()
    }

    /// Relabels indices by `i ↦ i − 1 (mod n)` and renormalizes.
    pub fn rotated(&self) -> Self {
        let n = self.n;
        let coords = self
            .coords
            .iter()
            .map(|(i, v)| {
                let moved = i.members().iter().map(|&m| if m == 1 { n } else { m - 1 }).collect();
                let index = SubsetIndex::from_unsorted(n, moved).expect("rotation stays in [n]");
                (index, Rat::from_integer(v.clone()))
            })
            .collect();
        Self::from_coords(n, self.k, coords).expect("rotation keeps a nonzero coordinate")
    }

    /// Relabels indices by `I ↦ [n] ∖ I` and renormalizes.
    pub fn complemented(&self) -> Self {
        let coords = self
            .coords
            .iter()
            .map(|(i, v)| (i.complement(), Rat::from_integer(v.clone())))
            .collect();
        Self::from_coords(self.n, self.n - self.k, coords).expect("nonzero coordinate kept")
    }
}

impl Serialize for PluckerVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coords.len()))?;
        for (i, v) in &self.coords {
            map.serialize_entry(&i.to_string(), &v.to_string())?;
        }
        map.end()
    }
}

impl fmt::Display for PluckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.values().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(" : "))
    }
}

/// Normalized Plücker vector of `V_k`.
pub fn plucker(v: &Flag, k: usize) -> Result<PluckerVector> {
    Ok(PluckerVector::of(&v.subspace(k)?))
}

/// Sign pattern of all Plücker coordinates of a flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PluckerClass {
    PluckerPositive,
    PluckerNonnegNotPositive,
    NotPluckerNonneg,
}

impl fmt::Display for PluckerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PluckerClass::PluckerPositive => "PLUCKER_POSITIVE",
            PluckerClass::PluckerNonnegNotPositive => "PLUCKER_NONNEG_NOT_POSITIVE",
            PluckerClass::NotPluckerNonneg => "NOT_PLUCKER_NONNEG",
        })
    }
}

/// Totally positive matrix representing a complete flag, with the value of
/// `t` that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TpWitness {
    pub matrix: Mat,
    #[serde(serialize_with = "serialize_display")]
    pub t: BigInt,
}

/// What is known about membership in Lusztig's totally positive part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum LusztigStatus {
    /// Represented by the attached totally positive matrix.
    PositiveWithWitness { witness: TpWitness },
    /// Not even totally nonnegative, by the attached obstruction.
    NotTnnWithCertificate { certificate: ObstructionCertificate },
    /// Some Plücker coordinate vanishes or has the wrong sign, so the flag is
    /// not totally positive.
    NotPositive { reason: String },
    /// Plücker-positive on a non-interval `K` with no witness or obstruction
    /// found.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityClass {
    pub plucker: PluckerClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lusztig: Option<LusztigStatus>,
}

pub fn classify_plucker(v: &Flag) -> Result<PluckerClass> {
    let mut positive = true;
    for &k in v.dims() {
        let p = plucker(v, k)?;
        if !p.is_nonnegative() {
            return Ok(PluckerClass::NotPluckerNonneg);
        }
        positive &= p.is_positive();
    }
    Ok(if positive { PluckerClass::PluckerPositive } else { PluckerClass::PluckerNonnegNotPositive })
}

/// Square representative of a complete Plücker-positive flag that is lower
/// triangular with unit diagonal.
fn lower_unitriangular_rep(v: &Flag) -> Result<Mat> {
    let n = v.n();
    let mut cols = v.rep().first_columns(n.saturating_sub(1)).columns();
    if n > 0 {
        let current = Mat::from_columns(n, &cols)?;
        let extra = (1..=n).map(|i| unit(n, i)).find(|e| !current.in_column_span(e)).expect("rank n−1");
        cols.push(extra);
    }
    let mut a = Mat::from_columns(n, &cols)?;
    for k in 1..=n {
        let lead = SubsetIndex::initial(n, k);
        let d = a.left_minor(&lead)?;
        if d.is_zero() {
            bail_state!("leading minor of order {k} vanishes");
        }
        if d.is_negative() {
            a.scale_column(k - 1, &rat(-1));
        }
    }
    for j in 0..n {
        for i in 0..j {
            let factor = a.get(i, j) / a.get(i, i);
            if factor.is_zero() {
                continue;
            }
            for r in i..n {
                let value = a.get(r, j) - &factor * a.get(r, i);
                a.set(r, j, value);
            }
        }
        let pivot = a.get(j, j).clone();
        debug_assert!(pivot.is_positive());
        a.scale_column(j, &pivot.recip());
    }
    Ok(a)
}

/// Totally positive matrix representing a complete Plücker-positive flag.
///
/// The representative `A` is made lower unitriangular by left-to-right
/// column operations and `g = A·Diag(t^{n−1}, …, t, 1)·Aᵀ` is tried for
/// `t = 1, 2, 4, …` up to `2^64`. Positivity is known for large `t`; in
/// practice `t = 1` already works, and a warning is logged if it does not.
pub fn tp_witness_complete(v: &Flag) -> Result<TpWitness> {
    if !v.is_complete() {
        bail_arg!("tp_witness_complete needs K = [1, n−1], got {:?}", v.dims());
    }
    if classify_plucker(v)? != PluckerClass::PluckerPositive {
        bail_state!("flag is not Plücker-positive");
    }
    let n = v.n();
    let a = lower_unitriangular_rep(v)?;
    let at = a.transpose();
    let mut t = BigInt::one();
    for doubling in 0..=WITNESS_MAX_DOUBLINGS {
        let tr = Rat::from_integer(t.clone());
        let diag: Vec<Rat> = (0..n).map(|i| rat_pow(&tr, (n - 1 - i) as u32)).collect();
        let g = a.mul(&Mat::diagonal(&diag))?.mul(&at)?;
        if is_totally_positive(&g)? {
            return Ok(TpWitness { matrix: g, t });
        }
        if doubling == 0 {
            log::warn!("A·Aᵀ is not totally positive for a Plücker-positive complete flag; searching larger t");
        }
        t *= 2;
    }
    bail_state!("no totally positive witness found for t ≤ 2^{WITNESS_MAX_DOUBLINGS}")
}

/// Extends a Plücker-positive flag on an interval `K = [k, l]` to a
/// Plücker-positive complete flag that agrees with it on `K`.
pub fn complete_flag(v: &Flag) -> Result<Flag> {
    if !is_interval(v.dims()) {
        bail_arg!("complete_flag needs an interval K, got {:?}", v.dims());
    }
    if classify_plucker(v)? != PluckerClass::PluckerPositive {
        bail_state!("flag is not Plücker-positive");
    }
    if v.is_complete() {
        return Ok(v.clone());
    }
    let n = v.n();
    let (low, high) = (v.dims()[0], *v.dims().last().expect("nonempty K"));
    let mut levels: Vec<Option<GrPoint>> = vec![None; n];
    for k in low..=high {
        levels[k] = Some(v.subspace(k)?);
    }
    for k in high + 1..n {
        let below = levels[k - 1].as_ref().expect("filled in order");
        levels[k] = Some(extend_up(below)?);
    }
    for k in (1..low).rev() {
        let above = levels[k + 1].as_ref().expect("filled in order");
        levels[k] = Some(extend_down(above)?);
    }
    let chain: Vec<GrPoint> = levels.into_iter().skip(1).map(|l| l.expect("all levels built")).collect();
    Flag::from_chain(n, (1..n).collect(), &chain)
}

/// A Plücker-positive flag on the smallest interval containing `K`, read
/// off the same representative, if it exists.
fn interval_hull(v: &Flag) -> Option<Flag> {
    let (&low, &high) = (v.dims().first()?, v.dims().last()?);
    let hull = v.with_dims((low..=high).collect()).ok()?;
    (classify_plucker(&hull).ok()? == PluckerClass::PluckerPositive).then_some(hull)
}

/// Plücker classification together with a Lusztig positivity status.
///
/// On an interval `K`, Plücker positivity is decisive and a verified witness
/// is attached. On other `K` a witness is attempted through the interval
/// hull of the given representative, and otherwise an obstruction is
/// searched for; failing both the status is `Undecided`.
pub fn is_lusztig_positive(v: &Flag) -> Result<PositivityClass> {
    let plucker = classify_plucker(v)?;
    let status = if plucker == PluckerClass::PluckerPositive {
        match interval_hull(v) {
            Some(hull) => {
                let witness = tp_witness_complete(&complete_flag(&hull)?)?;
                let as_flag = Flag::new(v.n(), v.dims().to_vec(), witness.matrix.clone())?;
                for &k in v.dims() {
                    if self::plucker(&as_flag, k)? != self::plucker(v, k)? {
                        bail_state!("witness does not represent the flag at k = {k}");
                    }
                }
                LusztigStatus::PositiveWithWitness { witness }
            }
            None => match certify_not_tnn(v)? {
                Some(certificate) => LusztigStatus::NotTnnWithCertificate { certificate },
                None => LusztigStatus::Undecided,
            },
        }
    } else {
        match certify_not_tnn(v)? {
            Some(certificate) => LusztigStatus::NotTnnWithCertificate { certificate },
            None if plucker == PluckerClass::NotPluckerNonneg => LusztigStatus::NotPositive {
                reason: "a Plücker coordinate is negative, so the flag is not totally nonnegative".into(),
            },
            None => LusztigStatus::NotPositive {
                reason: "a Plücker coordinate vanishes".into(),
            },
        }
    };
    Ok(PositivityClass { plucker, lusztig: Some(status) })
}

/// An element of `ℤ/2ℤ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Self {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(−1)^{ε−1}`.
    pub fn wrap_sign(self) -> i64 {
        match self {
            Parity::Odd => 1,
            Parity::Even => -1,
        }
    }
}

impl From<Parity> for u8 {
    fn from(p: Parity) -> u8 {
        match p {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl TryFrom<u8> for Parity {
    type Error = Error;

    fn try_from(x: u8) -> Result<Self> {
        Ok(Parity::of(x as usize))
    }
}

/// The signed left cyclic shift `(v₁, …, v_n) ↦ (v₂, …, v_n, (−1)^{ε−1}v₁)`
/// applied to every subspace.
pub fn cyclic_shift(v: &Flag, eps: Parity) -> Result<Flag> {
    let n = v.n();
    let mut shifted = Mat::zeros(n, v.rep().cols());
    for j in 0..v.rep().cols() {
        for i in 0..n {
            let value = if i + 1 < n {
                v.rep().get(i + 1, j).clone()
            } else {
                v.rep().get(0, j) * rat(eps.wrap_sign())
            };
            shifted.set(i, j, value);
        }
    }
    Flag::new(n, v.dims().to_vec(), shifted)
}

/// Evidence that a flag lies outside the totally nonnegative part.
///
/// With `W_i = V_i ∩ span(e₁, …, e_m)`: `W_k` contains `e₁ + c·e_m`,
/// `dim W_l > dim W_k` and `e₁ ∉ W_l`. Any totally nonnegative completion
/// would have a level `j ∈ [k, l]` with `dim W_j = dim W_k + 1`, and the
/// nested-pair lemma applied to `W_k ⊂ W_j` would force `e₁ ∈ W_l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObstructionCertificate {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    #[serde(serialize_with = "serialize_display")]
    pub c: Rat,
    /// Basis of `W_k` inside `ℝ^m`.
    pub lower_span: Mat,
    /// Basis of `W_l` inside `ℝ^m`.
    pub upper_span: Mat,
}

impl ObstructionCertificate {
    /// Re-derives every claim of the certificate from the flag.
    pub fn validate(&self, v: &Flag) -> bool {
        self.check(v).unwrap_or(false)
    }

    fn check(&self, v: &Flag) -> Result<bool> {
        let (k, l, m) = (self.k, self.l, self.m);
        if k >= l || !v.dims().contains(&k) || !v.dims().contains(&l) || m < 2 || m > v.n() {
            return Ok(false);
        }
        let lower = restrict(&v.subspace(k)?, m)?;
        let upper = restrict(&v.subspace(l)?, m)?;
        let lower_claim = GrPoint::new(self.lower_span.clone())?;
        let upper_claim = GrPoint::new(self.upper_span.clone())?;
        let mut probe = unit(m, 1);
        probe[m - 1] += &self.c;
        Ok(lower.same_subspace(&lower_claim)
            && upper.same_subspace(&upper_claim)
            && lower.contains_vector(&probe)
            && upper.k() > lower.k()
            && !upper.contains_vector(&unit(m, 1)))
    }
}

/// Tries the obstruction for one choice of `(k, l, m)`.
fn obstruction_at(v: &Flag, k: usize, l: usize, m: usize) -> Result<Option<ObstructionCertificate>> {
    let lower = restrict(&v.subspace(k)?, m)?;
    let upper = restrict(&v.subspace(l)?, m)?;
    if upper.k() <= lower.k() || upper.contains_vector(&unit(m, 1)) {
        return Ok(None);
    }
    // Vectors of W_k supported on coordinates {1, m}.
    let middle: Vec<usize> = (1..m - 1).collect();
    let cols: Vec<usize> = (0..lower.k()).collect();
    let kernel = lower.rep().select(&middle, &cols).nullspace();
    let support = lower.rep().mul(&kernel)?;
    let Some(v1) = support.columns().into_iter().find(|col| !col[0].is_zero()) else {
        return Ok(None);
    };
    let c = &v1[m - 1] / &v1[0];
    Ok(Some(ObstructionCertificate {
        k,
        l,
        m,
        c,
        lower_span: lower.rep().clone(),
        upper_span: upper.rep().clone(),
    }))
}

/// Searches pairs `k < l` in `K` (lexicographically) and `m = 2, …, n` for
/// the obstruction pattern of [`ObstructionCertificate`].
///
/// `None` is inconclusive: it does not prove total nonnegativity.
pub fn certify_not_tnn(v: &Flag) -> Result<Option<ObstructionCertificate>> {
    let dims = v.dims();
    for (a, &k) in dims.iter().enumerate() {
        for &l in &dims[a + 1..] {
            for m in 2..=v.n() {
                if let Some(cert) = obstruction_at(v, k, l, m)? {
                    debug_assert!(cert.validate(v));
                    return Ok(Some(cert));
                }
            }
        }
    }
    Ok(None)
}

/// The Plücker-nonnegative flag that is not totally nonnegative, for a gap
/// `l − k ≥ 2` between consecutive elements of `K`.
///
/// Represented by the `n × (n−1)` matrix with blocks `(−1)^{k−1}B` in rows
/// 1–4 (where `B` has columns `e₁+e₄, e₂, e₃`), `I_{k−1}` in rows 5…k+3 and
/// `I_{n−k−3}` below, so `V_k = span(e₁+e₄, e₅, …, e_{k+3})`.
pub fn converse_counterexample(
    n: usize,
    dims: &[usize],
    k: usize,
    l: usize,
) -> Result<(Flag, ObstructionCertificate)> {
    validate_dims(n, dims)?;
    let pos_k = dims.iter().position(|&x| x == k);
    let pos_l = dims.iter().position(|&x| x == l);
    match (pos_k, pos_l) {
        (Some(a), Some(b)) if b == a + 1 => {}
        _ => bail_arg!("{k} and {l} are not consecutive elements of K = {dims:?}"),
    }
    if l < k + 2 {
        bail_arg!("need l − k ≥ 2, got k = {k}, l = {l}");
    }
    if n < k + 3 {
        bail_arg!("need n ≥ k + 3, got n = {n}, k = {k}");
    }
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let mut a = Mat::zeros(n, n - 1);
    // (−1)^{k−1}B in rows 1..4, columns k..k+2 (1-based)
    let b_col = k - 1;
    a.set(0, b_col, rat(sign));
    a.set(3, b_col, rat(sign));
    a.set(1, b_col + 1, rat(sign));
    a.set(2, b_col + 2, rat(sign));
    for i in 0..k - 1 {
        a.set(4 + i, i, rat(1));
    }
    for i in 0..n - k - 3 {
        a.set(k + 3 + i, k + 2 + i, rat(1));
    }
    let flag = Flag::new(n, dims.to_vec(), a)?;
    let cert = obstruction_at(&flag, k, l, 4)?
        .ok_or_else(|| Error::State("obstruction pattern missing from constructed flag".into()))?;
    Ok((flag, cert))
}

/// A totally nonnegative flag `W` whose cyclic shift `X = σ_ε(W)` is not
/// totally nonnegative, for `|K| ≥ 2`.
///
/// With `k < l` the two smallest elements of `K`, `W` is represented by the
/// `n × (n−1)` matrix whose column `k` is `(−1)^{k−1}(e₁ + e₂)` and whose
/// other columns are `e₃, …, e_{k+1}` and `e_{k+2}, …, e_n`.
pub fn cyclic_counterexample(
    n: usize,
    dims: &[usize],
    eps: Parity,
) -> Result<(Flag, Flag, ObstructionCertificate)> {
    validate_dims(n, dims)?;
    if dims.len() < 2 {
        bail_arg!("need |K| ≥ 2, got K = {dims:?}");
    }
    let k = dims[0];
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let mut a = Mat::zeros(n, n - 1);
    a.set(0, k - 1, rat(sign));
    a.set(1, k - 1, rat(sign));
    for i in 0..k - 1 {
        a.set(2 + i, i, rat(1));
    }
    for i in 0..n - k - 1 {
        a.set(k + 1 + i, k + i, rat(1));
    }
    let w = Flag::new(n, dims.to_vec(), a)?;
    let x = cyclic_shift(&w, eps)?;
    let cert = certify_not_tnn(&x)?
        .ok_or_else(|| Error::State("shifted flag shows no obstruction".into()))?;
    Ok((w, x, cert))
}
