//! Cells of the totally nonnegative partial flag variety, their matroid
//! strata, the cell-to-stratum injectivity experiment and Bruhat interval
//! polytopes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{
    all_perms, bruhat_leq, complement_in_simple, demazure_reduce, interval, Perm,
};
use crate::error::{bail_arg, Error, Result};
use crate::exact::{rat, Rat, SubsetIndex};
use crate::lp::{extreme_points, in_convex_hull};

/// Largest `n` the injectivity experiment runs at unless overridden.
pub const DEFAULT_MAX_N: usize = 5;

fn check_dims(n: usize, dims: &[usize]) -> Result<Vec<usize>> {
    let mut k: Vec<usize> = dims.to_vec();
    k.sort_unstable();
    k.dedup();
    if k.is_empty() {
        bail_arg!("K must be nonempty");
    }
    if k.iter().any(|&x| x == 0 || x >= n) {
        bail_arg!("K = {dims:?} is not inside [1, {}]", n.saturating_sub(1));
    }
    Ok(k)
}

/// A cell `R^K_{v,w}`: `w ∈ W^J` for `J = [n−1] ∖ K` and `v ≤ w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellIndex {
    n: usize,
    #[serde(rename = "K")]
    dims: Vec<usize>,
    v: Perm,
    w: Perm,
}

impl CellIndex {
    pub fn new(dims: &[usize], v: Perm, w: Perm) -> Result<Self> {
        let n = w.n();
        let dims = check_dims(n, dims)?;
        if !bruhat_leq(&v, &w)? {
            bail_arg!("{v} is not below {w} in Bruhat order");
        }
        let parabolic = complement_in_simple(n, &dims);
        if !w.in_quotient(&parabolic) {
            bail_arg!("{w} is not a minimal coset representative for J = {parabolic:?}");
        }
        Ok(CellIndex { n, dims, v, w })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn v(&self) -> &Perm {
        &self.v
    }

    pub fn w(&self) -> &Perm {
        &self.w
    }

    /// `J = [n−1] ∖ K`.
    pub fn parabolic(&self) -> Vec<usize> {
        complement_in_simple(self.n, &self.dims)
    }

    pub fn dimension(&self) -> usize {
        self.w.length() - self.v.length()
    }
}

impl fmt::Display for CellIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.v, self.w)
    }
}

/// Per `k ∈ K`, the collection `M_k` of `k`-subsets indexing the nonzero
/// Plücker coordinates on a stratum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatroidStratum {
    parts: BTreeMap<usize, BTreeSet<SubsetIndex>>,
}

impl MatroidStratum {
    pub fn parts(&self) -> &BTreeMap<usize, BTreeSet<SubsetIndex>> {
        &self.parts
    }

    pub fn part(&self, k: usize) -> Option<&BTreeSet<SubsetIndex>> {
        self.parts.get(&k)
    }
}

impl Serialize for MatroidStratum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, Vec<String>> = self
            .parts
            .iter()
            .map(|(k, m)| (k.to_string(), m.iter().map(ToString::to_string).collect()))
            .collect();
        map.serialize(serializer)
    }
}

fn initial_image(x: &Perm, k: usize) -> SubsetIndex {
    SubsetIndex::new(x.n(), x.image_of_initial(k)).expect("image of a permutation is a subset")
}

fn stratum_of<'a>(dims: &[usize], elements: impl Iterator<Item = &'a Perm> + Clone) -> MatroidStratum {
    let parts = dims
        .iter()
        .map(|&k| (k, elements.clone().map(|x| initial_image(x, k)).collect()))
        .collect();
    MatroidStratum { parts }
}

/// All cells for `(n, K)`, ordered lexicographically by `(v, w)`.
pub fn enumerate_cells(n: usize, dims: &[usize]) -> Result<Vec<CellIndex>> {
    let dims = check_dims(n, dims)?;
    let parabolic = complement_in_simple(n, &dims);
    let perms = all_perms(n);
    let tops: Vec<&Perm> = perms.iter().filter(|w| w.in_quotient(&parabolic)).collect();
    let mut cells = Vec::new();
    for v in &perms {
        for &w in &tops {
            if bruhat_leq(v, w)? {
                cells.push(CellIndex { n, dims: dims.clone(), v: v.clone(), w: w.clone() });
            }
        }
    }
    Ok(cells)
}

/// `M_k = {x([k]) : x ∈ [v, w]}` for each `k ∈ K`.
pub fn cell_matroid(c: &CellIndex) -> MatroidStratum {
    let elements = interval(&c.v, &c.w).expect("cells satisfy v ≤ w");
    stratum_of(&c.dims, elements.iter())
}

/// The same stratum computed one `k` at a time from the reduced pair
/// `demazure_reduce(v, w, [n−1] ∖ {k})`.
pub fn cell_matroid_reduced(c: &CellIndex) -> MatroidStratum {
    let parts = c.dims.iter().map(|&k| (k, grassmann_stratum(c, k))).collect();
    MatroidStratum { parts }
}

fn grassmann_stratum(c: &CellIndex, k: usize) -> BTreeSet<SubsetIndex> {
    let reducer = complement_in_simple(c.n, &[k]);
    let (v, w) = demazure_reduce(&c.v, &c.w, &reducer).expect("cells satisfy v ≤ w");
    interval(&v, &w).expect("reduced pair is comparable").iter().map(|x| initial_image(x, k)).collect()
}

/// Whether `M_k` of the cell equals the Grassmannian stratum of the
/// reduced pair in `Gr_{k,n}`.
pub fn grassmann_consistency_check(c: &CellIndex, k: usize) -> Result<bool> {
    if !c.dims.contains(&k) {
        bail_arg!("{k} is not in K = {:?}", c.dims);
    }
    Ok(cell_matroid(c).part(k) == Some(&grassmann_stratum(c, k)))
}

/// Outcome of mapping every cell to its matroid stratum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub n: usize,
    #[serde(rename = "K")]
    pub dims: Vec<usize>,
    pub cell_count: usize,
    pub stratum_count: usize,
    pub injective: bool,
    /// Pairs of distinct cells with the same stratum, each cell as `[v, w]`.
    pub collisions: Vec<[[String; 2]; 2]>,
}

impl InjectivityReport {
    pub fn has_collision(&self, a: (&str, &str), b: (&str, &str)) -> bool {
        let key = |p: (&str, &str)| [p.0.to_string(), p.1.to_string()];
        let (a, b) = (key(a), key(b));
        self.collisions.iter().any(|[x, y]| (*x == a && *y == b) || (*x == b && *y == a))
    }
}

/// Precomputed Bruhat order on `𝔖_n`, indexed by position in `all_perms(n)`.
struct BruhatTable {
    perms: Vec<Perm>,
    leq: Vec<Vec<bool>>,
}

impl BruhatTable {
    fn new(n: usize) -> Self {
        let perms = all_perms(n);
        let leq = perms
            .iter()
            .map(|v| perms.iter().map(|w| bruhat_leq(v, w).expect("same size")).collect())
            .collect();
        BruhatTable { perms, leq }
    }
}

/// Maps every cell for `(n, K)` to its stratum and reports collisions.
pub fn injectivity_experiment(n: usize, dims: &[usize], max_n: usize) -> Result<InjectivityReport> {
    if n > max_n {
        return Err(Error::Resource(format!(
            "n = {n} exceeds the enumeration bound {max_n} (raise it with FLAGPOS_MAX_N)"
        )));
    }
    let dims = check_dims(n, dims)?;
    let parabolic = complement_in_simple(n, &dims);
    let table = BruhatTable::new(n);
    let images: Vec<Vec<SubsetIndex>> =
        table.perms.iter().map(|x| dims.iter().map(|&k| initial_image(x, k)).collect()).collect();

    let mut by_stratum: BTreeMap<Vec<BTreeSet<SubsetIndex>>, Vec<(usize, usize)>> = BTreeMap::new();
    let mut cell_count = 0;
    let size = table.perms.len();
    for vi in 0..size {
        for wi in 0..size {
            if !table.leq[vi][wi] || !table.perms[wi].in_quotient(&parabolic) {
                continue;
            }
            cell_count += 1;
            let mut parts = vec![BTreeSet::new(); dims.len()];
            for xi in (0..size).filter(|&xi| table.leq[vi][xi] && table.leq[xi][wi]) {
                for (part, image) in parts.iter_mut().zip(&images[xi]) {
                    part.insert(image.clone());
                }
            }
            by_stratum.entry(parts).or_default().push((vi, wi));
        }
    }

    let name = |(vi, wi): (usize, usize)| [table.perms[vi].to_string(), table.perms[wi].to_string()];
    let mut collisions = Vec::new();
    for group in by_stratum.values() {
        for (a, &first) in group.iter().enumerate() {
            for &second in &group[a + 1..] {
                collisions.push([name(first), name(second)]);
            }
        }
    }
    Ok(InjectivityReport {
        n,
        dims,
        cell_count,
        stratum_count: by_stratum.len(),
        injective: collisions.is_empty(),
        collisions,
    })
}

/// A lattice polytope stored by its vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl LatticePolytope {
    /// The convex hull of `points`, keeping only extreme points.
    pub fn hull(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        if points.iter().any(|p| p.len() != dim) {
            bail_arg!("points must have {dim} coordinates");
        }
        Ok(LatticePolytope { dim, vertices: extreme_points(points) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    fn rat_vertices(&self) -> Vec<Vec<Rat>> {
        self.vertices.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect()
    }

    pub fn contains(&self, point: &[i64]) -> bool {
        let p: Vec<Rat> = point.iter().map(|&x| rat(x)).collect();
        in_convex_hull(&p, &self.rat_vertices())
    }

    /// Equality as point sets, by mutual containment of vertices.
    pub fn same_polytope(&self, other: &LatticePolytope) -> bool {
        self.dim == other.dim
            && self.vertices.iter().all(|p| other.contains(p))
            && other.vertices.iter().all(|p| self.contains(p))
    }

    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope> {
        if self.dim != other.dim {
            bail_arg!("Minkowski sum of polytopes in dimensions {} and {}", self.dim, other.dim);
        }
        let sums: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect()))
            .collect();
        LatticePolytope::hull(self.dim, &sums)
    }
}

/// `φ_K(u) = Σ_{k∈K} Σ_{i∈u([k])} e_i`.
pub fn moment_point(u: &Perm, dims: &[usize]) -> Vec<i64> {
    let mut point = vec![0; u.n()];
    for &k in dims {
        for &i in &u.one_line()[..k] {
            point[i - 1] += 1;
        }
    }
    point
}

/// The Bruhat interval polytope `bip^K(v, w)`.
pub fn bip_vertices(c: &CellIndex) -> LatticePolytope {
    let elements = interval(&c.v, &c.w).expect("cells satisfy v ≤ w");
    let points: Vec<Vec<i64>> = elements.iter().map(|x| moment_point(x, &c.dims)).collect();
    LatticePolytope::hull(c.n, &points).expect("moment points have n coordinates")
}

/// The singleton-`K` cells `(v ◁ w_{J_k}^{−1}, w^{J_k})`, `J_k = [n−1] ∖ {k}`,
/// whose polytopes sum to `bip^K(v, w)`.
pub fn minkowski_summands(c: &CellIndex) -> Vec<CellIndex> {
    c.dims
        .iter()
        .map(|&k| {
            let reducer = complement_in_simple(c.n, &[k]);
            let (v, w) = demazure_reduce(&c.v, &c.w, &reducer).expect("cells satisfy v ≤ w");
            CellIndex { n: c.n, dims: vec![k], v, w }
        })
        .collect()
}

/// Whether `bip^K(v, w)` equals the Minkowski sum of its singleton summands.
pub fn minkowski_check(c: &CellIndex) -> bool {
    let lhs = bip_vertices(c);
    let mut summands = minkowski_summands(c).into_iter().map(|s| bip_vertices(&s));
    let first = summands.next().expect("K is nonempty");
    let rhs = summands.try_fold(first, |acc, p| acc.minkowski_sum(&p)).expect("same dimension");
    lhs.same_polytope(&rhs)
}
