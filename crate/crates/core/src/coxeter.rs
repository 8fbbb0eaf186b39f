//! Combinatorics of the symmetric group `𝔖_n` as a Coxeter group: length,
//! reduced words, Bruhat order, parabolic factorizations, Demazure products
//! and Bruhat intervals.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{bail_arg, Error, Result};

/// A permutation of `[n]` in one-line notation, `one_line[j−1] = w(j)`.
///
/// Ordered lexicographically by one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Perm {
    one_line: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Perm {
    type Error = Error;

    fn try_from(one_line: Vec<usize>) -> Result<Self> {
        Perm::new(one_line)
    }
}

impl From<Perm> for Vec<usize> {
    fn from(p: Perm) -> Self {
        p.one_line
    }
}

impl Perm {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                bail_arg!("{one_line:?} is not a permutation of [1, {n}]");
            }
            seen[x] = true;
        }
        Ok(Perm { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Perm { one_line: (1..=n).collect() }
    }

    /// The simple transposition `s_i = (i  i+1)`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            bail_arg!("s_{i} does not exist in S_{n}");
        }
        let mut p = Self::identity(n);
        p.one_line.swap(i - 1, i);
        Ok(p)
    }

    /// The transposition `(a  b)`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            bail_arg!("({a} {b}) is not a transposition in S_{n}");
        }
        let mut p = Self::identity(n);
        p.one_line.swap(a - 1, b - 1);
        Ok(p)
    }

    /// The longest element `n n−1 … 1`.
    pub fn longest(n: usize) -> Self {
        Perm { one_line: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(j)` for 1-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.one_line[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// The product `self · other` as functions, `(vw)(j) = v(w(j))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "permutations of different sizes");
        Perm { one_line: other.one_line.iter().map(|&j| self.apply(j)).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (j, &x) in self.one_line.iter().enumerate() {
            inv[x - 1] = j + 1;
        }
        Perm { one_line: inv }
    }

    /// `w s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.one_line.swap(i - 1, i);
        p
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`, i.e. `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.one_line[i - 1] > self.one_line[i]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        (0..w.len()).map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count()).sum()
    }

    /// The image `w([k])` as a sorted list.
    pub fn image_of_initial(&self, k: usize) -> Vec<usize> {
        let mut image = self.one_line[..k].to_vec();
        image.sort_unstable();
        image
    }

    /// Whether `w(j) < w(j+1)` for all `j ∈ J`.
    pub fn in_quotient(&self, parabolic: &[usize]) -> bool {
        parabolic.iter().all(|&j| !self.has_right_descent(j))
    }

    /// Whether `w ∈ W_J`, i.e. `w` preserves each block of positions cut out
    /// by `[n−1] ∖ J`.
    pub fn in_parabolic_subgroup(&self, parabolic: &[usize]) -> bool {
        blocks(self.n(), parabolic)
            .iter()
            .all(|&(lo, hi)| (lo..=hi).all(|j| (lo..=hi).contains(&self.apply(j))))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for x in &self.one_line {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.one_line.iter().map(ToString::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts `"5214763"` (single digits) or `"5,2,1,4,7,6,3"`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let values: Result<Vec<usize>> = if text.contains(',') {
            text.split(',')
                .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad permutation {text:?}"))))
                .collect()
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad permutation {text:?}")))
                })
                .collect()
        };
        Perm::new(values?)
    }
}

/// A word in the simple transpositions `s_1, …, s_{n−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `s_{i_1} ⋯ s_{i_l}` in `𝔖_n`.
    pub fn product(&self, n: usize) -> Result<Perm> {
        let mut p = Perm::identity(n);
        for &i in &self.letters {
            if i == 0 || i >= n {
                bail_arg!("letter s_{i} does not exist in S_{n}");
            }
            p = p.times_simple(i);
        }
        Ok(p)
    }

    pub fn is_reduced(&self, n: usize) -> Result<bool> {
        Ok(self.product(n)?.length() == self.len())
    }

    pub fn reversed(&self) -> Word {
        Word { letters: self.letters.iter().rev().copied().collect() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for i in &self.letters {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `"s1s3s4"` (or `"e"` for the empty word).
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Ok(Word::new(Vec::new()));
        }
        let bad = || Error::Parse(format!("bad word {text:?}"));
        let body = text.strip_prefix('s').ok_or_else(bad)?;
        let letters = body.split('s').map(|d| d.parse().map_err(|_| bad())).collect::<Result<_>>()?;
        Ok(Word::new(letters))
    }
}

/// `ℓ(w)`, the number of inversions.
pub fn length(w: &Perm) -> usize {
    w.length()
}

/// A reduced word for `w`, built by repeatedly splitting off the smallest
/// right descent.
pub fn reduced_word(w: &Perm) -> Word {
    let mut current = w.clone();
    let mut tail = Vec::with_capacity(w.length());
    while let Some(i) = (1..current.n()).find(|&i| current.has_right_descent(i)) {
        current = current.times_simple(i);
        tail.push(i);
    }
    tail.reverse();
    Word::new(tail)
}

/// Strong Bruhat order via the rank criterion: `v ≤ w` iff for all `i, j`,
/// `#{a ≤ i : v(a) ≥ j} ≤ #{a ≤ i : w(a) ≥ j}`.
pub fn bruhat_leq(v: &Perm, w: &Perm) -> Result<bool> {
    if v.n() != w.n() {
        bail_arg!("comparing permutations of S_{} and S_{}", v.n(), w.n());
    }
    Ok(bruhat_leq_unchecked(v, w))
}

fn bruhat_leq_unchecked(v: &Perm, w: &Perm) -> bool {
    let n = v.n();
    let mut count_v = vec![0usize; n + 2];
    let mut count_w = vec![0usize; n + 2];
    for i in 0..n {
        for j in 1..=v.one_line[i] {
            count_v[j] += 1;
        }
        for j in 1..=w.one_line[i] {
            count_w[j] += 1;
        }
        if (1..=n).any(|j| count_v[j] > count_w[j]) {
            return false;
        }
    }
    true
}

/// Validates `J ⊆ [1, n−1]` and returns it sorted.
fn check_parabolic(n: usize, parabolic: &[usize]) -> Result<Vec<usize>> {
    let mut j: Vec<usize> = parabolic.to_vec();
    j.sort_unstable();
    j.dedup();
    if j.iter().any(|&x| x == 0 || x >= n) {
        bail_arg!("J = {parabolic:?} is not inside [1, {}]", n.saturating_sub(1));
    }
    Ok(j)
}

/// Position blocks `[lo, hi]` (1-based) separated by the elements of
/// `[n−1] ∖ J`.
fn blocks(n: usize, parabolic: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut lo = 1;
    for k in 1..n {
        if !parabolic.contains(&k) {
            out.push((lo, k));
            lo = k + 1;
        }
    }
    if n > 0 {
        out.push((lo, n));
    }
    out
}

/// The complement `[n−1] ∖ S`.
pub fn complement_in_simple(n: usize, set: &[usize]) -> Vec<usize> {
    (1..n).filter(|i| !set.contains(i)).collect()
}

/// The length-additive factorization `w = w^J · w_J` with `w^J ∈ W^J`
/// and `w_J ∈ W_J`.
pub fn parabolic_factor(w: &Perm, parabolic: &[usize]) -> Result<(Perm, Perm)> {
    let j = check_parabolic(w.n(), parabolic)?;
    let mut min_rep = w.clone();
    for (lo, hi) in blocks(w.n(), &j) {
        min_rep.one_line[lo - 1..hi].sort_unstable();
    }
    let in_subgroup = min_rep.inverse().compose(w);
    Ok((min_rep, in_subgroup))
}

/// The Demazure product `v ∗ w = max{vx : x ≤ w}`.
pub fn demazure_star(v: &Perm, w: &Perm) -> Result<Perm> {
    if v.n() != w.n() {
        bail_arg!("Demazure product of S_{} and S_{} elements", v.n(), w.n());
    }
    let mut acc = v.clone();
    for &i in reduced_word(w).letters() {
        if !acc.has_right_descent(i) {
            acc = acc.times_simple(i);
        }
    }
    Ok(acc)
}

/// The downwards Demazure product `v ◁ w = min{vx : x ≤ w}`.
pub fn demazure_down(v: &Perm, w: &Perm) -> Result<Perm> {
    if v.n() != w.n() {
        bail_arg!("Demazure product of S_{} and S_{} elements", v.n(), w.n());
    }
    let mut acc = v.clone();
    for &i in reduced_word(w).letters() {
        if acc.has_right_descent(i) {
            acc = acc.times_simple(i);
        }
    }
    Ok(acc)
}

/// Elements `x` with `ℓ(x) = ℓ(w) − 1` and `x ≤ w`, i.e. `w·(a b)` for
/// positions `a < b` with `w(a) > w(b)` and no value strictly between them
/// in positions `a+1, …, b−1`.
pub fn lower_covers(w: &Perm) -> Vec<Perm> {
    let line = w.one_line();
    let n = line.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if line[a] > line[b] && !(a + 1..b).any(|c| line[b] < line[c] && line[c] < line[a]) {
                let mut x = w.clone();
                x.one_line.swap(a, b);
                out.push(x);
            }
        }
    }
    out
}

/// The Bruhat interval `[v, w]`, found by walking down from `w` along
/// cover relations while staying above `v`.
pub fn interval(v: &Perm, w: &Perm) -> Result<BTreeSet<Perm>> {
    if !bruhat_leq(v, w)? {
        bail_arg!("{v} is not below {w} in Bruhat order");
    }
    let mut seen: HashSet<Perm> = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in lower_covers(&x) {
            if !seen.contains(&y) && bruhat_leq_unchecked(v, &y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `{x^J : x ∈ [v, w]}` as a subset of `W^J`.
pub fn interval_mod_parabolic(v: &Perm, w: &Perm, parabolic: &[usize]) -> Result<BTreeSet<Perm>> {
    let j = check_parabolic(w.n(), parabolic)?;
    interval(v, w)?
        .iter()
        .map(|x| parabolic_factor(x, &j).map(|(min_rep, _)| min_rep))
        .collect()
}

/// `(v ◁ w_J^{−1}, w^J)`, a pair in `W × W^J` whose interval agrees with
/// `[v, w]` modulo `W_J`.
pub fn demazure_reduce(v: &Perm, w: &Perm, parabolic: &[usize]) -> Result<(Perm, Perm)> {
    if !bruhat_leq(v, w)? {
        bail_arg!("{v} is not below {w} in Bruhat order");
    }
    let (w_min, w_sub) = parabolic_factor(w, parabolic)?;
    Ok((demazure_down(v, &w_sub.inverse())?, w_min))
}

/// All of `𝔖_n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![Perm { one_line: current.clone() }];
    loop {
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("pivot has a successor");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(Perm { one_line: current.clone() });
    }
}
