//! Independent reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::BTreeSet;

use flagpos::coxeter::{all_perms, reduced_word, Perm};
use flagpos::exact::{rat, Mat, Rat, SubsetIndex};
use num_traits::Zero;

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return rat(1);
    }
    let mut total = Rat::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * cofactor_det(&sub);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The minor on 1-based rows `rows` and columns `cols`.
pub fn cofactor_minor(a: &Mat, rows: &[usize], cols: &[usize]) -> Rat {
    let sub: Vec<Vec<Rat>> =
        rows.iter().map(|&i| cols.iter().map(|&j| a.get(i - 1, j - 1).clone()).collect()).collect();
    cofactor_det(&sub)
}

/// All `k`-subsets of `[n]` by bitmask, sorted lexicographically.
pub fn subsets_oracle(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect())
        .collect();
    out.sort();
    out
}

/// Whether every square minor is positive, by brute force.
pub fn all_minors_positive(a: &Mat) -> bool {
    let n = a.rows().min(a.cols());
    (1..=n).all(|k| {
        subsets_oracle(a.rows(), k)
            .iter()
            .all(|r| subsets_oracle(a.cols(), k).iter().all(|c| cofactor_minor(a, r, c) > rat(0)))
    })
}

/// Every maximal-order minor (all columns, any rows) is positive.
pub fn top_minors_positive(a: &Mat) -> bool {
    let cols: Vec<usize> = (1..=a.cols()).collect();
    subsets_oracle(a.rows(), a.cols()).iter().all(|r| cofactor_minor(a, r, &cols) > rat(0))
}

/// Left-justified minors of the first `k` columns.
pub fn plucker_oracle(a: &Mat, k: usize) -> Vec<(SubsetIndex, Rat)> {
    let cols: Vec<usize> = (1..=k).collect();
    subsets_oracle(a.rows(), k)
        .into_iter()
        .map(|r| {
            let v = cofactor_minor(a, &r, &cols);
            (SubsetIndex::new(a.rows(), r).unwrap(), v)
        })
        .collect()
}

/// Whether two coordinate vectors are proportional by a nonzero scalar.
pub fn proportional(a: &[Rat], b: &[Rat]) -> bool {
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return b.iter().all(Zero::is_zero);
    };
    if b[i].is_zero() {
        return false;
    }
    let scale = &b[i] / &a[i];
    a.iter().zip(b).all(|(x, y)| x * &scale == *y)
}

/// Products of all subwords of a fixed reduced word of `w`.
fn subword_products(w: &Perm) -> BTreeSet<Perm> {
    let word = reduced_word(w);
    let letters = word.letters();
    (0u32..1 << letters.len())
        .map(|mask| {
            let mut p = Perm::identity(w.n());
            for (bit, &i) in letters.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    p = p.times_simple(i);
                }
            }
            p
        })
        .collect()
}

/// Bruhat order by the subword property: `v ≤ w` iff `v` is the product of
/// a reduced subword of a reduced word of `w`.
pub fn bruhat_subword(v: &Perm, w: &Perm) -> bool {
    let word = reduced_word(w);
    let letters = word.letters();
    let target = v.length();
    (0u32..1 << letters.len()).any(|mask| {
        if mask.count_ones() as usize != target {
            return false;
        }
        let mut p = Perm::identity(w.n());
        for (bit, &i) in letters.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                p = p.times_simple(i);
            }
        }
        p == *v
    })
}

/// `[e, w]` computed as the set of all subword products.
pub fn lower_interval_oracle(w: &Perm) -> BTreeSet<Perm> {
    subword_products(w)
}

/// `[v, w]` by filtering all of `𝔖_n` with the subword order.
pub fn interval_oracle(v: &Perm, w: &Perm) -> BTreeSet<Perm> {
    all_perms(w.n()).into_iter().filter(|x| bruhat_subword(v, x) && bruhat_subword(x, w)).collect()
}

/// The unique Bruhat-maximal element of a set, if one exists.
fn bruhat_max(set: &BTreeSet<Perm>) -> Option<Perm> {
    set.iter().find(|m| set.iter().all(|x| bruhat_subword(x, m))).cloned()
}

fn bruhat_min(set: &BTreeSet<Perm>) -> Option<Perm> {
    set.iter().find(|m| set.iter().all(|x| bruhat_subword(m, x))).cloned()
}

/// `max{vx : x ≤ w}` by enumeration.
pub fn demazure_star_oracle(v: &Perm, w: &Perm) -> Perm {
    let products: BTreeSet<Perm> = lower_interval_oracle(w).iter().map(|x| v.compose(x)).collect();
    bruhat_max(&products).expect("Demazure product exists")
}

/// `min{vx : x ≤ w}` by enumeration.
pub fn demazure_down_oracle(v: &Perm, w: &Perm) -> Perm {
    let products: BTreeSet<Perm> = lower_interval_oracle(w).iter().map(|x| v.compose(x)).collect();
    bruhat_min(&products).expect("downwards Demazure product exists")
}

/// The minimal-length element of the coset `w W_J`, by enumeration.
pub fn min_coset_rep_oracle(w: &Perm, parabolic: &[usize]) -> Perm {
    all_perms(w.n())
        .into_iter()
        .filter(|x| x.in_parabolic_subgroup(parabolic))
        .map(|x| w.compose(&x))
        .min_by_key(Perm::length)
        .expect("coset is nonempty")
}

/// Every subset of `[1, n−1]`.
pub fn all_parabolics(n: usize) -> Vec<Vec<usize>> {
    let m = n.saturating_sub(1);
    (0u32..1 << m).map(|mask| (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect()).collect()
}
