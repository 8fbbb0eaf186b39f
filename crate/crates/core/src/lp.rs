//! Exact convex-hull membership and extreme-point filtering for small point
//! sets, via a rational phase-one simplex with Bland's rule.

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{rat, Rat};

/// Whether `point` is a convex combination of `points`.
///
/// Solves `Σ λ_j p_j = point`, `Σ λ_j = 1`, `λ ≥ 0` for feasibility.
pub fn in_convex_hull(point: &[Rat], points: &[Vec<Rat>]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = point.len();
    let mut rows: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rat> = points.iter().map(|p| p[i].clone()).collect();
            row.push(point[i].clone());
            row
        })
        .collect();
    let mut ones = vec![rat(1); points.len()];
    ones.push(rat(1));
    rows.push(ones);
    feasible(rows)
}

/// Phase one of the simplex method on `A λ = b, λ ≥ 0`, where each row is
/// `[a_1, …, a_m, b]`.
fn feasible(mut rows: Vec<Vec<Rat>>) -> bool {
    let r = rows.len();
    let m = rows[0].len() - 1;
    for row in rows.iter_mut() {
        if row[m].is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    // columns: m structural, r artificial, rhs
    let width = m + r + 1;
    let mut tab: Vec<Vec<Rat>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut t = vec![Rat::zero(); width];
            t[..m].clone_from_slice(&row[..m]);
            t[m + i] = rat(1);
            t[width - 1] = row[m].clone();
            t
        })
        .collect();
    let mut basis: Vec<usize> = (m..m + r).collect();
    let mut cost = vec![Rat::zero(); width];
    for row in &tab {
        for j in 0..m {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }

    loop {
        let Some(enter) = (0..width - 1).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..r {
            if tab[i][enter].is_positive() {
                let q = &tab[i][width - 1] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => q < *best || (q == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, q));
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // phase-one objective is bounded below by zero
            unreachable!("unbounded phase-one problem");
        };
        let p = tab[pivot_row][enter].clone();
        for x in tab[pivot_row].iter_mut() {
            *x /= &p;
        }
        let pivot = tab[pivot_row].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != pivot_row && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        let f = cost[enter].clone();
        for (x, y) in cost.iter_mut().zip(&pivot) {
            *x -= &f * y;
        }
        basis[pivot_row] = enter;
    }
    cost[width - 1].is_zero()
}

/// The extreme points of a finite set of integer points, deduplicated and
/// sorted.
pub fn extreme_points(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut pts: Vec<Vec<i64>> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let dim = pts[0].len();

    // unique maximizers of linear functionals are extreme
    let mut certified = vec![false; pts.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..4 * dim + 8 {
        let c: Vec<i64> = (0..dim).map(|_| rng.gen_range(-1000..=1000)).collect();
        let values: Vec<i64> = pts.iter().map(|p| p.iter().zip(&c).map(|(a, b)| a * b).sum()).collect();
        let best = *values.iter().max().expect("nonempty");
        let mut winners = values.iter().enumerate().filter(|(_, &v)| v == best);
        if let (Some((i, _)), None) = (winners.next(), winners.next()) {
            certified[i] = true;
        }
    }

    // a non-extreme point can be dropped without changing the hull
    let mut alive = vec![true; pts.len()];
    let as_rat = |p: &Vec<i64>| p.iter().map(|&x| rat(x)).collect::<Vec<Rat>>();
    for i in 0..pts.len() {
        if certified[i] {
            continue;
        }
        let others: Vec<Vec<Rat>> =
            (0..pts.len()).filter(|&j| j != i && alive[j]).map(|j| as_rat(&pts[j])).collect();
        if in_convex_hull(&as_rat(&pts[i]), &others) {
            alive[i] = false;
        }
    }
    pts.into_iter().zip(alive).filter(|(_, a)| *a).map(|(p, _)| p).collect()
}
